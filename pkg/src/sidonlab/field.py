"""Exact arithmetic in GF(2^n), 1 <= n <= 16, in polynomial basis.

Elements are raw n-bit integer masks; whether a mask is read as a field
element or as a vector in F_2^n is decided by the operation applied to it,
so conversion between the two views is free.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import DomainError, ValidationError
from ._kernels import parity

MAX_N = 16

# Lowest-weight, lexicographically least primitive polynomial per degree.
# Regenerate with lowest_primitive_poly(); test_field cross-checks.
DEFAULT_MODULI = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83,
    8: 0x11D, 9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B,
    14: 0x402B, 15: 0x8003, 16: 0x1002D,
}


# -- polynomial arithmetic over F_2, polynomials as int bitmasks --------------

def clmul(a, b):
    """Carry-less product of two polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pmod(a, m):
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def pmulmod(a, b, m):
    return pmod(clmul(a, b), m)


def pgcd(a, b):
    while b:
        a, b = b, pmod(a, b)
    return a


def _prime_factors(v):
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


def is_irreducible(modulus, n):
    """Rabin's test for a degree-n polynomial over F_2."""
    if modulus.bit_length() - 1 != n:
        return False
    x = pmod(2, modulus)
    t = x
    for _ in range(n):
        t = pmulmod(t, t, modulus)
    if t != x:
        return False
    for p in _prime_factors(n):
        t = x
        for _ in range(n // p):
            t = pmulmod(t, t, modulus)
        if pgcd(t ^ x, modulus) != 1:
            return False
    return True


def _ppowmod(base, e, m):
    r = 1
    while e:
        if e & 1:
            r = pmulmod(r, base, m)
        e >>= 1
        base = pmulmod(base, base, m)
    return r


def is_primitive_poly(modulus, n):
    """True iff modulus is irreducible and x generates the full group."""
    if not is_irreducible(modulus, n):
        return False
    order = (1 << n) - 1
    x = pmod(2, modulus)
    return all(_ppowmod(x, order // q, modulus) != 1 for q in _prime_factors(order))


def lowest_primitive_poly(n):
    """Lowest-weight, then lexicographically least, primitive polynomial."""
    cands = sorted(
        (((1 << n) | (mid << 1) | 1).bit_count(), (1 << n) | (mid << 1) | 1)
        for mid in range(1 << max(n - 1, 0))
    )
    for _, m in cands:
        if is_primitive_poly(m, n):
            return m
    raise DomainError(f"no primitive polynomial of degree {n}")


# -- the field ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(2^n): dimension, irreducible modulus, primitive generator.

    Immutable after construction; discrete log/antilog tables are built once
    so multiplicative operations are table lookups.
    """

    n: int
    modulus: int
    generator: int
    exp: np.ndarray = dc_field(repr=False, compare=False, default=None)
    log: np.ndarray = dc_field(repr=False, compare=False, default=None)

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_N:
            raise DomainError(f"n must be in 1..{MAX_N}, got {n}")
        if not is_irreducible(self.modulus, n):
            raise ValidationError(f"modulus {self.modulus:#x} is not irreducible of degree {n}")
        size = 1 << n
        order = size - 1
        g = self.generator
        if not 0 < g < size:
            raise ValidationError(f"generator {g:#x} out of range")
        exp = np.zeros(2 * order, np.int64)
        log = np.zeros(size, np.int64)
        t = 1
        for i in range(order):
            exp[i] = t
            exp[i + order] = t
            log[t] = i
            t = pmulmod(t, g, self.modulus)
            if t == 1 and i != order - 1:
                raise ValidationError(f"generator {g:#x} does not have order {order}")
        if t != 1:
            raise ValidationError(f"generator {g:#x} does not have order {order}")
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "log", log)
        exp.setflags(write=False)
        log.setflags(write=False)

    @property
    def size(self):
        return 1 << self.n

    @property
    def order(self):
        return (1 << self.n) - 1


def _smallest_generator(n, modulus):
    order = (1 << n) - 1
    primes = _prime_factors(order) if order > 1 else []
    for g in range(1, 1 << n):
        if _ppowmod(g, order, modulus) != 1:
            continue
        if all(_ppowmod(g, order // q, modulus) != 1 for q in primes):
            return g
    raise ValidationError(f"no generator for modulus {modulus:#x}")


@lru_cache(maxsize=None)
def make_field(n, modulus=None):
    """Build the GF(2^n) for the given (or default) modulus, cached."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n must be in 1..{MAX_N}, got {n}")
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    return FieldSpec(n=n, modulus=modulus, generator=_smallest_generator(n, modulus))


def _check_elt(spec, a):
    if not 0 <= a < spec.size:
        raise DomainError(f"element {a:#x} out of range for n={spec.n}")


def gf_mul(spec, a, b):
    """Product in GF(2^n)."""
    _check_elt(spec, a)
    _check_elt(spec, b)
    if a == 0 or b == 0:
        return 0
    return int(spec.exp[spec.log[a] + spec.log[b]])


def gf_inv(spec, a):
    """Multiplicative inverse; zero is a domain error."""
    _check_elt(spec, a)
    if a == 0:
        raise DomainError("0 has no inverse")
    return int(spec.exp[(spec.order - spec.log[a]) % spec.order])


def gf_pow(spec, a, d):
    """a^d with 0^0 = 1."""
    _check_elt(spec, a)
    if d < 0:
        raise DomainError("exponent must be nonnegative")
    if d == 0:
        return 1
    if a == 0:
        return 0
    return int(spec.exp[(spec.log[a] * d) % spec.order])


def gf_pow_table(spec, d):
    """Vector of x^d for all x, as an int64 array of length 2^n."""
    if d < 0:
        raise DomainError("exponent must be nonnegative")
    out = np.empty(spec.size, np.int64)
    if d == 0:
        out[:] = 1
        return out
    out[0] = 0
    out[1:] = spec.exp[(spec.log[1:] * d) % spec.order]
    return out


def trace_abs(spec, a):
    """Absolute trace x + x^2 + x^4 + ... + x^(2^(n-1)), as a bit."""
    _check_elt(spec, a)
    acc = 0
    t = a
    for _ in range(spec.n):
        acc ^= t
        t = gf_mul(spec, t, t)
    if acc not in (0, 1):
        raise DomainError(f"trace of {a:#x} landed outside F_2")  # pragma: no cover
    return acc


def trace_rel3(spec, a):
    """Relative trace onto GF(2^3): x + x^8 + ... + x^(8^(n/3-1))."""
    if spec.n % 3 != 0:
        raise DomainError(f"relative trace to GF(2^3) needs 3 | n, got n={spec.n}")
    _check_elt(spec, a)
    acc = 0
    t = a
    for _ in range(spec.n // 3):
        acc ^= t
        t = gf_pow(spec, t, 8)
    return acc


def is_cube(spec, b):
    """True iff nonzero b is a cube; defined only for even n."""
    if spec.n % 2 != 0:
        raise DomainError("cube test is only meaningful for even n")
    _check_elt(spec, b)
    if b == 0:
        raise DomainError("cube test expects nonzero input")
    return gf_pow(spec, b, spec.order // 3) == 1


def dot(u, v):
    """Standard inner product on bitmasks: parity of u & v."""
    return parity(u & v)


def mod_inverse(d, m):
    """Inverse of d modulo m."""
    if m <= 1 or gcd(d, m) != 1:
        raise DomainError(f"{d} is not invertible mod {m}")
    return pow(d, -1, m)
