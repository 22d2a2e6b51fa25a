"""Vectorial Boolean functions F: F_2^n -> F_2^n as dense truth tables.

Indexing conventions, fixed project-wide:
  * WalshTable entry W(u, v) lives at index (v << n) | u;
  * a graph point (x, F(x)) is encoded as the 2n-bit mask (x << n) | F(x),
    x in the high bits.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .errors import CapabilityError, DomainError, ValidationError
from .field import FieldSpec, gf_pow_table, mod_inverse
from .sidon import PointSet

WALSH_MAX_N = 12  # int64 stays exact through the cubed-Walsh transform


@dataclass(frozen=True)
class TruthTable:
    n: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, np.int64)
        if vals.shape != (1 << self.n,):
            raise ValidationError(f"truth table must have 2^{self.n} entries")
        if vals.min() < 0 or vals.max() >= (1 << self.n):
            raise ValidationError("table entries out of range")
        object.__setattr__(self, "values", vals)
        vals.setflags(write=False)

    @property
    def size(self):
        return 1 << self.n

    @classmethod
    def of(cls, n, values):
        return cls(n, np.asarray(list(values), np.int64))


@dataclass(frozen=True)
class WalshTable:
    n: int
    values: np.ndarray  # index (v << n) | u

    def __post_init__(self):
        size = 1 << self.n
        vals = np.asarray(self.values, np.int64)
        if vals.shape != (size * size,):
            raise ValidationError("Walsh table must have 2^(2n) entries")
        if vals[0] != size:
            raise ValidationError("W(0,0) must equal 2^n")
        sq = vals.reshape(size, size).astype(np.int64) ** 2
        if not (sq.sum(axis=1) == size * size).all():
            raise ValidationError("Parseval check failed")
        object.__setattr__(self, "values", vals)
        vals.setflags(write=False)

    def at(self, u, v):
        return int(self.values[(v << self.n) | u])


@dataclass(frozen=True)
class DDTRow:
    a: int
    counts: np.ndarray

    def __post_init__(self):
        if self.a == 0:
            raise DomainError("DDT rows are defined for nonzero a")
        counts = np.asarray(self.counts, np.int64)
        size = counts.size
        if int(counts.sum()) != size or (counts % 2).any():
            raise ValidationError("DDT row counts must be even and sum to 2^n")
        object.__setattr__(self, "counts", counts)
        counts.setflags(write=False)


def from_power(spec: FieldSpec, d: int) -> TruthTable:
    """The power map x -> x^d over the given field."""
    return TruthTable(spec.n, gf_pow_table(spec, d))


def graph_of(f: TruthTable) -> PointSet:
    """Graph {(x, F(x))} as 2n-bit masks, x in the high bits."""
    x = np.arange(f.size, dtype=np.int64)
    return PointSet(2 * f.n, (x << f.n) | f.values)


def walsh_full(f: TruthTable) -> WalshTable:
    """All 2^(2n) Walsh values via one length-2^n transform per component v."""
    if f.n > WALSH_MAX_N:
        raise CapabilityError(f"Walsh table limited to n <= {WALSH_MAX_N}")
    return WalshTable(f.n, _kernels.walsh_table(f.values, f.n))


def walsh_brute(f: TruthTable, u: int, v: int) -> int:
    """Direct O(2^n) evaluation of a single Walsh value (test oracle)."""
    total = 0
    for x in range(f.size):
        total += -1 if _kernels.parity((v & int(f.values[x])) ^ (u & x)) else 1
    return total


def ddt_row(f: TruthTable, a: int) -> DDTRow:
    return DDTRow(a, _kernels.ddt_row(f.values, a))


def is_apn(f: TruthTable) -> bool:
    """Every nontrivial derivative hits each value 0 or 2 times."""
    return int(_kernels.ddt_max(f.values)) <= 2


def is_ab(f: TruthTable) -> bool:
    """Nontrivial Walsh values all in {0, +-2^((n+1)/2)}; even n is never AB."""
    if f.n % 2 == 0:
        return False
    lam = 1 << ((f.n + 1) // 2)
    w = walsh_full(f).values
    return bool(np.isin(np.abs(w[1:]), (0, lam)).all())


def is_plateaued(f: TruthTable) -> bool:
    """Each nonzero component's Walsh values lie in {0, +-lambda_v}."""
    size = f.size
    w = np.abs(walsh_full(f).values.reshape(size, size))
    for v in range(1, size):
        mags = np.unique(w[v])
        if mags[0] == 0:
            mags = mags[1:]
        if mags.size > 1:
            return False
    return True


def components_all_unbalanced(f: TruthTable) -> bool:
    """W(0, v) != 0 for every nonzero v."""
    size = f.size
    w = walsh_full(f).values
    return bool((w[np.arange(1, size) * size] != 0).all())


def algebraic_degree(f: TruthTable) -> int:
    """Max coordinate degree, via the binary Moebius transform run wordwise."""
    anf = f.values.copy()
    for i in range(f.n):
        bit = 1 << i
        idx = np.arange(f.size)
        hi = (idx & bit).astype(bool)
        anf[hi] ^= anf[idx[hi] ^ bit]
    nz = np.nonzero(anf)[0]
    if nz.size == 0:
        return 0
    return max(int(i).bit_count() for i in nz)


def cyclotomic_residues(n: int, d: int):
    """The set {2^i * d mod 2^n - 1 : 0 <= i < n}."""
    order = (1 << n) - 1
    return {(d << i) % order for i in range(n)}


def cyclotomic_equivalent(n: int, d: int, d2: int) -> bool:
    """Exponent equivalence under doubling and (when defined) inversion."""
    order = (1 << n) - 1
    if not (0 < d < order and 0 < d2 < order):
        raise DomainError("exponents must be in 1..2^n-2")
    if d % order in cyclotomic_residues(n, d2):
        return True
    if gcd(d2, order) == 1:
        return d % order in cyclotomic_residues(n, mod_inverse(d2, order))
    return False
