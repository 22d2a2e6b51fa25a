"""Constructors for the named APN/AB families.

Power families: gold, kasami, welch, niho, inverse, dobbertin.
Non-power examples: two trace-augmented quadratics and the Dillon n=6
APN permutation (coefficients shipped in data/dillon6.coeffs).
"""

from dataclasses import dataclass, field as dc_field
from importlib import resources
from math import gcd

import numpy as np

from .errors import DomainError, ValidationError
from .field import (FieldSpec, gf_inv, gf_mul, gf_pow, gf_pow_table, make_field,
                    trace_abs, trace_rel3, _prime_factors, _ppowmod)
from .vbf import TruthTable, is_apn

POWER_FAMILIES = ("gold", "kasami", "welch", "niho", "inverse", "dobbertin", "power")
ALL_FAMILIES = POWER_FAMILIES + ("tracequad1", "tracequad2", "dillon6")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.name not in ALL_FAMILIES:
            raise ValidationError(f"unknown family {self.name!r}")
        _validate(self)

    def spec_string(self):
        ps = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}:{ps}" if ps else self.name


def _validate(spec):
    n, p = spec.n, spec.params
    name = spec.name
    if name == "power":
        if "d" not in p or p["d"] < 0:
            raise ValidationError("power needs d >= 0")
    elif name in ("gold", "kasami"):
        k = p.get("k")
        if k is None or k < 1:
            raise ValidationError(f"{name} needs k >= 1")
        if gcd(k, n) != 1:
            raise ValidationError(f"{name} requires gcd(k, n) = 1, got k={k}, n={n}")
    elif name in ("welch", "niho", "inverse"):
        if n % 2 == 0 or n < 3:
            raise ValidationError(f"{name} requires odd n = 2t + 1 >= 3")
    elif name == "dobbertin":
        if n % 5 != 0:
            raise ValidationError("dobbertin requires n = 5t")
    elif name == "tracequad1":
        if p.get("a", 1) == 0:
            raise ValidationError("tracequad1 needs a != 0")
    elif name == "tracequad2":
        if n % 3 != 0:
            raise ValidationError("tracequad2 requires 3 | n")
        if p.get("a", 1) == 0:
            raise ValidationError("tracequad2 needs a != 0")
    elif name == "dillon6":
        if n != 6:
            raise ValidationError("dillon6 is defined for n = 6 only")


def exponent_of(spec: FamilySpec) -> int:
    """The power-map exponent d for a power family."""
    n, p = spec.n, spec.params
    if spec.name == "power":
        return p["d"]
    if spec.name == "gold":
        return (1 << p["k"]) + 1
    if spec.name == "kasami":
        k = p["k"]
        return (1 << (2 * k)) - (1 << k) + 1
    t = n // 2 if spec.name != "dobbertin" else n // 5
    if spec.name == "welch":
        return (1 << t) + 3
    if spec.name == "niho":
        if t % 2 == 0:
            return (1 << t) + (1 << (t // 2)) - 1
        return (1 << t) + (1 << ((3 * t + 1) // 2)) - 1
    if spec.name == "inverse":
        return (1 << (2 * t)) - 1
    if spec.name == "dobbertin":
        return (1 << (4 * t)) + (1 << (3 * t)) + (1 << (2 * t)) + (1 << t) - 1
    raise DomainError(f"{spec.name} is not a power family")


def _tracequad1(field, a):
    ainv = gf_inv(field, a)
    a3 = gf_pow(field, a, 3)
    x3 = gf_pow_table(field, 3)
    x9 = gf_pow_table(field, 9)
    vals = np.empty(field.size, np.int64)
    for x in range(field.size):
        t = trace_abs(field, gf_mul(field, a3, int(x9[x])))
        vals[x] = x3[x] ^ (ainv if t else 0)
    return TruthTable(field.n, vals)


def _tracequad2(field, a):
    ainv = gf_inv(field, a)
    a3 = gf_pow(field, a, 3)
    a6 = gf_pow(field, a, 6)
    x3 = gf_pow_table(field, 3)
    x9 = gf_pow_table(field, 9)
    x18 = gf_pow_table(field, 18)
    vals = np.empty(field.size, np.int64)
    for x in range(field.size):
        inner = gf_mul(field, a3, int(x9[x])) ^ gf_mul(field, a6, int(x18[x]))
        vals[x] = x3[x] ^ gf_mul(field, ainv, trace_rel3(field, inner))
    return TruthTable(field.n, vals)


def dillon_coefficients():
    """(alpha_exp, x_exp) pairs of the n=6 APN permutation, from the data file."""
    text = resources.files("sidonlab.data").joinpath("dillon6.coeffs").read_text()
    pairs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            ae, xe = line.split()
            pairs.append((int(ae), int(xe)))
    return pairs


def _eval_dillon(field, alpha_log, pairs):
    order = field.order
    vals = np.zeros(field.size, np.int64)
    for x in range(1, field.size):
        lx = int(field.log[x])
        acc = 0
        for ae, xe in pairs:
            acc ^= int(field.exp[(alpha_log * ae + lx * xe) % order])
        vals[x] = acc
    return TruthTable(field.n, vals)


def dillon_permutation(field: FieldSpec):
    """The n=6 APN permutation; returns (table, alpha) with alpha primitive.

    Tries the field generator first; if the resulting table is not an APN
    bijection (a transcription/basis mismatch), searches the remaining
    primitive elements and fails loudly if none works.
    """
    if field.n != 6:
        raise DomainError("dillon_permutation needs a GF(2^6)")
    pairs = dillon_coefficients()
    primes = _prime_factors(field.order)

    def primitive(g):
        return g and all(_ppowmod(g, field.order // q, field.modulus) != 1 for q in primes)

    candidates = [field.generator] + [
        g for g in range(1, field.size) if g != field.generator and primitive(g)
    ]
    for alpha in candidates:
        table = _eval_dillon(field, int(field.log[alpha]), pairs)
        if np.unique(table.values).size == field.size and is_apn(table):
            return table, alpha
    raise ValidationError("no primitive element yields an APN permutation")


def build(spec: FamilySpec, field: FieldSpec) -> TruthTable:
    """Truth table of the named function over the given field."""
    if field.n != spec.n:
        raise ValidationError(f"field has n={field.n}, family needs n={spec.n}")
    if spec.name in POWER_FAMILIES:
        return TruthTable(field.n, gf_pow_table(field, exponent_of(spec)))
    a = spec.params.get("a", field.generator)
    if spec.name == "tracequad1":
        return _tracequad1(field, a)
    if spec.name == "tracequad2":
        return _tracequad2(field, a)
    table, _ = dillon_permutation(field)
    return table


def build_named(name, n, field=None, **params) -> TruthTable:
    spec = FamilySpec(name, n, params)
    return build(spec, field if field is not None else make_field(n))
