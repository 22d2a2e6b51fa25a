"""Generic Sidon-set machinery in F_2^m.

Point sets are sorted duplicate-free arrays of m-bit masks. The exclude
distribution is kept dense over all 2^m cells; cells occupied by the set
itself hold the sentinel IN_SET.
"""

import random
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import _kernels
from .errors import DomainError, ValidationError
from ._kernels import parity

IN_SET = -1
MAX_M = 20


@dataclass(frozen=True)
class PointSet:
    m: int
    points: np.ndarray

    def __post_init__(self):
        if not 1 <= self.m <= MAX_M:
            raise DomainError(f"ambient dimension must be in 1..{MAX_M}, got {self.m}")
        pts = np.asarray(self.points, np.int64)
        if pts.ndim != 1:
            raise ValidationError("points must be one-dimensional")
        if pts.size and (pts.min() < 0 or pts.max() >= (1 << self.m)):
            raise ValidationError(f"points out of range for m={self.m}")
        srt = np.unique(pts)
        if srt.size != pts.size:
            raise ValidationError("duplicate points")
        object.__setattr__(self, "points", srt)
        srt.setflags(write=False)

    def __len__(self):
        return int(self.points.size)

    def __contains__(self, x):
        i = np.searchsorted(self.points, x)
        return i < self.points.size and self.points[i] == x

    @classmethod
    def of(cls, m, points):
        return cls(m, np.asarray(list(points), np.int64))


@dataclass(frozen=True)
class ExcludeDistribution:
    """Dense multiplicity array over F_2^m plus its histogram."""

    m: int
    excluded: PointSet
    mult: np.ndarray
    histogram: dict = dc_field(default=None)

    def __post_init__(self):
        mult = np.asarray(self.mult, np.int64)
        if mult.shape != (1 << self.m,):
            raise ValidationError("mult array has wrong length")
        s = len(self.excluded)
        if not (mult[self.excluded.points] == IN_SET).all():
            raise ValidationError("set cells must hold the sentinel")
        comp = mult[mult != IN_SET]
        if comp.size != (1 << self.m) - s:
            raise ValidationError("sentinel count does not match set size")
        if comp.size and comp.min() < 0:
            raise ValidationError("negative multiplicity")
        if int(comp.sum()) != comb(s, 3):
            raise ValidationError(
                f"multiplicities sum to {int(comp.sum())}, expected C({s},3)={comb(s, 3)}"
            )
        hist = {int(k): int(c) for k, c in zip(*np.unique(comp, return_counts=True))}
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "histogram", hist)
        mult.setflags(write=False)

    @property
    def complement_size(self):
        return (1 << self.m) - len(self.excluded)

    def value_at(self, x):
        v = int(self.mult[x])
        if v == IN_SET:
            raise DomainError(f"point {x:#x} is in the set")
        return v


def is_sidon(s: PointSet) -> bool:
    """All pairwise sums of distinct points are distinct."""
    return not _kernels.has_pair_collision(s.points, s.m)


def exclude_distribution(s: PointSet) -> ExcludeDistribution:
    """Brute-force multiplicities by unordered-triple enumeration, O(|S|^3)."""
    if not is_sidon(s):
        raise ValidationError("input is not a Sidon set")
    mult = _kernels.triple_mult(s.points, s.m)
    mult[s.points] = IN_SET
    return ExcludeDistribution(s.m, s, mult)


def e_min(dist: ExcludeDistribution) -> int:
    comp = dist.mult[dist.mult != IN_SET]
    if comp.size == 0:
        raise DomainError("empty complement")
    return int(comp.min())


def e_max(dist: ExcludeDistribution) -> int:
    comp = dist.mult[dist.mult != IN_SET]
    if comp.size == 0:
        raise DomainError("empty complement")
    return int(comp.max())


def is_maximal(dist: ExcludeDistribution) -> bool:
    """Maximal iff every complement point has positive multiplicity."""
    return dist.complement_size > 0 and e_min(dist) > 0


def k_cover_value(dist: ExcludeDistribution):
    """The constant value when the distribution is constant, else None."""
    lo = e_min(dist)
    return lo if lo == e_max(dist) else None


def maximality_bound_check(dist: ExcludeDistribution, n: int) -> bool:
    """For |S| = 2^n in dimension 2n: spread <= (2^n - 2)/6 forces maximality."""
    if dist.m != 2 * n or len(dist.excluded) != (1 << n):
        raise DomainError("bound applies to sets of size 2^n in dimension 2n")
    ok = 6 * (e_max(dist) - e_min(dist)) <= (1 << n) - 2
    if ok and not is_maximal(dist):
        raise ValidationError("bound held but the set is not maximal")  # pragma: no cover
    return ok


def ed_equivalent(d1: ExcludeDistribution, d2: ExcludeDistribution) -> bool:
    """Equal multiplicity histograms."""
    if d1.m != d2.m or len(d1.excluded) != len(d2.excluded):
        raise DomainError("distributions are not comparable")
    return d1.histogram == d2.histogram


def _restrict(dist, block: PointSet):
    if dist.m != block.m:
        raise DomainError("dimension mismatch")
    vals = dist.mult[block.points]
    if (vals == IN_SET).any():
        raise DomainError("block contains points of the set")
    return np.sort(vals)


def locally_equivalent(dist: ExcludeDistribution, x: PointSet, y: PointSet) -> bool:
    """Same multiset of multiplicities on x and y (disjointness not required)."""
    if len(x) != len(y):
        raise DomainError("blocks must have equal size")
    return bool(np.array_equal(_restrict(dist, x), _restrict(dist, y)))


def uniform_on(dist: ExcludeDistribution, partition) -> bool:
    """All blocks of an equal-sized disjoint partition share one value multiset."""
    blocks = list(partition)
    if not blocks:
        raise ValidationError("empty partition")
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise ValidationError("blocks must have equal size")
    total = np.concatenate([b.points for b in blocks])
    if np.unique(total).size != total.size:
        raise ValidationError("blocks must be pairwise disjoint")
    ref = _restrict(dist, blocks[0])
    return all(np.array_equal(ref, _restrict(dist, b)) for b in blocks[1:])


# -- affine plumbing ----------------------------------------------------------

@dataclass(frozen=True)
class AffineMap:
    """x -> Lx + c with L given as row masks; L must be invertible."""

    m: int
    rows: tuple
    c: int

    def __post_init__(self):
        if len(self.rows) != self.m:
            raise ValidationError("need one row mask per output bit")
        if not _rows_invertible(self.rows, self.m):
            raise ValidationError("linear part is singular")

    def apply(self, x):
        y = 0
        for i, row in enumerate(self.rows):
            y |= parity(row & x) << i
        return y ^ self.c

    def apply_array(self, xs):
        xs = np.asarray(xs, np.int64)
        y = np.zeros_like(xs)
        for i, row in enumerate(self.rows):
            bits = xs & row
            p = _kernels._PARITY16[bits & 0xFFFF] ^ _kernels._PARITY16[bits >> 16]
            y |= p.astype(np.int64) << i
        return y ^ self.c


def _rows_invertible(rows, m):
    rs = list(rows)
    for col in range(m):
        piv = next((i for i in range(col, m) if (rs[i] >> col) & 1), None)
        if piv is None:
            return False
        rs[col], rs[piv] = rs[piv], rs[col]
        rs = [r ^ rs[col] if i != col and (r >> col) & 1 else r for i, r in enumerate(rs)]
    return True


def apply_affine(s: PointSet, a: AffineMap) -> PointSet:
    if s.m != a.m:
        raise DomainError("dimension mismatch")
    return PointSet(s.m, a.apply_array(s.points))


def random_affine(m, seed) -> AffineMap:
    rng = random.Random(("affine", m, seed).__repr__())
    while True:
        rows = tuple(rng.randrange(1 << m) for _ in range(m))
        if _rows_invertible(rows, m):
            return AffineMap(m, rows, rng.randrange(1 << m))


def random_sidon(m, seed) -> PointSet:
    """Greedy seeded construction: scan a shuffled point order, keep what fits."""
    rng = random.Random(("sidon", m, seed).__repr__())
    order = list(range(1 << m))
    rng.shuffle(order)
    used = np.zeros(1 << m, bool)
    chosen = []
    for p in order:
        if chosen:
            xors = np.bitwise_xor(np.asarray(chosen, np.int64), p)
            if used[xors].any():
                continue
            used[xors] = True
        chosen.append(p)
    return PointSet.of(m, chosen)
