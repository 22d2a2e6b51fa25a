"""Exclude distributions of graphs of APN functions.

Two routes compute the same distribution: a brute-force pass over ordered
pairs (the oracle, O(2^(3n))) and the cubed-Walsh transform route
(O(n * 2^(2n))). Both are exact; every division is checked and a remainder
aborts with InternalCheckError.

Graph points are encoded (a << n) | b with a in the high bits, matching
sidon.PointSet; Walsh indices are (v << n) | u.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels, sidon
from .errors import CapabilityError, DomainError, InternalCheckError, ValidationError
from .field import FieldSpec, is_cube
from .sidon import IN_SET, ExcludeDistribution, PointSet
from .vbf import (TruthTable, WALSH_MAX_N, graph_of, is_apn, walsh_full)


@dataclass(frozen=True)
class CosetPartition:
    """The blocks Q_a = {a} x F_2^n minus the graph point (a, F(a))."""

    n: int
    kind: str  # "Q" or "Qstar"
    blocks: tuple

    def __iter__(self):
        return iter(self.blocks)


@dataclass(frozen=True)
class AlphaBeta:
    n: int
    alpha: int
    beta: int


def _require_apn(f):
    if not is_apn(f):
        raise ValidationError("function is not APN; its graph is not a Sidon set")


def _exact_div(arr, q, what):
    quo, rem = np.divmod(arr, q)
    if rem.any():
        raise InternalCheckError(f"{what}: division by {q} is not exact")
    return quo


def _dist_from_solution_counts(f, counts):
    """counts holds ordered-triple solution counts at (a << n) | b."""
    n, size = f.n, f.size
    graph = graph_of(f)
    on_graph = counts[graph.points]
    if not (on_graph == 3 * size - 2).all():
        raise InternalCheckError("graph cells must carry 3*2^n - 2 solutions")
    mult = counts.copy()
    mult[graph.points] = 0
    mult = _exact_div(mult, 6, "triple count")
    mult[graph.points] = IN_SET
    return ExcludeDistribution(2 * n, graph, mult)


def exclude_dist_bruteforce(f: TruthTable) -> ExcludeDistribution:
    """Distribution by direct solution counting (the oracle route)."""
    _require_apn(f)
    counts = _kernels.solution_table(f.values, f.n)
    return _dist_from_solution_counts(f, counts)


def exclude_dist_walsh(f: TruthTable) -> ExcludeDistribution:
    """Distribution from the transform of the cubed Walsh table (fast route)."""
    _require_apn(f)
    if f.n > WALSH_MAX_N:
        raise CapabilityError(f"Walsh route limited to n <= {WALSH_MAX_N}")
    n, size = f.n, f.size
    cubes = walsh_full(f).values ** 3
    _kernels.fwht_inplace(cubes)
    # cubes now holds, at (b << n) | a, the signed sum whose value is
    # 2^(2n) * #solutions; transpose to the (a << n) | b layout.
    counts = _exact_div(cubes.reshape(size, size).T.reshape(-1),
                        size * size, "cubed-Walsh sum")
    if counts.min() < 0:
        raise InternalCheckError("negative solution count from Walsh route")
    return _dist_from_solution_counts(f, counts)


def exclude_dist(f: TruthTable) -> ExcludeDistribution:
    """Fast route when available, brute force otherwise."""
    if f.n <= WALSH_MAX_N:
        return exclude_dist_walsh(f)
    return exclude_dist_bruteforce(f)  # pragma: no cover


def coset_partition(f: TruthTable, kind="Q") -> CosetPartition:
    if kind not in ("Q", "Qstar"):
        raise DomainError("kind must be 'Q' or 'Qstar'")
    n, size = f.n, f.size
    b = np.arange(size, dtype=np.int64)
    start = 1 if kind == "Qstar" else 0
    blocks = []
    for a in range(start, size):
        pts = (a << n) | b[b != int(f.values[a])]
        blocks.append(PointSet(2 * n, pts))
    return CosetPartition(n, kind, tuple(blocks))


def uniform_on_Q(f: TruthTable, dist=None) -> bool:
    if dist is None:
        dist = exclude_dist(f)
    return sidon.uniform_on(dist, coset_partition(f, "Q"))


def uniform_on_Qstar(f: TruthTable, dist=None) -> bool:
    if dist is None:
        dist = exclude_dist(f)
    return sidon.uniform_on(dist, coset_partition(f, "Qstar"))


def coset_histogram(f: TruthTable, a: int, dist=None) -> dict:
    """Histogram of multiplicities over the coset block at a."""
    if dist is None:
        dist = exclude_dist(f)
    n = f.n
    b = np.arange(f.size, dtype=np.int64)
    vals = dist.mult[(a << n) | b[b != int(f.values[a])]]
    ks, cs = np.unique(vals, return_counts=True)
    return {int(k): int(c) for k, c in zip(ks, cs)}


def permutation_local_equiv(f: TruthTable, a: int, alpha: int, dist=None) -> bool:
    """d(a, b) == d(alpha, b + F(a) + F(alpha)) for every b != F(a)."""
    if dist is None:
        dist = exclude_dist(f)
    n = f.n
    fa, falpha = int(f.values[a]), int(f.values[alpha])
    b = np.arange(f.size, dtype=np.int64)
    b = b[b != fa]
    lhs = dist.mult[(a << n) | b]
    rhs = dist.mult[(alpha << n) | (b ^ fa ^ falpha)]
    return bool((lhs == rhs).all())


# -- solution counts of F(x) + F(y) + F(x+y) = b ------------------------------

def carlet_counts_all(f: TruthTable) -> np.ndarray:
    x = np.arange(f.size, dtype=np.int64)
    t = f.values[x[:, None] ^ x[None, :]] ^ f.values[:, None] ^ f.values[None, :]
    return np.bincount(t.ravel(), minlength=f.size)


def carlet_count(f: TruthTable, b: int) -> int:
    """#{(x, y) : F(x) + F(y) + F(x+y) = b}."""
    if f.n % 2 != 0:
        raise DomainError("the two-valued case split needs even n")
    return int(carlet_counts_all(f)[b])


def verify_carlet_cases(f: TruthTable, field: FieldSpec) -> dict:
    """Check the b = 0 / cube / non-cube case counts, resolving the sign
    ambiguity by integrality and asserting it matches the n mod 4 rule."""
    n = f.n
    if n % 2 != 0:
        raise DomainError("case split defined for even n only")
    size = f.size
    counts = carlet_counts_all(f)
    cubes = np.array([is_cube(field, b) for b in range(1, size)])
    cube_counts = set(counts[1:][cubes].tolist())
    noncube_counts = set(counts[1:][~cubes].tolist())
    half = 1 << (n // 2)
    # realized branch: the one whose multiplicity count/6 is an integer
    plus_cube = size + 2 * half - 2
    minus_cube = size - 2 * half - 2
    realized_sign = "+" if plus_cube % 6 == 0 else "-"
    expected_cube = plus_cube if realized_sign == "+" else minus_cube
    expected_noncube = (size - half - 2) if realized_sign == "+" else (size + half - 2)
    report = {
        "n": n,
        "b0_count": int(counts[0]),
        "b0_expected": 3 * size - 2,
        "cube_counts": sorted(cube_counts),
        "cube_expected": expected_cube,
        "cube_cases": int(np.count_nonzero(cubes)),
        "cube_cases_expected": (size - 1) // 3,
        "noncube_counts": sorted(noncube_counts),
        "noncube_expected": expected_noncube,
        "noncube_cases": int(np.count_nonzero(~cubes)),
        "noncube_cases_expected": 2 * (size - 1) // 3,
        "realized_sign": realized_sign,
        "sign_matches_mod4_rule": (realized_sign == "+") == (n % 4 == 2),
    }
    report["ok"] = (
        report["b0_count"] == report["b0_expected"]
        and cube_counts == {expected_cube}
        and noncube_counts == {expected_noncube}
        and report["cube_cases"] == report["cube_cases_expected"]
        and report["noncube_cases"] == report["noncube_cases_expected"]
        and report["sign_matches_mod4_rule"]
    )
    return report


def alpha_beta(n: int) -> AlphaBeta:
    """The two multiplicities realized by Gold/Kasami graphs at even n."""
    if n % 2 != 0 or n < 4:
        raise DomainError("defined for even n >= 4")
    half = n // 2
    a_num = (1 << n) + (-2) ** (half + 1) - 2
    b_num = (1 << n) + (-2) ** half - 2
    if a_num % 6 or b_num % 6:
        raise InternalCheckError("alpha/beta are not integral")  # pragma: no cover
    ab = AlphaBeta(n, a_num // 6, b_num // 6)
    if ab.alpha < 0 or ab.beta < 0:
        raise InternalCheckError("negative multiplicity")  # pragma: no cover
    return ab


def integrality_lemma_check(n: int) -> dict:
    """Pure integer check of which signed variant is divisible by 6."""
    if n % 2 != 0:
        raise DomainError("even n only")
    half = n // 2
    plus_small = ((1 << n) + (1 << half) - 2) % 6 == 0
    plus_big = ((1 << n) + (1 << (half + 1)) - 2) % 6 == 0
    return {
        "n": n,
        "plus_2_half_integral": plus_small,
        "plus_2_halfplus1_integral": plus_big,
        "matches_rule": plus_small == (n % 4 == 0) and plus_big == (n % 4 == 2),
    }


def verify_gold_kasami(f: TruthTable) -> dict:
    """Check image and counts of the distribution against the even-n formulas."""
    n = f.n
    if n % 2 != 0:
        raise DomainError("the two-valued description applies to even n")
    ab = alpha_beta(n)
    dist = exclude_dist(f)
    third = ((1 << n) - 1) // 3
    expected = {ab.alpha: (1 << n) * third, ab.beta: (1 << (n + 1)) * third}
    report = {
        "n": n,
        "alpha": ab.alpha,
        "beta": ab.beta,
        "histogram": dist.histogram,
        "expected_histogram": expected,
        "image_ok": set(dist.histogram) == {ab.alpha, ab.beta},
        "counts_ok": dist.histogram == expected,
        "maximal": sidon.is_maximal(dist),
    }
    report["ok"] = report["image_ok"] and report["counts_ok"] and report["maximal"]
    return report


def dillon_dproperty(f: TruthTable) -> bool:
    """F(x)+F(y)+F(z)+F(x+y+z) = c solvable for every nonzero c."""
    return int(_kernels.dproperty_missing(f.values, f.n)) == 0


def plateaued_identity_check(f: TruthTable, a: int, b: int,
                             dist=None, pair_counts=None) -> bool:
    """6 * d(a, b) equals the pair count of F(x) + F(y) + F(a) = b."""
    if dist is None:
        dist = exclude_dist(f)
    if pair_counts is None:
        pair_counts = _kernels.pair_xor_counts(f.values)
    if b == int(f.values[a]):
        raise DomainError("(a, b) lies on the graph")
    d = dist.value_at((a << f.n) | b)
    return 6 * d == int(pair_counts[b ^ int(f.values[a])])


def walsh_bound_criterion(f: TruthTable, dist=None) -> bool:
    """Spread form of the maximality criterion: e_max - e_min <= (2^n - 2)/6."""
    if dist is None:
        dist = exclude_dist(f)
    ok = 6 * (sidon.e_max(dist) - sidon.e_min(dist)) <= f.size - 2
    if ok and not sidon.is_maximal(dist):
        raise InternalCheckError("bound held but graph not maximal")  # pragma: no cover
    return ok


def walsh_bound_hyperplane(f: TruthTable) -> bool:
    """Hyperplane form: for every linear hyperplane of (F_2^n)^2 and every
    pair of off-graph points related by its normal, the off-hyperplane
    cubed-Walsh sum stays within 2^(3n-1) - 2^(2n). O(2^(4n)); n <= 5."""
    _require_apn(f)
    n = f.n
    if n > 5:
        raise CapabilityError("hyperplane form limited to n <= 5")
    size = f.size
    m = size * size
    cubes = walsh_full(f).values ** 3
    _kernels.fwht_inplace(cubes)  # index (b << n) | a
    t = cubes
    off = np.ones(m, bool)
    x = np.arange(size)
    off[(f.values << n) | x] = False  # graph point (a,b) sits at (b << n) | a
    bound = (1 << (3 * n - 1)) - (1 << (2 * n))
    idx = np.arange(m)
    for w in range(1, m):
        pair_off = off & off[idx ^ w]
        if not pair_off.any():
            continue
        # sum over (u,v) outside the hyperplane with normal w = (T[j]-T[j^w])/2
        diff = np.abs(t[pair_off] - t[(idx ^ w)[pair_off]]) // 2
        if int(diff.max()) > bound:
            return False
    return True


def conjecture_zero_flat_check(f: TruthTable, dist=None) -> bool:
    """d(a, 0) = d(0, b) = (2^n - 2)/6 on all off-graph points of the two
    zero flats (odd-n APN power maps)."""
    if f.n % 2 == 0:
        raise DomainError("checker defined for odd n")
    if dist is None:
        dist = exclude_dist(f)
    n, size = f.n, f.size
    target = (size - 2) // 6
    a = np.arange(size, dtype=np.int64)
    row = dist.mult[a << n]       # points (a, 0)
    col = dist.mult[a]            # points (0, b)
    row = row[row != IN_SET]
    col = col[col != IN_SET]
    return bool((row == target).all() and (col == target).all())
