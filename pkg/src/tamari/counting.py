"""Closed-form counting of Tamari intervals and their families.

All arithmetic is exact: divisions in the formulas are performed as
integer divisions guarded by a divisibility assertion, so a transcription
error surfaces as an exception rather than a rounding artifact.  The
truncated trivariate series refines the count by the three joint canopy
types, and ``tally`` recomputes everything by brute force while holding
the direct and blossoming classifiers to agreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .blossoming import (
    from_interval,
    is_synchronized_tree,
    non_kreweras_paths,
    non_modern_edges,
    non_modern_paths,
)
from .errors import OracleDisagreement, UnsupportedSize
from .intervals import (
    TamariInterval,
    canopy_type_counts,
    enumerate_intervals,
    is_infinitely_modern,
    is_kreweras,
    is_modern,
    is_new,
    is_self_dual,
    is_synchronized,
    is_trivial,
)

__all__ = [
    "Family",
    "TallyResult",
    "count",
    "count_by_canopy_matches",
    "count_self_dual",
    "count_synchronized_by_types",
    "modern_series_coefficients",
    "narayana",
    "tally",
    "trivariate_coefficients",
]


class Family(Enum):
    GENERAL = "general"
    SYNCHRONIZED = "synchronized"
    MODERN = "modern"
    NEW = "new"
    MODERN_SYNCHRONIZED = "modern-synchronized"
    INFINITELY_MODERN = "infinitely-modern"
    KREWERAS = "kreweras"


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return q


def _catalan(n: int) -> int:
    return _exact_div(comb(2 * n, n), n + 1)


def count(family: Family, n: int) -> int:
    """Number of size-n intervals in the family, by closed formula."""
    if family is Family.MODERN and n == 0:
        # convention making the rise bijection onto new intervals total
        return 1
    if n < 1:
        raise UnsupportedSize("family counts are defined for n >= 1")
    if family is Family.GENERAL:
        return _exact_div(2 * comb(4 * n + 1, n - 1), n * (n + 1))
    if family is Family.SYNCHRONIZED:
        return _exact_div(2 * comb(3 * n, n - 1), n * (n + 1))
    if family is Family.MODERN:
        return _exact_div(3 * 2 ** (n - 1) * comb(2 * n, n), (n + 1) * (n + 2))
    if family is Family.NEW:
        return count(Family.MODERN, n - 1)
    if family is Family.MODERN_SYNCHRONIZED:
        return _catalan(n)
    if family in (Family.INFINITELY_MODERN, Family.KREWERAS):
        return _exact_div(comb(3 * n, n), 2 * n + 1)
    raise ValueError(f"unknown family {family!r}")


def count_self_dual(family: Family, n: int) -> int:
    """Number of self-dual size-n intervals in the family.

    Closed forms split on the parity of n: the half-turn symmetry of the
    corresponding blossoming tree is centered on a node for even n and on
    an edge for odd n.
    """
    if family is Family.NEW:
        if n == 1:
            return 1
        return count_self_dual(Family.MODERN, n - 1)
    if n < 1:
        raise UnsupportedSize("self-dual counts are defined for n >= 1")
    k, odd = divmod(n, 2)
    if family is Family.GENERAL:
        if odd:
            return _exact_div(comb(4 * k + 2, k), k + 1)
        return _exact_div(comb(4 * k, k), 3 * k + 1)
    if family is Family.SYNCHRONIZED:
        if odd:
            return _exact_div(comb(3 * k + 1, k), k + 1)
        return 0
    if family is Family.MODERN:
        if odd:
            return _exact_div(2**k * comb(2 * k, k), k + 1)
        return _exact_div(2 ** (k - 1) * comb(2 * k, k), k + 1)
    if family is Family.MODERN_SYNCHRONIZED:
        if odd:
            return _catalan(k)
        return 0
    if family in (Family.INFINITELY_MODERN, Family.KREWERAS):
        if odd:
            return _exact_div(comb(3 * k + 1, k), k + 1)
        return _exact_div(comb(3 * k, k), 2 * k + 1)
    raise ValueError(f"unknown family {family!r}")


def count_by_canopy_matches(n: int, k: int) -> int:
    """Intervals of size n whose two canopies agree in exactly k + 2 places."""
    if n < 1 or k < 0:
        raise UnsupportedSize("requires n >= 1 and k >= 0")
    return _exact_div(2 * comb(3 * n, k) * comb(n + 1, k + 2), n * (n + 1))


def count_synchronized_by_types(i: int, j: int) -> int:
    """Synchronized intervals with i entries of type 11 and j of type 00."""
    if i < 1 or j < 1:
        raise UnsupportedSize("requires i, j >= 1")
    return _exact_div(
        comb(2 * i + j - 2, j - 1) * comb(2 * j + i - 2, i - 1), i * j
    )


def narayana(i: int, j: int) -> int:
    """Modern-synchronized intervals with i entries of type 11, j of type 00."""
    if i < 1 or j < 1:
        raise UnsupportedSize("requires i, j >= 1")
    return _exact_div(comb(i + j - 1, i) * comb(i + j - 1, j), i + j - 1)


# ---------------------------------------------------------- trivariate series


class _Poly3:
    """Sparse polynomial in x, y, z truncated past total degree ``cap``."""

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs: dict[tuple[int, int, int], int], cap: int):
        self.coeffs = {k: v for k, v in coeffs.items() if v and sum(k) <= cap}
        self.cap = cap

    @staticmethod
    def zero(cap):
        return _Poly3({}, cap)

    @staticmethod
    def variable(idx, cap):
        key = tuple(1 if i == idx else 0 for i in range(3))
        return _Poly3({key: 1}, cap)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return _Poly3(out, self.cap)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return _Poly3(out, self.cap)

    def __mul__(self, other):
        out: dict[tuple[int, int, int], int] = {}
        for (a, b, c), v in self.coeffs.items():
            for (d, e, f), w in other.coeffs.items():
                if a + d + b + e + c + f > self.cap:
                    continue
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + v * w
        return _Poly3(out, self.cap)

    def geometric(self):
        """1 / (1 - self); requires zero constant term."""
        if self.coeffs.get((0, 0, 0)):
            raise ArithmeticError("geometric series needs zero constant term")
        one = _Poly3({(0, 0, 0): 1}, self.cap)
        acc, power = one, one
        for _ in range(self.cap):
            power = power * self
            if not power.coeffs:
                break
            acc = acc + power
        return acc

    def __eq__(self, other):
        return self.coeffs == other.coeffs


def _canopy_series_pair(cap: int) -> tuple[_Poly3, _Poly3]:
    """Fixed point of the planted blossoming-tree system.

    A counts red-planted trees, B blue-planted ones, with x, y, z marking
    nodes of joint types 11, 00 and 10.
    """
    x = _Poly3.variable(0, cap)
    y = _Poly3.variable(1, cap)
    z = _Poly3.variable(2, cap)
    a = _Poly3.zero(cap)
    b = _Poly3.zero(cap)
    for _ in range(cap + 1):
        gb = b.geometric()
        ga = a.geometric()
        new_a = gb * gb * (y + z * a * ga)
        new_b = ga * ga * (x + z * b * gb)
        if new_a == a and new_b == b:
            break
        a, b = new_a, new_b
    return a, b


MAX_SERIES_DEGREE = 9


def trivariate_coefficients(
    max_degree: int, cap: int | None = None
) -> dict[tuple[int, int, int], int]:
    """Coefficients I[i, j, m] counting intervals by joint canopy types.

    The triple (i, j, m) counts positions of types 11, 00 and 10, so the
    interval size is i + j + m - 1.  Coefficients come from the planted
    blossoming-tree series; the edge-rooted identity (each interval of size
    n counted n times equals the product series) is asserted on the way.
    """
    limit = MAX_SERIES_DEGREE if cap is None else cap
    if max_degree > limit:
        raise UnsupportedSize(f"degree {max_degree} exceeds the cap {limit}")
    a, b = _canopy_series_pair(max_degree)
    ga = a.geometric()
    gb = b.geometric()
    x = _Poly3.variable(0, max_degree)
    y = _Poly3.variable(1, max_degree)
    z = _Poly3.variable(2, max_degree)
    f = x * a * ga + y * b * gb + z * a * ga * b * gb - a * b
    product = a * b
    for key, value in f.coeffs.items():
        weight = sum(key) - 1
        if weight * value != product.coeffs.get(key, 0):
            raise OracleDisagreement(
                f"edge-rooted identity fails at {key}: "
                f"{weight * value} != {product.coeffs.get(key, 0)}"
            )
    for key, value in product.coeffs.items():
        if value and key not in f.coeffs:
            raise OracleDisagreement(f"edge-rooted identity fails at {key}")
    return dict(sorted(f.coeffs.items()))


def modern_series_coefficients(
    max_degree: int, cap: int | None = None
) -> tuple[list[int], list[int], list[int]]:
    """Coefficient lists (A, B, C) of the planted modern-tree series.

    A counts planted modern trees by nodes, B those whose root half-edge is
    followed clockwise by a bud, and C = A / (1 - B).  C has the closed
    form 2^(n-1)/(n+1) * binom(2n, n), asserted here, and (1 + C)^2 counts
    node-rooted modern trees, giving back the modern interval counts.
    """
    limit = MAX_SERIES_DEGREE if cap is None else cap
    if max_degree > limit:
        raise UnsupportedSize(f"degree {max_degree} exceeds the cap {limit}")
    size = max_degree + 1

    def mul(p, q):
        out = [0] * size
        for i, pi in enumerate(p):
            if pi:
                for j, qj in enumerate(q):
                    if i + j < size and qj:
                        out[i + j] += pi * qj
        return out

    def geometric(p):
        if p[0]:
            raise ArithmeticError("geometric series needs zero constant term")
        acc = [0] * size
        acc[0] = 1
        power = list(acc)
        for _ in range(max_degree):
            power = mul(power, p)
            if not any(power):
                break
            acc = [u + v for u, v in zip(acc, power)]
        return acc

    z = [0] * size
    if size > 1:
        z[1] = 1
    a = [0] * size
    b = [0] * size
    for _ in range(max_degree + 1):
        gb = geometric(b)
        c = mul(a, gb)
        c_plus_one = list(c)
        c_plus_one[0] += 1
        new_a = mul(z, mul(gb, mul(c_plus_one, c_plus_one)))
        new_b = mul(z, mul(gb, c_plus_one))
        if new_a == a and new_b == b:
            break
        a, b = new_a, new_b
    c = mul(a, geometric(b))
    for n in range(1, size):
        expected = _exact_div(2 ** (n - 1) * comb(2 * n, n), n + 1)
        if c[n] != expected:
            raise OracleDisagreement(f"modern planted series: [z^{n}] = {c[n]} != {expected}")
    c_plus_one = list(c)
    c_plus_one[0] += 1
    squared = mul(c_plus_one, c_plus_one)
    for n in range(1, size):
        if _exact_div(squared[n], n + 1) != count(Family.MODERN, n):
            raise OracleDisagreement(f"modern count mismatch at n = {n}")
    return a[:size], b[:size], c[:size]


# -------------------------------------------------------------- brute force


@dataclass
class TallyResult:
    """Brute-force classification of every interval of one size."""

    n: int
    total: int
    families: dict[Family, int]
    self_dual: dict[Family, int]
    self_dual_total: int
    canopy_triples: dict[tuple[int, int, int], int] = field(default_factory=dict)
    canopy_matches: dict[int, int] = field(default_factory=dict)


def _classify_both_ways(interval: TamariInterval) -> dict[Family, bool]:
    tree = from_interval(interval)
    direct = {
        Family.SYNCHRONIZED: is_synchronized(interval),
        Family.MODERN: is_modern(interval),
        Family.INFINITELY_MODERN: is_infinitely_modern(interval),
        Family.KREWERAS: is_kreweras(interval),
    }
    via_patterns = {
        Family.SYNCHRONIZED: is_synchronized_tree(tree),
        Family.MODERN: not non_modern_edges(tree),
        Family.INFINITELY_MODERN: not non_modern_paths(tree),
        Family.KREWERAS: not non_kreweras_paths(tree),
    }
    for family, value in direct.items():
        if via_patterns[family] != value:
            raise OracleDisagreement(
                f"{family.value} classifiers disagree on {interval!r}"
            )
    direct[Family.GENERAL] = True
    direct[Family.NEW] = is_new(interval)
    direct[Family.MODERN_SYNCHRONIZED] = (
        direct[Family.MODERN] and direct[Family.SYNCHRONIZED]
    )
    return direct


def tally(n: int, max_size: int | None = None) -> TallyResult:
    """Classify every interval of size n with both classifier stacks.

    Raises OracleDisagreement when a direct classifier and the blossoming
    pattern classifier differ on any interval, which would mean a bug.
    """
    cap = 8 if max_size is None else max_size
    if n > cap:
        raise UnsupportedSize(f"size {n} exceeds the tally cap {cap}")
    families = {family: 0 for family in Family}
    self_dual = {family: 0 for family in Family}
    triples: dict[tuple[int, int, int], int] = {}
    matches: dict[int, int] = {}
    total = 0
    dual_total = 0
    for interval in enumerate_intervals(n, max_size=cap):
        total += 1
        membership = _classify_both_ways(interval)
        dual = is_self_dual(interval)
        dual_total += dual
        for family, member in membership.items():
            if member:
                families[family] += 1
                if dual:
                    self_dual[family] += 1
        i, j, m = canopy_type_counts(interval)
        triples[i, j, m] = triples.get((i, j, m), 0) + 1
        matches[i + j] = matches.get(i + j, 0) + 1
        if is_trivial(interval) and not (
            membership[Family.SYNCHRONIZED] and membership[Family.KREWERAS]
        ):
            raise OracleDisagreement("a trivial interval escaped its families")
    return TallyResult(
        n=n,
        total=total,
        families=families,
        self_dual=self_dual,
        self_dual_total=dual_total,
        canopy_triples=dict(sorted(triples.items())),
        canopy_matches=dict(sorted(matches.items())),
    )
