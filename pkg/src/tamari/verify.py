"""Executable oracle suite: every structural claim as a named check.

Each check sweeps all intervals (or all tree pairs) up to a size bound and
compares two independently computed answers.  ``run_checks`` powers the
command-line ``verify`` command and returns one result per check;
anything but a full pass means a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import blossoming, counting, intervals, meandering, sampler, trees

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class _Context:
    """Shared per-size caches so each sweep enumerates only once."""

    def __init__(self, max_n: int):
        self.max_n = max_n
        self._images: dict[int, list] = {}
        self._tallies: dict[int, counting.TallyResult] = {}

    def sizes(self, cap: int | None = None) -> range:
        top = self.max_n if cap is None else min(self.max_n, cap)
        return range(1, top + 1)

    def images(self, n: int):
        if n not in self._images:
            self._images[n] = [
                (i, blossoming.from_interval(i))
                for i in intervals.enumerate_intervals(n, max_size=n)
            ]
        return self._images[n]

    def tally(self, n: int) -> counting.TallyResult:
        if n not in self._tallies:
            self._tallies[n] = counting.tally(n, max_size=n)
        return self._tallies[n]


def _check_interval_counts(ctx: _Context):
    total = 0
    for n in ctx.sizes():
        observed = len(intervals.enumerate_intervals(n, max_size=n))
        if observed != counting.count(counting.Family.GENERAL, n):
            return False, f"count mismatch at n = {n}"
        total += observed
    return True, f"{total} intervals across n <= {ctx.max_n}"


def _check_bijection_round_trips(ctx: _Context):
    checked = 0
    for n in ctx.sizes():
        for interval, tree in ctx.images(n):
            m = meandering.from_tree_pair(interval.lower, interval.upper)
            if meandering.to_tree_pair(m) != (interval.lower, interval.upper):
                return False, f"pair/diagram round trip fails on {interval!r}"
            if blossoming.to_meandering(tree) != m:
                return False, f"unfold/closure round trip fails on {interval!r}"
            if blossoming.to_interval(tree) != interval:
                return False, f"interval round trip fails on {interval!r}"
            checked += 1
    return True, f"{checked} intervals round-tripped"


def _check_diagram_trees_match_intervals(ctx: _Context):
    checked = 0
    for n in ctx.sizes(6):
        for low in trees.enumerate_binary_trees(n):
            for up in trees.enumerate_binary_trees(n):
                m = meandering.from_tree_pair(low, up)
                is_tree = meandering.is_meandering_tree(m)
                if is_tree != trees.tamari_leq(low, up):
                    return False, f"tree test disagrees on {low!r}, {up!r}"
                if bool(meandering.flawed_pairs(m)) == is_tree:
                    return False, f"flawed pairs disagree on {low!r}, {up!r}"
                smooth = intervals.smooth_flawed_pairs(low, up)
                if bool(smooth) != bool(meandering.flawed_pairs(m)):
                    return False, f"flawed transfer fails on {low!r}, {up!r}"
                checked += 1
    return True, f"{checked} tree pairs checked"


def _transfer_check(name: str, direct: Callable, pattern: Callable):
    def check(ctx: _Context):
        checked = 0
        for n in ctx.sizes():
            for interval, tree in ctx.images(n):
                if direct(interval) != pattern(tree):
                    return False, f"{name} transfer fails on {interval!r}"
                checked += 1
        return True, f"{checked} intervals agree"

    return check


def _check_duality(ctx: _Context):
    checked = 0
    for n in ctx.sizes():
        lookup = {
            interval: tree for interval, tree in ctx.images(n)
        }
        for interval, tree in ctx.images(n):
            dual = intervals.dual_interval(interval)
            if blossoming.switch_colors(tree) != lookup[dual]:
                return False, f"color switch fails on {interval!r}"
            sym = blossoming.is_half_turn_symmetric(tree)
            if sym != intervals.is_self_dual(interval):
                return False, f"half-turn symmetry fails on {interval!r}"
            checked += 1
    return True, f"{checked} intervals commute with duality"


def _check_self_dual_table(ctx: _Context):
    for n in ctx.sizes(7):
        result = ctx.tally(n)
        for family in counting.Family:
            formula = counting.count_self_dual(family, n)
            if result.self_dual[family] != formula:
                return (
                    False,
                    f"self-dual {family.value} at n = {n}: "
                    f"{result.self_dual[family]} != {formula}",
                )
    return True, f"all families match for n <= {min(ctx.max_n, 7)}"


def _check_family_counts(ctx: _Context):
    for n in ctx.sizes(8):
        result = ctx.tally(n)
        for family in counting.Family:
            if result.families[family] != counting.count(family, n):
                return False, f"{family.value} count fails at n = {n}"
    return True, f"all family formulas match for n <= {min(ctx.max_n, 8)}"


def _check_parameter_transfer(ctx: _Context):
    checked = 0
    for n in ctx.sizes():
        for interval, tree in ctx.images(n):
            degrees = sorted(
                blossoming.bi_degree(tree, v) for v in range(n + 1)
            )
            if degrees != sorted(intervals.bi_length_vector(interval)):
                return False, f"bi-degree multiset fails on {interval!r}"
            types = [blossoming.node_type(tree, v) for v in range(n + 1)]
            counts = (
                types.count(intervals.TYPE_11),
                types.count(intervals.TYPE_00),
                types.count(intervals.TYPE_10),
            )
            if counts != intervals.canopy_type_counts(interval):
                return False, f"canopy type counts fail on {interval!r}"
            checked += 1
    return True, f"{checked} intervals transfer their parameters"


def _check_refined_counts(ctx: _Context):
    for n in range(1, 11):
        total = sum(
            counting.count_by_canopy_matches(n, k) for k in range(n)
        )
        if total != counting.count(counting.Family.GENERAL, n):
            return False, f"canopy-match sum fails at n = {n}"
    for n in ctx.sizes(7):
        result = ctx.tally(n)
        for agreements, observed in result.canopy_matches.items():
            if observed != counting.count_by_canopy_matches(n, agreements - 2):
                return False, f"canopy-match tally fails at n = {n}, k = {agreements - 2}"
    return True, f"sum identity to n = 10, tallies to n <= {min(ctx.max_n, 7)}"


def _check_trivariate(ctx: _Context):
    degree = min(ctx.max_n, 7) + 1
    coeffs = counting.trivariate_coefficients(degree)
    for n in ctx.sizes(7):
        result = ctx.tally(n)
        expected = {
            key: value
            for key, value in coeffs.items()
            if sum(key) == n + 1
        }
        if result.canopy_triples != expected:
            return False, f"trivariate coefficients fail at n = {n}"
    return True, f"coefficients match tallies up to degree {degree}"


def _check_dyck_formulation(ctx: _Context):
    checked = 0
    for n in ctx.sizes():
        for interval, _ in ctx.images(n):
            m = meandering.from_tree_pair(interval.lower, interval.upper)
            upper_word = trees.dyck_from_tree(interval.upper)
            lower_word = trees.dyck_from_tree(interval.lower)
            if meandering.upper_arc_counts(m) != trees.contact_vector(upper_word):
                return False, f"contact vector fails on {interval!r}"
            if meandering.lower_arc_counts(m) != trees.descent_vector(lower_word):
                return False, f"descent vector fails on {interval!r}"
            checked += 1
    return True, f"{checked} intervals match the walk statistics"


def _check_decomposition(ctx: _Context):
    for n in ctx.sizes(8):
        if meandering.count_meandering_trees(n) != counting.count(
            counting.Family.GENERAL, n
        ):
            return False, f"recursive count fails at n = {n}"
    checked = 0
    for n in ctx.sizes():
        for interval, _ in ctx.images(n):
            m = meandering.from_tree_pair(interval.lower, interval.upper)
            left, right, j = meandering.decompose(m)
            if meandering.compose(left, right, j) != m:
                return False, f"decompose round trip fails on {interval!r}"
            checked += 1
    return True, f"counts match and {checked} round trips hold"


def _check_reflection_involution(ctx: _Context):
    for n in ctx.sizes(6):
        pairs = {}
        for interval, _ in ctx.images(n):
            pairs[interval] = blossoming.reflect_interval(interval)
        trivial = {i for i in pairs if intervals.is_trivial(i)}
        mod_sync = {
            i
            for i in pairs
            if intervals.is_modern(i) and intervals.is_synchronized(i)
        }
        for interval, image in pairs.items():
            if pairs[image] != interval:
                return False, f"reflection not an involution on {interval!r}"
            if intervals.dual_interval(image) != pairs[intervals.dual_interval(interval)]:
                return False, f"reflection does not commute with duality on {interval!r}"
            if intervals.is_synchronized(image) != intervals.is_synchronized(interval):
                return False, f"reflection breaks synchronization on {interval!r}"
            if intervals.is_kreweras(image) != intervals.is_infinitely_modern(interval):
                return False, f"family exchange fails on {interval!r}"
        if {pairs[i] for i in mod_sync} != trivial:
            return False, f"modern-synchronized vs trivial exchange fails at n = {n}"
    return True, f"involution verified for n <= {min(ctx.max_n, 6)}"


def _check_sampler(ctx: _Context):
    import itertools

    for n in ctx.sizes(5):
        parts = 3 * n + 3
        total = n - 1
        seqs = set()
        compositions = 0
        for bars in itertools.combinations(range(total + parts - 1), parts - 1):
            comp = []
            prev = -1
            for b in bars:
                comp.append(b - prev - 1)
                prev = b
            comp.append(total + parts - 1 - prev - 1)
            compositions += 1
            for shifted in sampler.valid_shifts(tuple(comp)):
                seqs.add(shifted)
        if (n + 1) * len(seqs) != 2 * compositions:
            return False, f"cycle lemma count fails at n = {n}"
        counts: dict[bytes, int] = {}
        for seq in seqs:
            tree, mark = sampler.sequence_to_marked_tree(seq)
            if sampler.marked_tree_to_sequence(tree, mark) != seq:
                return False, f"encoding round trip fails on {seq}"
            key = blossoming.canonical_encode(tree)
            counts[key] = counts.get(key, 0) + 1
        expected = {
            blossoming.canonical_encode(tree) for _, tree in ctx.images(n)
        }
        if set(counts) != expected or any(v != n for v in counts.values()):
            return False, f"marked multiset fails at n = {n}"
    rng = sampler.RandomSource(20240)
    draws = 3000
    freq: dict[str, int] = {}
    for _ in range(draws):
        key = intervals.interval_to_text(sampler.sample_interval(2, rng))
        freq[key] = freq.get(key, 0) + 1
    if len(freq) != 3:
        return False, "sampler missed an interval at n = 2"
    stat = sum((v - draws / 3) ** 2 / (draws / 3) for v in freq.values())
    if stat >= 13.8155:  # chi-square 0.001 critical value, 2 degrees of freedom
        return False, f"uniformity smoke test fails: chi2 = {stat:.2f}"
    return True, f"encoding bijective for n <= {min(ctx.max_n, 5)}, smoke test ok"


def _check_series_consistency(ctx: _Context):
    counting.modern_series_coefficients(min(ctx.max_n + 1, 9))
    for n in ctx.sizes(8):
        via_j = counting.count_by_canopy_matches(n, n - 1)
        if via_j != counting.count(counting.Family.SYNCHRONIZED, n):
            return False, f"synchronized special case fails at n = {n}"
    return True, "modern planted series and specializations agree"


_CHECKS: list[tuple[str, Callable]] = [
    ("interval-counts", _check_interval_counts),
    ("bijection-round-trips", _check_bijection_round_trips),
    ("diagram-trees-vs-intervals", _check_diagram_trees_match_intervals),
    (
        "transfer-synchronized",
        _transfer_check(
            "synchronized", intervals.is_synchronized, blossoming.is_synchronized_tree
        ),
    ),
    (
        "transfer-modern",
        _transfer_check(
            "modern",
            intervals.is_modern,
            lambda tree: not blossoming.non_modern_edges(tree),
        ),
    ),
    (
        "transfer-infinitely-modern",
        _transfer_check(
            "infinitely modern",
            intervals.is_infinitely_modern,
            lambda tree: not blossoming.non_modern_paths(tree),
        ),
    ),
    (
        "transfer-kreweras",
        _transfer_check(
            "Kreweras",
            intervals.is_kreweras,
            lambda tree: not blossoming.non_kreweras_paths(tree),
        ),
    ),
    ("duality-and-symmetry", _check_duality),
    ("family-count-formulas", _check_family_counts),
    ("self-dual-table", _check_self_dual_table),
    ("parameter-transfer", _check_parameter_transfer),
    ("refined-canopy-counts", _check_refined_counts),
    ("trivariate-series", _check_trivariate),
    ("dyck-walk-formulation", _check_dyck_formulation),
    ("recursive-decomposition", _check_decomposition),
    ("reflection-involution", _check_reflection_involution),
    ("sampler-encoding", _check_sampler),
    ("series-consistency", _check_series_consistency),
]

CHECK_NAMES = [name for name, _ in _CHECKS]


def run_checks(max_n: int = 6, names: list[str] | None = None) -> list[CheckResult]:
    """Run the oracle suite up to size ``max_n``; returns one result per check."""
    ctx = _Context(max_n)
    selected = set(CHECK_NAMES if names is None else names)
    unknown = selected - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    results = []
    for name, fn in _CHECKS:
        if name not in selected:
            continue
        try:
            passed, detail = fn(ctx)
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"exception: {exc!r}"
        results.append(CheckResult(name=name, passed=passed, detail=detail))
    return results
