"""Exact uniform random generation of blossoming trees and Tamari intervals.

The generator walks a chain of bijections, so uniformity is exact rather
than asymptotic: a uniform weak composition of n - 1 into 3n + 3 parts,
one of its exactly two cyclic block-shifts satisfying the prefix
condition, the edge-marked blossoming tree encoded by that sequence, and
finally the interval of the unmarked tree.  Each tree of size n carries n
marks and each mark corresponds to (n + 1) / 2 compositions on average,
which cancels exactly.

Randomness is injected through RandomSource, a bundled SplitMix64
generator: 64-bit state advanced by the golden-ratio constant and mixed
by two xor-multiply rounds.  Identical seeds reproduce identical streams
on every platform.
"""

from __future__ import annotations

from collections import deque

from .blossoming import BLUE, BUD, RED, BlossomingTree, to_interval
from .errors import CycleLemmaViolation, InvalidSequence, UnsupportedSize
from .intervals import TamariInterval

__all__ = [
    "RandomSource",
    "marked_tree_to_sequence",
    "sample_blossoming",
    "sample_composition",
    "sample_interval",
    "sequence_to_marked_tree",
    "valid_shifts",
]

_MASK64 = (1 << 64) - 1


class RandomSource:
    """Deterministic splittable PRNG (SplitMix64)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), exact by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        while True:
            value = self.next_u64() >> (64 - bits)
            if value < bound:
                return value

    def split(self) -> "RandomSource":
        """An independent generator derived from this one's stream."""
        return RandomSource(self.next_u64() ^ 0x5851F42D4C957F2D)


def sample_composition(n: int, rng: RandomSource) -> tuple[int, ...]:
    """Uniform weak composition of n - 1 into 3n + 3 parts.

    Sampled as a uniform (n-1)-subset of {1 .. 4n+1} (star positions in a
    stars-and-bars word) using Floyd's algorithm.
    """
    if n < 1:
        raise UnsupportedSize("compositions are sampled for n >= 1")
    total = 4 * n + 1
    k = n - 1
    chosen: set[int] = set()
    for j in range(total - k + 1, total + 1):
        t = 1 + rng.below(j)
        chosen.add(j if t in chosen else t)
    parts = [0] * (3 * n + 3)
    for rank, star in enumerate(sorted(chosen)):
        parts[star - 1 - rank] += 1
    return tuple(parts)


def _blocks(seq: tuple[int, ...]) -> list[int]:
    return [seq[3 * i] + seq[3 * i + 1] + seq[3 * i + 2] for i in range(len(seq) // 3)]


def _valid_shift_indices(blocks: list[int]) -> list[int]:
    """Block rotations whose every proper prefix sum stays >= its index.

    A rotation by s qualifies iff the walk with steps block - 1 satisfies
    min over the next n partial sums >= -1, checked for all rotations at
    once with a sliding-window minimum over the doubled prefix array.
    """
    from collections import deque

    count = len(blocks)
    window = count - 1
    prefix = [0]
    for b in blocks + blocks:
        prefix.append(prefix[-1] + b - 1)
    out = []
    dq: deque[int] = deque()
    for k in range(1, count + window):
        while dq and prefix[dq[-1]] >= prefix[k]:
            dq.pop()
        dq.append(k)
        shift = k - window
        if shift >= 0:
            while dq[0] <= shift:
                dq.popleft()
            if prefix[dq[0]] >= prefix[shift] - 1:
                out.append(shift)
    return out


def valid_shifts(seq: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The cyclic block-shifts of a composition satisfying the prefix condition.

    The cycle lemma forces exactly two of the n + 1 shifts to qualify;
    anything else raises CycleLemmaViolation.
    """
    seq = tuple(seq)
    if len(seq) % 3 != 0 or len(seq) < 6:
        raise InvalidSequence("length must be 3(n + 1) with n >= 1")
    n = len(seq) // 3 - 1
    if any(not isinstance(a, int) or a < 0 for a in seq) or sum(seq) != n - 1:
        raise InvalidSequence(f"entries must be naturals summing to {n - 1}")
    out = [
        seq[3 * shift:] + seq[:3 * shift]
        for shift in _valid_shift_indices(_blocks(seq))
    ]
    if len(out) != 2:
        raise CycleLemmaViolation(f"{len(out)} valid shifts instead of 2")
    return out


# ------------------------------------------------- the marked-tree encoding


def _validate_marked_sequence(seq: tuple[int, ...]) -> int:
    if len(seq) % 3 != 0 or len(seq) < 6:
        raise InvalidSequence("length must be 3(n + 1) with n >= 1")
    n = len(seq) // 3 - 1
    if any(not isinstance(a, int) or a < 0 for a in seq):
        raise InvalidSequence("entries must be non-negative integers")
    if sum(seq) != n - 1:
        raise InvalidSequence(f"entries must sum to {n - 1}")
    acc = 0
    for i in range(n):
        acc += seq[3 * i] + seq[3 * i + 1] + seq[3 * i + 2]
        if acc < i:
            raise InvalidSequence(f"prefix condition fails at block {i}")
    return n


def _other_color(color: str) -> str:
    return RED if color == BLUE else BLUE


def sequence_to_marked_tree(seq) -> tuple[BlossomingTree, int]:
    """Decode a marked sequence into an edge-marked blossoming tree.

    Blocks of three are the child-group sizes of the nodes in first-visit
    order along the counterclockwise contour started at the middle of the
    marked edge, on its red side.  The sequence splits at the first block
    prefix summing to its index; the two halves rebuild the two rooted
    halves of the tree, joined by the marked edge, and the bicoloring is
    propagated from the red mark.
    """
    seq = tuple(seq)
    n = _validate_marked_sequence(seq)
    triples = [(seq[3 * i], seq[3 * i + 1], seq[3 * i + 2]) for i in range(n + 1)]
    acc = 0
    split = None
    for i in range(n + 1):
        acc += sum(triples[i])
        if acc == i:
            split = i
            break
    if split is None or split >= n:
        raise InvalidSequence("sequence does not split into two rooted trees")

    items: list[list] = [[] for _ in range(n + 1)]
    marked_edge = 0
    next_edge = 1

    def build(first: int, last: int, root_color: str) -> None:
        nonlocal next_edge
        # pending[v] holds (slot, color at v) for unfilled child slots, in
        # counterclockwise order after the parent half-edge
        pending: dict[int, deque[tuple[int, str]]] = {}

        def open_node(v: int, parent_edge: int, color: str) -> None:
            left, middle, right = triples[v]
            seq_v: list = [(parent_edge, color)]
            slots = []
            for _ in range(left):
                slots.append((len(seq_v), color))
                seq_v.append(None)
            seq_v.append(BUD)
            for _ in range(middle):
                slots.append((len(seq_v), _other_color(color)))
                seq_v.append(None)
            seq_v.append(BUD)
            for _ in range(right):
                slots.append((len(seq_v), color))
                seq_v.append(None)
            items[v] = seq_v
            pending[v] = deque(slots)

        open_node(first, marked_edge, root_color)
        stack = [first]
        for child in range(first + 1, last + 1):
            while not pending[stack[-1]]:
                stack.pop()
            parent = stack[-1]
            slot, color = pending[parent].popleft()
            edge = next_edge
            next_edge += 1
            items[parent][slot] = (edge, color)
            open_node(child, edge, _other_color(color))
            stack.append(child)
        if any(pending[v] for v in range(first, last + 1)):
            raise InvalidSequence("arities do not close the rooted tree")

    build(0, split, RED)
    build(split + 1, n, BLUE)
    return BlossomingTree(items), marked_edge


def marked_tree_to_sequence(tree: BlossomingTree, marked_edge: int) -> tuple[int, ...]:
    """Inverse encoding: child-group sizes along the contour from the mark."""
    v1, v2 = tree.edge_ends(marked_edge)
    if tree.half_color(marked_edge, v1) == RED:
        red_end, blue_end = v1, v2
    else:
        red_end, blue_end = v2, v1
    out: list[int] = []

    def walk(root: int, parent_edge: int) -> None:
        work = [(root, parent_edge)]
        while work:
            v, pedge = work.pop()
            seq = tree.items[v]
            size = len(seq)
            start = tree.slot(pedge, v)
            groups: list[list[int]] = [[], [], []]
            g = 0
            for step in range(1, size):
                item = seq[(start + step) % size]
                if item == BUD:
                    g += 1
                else:
                    groups[g].append(item[0])
            out.extend(len(group) for group in groups)
            children = groups[0] + groups[1] + groups[2]
            for e in reversed(children):
                work.append((tree.across(e, v), e))

    walk(red_end, marked_edge)
    walk(blue_end, marked_edge)
    seq = tuple(out)
    _validate_marked_sequence(seq)
    return seq


# ------------------------------------------------------------------- sampling


def sample_blossoming(n: int, rng: RandomSource) -> BlossomingTree:
    """Exactly uniform bicolored blossoming tree of size n."""
    composition = sample_composition(n, rng)
    shifts = valid_shifts(composition)
    chosen = shifts[rng.below(2)]
    tree, _ = sequence_to_marked_tree(chosen)
    return tree


def sample_interval(n: int, rng: RandomSource) -> TamariInterval:
    """Exactly uniform Tamari interval of size n."""
    return to_interval(sample_blossoming(n, rng))
