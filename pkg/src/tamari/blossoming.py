"""Bicolored blossoming trees, the planar closure, and the main bijection.

A blossoming tree is an unrooted plane tree in which every node carries
exactly two buds (outgoing stubs).  Half-edges of plain edges are colored
blue or red so that no plain edge is monochromatic and, at every node, the
two buds separate the blue half-edges from the red ones.

Plane structure is stored as one counterclockwise cyclic item sequence per
node; an item is either the bud marker or a pair (edge id, color).  A
meandering tree unfolds into such a tree by granting every black point a
left and a right bud (``from_meandering``); the inverse direction closes
the tree back up: subdivide every plain edge, walk the counterclockwise
contour, match buds to legs planarly, and stretch the resulting meandric
path onto the axis (``to_meandering``).  Composing with the diagram
drawing of tree pairs gives the bijection with Tamari intervals.

Equality of blossoming trees is by canonical encoding, which is the
serialized meandering diagram of the closure; bicolored blossoming trees
have no symmetry, so this is faithful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ClosureOrientationError,
    InvalidBlossoming,
    InvalidDiagram,
    NotATree,
)
from .intervals import TYPE_00, TYPE_10, TYPE_11, TamariInterval, make_interval
from .meandering import (
    MeanderingDiagram,
    diagram_to_json,
    from_tree_pair,
    is_meandering_tree,
    to_tree_pair,
)

__all__ = [
    "BLUE",
    "BUD",
    "RED",
    "BlossomingTree",
    "ClosureResult",
    "bi_degree",
    "canonical_encode",
    "closure",
    "from_interval",
    "from_meandering",
    "is_half_turn_symmetric",
    "is_synchronized_tree",
    "node_type",
    "non_kreweras_paths",
    "non_modern_edges",
    "non_modern_paths",
    "reflect",
    "reflect_interval",
    "switch_colors",
    "to_debug_text",
    "to_interval",
    "to_meandering",
    "trivial_bud_position_check",
]

#: Item marker for a bud in a node's cyclic sequence.
BUD = "*"
BLUE = "B"
RED = "R"


class BlossomingTree:
    """A validated bicolored blossoming tree.

    ``items[v]`` is the counterclockwise cyclic sequence of items around
    node v.  Node and edge identifiers carry no meaning beyond this object;
    equality and hashing go through the canonical encoding.
    """

    __slots__ = ("items", "n", "_slots", "_ends", "_adj", "_canon")

    def __init__(self, items: Iterable[Iterable]):
        items = tuple(tuple(seq) for seq in items)
        if len(items) < 2:
            raise InvalidBlossoming("a blossoming tree has at least two nodes")
        ends: dict = {}
        for v, seq in enumerate(items):
            bud_slots = [i for i, it in enumerate(seq) if it == BUD]
            if len(bud_slots) != 2:
                raise InvalidBlossoming(f"node {v} carries {len(bud_slots)} buds")
            i, j = bud_slots
            groups = (seq[i + 1: j], seq[j + 1:] + seq[:i])
            colors = []
            for group in groups:
                seen = set()
                for it in group:
                    if not (isinstance(it, tuple) and len(it) == 2):
                        raise InvalidBlossoming(f"bad item {it!r} at node {v}")
                    if it[1] not in (BLUE, RED):
                        raise InvalidBlossoming(f"bad color {it[1]!r} at node {v}")
                    seen.add(it[1])
                if len(seen) > 1:
                    raise InvalidBlossoming(f"mixed colors inside a bud group of node {v}")
                colors.append(seen)
            if colors[0] and colors[0] == colors[1]:
                raise InvalidBlossoming(f"buds of node {v} do not separate the colors")
            for slot, it in enumerate(seq):
                if it != BUD:
                    ends.setdefault(it[0], []).append((v, slot, it[1]))
        if len(ends) != len(items) - 1:
            raise InvalidBlossoming(
                f"{len(ends)} edges on {len(items)} nodes cannot form a tree"
            )
        parent = list(range(len(items)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        slots = {}
        endpoints = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in items]
        for e, sides in ends.items():
            if len(sides) != 2:
                raise InvalidBlossoming(f"edge {e} has {len(sides)} half-edges")
            (v1, s1, c1), (v2, s2, c2) = sides
            if c1 == c2:
                raise InvalidBlossoming(f"edge {e} is monochromatic")
            ru, rv = find(v1), find(v2)
            if ru == rv:
                raise InvalidBlossoming("the plain edges contain a cycle")
            parent[ru] = rv
            slots[e, v1] = s1
            slots[e, v2] = s2
            endpoints[e] = (v1, v2)
            adj[v1].append((e, v2))
            adj[v2].append((e, v1))
        self.items = items
        self.n = len(items) - 1
        self._slots = slots
        self._ends = endpoints
        self._adj = tuple(tuple(a) for a in adj)
        self._canon = None

    # -- plane-structure accessors ------------------------------------------

    def slot(self, edge: int, v: int) -> int:
        """Position of the half of ``edge`` in the cyclic sequence of v."""
        return self._slots[edge, v]

    def edge_ends(self, edge: int) -> tuple[int, int]:
        return self._ends[edge]

    def across(self, edge: int, v: int) -> int:
        """The endpoint of ``edge`` other than v."""
        v1, v2 = self._ends[edge]
        return v2 if v == v1 else v1

    def half_color(self, edge: int, v: int) -> str:
        return self.items[v][self._slots[edge, v]][1]

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs (edge, other node) incident to v."""
        return self._adj[v]

    def succ_ccw(self, v: int, slot: int):
        seq = self.items[v]
        return seq[(slot + 1) % len(seq)]

    def succ_cw(self, v: int, slot: int):
        seq = self.items[v]
        return seq[(slot - 1) % len(seq)]

    # -- equality through the canonical encoding ----------------------------

    def canonical(self) -> bytes:
        if self._canon is None:
            self._canon = diagram_to_json(to_meandering(self)).encode("ascii")
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, BlossomingTree):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"<BlossomingTree of size {self.n}>"


def canonical_encode(tree: BlossomingTree) -> bytes:
    """Injective byte encoding: the serialized closure diagram."""
    return tree.canonical()


def to_debug_text(tree: BlossomingTree) -> str:
    """Verbose listing of the plane structure, one node per line."""
    lines = []
    for v, seq in enumerate(tree.items):
        parts = ["bud" if it == BUD else f"{it[0]}{it[1]}" for it in seq]
        lines.append(f"node {v}: " + ", ".join(parts))
    return "\n".join(lines)


# ------------------------------------------------------------------ unfolding


def from_meandering(m: MeanderingDiagram) -> BlossomingTree:
    """Unfold a meandering tree: each black point gets a left and right bud.

    Counterclockwise around black point k the items read: right bud, upper
    arcs by increasing white endpoint (blue), left bud, lower arcs by
    decreasing white endpoint (red).
    """
    if not is_meandering_tree(m):
        raise NotATree("only meandering trees unfold to blossoming trees")
    uppers: list[list[int]] = [[] for _ in range(m.n + 1)]
    lowers: list[list[int]] = [[] for _ in range(m.n + 1)]
    for t in range(1, m.n + 1):
        uppers[m.up[t - 1]].append(t)
        lowers[m.lo[t - 1]].append(t)
    items = []
    for k in range(m.n + 1):
        seq: list = [BUD]
        seq.extend((t, BLUE) for t in uppers[k])
        seq.append(BUD)
        seq.extend((t, RED) for t in reversed(lowers[k]))
        items.append(seq)
    return BlossomingTree(items)


# -------------------------------------------------------------------- closure


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of the planar bud/leg matching around a blossoming tree.

    ``matching`` pairs each matched bud (node, slot) with a leg
    (edge, side node); ``meandric_path`` alternates tree vertices ("n", v)
    and edge vertices ("e", e) and is Hamiltonian on all 2n+1 of them.
    """

    matching: tuple
    unmatched: tuple
    extremal: tuple[int, int]
    meandric_path: tuple


def _contour_tokens(tree: BlossomingTree) -> list[tuple]:
    """Tokens of the counterclockwise contour: buds open, legs close.

    A leg token (edge, from node) stands for the leg attached on the side
    of the edge-vertex that the contour passes when leaving ``from node``.
    """
    tokens = []
    v, slot = 0, len(tree.items[0]) - 1
    total = 4 * tree.n + 2
    for _ in range(total):
        slot = (slot + 1) % len(tree.items[v])
        item = tree.items[v][slot]
        if item == BUD:
            tokens.append(("bud", v, slot))
        else:
            e = item[0]
            tokens.append(("leg", e, v))
            other = tree.across(e, v)
            v, slot = other, tree.slot(e, other)
    return tokens


def closure(tree: BlossomingTree) -> ClosureResult:
    """Match buds to legs planarly along the contour; two buds stay open.

    Matching is by repeated cancellation of cyclically adjacent bud-leg
    pairs, which is the unique planar matching on the circle.  The matched
    pairs define the closure edges whose concatenation is the meandric
    path.
    """
    tokens = _contour_tokens(tree)
    total = len(tokens)
    nxt = [(i + 1) % total for i in range(total)]
    prv = [(i - 1) % total for i in range(total)]
    alive = [True] * total
    matches = []
    worklist = [i for i in range(total) if tokens[i][0] == "bud"]
    while worklist:
        i = worklist.pop()
        if not alive[i] or tokens[i][0] != "bud":
            continue
        j = nxt[i]
        if i == j or not alive[j] or tokens[j][0] != "leg":
            continue
        matches.append((tokens[i], tokens[j]))
        alive[i] = alive[j] = False
        a, b = prv[i], nxt[j]
        nxt[a], prv[b] = b, a
        if tokens[a][0] == "bud":
            worklist.append(a)
    if len(matches) != 2 * tree.n:
        raise InvalidBlossoming("planar matching left legs unmatched")
    unmatched = tuple(tokens[i] for i in range(total) if alive[i])
    if unmatched[0][1] == unmatched[1][1]:
        raise InvalidBlossoming("the two dangling buds share a node")

    adjacency: dict = {}
    for bud_tok, leg_tok in matches:
        a = ("n", bud_tok[1])
        b = ("e", leg_tok[1])
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    extremal = tuple(sorted(tok[1] for tok in unmatched))
    start = ("n", extremal[0])
    path = [start]
    prev = None
    while True:
        # closure vertices have degree at most two, so this walk is a path
        candidates = [w for w in adjacency[path[-1]] if w != prev]
        if not candidates:
            break
        prev = path[-1]
        path.append(candidates[0])
    if len(path) != 2 * tree.n + 1:
        raise InvalidBlossoming("closure edges do not form a Hamiltonian path")
    return ClosureResult(
        matching=tuple(matches),
        unmatched=unmatched,
        extremal=extremal,
        meandric_path=tuple(path),
    )


def to_meandering(tree: BlossomingTree) -> MeanderingDiagram:
    """Close the tree and stretch its meandric path onto the axis.

    Of the two ways to lay the path down, exactly one puts every blue
    half-edge above the axis with its black endpoint on the left (and red
    symmetrically below); that orientation defines the diagram.
    """
    path = closure(tree).meandric_path
    results = []
    for seq in (path, tuple(reversed(path))):
        node_pos = {}
        edge_idx = {}
        ok = True
        for idx, (kind, label) in enumerate(seq):
            if idx % 2 == 0:
                if kind != "n":
                    ok = False
                    break
                node_pos[label] = idx // 2
            else:
                if kind != "e":
                    ok = False
                    break
                edge_idx[label] = (idx + 1) // 2
        if not ok:
            continue
        up = [0] * tree.n
        lo = [0] * tree.n
        for e, t in edge_idx.items():
            v1, v2 = tree.edge_ends(e)
            if tree.half_color(e, v1) == BLUE:
                blue, red = v1, v2
            else:
                blue, red = v2, v1
            pb, pr = node_pos[blue], node_pos[red]
            if pb > t - 1 or pr < t:
                ok = False
                break
            up[t - 1] = pb
            lo[t - 1] = pr
        if not ok:
            continue
        try:
            results.append(MeanderingDiagram(tuple(up), tuple(lo)))
        except InvalidDiagram:
            continue
    if not results:
        raise ClosureOrientationError("no stretch orientation validates")
    if len(results) == 2 and results[0] != results[1]:
        raise ClosureOrientationError("both stretch orientations validate")
    return results[0]


# -------------------------------------------------------------- the bijection


def from_interval(interval: TamariInterval) -> BlossomingTree:
    """The bijection from Tamari intervals to bicolored blossoming trees."""
    return from_meandering(from_tree_pair(interval.lower, interval.upper))


def to_interval(tree: BlossomingTree) -> TamariInterval:
    """Inverse bijection: close the tree, then read off the tree pair."""
    return make_interval(*to_tree_pair(to_meandering(tree)))


# ------------------------------------------------------------------ involutions


def switch_colors(tree: BlossomingTree) -> BlossomingTree:
    """Swap blue and red on every half-edge; transfers interval duality."""
    return BlossomingTree(
        tuple(
            tuple(it if it == BUD else (it[0], BLUE if it[1] == RED else RED) for it in seq)
            for seq in tree.items
        )
    )


def reflect(tree: BlossomingTree) -> BlossomingTree:
    """Mirror the plane structure: reverse every cyclic order, keep colors."""
    return BlossomingTree(tuple(tuple(reversed(seq)) for seq in tree.items))


def reflect_interval(interval: TamariInterval) -> TamariInterval:
    """The involution on intervals induced by reflecting blossoming trees."""
    return to_interval(reflect(from_interval(interval)))


def is_half_turn_symmetric(tree: BlossomingTree) -> bool:
    """True when switching colors leaves the tree unchanged."""
    return tree == switch_colors(tree)


# ----------------------------------------------------------- local statistics


def bi_degree(tree: BlossomingTree, v: int) -> tuple[int, int]:
    """(blue, red) half-edge counts at node v."""
    blue = sum(1 for it in tree.items[v] if it != BUD and it[1] == BLUE)
    red = sum(1 for it in tree.items[v] if it != BUD and it[1] == RED)
    return blue, red


def node_type(tree: BlossomingTree, v: int) -> str:
    """Joint type of a node: 11 all blue, 00 all red, 10 mixed."""
    blue, red = bi_degree(tree, v)
    if red == 0:
        return TYPE_11
    if blue == 0:
        return TYPE_00
    return TYPE_10


def is_synchronized_tree(tree: BlossomingTree) -> bool:
    """No mixed node; equivalently the two buds are adjacent at every node."""
    return all(node_type(tree, v) != TYPE_10 for v in range(tree.n + 1))


# ------------------------------------------------------------ pattern scanners


def non_modern_edges(tree: BlossomingTree) -> list[int]:
    """Plain edges followed clockwise by another plain edge at both ends.

    Emptiness characterizes the image of modern intervals.
    """
    out = []
    for e, (v1, v2) in tree._ends.items():
        if tree.succ_cw(v1, tree.slot(e, v1)) == BUD:
            continue
        if tree.succ_cw(v2, tree.slot(e, v2)) == BUD:
            continue
        out.append(e)
    return out


def _path_endpoint_data(tree: BlossomingTree, root: int):
    """Per target node: parent edge and the first edge out of ``root``."""
    parent_edge = {root: None}
    first_edge = {root: None}
    order = [root]
    queue = [root]
    while queue:
        v = queue.pop()
        for e, w in tree.neighbors(v):
            if w not in parent_edge:
                parent_edge[w] = e
                first_edge[w] = e if v == root else first_edge[v]
                order.append(w)
                queue.append(w)
    return parent_edge, first_edge


def _scan_paths(tree: BlossomingTree, clockwise: bool) -> list[tuple[int, ...]]:
    succ = tree.succ_cw if clockwise else tree.succ_ccw
    found = []
    nodes = range(tree.n + 1)
    for u in nodes:
        parent_edge, first_edge = _path_endpoint_data(tree, u)
        u_ok = {
            e: succ(u, tree.slot(e, u)) != BUD
            for e, _ in tree.neighbors(u)
        }
        for w in nodes:
            if w <= u:
                continue
            e_last = parent_edge[w]
            if not u_ok[first_edge[w]]:
                continue
            if succ(w, tree.slot(e_last, w)) == BUD:
                continue
            path = [w]
            cur = w
            while cur != u:
                e = parent_edge[cur]
                cur = tree.across(e, cur)
                path.append(cur)
            found.append(tuple(reversed(path)))
    return found


def non_modern_paths(tree: BlossomingTree) -> list[tuple[int, ...]]:
    """Simple paths whose first and last edges are followed clockwise by
    plain edges at the two endpoints; emptiness characterizes the image of
    infinitely modern intervals."""
    return _scan_paths(tree, clockwise=True)


def non_kreweras_paths(tree: BlossomingTree) -> list[tuple[int, ...]]:
    """Same scan with counterclockwise successors; emptiness characterizes
    the image of Kreweras intervals."""
    return _scan_paths(tree, clockwise=False)


# ------------------------------------------------------- trivial-interval test


def trivial_bud_position_check(tree: BlossomingTree) -> bool:
    """True when some edge joins the outermost black points of the closure
    and, at every node, both buds directly follow the edge pointing toward
    that central edge in counterclockwise order."""
    m = to_meandering(tree)
    canonical = from_meandering(m)
    n = canonical.n
    root_edge = None
    for t in range(1, n + 1):
        if m.up[t - 1] == 0 and m.lo[t - 1] == n:
            root_edge = t
            break
    if root_edge is None:
        return False
    toward: dict[int, int] = {}
    queue = list(canonical.edge_ends(root_edge))
    for v in queue:
        toward[v] = root_edge
    while queue:
        v = queue.pop()
        for e, w in canonical.neighbors(v):
            if w not in toward:
                toward[w] = e
                queue.append(w)
    for v in range(n + 1):
        slot = canonical.slot(toward[v], v)
        seq = canonical.items[v]
        if seq[(slot + 1) % len(seq)] != BUD or seq[(slot + 2) % len(seq)] != BUD:
            return False
    return True
