"""Normal coordinates for curves and arcs.

A multicurve in normal position crosses each triangle in "corner strands":
a corner-j strand cuts off corner j, running between sides j - 1 and j.
The coordinate of a triangle is the triple (c0, c1, c2) of corner strand
counts.  The number of marks on side i is then c_i + c_{i+1}, and a
coordinate vector is realizable iff these mark counts agree across every
gluing.

Because every vertex lies on the boundary, each isotopy class of essential
curve or arc (endpoints confined to their boundary edges) has exactly one
normal representative, so Position equality decides isotopy.

Mark bookkeeping used throughout the package: along side i, in the side's
own direction (corner i toward corner i + 1), the corner-i strands sit at
positions 0 .. c_i - 1 (index m at position m) and the corner-(i+1)
strands fill the rest in reverse (index m at position c_i + c_{i+1} - 1 - m),
index meaning distance from the corner the strand cuts off.  A gluing
matches position p on one side with position w - 1 - p on the other.
Positions on an edge are stored along its canonical slot.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import KindMismatch, NotAnArc, Unrealizable
from .surface import Slot, Surface

Counts = tuple[tuple[int, int, int], ...]
# A mark on an edge: (edge index, position along the canonical slot).
Mark = tuple[int, int]


class Position:
    """A normal multicurve, identified by its corner counts."""

    def __init__(self, surface: Surface, counts: Counts):
        self.surface = surface
        self.counts = counts
        self._components: list[dict] | None = None

    # --------------------------------------------------------- basic data

    def slot_weight(self, slot: Slot) -> int:
        t, i = self.surface.check_slot(slot)
        c = self.counts[t]
        return c[i] + c[(i + 1) % 3]

    def edge_weight(self, edge_index: int) -> int:
        return self.slot_weight(self.surface.edges[edge_index].slots[0])

    def edge_weights(self) -> tuple[int, ...]:
        return tuple(self.edge_weight(e.index) for e in self.surface.edges)

    def total_weight(self) -> int:
        return sum(self.edge_weights())

    def boundary_weight(self) -> int:
        return sum(
            self.edge_weight(e.index)
            for e in self.surface.edges
            if e.is_boundary
        )

    def is_empty(self) -> bool:
        return self.total_weight() == 0

    # ------------------------------------------------------------ equality

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Position)
            and self.surface.same_as(other.surface)
            and self.counts == other.counts
        )

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"Position({list(map(list, self.counts))})"

    # -------------------------------------------------------------- marks

    def pos_in_edge(self, slot: Slot, pos_in_slot: int) -> int:
        """Convert a position along ``slot`` to canonical edge position."""
        edge = self.surface.edge_of(slot)
        w = self.slot_weight(slot)
        if slot == edge.canonical_slot:
            return pos_in_slot
        return w - 1 - pos_in_slot

    def strands(self) -> Iterator[tuple[Mark, Mark, int, int]]:
        """All corner strands as (mark, mark, triangle, corner)."""
        for t in range(self.surface.num_triangles):
            c = self.counts[t]
            for j in range(3):
                side_in = (j + 2) % 3  # side j - 1
                w_in = c[side_in] + c[(side_in + 1) % 3]
                for m in range(c[j]):
                    # on side j - 1 the corner-j strands are the
                    # corner-(i+1) family, position w - 1 - m
                    a = self.pos_in_edge((t, side_in), w_in - 1 - m)
                    b = self.pos_in_edge((t, j), m)
                    yield (
                        (self.surface.edge_of((t, side_in)).index, a),
                        (self.surface.edge_of((t, j)).index, b),
                        t,
                        j,
                    )

    # --------------------------------------------------------- components

    def components(self) -> list[dict]:
        """Connected components as dicts with keys kind, marks, ends.

        kind is "arc" or "closed"; marks is the set of (edge, pos) marks;
        ends lists the boundary marks (empty for closed components).
        """
        if self._components is not None:
            return self._components
        adj: dict[Mark, list[Mark]] = {}
        for a, b, _, _ in self.strands():
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        boundary_edges = {
            e.index for e in self.surface.edges if e.is_boundary
        }
        for mark, nbrs in adj.items():
            expected = 1 if mark[0] in boundary_edges else 2
            if len(nbrs) != expected:
                raise Unrealizable(
                    f"mark {mark} has {len(nbrs)} strands, expected {expected}"
                )
        comps = []
        seen: set[Mark] = set()
        for start in sorted(adj):
            if start in seen:
                continue
            stack = [start]
            marks = {start}
            while stack:
                cur = stack.pop()
                for nxt in adj[cur]:
                    if nxt not in marks:
                        marks.add(nxt)
                        stack.append(nxt)
            seen |= marks
            ends = sorted(m for m in marks if m[0] in boundary_edges)
            comps.append(
                {
                    "kind": "arc" if ends else "closed",
                    "marks": marks,
                    "ends": ends,
                }
            )
        self._components = comps
        return comps

    def num_components(self) -> int:
        return len(self.components())

    def is_arc(self) -> bool:
        comps = self.components()
        return len(comps) == 1 and comps[0]["kind"] == "arc"

    def is_closed_curve(self) -> bool:
        comps = self.components()
        return len(comps) == 1 and comps[0]["kind"] == "closed"

    def endpoints(self) -> list[tuple[Slot, int]]:
        """Endpoint marks of an arc as (boundary slot, ordinal).

        The ordinal counts this position's own marks along the edge, so it
        equals the mark position for a single arc.
        """
        comps = self.components()
        if len(comps) != 1 or comps[0]["kind"] != "arc":
            raise NotAnArc("endpoints are defined for a single arc")
        out = []
        for edge_idx, pos in comps[0]["ends"]:
            slot = self.surface.edges[edge_idx].slots[0]
            out.append((slot, pos))
        return out


def position_from_counts(
    surface: Surface, counts: Sequence[Sequence[int]]
) -> Position:
    """Validate corner counts and wrap them in a Position."""
    if len(counts) != surface.num_triangles:
        raise Unrealizable(
            f"expected counts for {surface.num_triangles} triangles, "
            f"got {len(counts)}"
        )
    norm = []
    for t, triple in enumerate(counts):
        if len(triple) != 3:
            raise Unrealizable(f"triangle {t}: need three corner counts")
        for v in triple:
            if int(v) != v or v < 0:
                raise Unrealizable(
                    f"triangle {t}: corner counts must be nonnegative integers"
                )
        norm.append(tuple(int(v) for v in triple))
    pos = Position(surface, tuple(norm))
    for edge in surface.edges:
        if not edge.is_boundary:
            a, b = edge.slots
            if pos.slot_weight(a) != pos.slot_weight(b):
                raise Unrealizable(
                    f"weights disagree across gluing {a} ~ {b}: "
                    f"{pos.slot_weight(a)} vs {pos.slot_weight(b)}"
                )
    return pos


def counts_from_edge_weights(
    surface: Surface, weights: Sequence[int]
) -> Counts:
    """Convert per-edge weights to corner counts.

    Each triangle needs its three side weights to satisfy the evenness and
    triangle conditions; c_i = (w(i-1) + w(i) - w(i+1)) / 2.
    """
    if len(weights) != len(surface.edges):
        raise Unrealizable(
            f"expected {len(surface.edges)} edge weights, got {len(weights)}"
        )
    counts = []
    for t in range(surface.num_triangles):
        w = [weights[surface.edge_of((t, i)).index] for i in range(3)]
        triple = []
        for i in range(3):
            doubled = w[(i + 2) % 3] + w[i] - w[(i + 1) % 3]
            if doubled < 0 or doubled % 2 != 0:
                raise Unrealizable(
                    f"triangle {t}: side weights {w} admit no corner strands"
                )
            triple.append(doubled // 2)
        counts.append(tuple(triple))
    return tuple(counts)


def position_from_edge_weights(
    surface: Surface, weights: Sequence[int]
) -> Position:
    return position_from_counts(surface, counts_from_edge_weights(surface, weights))


def empty_position(surface: Surface) -> Position:
    return Position(surface, tuple((0, 0, 0) for _ in range(surface.num_triangles)))


def arc_position(surface: Surface, counts: Sequence[Sequence[int]]) -> Position:
    pos = position_from_counts(surface, counts)
    if not pos.is_arc():
        raise KindMismatch("coordinates do not describe a single arc")
    return pos


def curve_position(surface: Surface, counts: Sequence[Sequence[int]]) -> Position:
    pos = position_from_counts(surface, counts)
    if not pos.is_closed_curve():
        raise KindMismatch("coordinates do not describe a single closed curve")
    return pos


def enumerate_positions(
    surface: Surface,
    max_weight: int,
    boundary_total: int | None = None,
) -> Iterator[Position]:
    """All valid positions with total edge weight <= max_weight.

    boundary_total, when given, fixes the summed weight on boundary edges
    (2 enumerates arc candidates, 0 closed ones).  Components are not
    filtered here.
    """
    edges = surface.edges
    tri_edges = [
        tuple(surface.edge_of((t, i)).index for i in range(3))
        for t in range(surface.num_triangles)
    ]
    boundary_idx = {e.index for e in edges if e.is_boundary}
    weights = [0] * len(edges)

    def tri_ok(t: int, final: bool) -> bool:
        w = [weights[e] for e in tri_edges[t]]
        if not final:
            return True
        if sum(w) % 2 != 0:
            return False
        return all(w[(i + 2) % 3] + w[i] - w[(i + 1) % 3] >= 0 for i in range(3))

    # triangles whose last edge (highest index) is e
    last_tri: dict[int, list[int]] = {}
    for t, te in enumerate(tri_edges):
        last_tri.setdefault(max(te), []).append(t)

    def rec(e: int, used: int, bd_used: int) -> Iterator[Position]:
        if e == len(edges):
            if boundary_total is not None and bd_used != boundary_total:
                return
            yield position_from_edge_weights(surface, weights)
            return
        limit = max_weight - used
        if boundary_total is not None and e in boundary_idx:
            limit = min(limit, boundary_total - bd_used)
        for w in range(limit + 1):
            weights[e] = w
            if all(tri_ok(t, True) for t in last_tri.get(e, ())):
                yield from rec(
                    e + 1,
                    used + w,
                    bd_used + (w if e in boundary_idx else 0),
                )
        weights[e] = 0

    yield from rec(0, 0, 0)


def enumerate_arcs(
    surface: Surface, max_weight: int
) -> Iterator[Position]:
    """All single embedded arcs with total weight <= max_weight."""
    for pos in enumerate_positions(surface, max_weight, boundary_total=2):
        if pos.is_arc():
            yield pos


def enumerate_closed_curves(
    surface: Surface, max_weight: int
) -> Iterator[Position]:
    """All single closed normal curves with total weight <= max_weight."""
    for pos in enumerate_positions(surface, max_weight, boundary_total=0):
        if not pos.is_empty() and pos.is_closed_curve():
            yield pos
