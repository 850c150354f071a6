"""Triangulated compact oriented surfaces with boundary.

A surface is a finite set of triangles with some sides glued in pairs.
Triangle corners are numbered 0, 1, 2 counterclockwise; side i runs from
corner i to corner i + 1 (mod 3).  All gluings are orientation reversing,
which is the only way two counterclockwise triangles can match up in an
oriented surface; a gluing marked "preserving" is rejected outright.

Every vertex of the triangulation must lie on the boundary.  That is what
makes normal coordinates canonical (a curve could otherwise be slid across
an interior vertex without changing its isotopy class), and every
construction in this package preserves it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadGluing,
    ClosedSurface,
    Disconnected,
    InteriorVertex,
    NonOrientable,
)

# A slot is one side of one triangle: (triangle index, side index 0..2).
Slot = tuple[int, int]
# A corner of a triangle: (triangle index, corner index 0..2).
Corner = tuple[int, int]


@dataclass(frozen=True)
class Edge:
    """One edge of the glued surface.

    ``slots`` holds the one (boundary) or two (interior) triangle sides that
    make it up, sorted.  Points on the edge are always stored in the
    direction of ``slots[0]``: from its corner i toward its corner i + 1.
    """

    index: int
    slots: tuple[Slot, ...]

    @property
    def is_boundary(self) -> bool:
        return len(self.slots) == 1

    @property
    def canonical_slot(self) -> Slot:
        return self.slots[0]


class Surface:
    """Immutable glued surface; build with :func:`build_surface`."""

    def __init__(
        self,
        num_triangles: int,
        glued: dict[Slot, Slot],
        edges: list[Edge],
        vertices: list[frozenset[Corner]],
        boundary_cycles: list[list[Slot]],
    ):
        self.num_triangles = num_triangles
        self.glued = glued
        self.edges = edges
        self.vertices = vertices
        self.boundary_cycles = boundary_cycles
        self._edge_index: dict[Slot, int] = {}
        for e in edges:
            for s in e.slots:
                self._edge_index[s] = e.index
        self.boundary_slots: list[Slot] = sorted(
            e.slots[0] for e in edges if e.is_boundary
        )

    # ------------------------------------------------------------- queries

    def check_slot(self, slot: Slot) -> Slot:
        t, i = slot
        if not (0 <= t < self.num_triangles and 0 <= i < 3):
            raise BadGluing(f"no such side: {t}.{i}")
        return (t, i)

    def opposite(self, slot: Slot) -> Slot | None:
        """The slot glued to this one, or None on the boundary."""
        self.check_slot(slot)
        return self.glued.get(slot)

    def is_boundary_slot(self, slot: Slot) -> bool:
        self.check_slot(slot)
        return slot not in self.glued

    def edge_of(self, slot: Slot) -> Edge:
        self.check_slot(slot)
        return self.edges[self._edge_index[slot]]

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + self.num_triangles

    def num_boundary_components(self) -> int:
        return len(self.boundary_cycles)

    def genus(self) -> int:
        doubled = 2 - self.euler_characteristic() - self.num_boundary_components()
        assert doubled >= 0 and doubled % 2 == 0, "inconsistent complex"
        return doubled // 2

    def next_boundary_slot(self, slot: Slot) -> Slot:
        """Next boundary edge after ``slot`` along its boundary component.

        The boundary is traversed with the surface on the left, i.e. each
        slot from its corner i toward its corner i + 1.
        """
        self.check_slot(slot)
        if slot in self.glued:
            raise BadGluing(f"{slot[0]}.{slot[1]} is not a boundary side")
        return _walk_boundary(self.glued, slot)

    def vertex_at(self, corner: Corner) -> frozenset[Corner]:
        for orbit in self.vertices:
            if corner in orbit:
                return orbit
        raise BadGluing(f"no such corner: {corner}")

    def same_as(self, other: "Surface") -> bool:
        return (
            self.num_triangles == other.num_triangles and self.glued == other.glued
        )

    def __repr__(self) -> str:
        return (
            f"Surface(triangles={self.num_triangles}, genus={self.genus()}, "
            f"boundary={self.num_boundary_components()})"
        )


def _walk_boundary(glued: dict[Slot, Slot], slot: Slot) -> Slot:
    # Stand at the head corner of `slot` and fan through interior sides
    # until the outgoing side is free.  At corner (t, c) the outgoing side
    # is (t, c); crossing a gluing (t, c) ~ (u, j) moves the corner to
    # (u, j + 1).
    t, c = slot[0], (slot[1] + 1) % 3
    while True:
        other = glued.get((t, c))
        if other is None:
            return (t, c)
        u, j = other
        t, c = u, (j + 1) % 3


def build_surface(
    num_triangles: int,
    gluings: Iterable[Sequence] = (),
) -> Surface:
    """Glue ``num_triangles`` triangles along the given side pairs.

    Each gluing is ``((t, i), (u, j))`` or ``((t, i), (u, j), kind)`` with
    kind ``"reversing"`` (the default) or ``"preserving"``.  Raises
    BadGluing, NonOrientable, Disconnected, ClosedSurface or InteriorVertex
    when the result is not a connected oriented surface with boundary whose
    vertices all sit on that boundary.
    """
    if num_triangles < 1:
        raise Disconnected("a surface needs at least one triangle")

    glued: dict[Slot, Slot] = {}
    for entry in gluings:
        if len(entry) == 3:
            a, b, kind = entry
            if kind == "preserving":
                raise NonOrientable(
                    "orientation preserving gluings produce a non orientable "
                    "surface from counterclockwise triangles"
                )
            if kind != "reversing":
                raise BadGluing(f"unknown gluing kind {kind!r}")
        elif len(entry) == 2:
            a, b = entry
        else:
            raise BadGluing(f"malformed gluing entry {entry!r}")
        a = (int(a[0]), int(a[1]))
        b = (int(b[0]), int(b[1]))
        for t, i in (a, b):
            if not (0 <= t < num_triangles and 0 <= i < 3):
                raise BadGluing(f"no such side: {t}.{i}")
        if a == b:
            raise BadGluing(f"side {a[0]}.{a[1]} glued to itself")
        if a in glued or b in glued:
            raise BadGluing("a side may appear in at most one gluing")
        glued[a] = b
        glued[b] = a

    # Connectivity over triangles.
    seen_tris = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for i in range(3):
            other = glued.get((t, i))
            if other is not None and other[0] not in seen_tris:
                seen_tris.add(other[0])
                stack.append(other[0])
    if len(seen_tris) != num_triangles:
        raise Disconnected(
            f"triangles {sorted(set(range(num_triangles)) - seen_tris)} are "
            "not connected to triangle 0"
        )

    boundary = [
        (t, i)
        for t in range(num_triangles)
        for i in range(3)
        if (t, i) not in glued
    ]
    if not boundary:
        raise ClosedSurface("every side is glued; the surface has no boundary")

    # Vertex orbits: gluing (t, i) ~ (u, j) identifies corner (t, i) with
    # (u, j + 1) and corner (t, i + 1) with (u, j).
    parent: dict[Corner, Corner] = {
        (t, c): (t, c) for t in range(num_triangles) for c in range(3)
    }

    def find(x: Corner) -> Corner:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Corner, y: Corner) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for a, b in glued.items():
        if a > b:
            continue
        (t, i), (u, j) = a, b
        union((t, i), (u, (j + 1) % 3))
        union((t, (i + 1) % 3), (u, j))

    orbits: dict[Corner, set[Corner]] = {}
    for corner in parent:
        orbits.setdefault(find(corner), set()).add(corner)
    vertices = [frozenset(v) for v in sorted(orbits.values(), key=min)]

    boundary_corners = set()
    for t, i in boundary:
        boundary_corners.add((t, i))
        boundary_corners.add((t, (i + 1) % 3))
    for orbit in vertices:
        if not (orbit & boundary_corners):
            raise InteriorVertex(
                f"vertex {sorted(orbit)} does not touch the boundary; "
                "normal forms need every vertex on the boundary"
            )

    edges: list[Edge] = []
    placed: set[Slot] = set()
    for t in range(num_triangles):
        for i in range(3):
            slot = (t, i)
            if slot in placed:
                continue
            other = glued.get(slot)
            if other is None:
                edges.append(Edge(len(edges), (slot,)))
                placed.add(slot)
            else:
                pair = tuple(sorted((slot, other)))
                edges.append(Edge(len(edges), pair))
                placed.update(pair)

    cycles: list[list[Slot]] = []
    remaining = set(boundary)
    for start in sorted(remaining):
        if start not in remaining:
            continue
        cycle = [start]
        remaining.discard(start)
        cur = _walk_boundary(glued, start)
        while cur != start:
            cycle.append(cur)
            remaining.discard(cur)
            cur = _walk_boundary(glued, cur)
        cycles.append(cycle)

    return Surface(num_triangles, glued, edges, vertices, cycles)
