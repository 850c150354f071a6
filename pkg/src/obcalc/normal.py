"""Intersection numbers and essentiality of normal arcs and curves.

All questions are answered by drawing the positions as a picture,
tightening it, and inspecting the result.  Two conventions matter:

* geometric intersection of arcs lets endpoints slide along the boundary;
  with shared=True the two arcs are drawn with matched endpoints instead,
  which stay glued while the interior is pulled tight, and crossings then
  count interior intersections only;
* the sign at a shared endpoint is +1 when the first arc's end precedes
  the second one's along the boundary orientation (triangles are counter
  clockwise, so boundary edges are oriented with the surface on the left,
  along their slot direction).
"""

from __future__ import annotations

from .errors import KindMismatch
from .picture import Analysis, Picture, picture_from_positions
from .position import (
    Position,
    arc_position,
    curve_position,
    enumerate_arcs,
    enumerate_closed_curves,
    position_from_counts,
)

__all__ = [
    "geometric_intersection",
    "endpoint_signs",
    "boundary_intersection",
    "bounds_disk",
    "is_boundary_parallel",
    "is_essential",
    "isotopic",
    "arc_position",
    "curve_position",
    "position_from_counts",
    "enumerate_arcs",
    "enumerate_closed_curves",
]


def _tight_pair(a: Position, b: Position, shared: bool) -> Picture:
    pic = picture_from_positions([a, b], share_endpoints=shared)
    pic.tighten()
    return pic


def _tight_solo(pos: Position) -> Picture:
    pic = picture_from_positions([pos])
    pic.tighten()
    return pic


def geometric_intersection(a: Position, b: Position, shared: bool = False) -> int:
    """Minimal number of crossings between the two positions.

    Endpoints of arcs slide freely along the boundary; with shared=True
    the arcs' endpoints are identified pairwise instead and only interior
    crossings are counted.
    """
    return _tight_pair(a, b, shared).crossings_between(0, 1)


def endpoint_signs(a: Position, b: Position) -> tuple[int, int]:
    """Signs of the two shared endpoints of arcs a and b.

    +1 where a's end precedes b's along the boundary orientation, after
    pulling the pair tight with endpoints glued.
    """
    pic = _tight_pair(a, b, shared=True)
    if len(pic.pairing) != 2:
        raise KindMismatch("endpoint signs need two arcs sharing endpoints")
    keyed = []
    for pa, pb in pic.pairing:
        assert pa.comp is pic.comps[0] and pb.comp is pic.comps[1]
        ia, ib = pic.pt_index(pa), pic.pt_index(pb)
        keyed.append(((pa.edge, min(ia, ib)), 1 if ia < ib else -1))
    keyed.sort()
    return (keyed[0][1], keyed[1][1])


def boundary_intersection(a: Position, b: Position) -> int:
    """Boundary contribution of a shared endpoint arc pair: -1, 0 or +1.

    The average of the two endpoint signs; +1 means b leaves on a's
    trailing side at both shared endpoints.
    """
    s0, s1 = endpoint_signs(a, b)
    return (s0 + s1) // 2


def _seg_runs(ana: Analysis, cycle) -> int:
    kinds = [ana.half_edge(h).kind for h, _ in cycle]
    n = len(kinds)
    runs = sum(
        1
        for i, k in enumerate(kinds)
        if k == "seg" and kinds[(i + 1) % n] == "gap"
    )
    if runs == 0 and kinds and kinds[0] == "seg":
        return 1  # pure chord cycle
    return runs


def bounds_disk(pos: Position) -> bool:
    """Does this closed curve bound a disk in the surface?"""
    if pos.is_arc():
        return False
    pic = _tight_solo(pos)
    if pic.comps[0].dead:
        return True
    ana = pic.analyze()
    return any(
        region.chi == 1
        and len(region.cycles) == 1
        and all(
            ana.half_edge(h).kind == "seg" for h, _ in region.cycles[0]
        )
        for region in ana.regions
    )


def is_boundary_parallel(pos: Position) -> bool:
    """Is the arc or curve isotopic into the boundary?

    An arc is boundary parallel when a complement region is a disk meeting
    the arc in a single run; a closed curve when a complement region is an
    annulus between the curve and a full boundary circle.  A curve that
    bounds a disk is not called boundary parallel here.
    """
    pic = _tight_solo(pos)
    comp = pic.comps[0]
    if comp.dead:
        return False
    if pos.is_arc() and len(comp.slots) == 1 and comp.slots[0][0] == comp.slots[0][1]:
        return True
    ana = pic.analyze()
    if pos.is_arc():
        for region in ana.regions:
            if region.chi != 1 or len(region.cycles) != 1:
                continue
            if _seg_runs(ana, region.cycles[0]) == 1:
                return True
        return False
    for region in ana.regions:
        if region.chi != 0 or len(region.cycles) != 2:
            continue
        kinds = {
            frozenset(ana.half_edge(h).kind for h, _ in cyc)
            for cyc in region.cycles
        }
        if kinds == {frozenset(["seg"]), frozenset(["gap"])}:
            return True
    return False


def is_essential(pos: Position) -> bool:
    """Essential arcs avoid the boundary collar; essential curves also
    bound no disk."""
    if pos.is_arc():
        return not is_boundary_parallel(pos)
    return not bounds_disk(pos) and not is_boundary_parallel(pos)


def isotopic(a: Position, b: Position) -> bool:
    """Normal coordinates are canonical, so classes compare by counts."""
    assert a.surface.same_as(b.surface)
    return a.counts == b.counts
