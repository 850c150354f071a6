import itertools

import pytest

from obcalc.picture import picture_from_positions
from obcalc.position import (
    arc_position,
    curve_position,
    enumerate_arcs,
    enumerate_closed_curves,
)
from obcalc.surface import build_surface
from oracle import min_crossings, shared_endpoint_pairs


def disk():
    return build_surface(1)


def annulus():
    return build_surface(2, [((0, 1), (1, 1)), ((0, 2), (1, 2))])


def _all_positions(surface, maxw):
    return list(enumerate_arcs(surface, maxw)) + list(
        enumerate_closed_curves(surface, maxw)
    )


# values worked out by hand: an essential arc between the two boundary
# circles of the annulus crosses the core exactly once however often it
# wraps, two such arcs unwind to disjoint by sliding endpoints, and an arc
# returning to its own boundary circle pulls off the core entirely
def test_frozen_annulus_anchors():
    ann = annulus()
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    transverse = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    wrapped = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    bracket = arc_position(ann, [(1, 1, 0), (0, 0, 1)])
    assert min_crossings(transverse, core) == 1
    assert min_crossings(wrapped, core) == 1
    assert min_crossings(transverse, wrapped) == 0
    assert min_crossings(bracket, core) == 0
    assert min_crossings(bracket, bracket) == 0
    assert min_crossings(core, core) == 0


@pytest.mark.parametrize("make,maxw", [(disk, 6), (annulus, 7)])
def test_tightening_matches_brute_force(make, maxw):
    surface = make()
    positions = _all_positions(surface, maxw)
    assert positions
    for a, b in itertools.combinations_with_replacement(positions, 2):
        pic = picture_from_positions([a, b], share_endpoints=False)
        pic.tighten()
        got = pic.crossings_between(0, 1)
        want = min_crossings(a, b)
        assert got == want, (a, b, got, want)
        for ci, orig in ((0, a), (1, b)):
            status, out = pic.extract(ci)
            assert status == "ok"
            assert out.counts == orig.counts, (a, b, ci)


@pytest.mark.parametrize("make,maxw", [(disk, 6), (annulus, 7)])
def test_shared_tightening_matches_brute_force(make, maxw):
    surface = make()
    arcs = [p for p in _all_positions(surface, maxw) if p.is_arc()]
    checked = 0
    for a, b in itertools.combinations_with_replacement(arcs, 2):
        slots_a = sorted(s for s, _ in a.endpoints())
        slots_b = sorted(s for s, _ in b.endpoints())
        if slots_a != slots_b:
            continue
        pic = picture_from_positions([a, b], share_endpoints=True)
        pic.tighten()
        got = pic.crossings_between(0, 1)
        want = min_crossings(a, b, shared_endpoint_pairs(a, b))
        assert got == want, (a, b, got, want)
        checked += 1
    assert checked > 0
