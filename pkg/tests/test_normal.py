import itertools

import pytest

from obcalc.errors import KindMismatch
from obcalc.normal import (
    arc_position,
    boundary_intersection,
    bounds_disk,
    curve_position,
    endpoint_signs,
    enumerate_arcs,
    geometric_intersection,
    is_boundary_parallel,
    is_essential,
    isotopic,
)
from obcalc.surface import build_surface


def disk():
    return build_surface(1)


def annulus():
    return build_surface(2, [((0, 1), (1, 1)), ((0, 2), (1, 2))])


@pytest.fixture
def ann():
    return annulus()


def test_intersection_values(ann):
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    tr = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    wr = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    wr2 = arc_position(ann, [(0, 1, 2), (0, 1, 2)])
    assert geometric_intersection(core, tr) == 1
    assert geometric_intersection(core, wr) == 1
    assert geometric_intersection(tr, wr) == 0
    # n wraps apart, endpoints glued: n - 1 interior crossings
    assert geometric_intersection(tr, wr, shared=True) == 0
    assert geometric_intersection(tr, wr2, shared=True) == 1
    assert geometric_intersection(wr, wr2, shared=True) == 0
    assert geometric_intersection(tr, tr, shared=True) == 0


def test_endpoint_signs_and_boundary_intersection(ann):
    tr = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    wr = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    wr2 = arc_position(ann, [(0, 1, 2), (0, 1, 2)])
    assert endpoint_signs(tr, wr) == (1, 1)
    assert endpoint_signs(wr, tr) == (-1, -1)
    assert endpoint_signs(tr, wr2) == (1, 1)
    assert boundary_intersection(tr, wr) == 1
    assert boundary_intersection(wr, tr) == -1


def test_signs_antisymmetric_over_sweep(ann):
    arcs = list(enumerate_arcs(ann, 7))
    pairs = 0
    for a, b in itertools.combinations(arcs, 2):
        if sorted(s for s, _ in a.endpoints()) != sorted(
            s for s, _ in b.endpoints()
        ):
            continue
        if a.counts == b.counts:
            continue
        sa = endpoint_signs(a, b)
        sb = endpoint_signs(b, a)
        assert sa == tuple(-s for s in sb), (a, b)
        pairs += 1
    assert pairs > 0


def test_signs_need_shared_arcs(ann):
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    tr = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    with pytest.raises(KindMismatch):
        endpoint_signs(core, tr)


def test_essentiality(ann):
    tr = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    wr = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    bracket = arc_position(ann, [(1, 1, 0), (0, 0, 1)])
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    corner = arc_position(disk(), [(1, 0, 0)])
    assert is_essential(tr)
    assert is_essential(wr)
    assert not is_essential(bracket)
    assert is_boundary_parallel(bracket)
    assert not is_essential(corner)
    # the annulus core is parallel to either boundary circle
    assert not is_essential(core)
    assert is_boundary_parallel(core)
    assert not bounds_disk(core)
    assert not bounds_disk(tr)


def test_isotopy_is_count_equality(ann):
    tr = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    wr = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    assert isotopic(tr, arc_position(ann, [(0, 1, 0), (0, 1, 0)]))
    assert not isotopic(tr, wr)
