import pytest

from obcalc.errors import KindMismatch, Unrealizable
from obcalc.position import (
    arc_position,
    counts_from_edge_weights,
    curve_position,
    empty_position,
    enumerate_arcs,
    enumerate_closed_curves,
    position_from_counts,
    position_from_edge_weights,
)
from obcalc.surface import build_surface


def disk():
    return build_surface(1)


def annulus():
    return build_surface(2, [((0, 1), (1, 1)), ((0, 2), (1, 2))])


def test_disk_corner_arc():
    a = arc_position(disk(), [(0, 1, 0)])
    assert a.is_arc()
    assert a.total_weight() == 2
    assert a.endpoints() == [((0, 0), 0), ((0, 1), 0)]


def test_annulus_core_curve():
    c = curve_position(annulus(), [(0, 0, 1), (0, 0, 1)])
    assert c.is_closed_curve()
    assert c.boundary_weight() == 0
    assert c.edge_weights() == (0, 1, 1, 0)


def test_annulus_transverse_arc():
    t = arc_position(annulus(), [(0, 1, 0), (0, 1, 0)])
    assert t.is_arc()
    assert t.boundary_weight() == 2
    ends = t.endpoints()
    assert [slot for slot, _ in ends] == [(0, 0), (1, 0)]


def test_weight_mismatch_rejected():
    with pytest.raises(Unrealizable):
        position_from_counts(annulus(), [(0, 0, 1), (0, 0, 0)])


def test_negative_counts_rejected():
    with pytest.raises(Unrealizable):
        position_from_counts(disk(), [(0, -1, 0)])


def test_kind_checks():
    with pytest.raises(KindMismatch):
        curve_position(annulus(), [(0, 1, 0), (0, 1, 0)])
    with pytest.raises(KindMismatch):
        arc_position(annulus(), [(0, 0, 1), (0, 0, 1)])


def test_edge_weight_roundtrip():
    # two parallel copies of the core: a valid multicurve, two components
    c = position_from_counts(annulus(), [(0, 0, 2), (0, 0, 2)])
    assert c.num_components() == 2
    w = c.edge_weights()
    assert counts_from_edge_weights(annulus(), w) == c.counts
    assert position_from_edge_weights(annulus(), w) == c


def test_edge_weights_parity_rejected():
    # weight 1 on one interior edge of the disk's triangle: odd sum
    with pytest.raises(Unrealizable):
        position_from_edge_weights(disk(), [1, 0, 0])


def test_empty_position():
    e = empty_position(annulus())
    assert e.is_empty()
    assert e.num_components() == 0


def test_enumerate_arcs_disk():
    arcs = list(enumerate_arcs(disk(), 2))
    # one corner arc per corner of the triangle
    assert len(arcs) == 3
    assert all(a.is_arc() and a.total_weight() == 2 for a in arcs)


def test_enumerate_closed_curves_annulus():
    curves = list(enumerate_closed_curves(annulus(), 2))
    # only the core curve fits in weight 2
    assert len(curves) == 1
    assert curves[0].counts == ((0, 0, 1), (0, 0, 1))


def test_enumerate_arcs_annulus_small():
    arcs = list(enumerate_arcs(annulus(), 4))
    assert all(a.is_arc() for a in arcs)
    # transverse arc is among them
    assert any(a.counts == ((0, 1, 0), (0, 1, 0)) for a in arcs)
    # two parallel strands plus nothing else is two components, filtered out
    assert all(a.num_components() == 1 for a in arcs)
