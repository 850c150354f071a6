import pytest

from obcalc.errors import KindMismatch
from obcalc.picture import Comp, Picture, Pt, picture_from_positions
from obcalc.position import arc_position, curve_position, position_from_counts
from obcalc.surface import build_surface


def disk():
    return build_surface(1)


def annulus():
    return build_surface(2, [((0, 1), (1, 1)), ((0, 2), (1, 2))])


# ---------------------------------------------------------------- building


@pytest.mark.parametrize(
    "make,counts",
    [
        (disk, [(1, 0, 0)]),
        (disk, [(0, 1, 0)]),
        (annulus, [(0, 0, 1), (0, 0, 1)]),
        (annulus, [(0, 1, 0), (0, 1, 0)]),
        (annulus, [(0, 1, 1), (0, 1, 1)]),
    ],
)
def test_solo_roundtrip(make, counts):
    pos = position_from_counts(make(), counts)
    pic = picture_from_positions([pos])
    assert pic.total_crossings() == 0
    status, out = pic.extract(0)
    assert status == "ok"
    assert out.counts == pos.counts


def test_multicomponent_position_rejected():
    two_cores = position_from_counts(annulus(), [(0, 0, 2), (0, 0, 2)])
    assert two_cores.num_components() == 2
    with pytest.raises(KindMismatch):
        picture_from_positions([two_cores])


def test_share_needs_matching_endpoints():
    d = disk()
    a = arc_position(d, [(1, 0, 0)])
    b = arc_position(d, [(0, 1, 0)])
    with pytest.raises(KindMismatch):
        picture_from_positions([a, b], share_endpoints=True)


# ----------------------------------------------------------------- regions


def test_core_splits_annulus_into_two_collars():
    ann = annulus()
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    pic = picture_from_positions([core])
    ana = pic.analyze()
    assert len(ana.regions) == 2
    for region in ana.regions:
        assert region.chi == 0
        assert region.meets_boundary
        assert len(region.cycles) == 2


def test_lone_arc_region_is_a_disk():
    d = disk()
    a = arc_position(d, [(1, 0, 0)])
    pic = picture_from_positions([a])
    ana = pic.analyze()
    assert len(ana.regions) == 2
    for region in ana.regions:
        assert region.chi == 1
        assert region.meets_boundary


# --------------------------------------------------------------- crossings


def test_core_vs_transverse_arc_cross_once():
    ann = annulus()
    core = curve_position(ann, [(0, 0, 1), (0, 0, 1)])
    arc = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    pic = picture_from_positions([core, arc], names=["core", "arc"])
    assert pic.total_crossings() == 1
    pic.tighten()
    assert pic.crossings_between(0, 1) == 1
    s0, p0 = pic.extract(0)
    s1, p1 = pic.extract(1)
    assert (s0, p0.counts) == ("ok", core.counts)
    assert (s1, p1.counts) == ("ok", arc.counts)


def test_disjoint_corner_arcs_do_not_cross():
    d = disk()
    a = arc_position(d, [(1, 0, 0)])
    b = arc_position(d, [(0, 1, 0)])
    pic = picture_from_positions([a, b])
    assert pic.total_crossings() == 0


def test_free_endpoints_slide_apart():
    d = disk()
    a = arc_position(d, [(1, 0, 0)])
    b = arc_position(d, [(1, 0, 0)])
    pic = picture_from_positions([a, b], share_endpoints=False)
    assert not pic.pairing
    assert pic.total_crossings() == 1
    pic.tighten()
    assert pic.total_crossings() == 0
    for ci, pos in ((0, a), (1, b)):
        status, out = pic.extract(ci)
        assert status == "ok"
        assert out.counts == pos.counts


def test_shared_endpoints_half_bigon():
    d = disk()
    a = arc_position(d, [(1, 0, 0)])
    b = arc_position(d, [(1, 0, 0)])
    pic = picture_from_positions([a, b], share_endpoints=True)
    assert len(pic.pairing) == 2
    assert pic.total_crossings() == 1
    pic.tighten()
    assert pic.total_crossings() == 0
    assert len(pic.pairing) == 2


def test_bigon_between_straight_and_wrapped_arc():
    ann = annulus()
    a = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    b = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    pic = picture_from_positions([a, b], share_endpoints=False)
    assert pic.total_crossings() == 2
    pic.tighten()
    assert pic.total_crossings() == 0
    for ci, pos in ((0, a), (1, b)):
        status, out = pic.extract(ci)
        assert status == "ok"
        assert out.counts == pos.counts


def test_wrapped_arc_pair_shared():
    ann = annulus()
    a = arc_position(ann, [(0, 1, 0), (0, 1, 0)])
    b = arc_position(ann, [(0, 1, 1), (0, 1, 1)])
    pic = picture_from_positions([a, b], share_endpoints=True)
    assert pic.total_crossings() == 2
    pic.tighten()
    assert pic.total_crossings() == 0
    assert len(pic.pairing) == 2


# ------------------------------------------------------------------- moves


def test_push_straightens_a_wiggle():
    ann = annulus()
    pic = Picture(ann)
    comp = Comp("arc", "w")
    pic.comps.append(comp)
    pa, p1, p2, p3, pb = (Pt(e, comp) for e in (0, 1, 2, 2, 3))
    comp.pts = [pa, p1, p2, p3, pb]
    comp.slots = [
        ((0, 0), (0, 1)),
        ((1, 1), (1, 2)),
        ((0, 2), (0, 2)),
        ((1, 2), (1, 0)),
    ]
    pic.edge_pts[0] = [pa]
    pic.edge_pts[1] = [p1]
    pic.edge_pts[2] = [p3, p2]
    pic.edge_pts[3] = [pb]
    pic.validate()
    assert pic.total_crossings() == 0
    pic.tighten()
    assert pic.total_pts() == 3
    status, out = pic.extract(0)
    assert status == "ok"
    assert out.counts == ((0, 1, 0), (0, 1, 0))


def test_small_circle_dies():
    ann = annulus()
    pic = Picture(ann)
    comp = Comp("closed", "o")
    pic.comps.append(comp)
    q1, q2 = Pt(1, comp), Pt(1, comp)
    comp.pts = [q1, q2]
    comp.slots = [((0, 1), (0, 1)), ((1, 1), (1, 1))]
    pic.edge_pts[1] = [q1, q2]
    pic.validate()
    pic.tighten()
    assert comp.dead
    assert pic.extract(0) == ("dead", None)


def test_trivial_arc_detected():
    d = disk()
    pic = Picture(d)
    comp = Comp("arc", "t")
    pic.comps.append(comp)
    r1, r2 = Pt(0, comp), Pt(0, comp)
    comp.pts = [r1, r2]
    comp.slots = [((0, 0), (0, 0))]
    pic.edge_pts[0] = [r1, r2]
    pic.validate()
    pic.tighten()
    assert pic.extract(0) == ("trivial_arc", None)
