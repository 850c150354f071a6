"""Drawn multicurves: marked points on edges, chords in triangles.

Positions (normal coordinates) are canonical but rigid.  This module draws
one or two curves together as an explicit piecewise linear picture that can
be surgered and tightened:

* each curve component is a Comp: an ordered list of marked points (Pt) on
  edges, consecutive points joined by a chord inside a triangle;
* each edge of the surface carries the ordered list of all marked points on
  it, stored along the edge's canonical slot;
* chords remember the pair of slots they connect, which pins down the
  triangle even when an edge is glued to itself.

Two chords in a triangle cross exactly when their endpoints interleave in
the triangle's cyclic boundary order.  Components are individually
embedded, so the strands crossing any given chord are mutually disjoint and
their order along the chord is the order of their endpoints along the
boundary arc the chord cuts off; that makes the picture a planar
arrangement in every triangle, and gluing arrangement faces across interior
edges gives the complement regions of the picture.

Tightening applies three moves until none fires:

* remove a bigon: a disk region with two crossing corners and no boundary
  arc; the higher-indexed component is rerouted parallel to the other's
  side of the bigon, dropping at least two crossings;
* remove a half bigon at a shared endpoint: a disk region bounded by the
  gap between paired endpoint marks, one crossing, and two runs; the
  reroute swaps the endpoint marks and drops at least one crossing;
* push a chord returning to the same side of an edge across that edge,
  when the gap between its feet is empty; this drops two marked points and
  never adds crossings.

The pair (crossing count, point count) strictly decreases
lexicographically, so tightening terminates.  At the fixpoint no bigons
survive, so the crossing count between two components is their geometric
intersection number, and a component copied into a picture of its own
tightens to its normal form.  (Every vertex lies on the boundary, so no
region hides a vertex and the bigon criterion applies as stated.)
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import KindMismatch, NotEmbedded
from .position import Position, position_from_counts
from .surface import Slot, Surface

_serial = itertools.count()


class Pt:
    """A marked point on an edge; identity is the object itself."""

    __slots__ = ("serial", "edge", "comp")

    def __init__(self, edge: int, comp: "Comp | None"):
        self.serial = next(_serial)
        self.edge = edge
        self.comp = comp

    def __repr__(self) -> str:
        return f"Pt({self.serial}@e{self.edge})"


class Comp:
    """One curve component.

    pts are visited in order; strand k joins pts[k] to pts[k+1] (closed
    components wrap around) inside the triangle named by slots[k], a pair
    (slot at pts[k], slot at pts[k+1]) of sides of that triangle.
    """

    def __init__(self, kind: str, name: str = ""):
        assert kind in ("arc", "closed")
        self.kind = kind
        self.name = name
        self.pts: list[Pt] = []
        self.slots: list[tuple[Slot, Slot]] = []
        self.dead = False

    @property
    def is_closed(self) -> bool:
        return self.kind == "closed"

    def strand_count(self) -> int:
        return len(self.slots)

    def strand_pts(self, k: int) -> tuple[Pt, Pt]:
        n = len(self.pts)
        if self.is_closed:
            return self.pts[k], self.pts[(k + 1) % n]
        return self.pts[k], self.pts[k + 1]

    def rotate(self, r: int) -> None:
        """Shift a closed component's starting point by r."""
        assert self.is_closed
        self.pts = self.pts[r:] + self.pts[:r]
        self.slots = self.slots[r:] + self.slots[:r]

    def __repr__(self) -> str:
        flag = " dead" if self.dead else ""
        return f"Comp({self.name or self.kind}, {len(self.pts)} pts{flag})"


class Picture:
    def __init__(self, surface: Surface):
        self.surface = surface
        self.edge_pts: list[list[Pt]] = [[] for _ in surface.edges]
        self.comps: list[Comp] = []
        # endpoint pairs (pt of one comp, pt of the other) at a shared
        # boundary point; kept adjacent on their edge by every move
        self.pairing: list[tuple[Pt, Pt]] = []

    # ---------------------------------------------------------- bookkeeping

    def remove_pt(self, pt: Pt) -> None:
        self.edge_pts[pt.edge].remove(pt)

    def pt_index(self, pt: Pt) -> int:
        return self.edge_pts[pt.edge].index(pt)

    def total_pts(self) -> int:
        return sum(len(l) for l in self.edge_pts)

    def slot_pts(self, slot: Slot) -> list[Pt]:
        """Marked points along ``slot`` in the slot's own direction."""
        e = self.surface.edge_of(slot)
        pts = self.edge_pts[e.index]
        if slot == e.canonical_slot:
            return list(pts)
        return list(reversed(pts))

    def validate(self) -> None:
        """Internal consistency; cheap enough to run after every move."""
        listed = {pt.serial for l in self.edge_pts for pt in l}
        comp_pts = set()
        for ci, comp in enumerate(self.comps):
            if comp.dead:
                assert not comp.pts and not comp.slots
                continue
            n = len(comp.pts)
            expected = n if comp.is_closed else n - 1
            assert len(comp.slots) == expected, (ci, n, len(comp.slots))
            for pt in comp.pts:
                assert pt.comp is comp
                assert pt.serial in listed
                comp_pts.add(pt.serial)
            at: dict[int, list[Slot]] = {}
            for k, (sa, sb) in enumerate(comp.slots):
                pa, pb = comp.strand_pts(k)
                assert sa[0] == sb[0], "strand must live in one triangle"
                assert self.surface.edge_of(sa).index == pa.edge
                assert self.surface.edge_of(sb).index == pb.edge
                at.setdefault(pa.serial, []).append(sa)
                at.setdefault(pb.serial, []).append(sb)
            # transversality: the two strands at an interior point use
            # opposite sides of its edge
            for pt in comp.pts:
                slots_here = at.get(pt.serial, [])
                if len(slots_here) == 2:
                    assert slots_here[0] != slots_here[1], f"u-turn at {pt}"
        assert listed == comp_pts, "edge lists and component points disagree"
        for a, b in self.pairing:
            assert abs(self.pt_index(a) - self.pt_index(b)) == 1, (
                "paired endpoint marks must stay adjacent"
            )

    # -------------------------------------------------------------- copying

    def clone(self) -> tuple["Picture", dict[int, Pt]]:
        return self._copy(range(len(self.comps)))

    def restrict(self, comp_indices: Sequence[int]) -> "Picture":
        return self._copy(comp_indices)[0]

    def _copy(self, comp_indices) -> tuple["Picture", dict[int, Pt]]:
        keep = list(comp_indices)
        pic = Picture(self.surface)
        ptmap: dict[int, Pt] = {}
        for ci in keep:
            old = self.comps[ci]
            comp = Comp(old.kind, old.name)
            comp.dead = old.dead
            comp.slots = list(old.slots)
            pic.comps.append(comp)
            for pt in old.pts:
                np = Pt(pt.edge, comp)
                ptmap[pt.serial] = np
                comp.pts.append(np)
        kept_comps = {self.comps[ci] for ci in keep}
        for ei, pts in enumerate(self.edge_pts):
            pic.edge_pts[ei] = [
                ptmap[pt.serial] for pt in pts if pt.comp in kept_comps
            ]
        for a, b in self.pairing:
            if a.comp in kept_comps and b.comp in kept_comps:
                pic.pairing.append((ptmap[a.serial], ptmap[b.serial]))
        return pic, ptmap

    # ------------------------------------------------------------ crossings

    def tri_strands(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for ci, comp in enumerate(self.comps):
            for k, (sa, _) in enumerate(comp.slots):
                out.setdefault(sa[0], []).append((ci, k))
        return out

    def crossing_matrix(self) -> dict[tuple[int, int], int]:
        """Crossing counts per unordered component pair (i <= j)."""
        counts: dict[tuple[int, int], int] = {}
        for t, refs in self.tri_strands().items():
            arr = _TriArr(self, t, refs, with_faces=False)
            for ra, rb in arr.crossing_pairs:
                key = tuple(sorted((ra[0], rb[0])))
                counts[key] = counts.get(key, 0) + 1
        return counts

    def crossings_between(self, ci: int, cj: int) -> int:
        key = tuple(sorted((ci, cj)))
        return self.crossing_matrix().get(key, 0)

    def total_crossings(self) -> int:
        return sum(self.crossing_matrix().values())

    def assert_embedded(self, ci: int | None = None) -> None:
        for (a, b), n in self.crossing_matrix().items():
            if a == b and n > 0 and (ci is None or a == ci):
                raise NotEmbedded(
                    f"component {a} ({self.comps[a].name}) crosses itself"
                )

    # ------------------------------------------------------------ analysis

    def analyze(self) -> "Analysis":
        return Analysis(self)

    # ------------------------------------------------------------- tighten

    def tighten(self, max_steps: int = 100000) -> None:
        prev = None
        for _ in range(max_steps):
            measure = (self.total_crossings(), self.total_pts())
            assert prev is None or measure < prev, "moves must shrink the picture"
            prev = measure
            if measure[0] > 0:
                ana = self.analyze()
                if self._remove_bigon(ana):
                    self.validate()
                    continue
                if self._remove_half_bigon(ana):
                    self.validate()
                    continue
            if self._push_same_side():
                self.validate()
                continue
            return
        raise AssertionError("tightening did not terminate")

    # --- move: push an empty same-side chord across its edge

    def _push_same_side(self) -> bool:
        for comp in self.comps:
            if comp.dead:
                continue
            for k, (sa, sb) in enumerate(comp.slots):
                if sa != sb:
                    continue
                edge = self.surface.edge_of(sa)
                if edge.is_boundary:
                    continue  # a trivial arc shape; nothing to push into
                pa, pb = comp.strand_pts(k)
                if abs(self.pt_index(pa) - self.pt_index(pb)) != 1:
                    continue  # gap not empty
                self._do_push(comp, k)
                return True
        return False

    def _do_push(self, comp: Comp, k: int) -> None:
        if comp.is_closed and len(comp.pts) == 2:
            # the whole component is a small circle crossing one edge
            # twice: it bounds a disk
            for pt in comp.pts:
                self.remove_pt(pt)
            comp.pts = []
            comp.slots = []
            comp.dead = True
            return
        if comp.is_closed:
            comp.rotate((k - 1) % len(comp.pts))
            k = 1
        assert 1 <= k < len(comp.slots) - (0 if comp.is_closed else 1), (
            "same-side chord on an interior edge has neighbours on both sides"
        )
        pa, pb = comp.strand_pts(k)
        prev_slots = comp.slots[k - 1]
        next_slots = comp.slots[(k + 1) % len(comp.slots)]
        assert prev_slots[1] == next_slots[0], "both feet enter one triangle"
        new_strand = (prev_slots[0], next_slots[1])
        assert new_strand[0][0] == new_strand[1][0]
        self.remove_pt(pa)
        self.remove_pt(pb)
        comp.pts[k : k + 2] = []
        comp.slots[k - 1 : k + 2] = [new_strand]

    # --- move: remove a bigon

    def _remove_bigon(self, ana: "Analysis") -> bool:
        for region in ana.regions:
            if region.boundary_gaps or region.chi != 1:
                continue
            if len(region.cycles) != 1:
                continue
            cycle = region.cycles[0]
            xs = [i for i, (_, node) in enumerate(cycle) if node[0] == "x"]
            if len(xs) != 2:
                continue
            if cycle[xs[0]][1] == cycle[xs[1]][1]:
                continue  # both corners at one crossing: not a bigon
            self._reroute_bigon(ana, region, cycle, xs)
            return True
        return False

    def _reroute_bigon(self, ana, region, cycle, xs) -> None:
        i1, i2 = xs
        x1, x2 = cycle[i1][1], cycle[i2][1]
        run1 = cycle[i1 + 1 : i2 + 1]  # from x1 to x2
        run2 = cycle[i2 + 1 :] + cycle[: i1 + 1]  # from x2 to x1
        c1 = ana.half_comp(run1[0][0])
        c2 = ana.half_comp(run2[0][0])
        assert c1 != c2, "a bigon is bounded by two distinct components"
        assert all(ana.half_comp(h) == c1 for h, _ in run1)
        assert all(ana.half_comp(h) == c2 for h, _ in run2)
        if c1 > c2:
            moved_run, kept_run = run1, run2
            x_start, x_end = x1, x2
            ci = c1
        else:
            moved_run, kept_run = run2, run1
            x_start, x_end = x2, x1
            ci = c2
        ref_start = ana.comp_strand_at(x_start, ci)
        ref_end = ana.comp_strand_at(x_end, ci)
        if ana.span_forward(ref_start, ref_end, moved_run, x_start, x_end):
            kA, kB = ref_start[1], ref_end[1]
            path_items = [(h, True) for h, _ in reversed(kept_run)]
        else:
            kA, kB = ref_end[1], ref_start[1]
            path_items = [(h, False) for h, _ in kept_run]
        junctions, path_slots = ana.path_from_items(path_items)
        assert path_slots[0][0] is None and path_slots[-1][1] is None
        self._splice(ana, region, ci, kA, kB, junctions, path_slots)

    # --- move: remove a half bigon at a shared endpoint

    def _remove_half_bigon(self, ana: "Analysis") -> bool:
        for region in ana.regions:
            if region.chi != 1 or len(region.cycles) != 1:
                continue
            if len(region.boundary_gaps) != 1:
                continue
            cycle = region.cycles[0]
            xs = [i for i, (_, node) in enumerate(cycle) if node[0] == "x"]
            if len(xs) != 1:
                continue
            gis = [
                i
                for i, (h, _) in enumerate(cycle)
                if ana.half_edge(h).kind == "gap"
            ]
            if len(gis) != 1:
                continue
            gi = gis[0]
            gap_half = cycle[gi][0]
            tail, head = ana.half_nodes(gap_half)
            if tail[0] != "m" or head[0] != "m":
                continue
            pt_t = ana.pt_by_serial[tail[1]]
            pt_h = ana.pt_by_serial[head[1]]
            if pt_t.comp is pt_h.comp:
                continue
            if self.pairing:
                # shared endpoints stay shared: only a paired gap slides
                if not self._paired_together(tail[1], head[1]):
                    continue
            else:
                # free endpoints slide along the boundary past each other
                if not (self._is_terminal(pt_t) and self._is_terminal(pt_h)):
                    continue
            self._reroute_half_bigon(ana, region, cycle, gi, xs[0])
            return True
        return False

    def _paired_together(self, s1: int, s2: int) -> bool:
        return any(
            {a.serial, b.serial} == {s1, s2} for a, b in self.pairing
        )

    @staticmethod
    def _is_terminal(pt: Pt) -> bool:
        comp = pt.comp
        return comp.kind == "arc" and (
            pt is comp.pts[0] or pt is comp.pts[-1]
        )

    def _reroute_half_bigon(self, ana, region, cycle, gi, xi) -> None:
        cycle = cycle[gi + 1 :] + cycle[: gi + 1]  # gap goes last
        xi = (xi - gi - 1) % len(cycle)
        gap_half = cycle[-1][0]
        gap_tail, gap_head = ana.half_nodes(gap_half)
        run1 = cycle[: xi + 1]  # from the mark at gap_head into the crossing
        run2 = cycle[xi + 1 : -1]  # from the crossing to the mark at gap_tail
        assert run1 and run2, "gap edges never touch a crossing directly"
        x_node = cycle[xi][1]
        c1 = ana.half_comp(run1[0][0])
        c2 = ana.half_comp(run2[0][0])
        assert c1 != c2
        ci = max(c1, c2)
        if ci == c1:
            my_end_node, anchor_node = gap_head, gap_tail
            path_items = [(h, True) for h, _ in reversed(run2)]
        else:
            my_end_node, anchor_node = gap_tail, gap_head
            path_items = [(h, False) for h, _ in run1]
        junctions, path_slots = ana.path_from_items(path_items)
        assert path_slots[0][0] is not None and path_slots[-1][1] is None
        comp = self.comps[ci]
        my_end_pt = ana.pt_by_serial[my_end_node[1]]
        assert my_end_pt.comp is comp
        at_start = my_end_pt is comp.pts[0]
        assert at_start or my_end_pt is comp.pts[-1]
        k_x = ana.comp_strand_at(x_node, ci)[1]
        self._splice_end(
            ana, region, ci, k_x, at_start, anchor_node, junctions, path_slots
        )

    # --- splicing helpers shared by the two reroutes

    def _place_parallel(self, ana, region, node) -> Pt:
        """New point adjacent to the mark's point, on its non-region side."""
        assert node[0] == "m"
        pt = ana.pt_by_serial[node[1]]
        slot = node[2]
        side = ana.region_side(region, node)
        e = self.surface.edge_of(slot)
        idx = self.pt_index(pt)
        # side +1: region on the rank increasing side along the slot, so
        # the copy goes on the decreasing side, and vice versa
        after_in_slot = side == -1
        if slot == e.canonical_slot:
            insert_at = idx + 1 if after_in_slot else idx
        else:
            insert_at = idx if after_in_slot else idx + 1
        new = Pt(e.index, None)
        self.edge_pts[e.index].insert(insert_at, new)
        return new

    def _splice(self, ana, region, ci, kA, kB, junctions, path_slots) -> None:
        """Replace comp strands kA..kB by a path parallel to the kept run.

        path_slots has one (slot, slot) pair per new chord, with None at
        the two crossing ends; those are filled from the component's own
        slots at the splice boundary.
        """
        comp = self.comps[ci]
        if comp.is_closed:
            n = len(comp.slots)
            comp.rotate(kA)
            kB = (kB - kA) % n
            kA = 0
        else:
            assert 0 <= kA <= kB < len(comp.slots)
        sigma_in = comp.slots[kA][0]
        sigma_out = comp.slots[kB][1]
        slots = [list(p) for p in path_slots]
        assert slots[0][0] is None and slots[-1][1] is None
        slots[0][0] = sigma_in
        slots[-1][1] = sigma_out
        new_slots = [(sa, sb) for sa, sb in slots]
        for sa, sb in new_slots:
            assert sa[0] == sb[0], "spliced chord must stay in one triangle"
        for pt in comp.pts[kA + 1 : kB + 1]:
            self.remove_pt(pt)
        new_pts = []
        for node in junctions:
            np = self._place_parallel(ana, region, node)
            np.comp = comp
            new_pts.append(np)
        if comp.is_closed:
            comp.pts = [comp.pts[0]] + new_pts + comp.pts[kB + 1 :]
            comp.slots = new_slots + comp.slots[kB + 1 :]
        else:
            comp.pts[kA + 1 : kB + 1] = new_pts
            comp.slots[kA : kB + 1] = new_slots

    def _splice_end(
        self, ana, region, ci, k_x, at_start, anchor_node, junctions, path_slots
    ) -> None:
        """Reroute comp from one endpoint, parallel to the other component.

        The new endpoint mark lands next to the anchor (the other
        component's endpoint mark) on its non-region side, which swaps the
        order of the paired marks on their boundary edge.
        """
        comp = self.comps[ci]
        my_end = comp.pts[0] if at_start else comp.pts[-1]
        sigma_out = comp.slots[k_x][1] if at_start else comp.slots[k_x][0]
        slots = [list(p) for p in path_slots]
        slots[-1][1] = sigma_out
        new_slots = [(sa, sb) for sa, sb in slots]
        for sa, sb in new_slots:
            assert sa[0] == sb[0], "spliced chord must stay in one triangle"
        removed = comp.pts[: k_x + 1] if at_start else comp.pts[k_x + 1 :]
        for pt in removed:
            self.remove_pt(pt)
        p0 = self._place_parallel(ana, region, anchor_node)
        p0.comp = comp
        new_pts = [p0]
        for node in junctions:
            np = self._place_parallel(ana, region, node)
            np.comp = comp
            new_pts.append(np)
        if at_start:
            comp.pts[: k_x + 1] = new_pts
            comp.slots[: k_x + 1] = new_slots
        else:
            comp.pts[k_x + 1 :] = list(reversed(new_pts))
            comp.slots[k_x:] = [(sb, sa) for sa, sb in reversed(new_slots)]
        for i, (a, b) in enumerate(self.pairing):
            if a is my_end:
                self.pairing[i] = (p0, b)
            elif b is my_end:
                self.pairing[i] = (a, p0)

    # ------------------------------------------------------- normalization

    def extract(self, ci: int) -> tuple[str, Position | None]:
        """Solo-normalize component ci and read off its coordinates.

        Returns (status, position): "ok" with the canonical Position,
        "dead" for a component bounding a disk, or "trivial_arc" for an arc
        isotopic into a boundary edge.
        """
        solo = self.restrict([ci])
        solo.pairing = []
        solo.tighten()
        comp = solo.comps[0]
        if comp.dead:
            return "dead", None
        if (
            comp.kind == "arc"
            and len(comp.slots) == 1
            and comp.slots[0][0] == comp.slots[0][1]
        ):
            return "trivial_arc", None
        counts = [[0, 0, 0] for _ in range(self.surface.num_triangles)]
        for sa, sb in comp.slots:
            t = sa[0]
            i, j = sa[1], sb[1]
            assert i != j, "same-side chord survived solo tightening"
            corner = j if j == (i + 1) % 3 else i
            assert corner in ((i + 1) % 3, (j + 1) % 3)
            counts[t][corner] += 1
        return "ok", position_from_counts(self.surface, counts)


# ======================================================================
# per-triangle arrangements and glued regions


def _between(a: int, b: int, x: int, L: int) -> bool:
    return 0 < (x - a) % L < (b - a) % L


class _AEdge:
    __slots__ = ("key", "n1", "n2", "kind", "info")

    def __init__(self, key, n1, n2, kind, info=None):
        self.key = key
        self.n1 = n1
        self.n2 = n2
        self.kind = kind  # "gap" | "seg"
        self.info = info  # gap: (slot, gap index along the slot)

    def __repr__(self):
        return f"_AEdge({self.key}, {self.n1}->{self.n2})"


class _Chord:
    __slots__ = ("ref", "r1", "r2", "n1", "n2", "nodes")

    def __init__(self, ref, r1, r2, n1, n2):
        self.ref = ref
        self.r1 = r1
        self.r2 = r2
        self.n1 = n1
        self.n2 = n2
        self.nodes: list | None = None  # [n1, crossing nodes.., n2]


class _TriArr:
    """Planar arrangement of the chords inside one triangle.

    Boundary nodes are corners ("c", t, i) and local marks
    ("m", pt serial, slot); a point on a self-glued edge appears as two
    distinct local marks.  Crossings are ("x", ref, ref) with the two
    strand refs in sorted order.
    """

    def __init__(self, pic: Picture, t: int, refs, with_faces: bool = True):
        self.pic = pic
        self.t = t
        cyc: list[tuple] = []
        for i in range(3):
            slot = (t, i)
            cyc.append(("c", t, i))
            for pt in pic.slot_pts(slot):
                cyc.append(("m", pt.serial, slot))
        self.cyc = cyc
        self.L = len(cyc)
        self.ranks = {node: i for i, node in enumerate(cyc)}
        assert len(self.ranks) == self.L, "duplicate boundary node"
        self.chords: dict[tuple[int, int], _Chord] = {}
        for ref in refs:
            ci, k = ref
            comp = pic.comps[ci]
            pa, pb = comp.strand_pts(k)
            sa, sb = comp.slots[k]
            n1 = ("m", pa.serial, sa)
            n2 = ("m", pb.serial, sb)
            self.chords[ref] = _Chord(
                ref, self.ranks[n1], self.ranks[n2], n1, n2
            )
        self.crossing_pairs: list[tuple[tuple, tuple]] = []
        per_chord: dict[tuple, list] = {ref: [] for ref in self.chords}
        chord_list = sorted(self.chords.values(), key=lambda c: c.ref)
        for a, b in itertools.combinations(chord_list, 2):
            inb1 = _between(a.r1, a.r2, b.r1, self.L)
            inb2 = _between(a.r1, a.r2, b.r2, self.L)
            if inb1 == inb2:
                continue
            self.crossing_pairs.append((a.ref, b.ref))
            node = ("x", a.ref, b.ref)
            near_in_a = b.r1 if inb1 else b.r2
            near_in_b = a.r1 if _between(b.r1, b.r2, a.r1, self.L) else a.r2
            per_chord[a.ref].append((near_in_a, node))
            per_chord[b.ref].append((near_in_b, node))
        for ref, chord in self.chords.items():
            xs = sorted(
                per_chord[ref], key=lambda p: (p[0] - chord.r1) % self.L
            )
            chord.nodes = [chord.n1] + [node for _, node in xs] + [chord.n2]
        if with_faces:
            self._build_edges()
            self._build_stubs()
            self._build_faces()

    # ----- arrangement edges

    def _build_edges(self):
        self.edges: dict[tuple, _AEdge] = {}
        self.gap_at: dict[tuple[Slot, int], tuple] = {}
        for j in range(self.L):
            key = ("g", self.t, j)
            n1 = self.cyc[j]
            n2 = self.cyc[(j + 1) % self.L]
            slot, gidx = self._gap_geometry(j)
            self.edges[key] = _AEdge(key, n1, n2, "gap", (slot, gidx))
            self.gap_at[(slot, gidx)] = key
        for ref, chord in self.chords.items():
            for si in range(len(chord.nodes) - 1):
                key = ("s", ref, si)
                self.edges[key] = _AEdge(
                    key, chord.nodes[si], chord.nodes[si + 1], "seg"
                )

    def _gap_geometry(self, j: int) -> tuple[Slot, int]:
        node = self.cyc[j]
        if node[0] == "c":
            return (self.t, node[2]), 0
        slot = node[2]
        serials = [pt.serial for pt in self.pic.slot_pts(slot)]
        return slot, serials.index(node[1]) + 1

    # ----- rotations

    def _build_stubs(self):
        # stub: (edge key, end) with end 0 at n1 and 1 at n2; the list at a
        # node is its edge ends in counterclockwise order
        self.stubs: dict[tuple, list] = {}
        chord_at_mark: dict[tuple, tuple] = {}
        for ref, chord in self.chords.items():
            chord_at_mark[chord.n1] = (("s", ref, 0), 0)
            chord_at_mark[chord.n2] = (("s", ref, len(chord.nodes) - 2), 1)
        for r, node in enumerate(self.cyc):
            fwd = (("g", self.t, r), 0)
            back = (("g", self.t, (r - 1) % self.L), 1)
            if node[0] == "c":
                self.stubs[node] = [fwd, back]
            else:
                stub = chord_at_mark.get(node)
                assert stub is not None, f"mark {node} has no chord"
                self.stubs[node] = [fwd, stub, back]
        per_node: dict[tuple, list] = {}
        for ref, chord in self.chords.items():
            # a stub at a crossing points toward the chord end its segment
            # leads to; sorting the four stubs by that target rank is a
            # valid cyclic order because the two chords separate the disk
            for si in range(len(chord.nodes) - 1):
                a, b = chord.nodes[si], chord.nodes[si + 1]
                if a[0] == "x":
                    per_node.setdefault(a, []).append(
                        ((("s", ref, si), 0), chord.r2)
                    )
                if b[0] == "x":
                    per_node.setdefault(b, []).append(
                        ((("s", ref, si), 1), chord.r1)
                    )
        for node, stubs in per_node.items():
            assert len(stubs) == 4
            stubs.sort(key=lambda s: s[1])
            self.stubs[node] = [s for s, _ in stubs]

    # ----- faces

    def half_nodes(self, half):
        key, d = half
        e = self.edges[key]
        return (e.n1, e.n2) if d == 0 else (e.n2, e.n1)

    def next_half(self, half):
        key, d = half
        e = self.edges[key]
        head = e.n2 if d == 0 else e.n1
        arriving = (key, 1 if d == 0 else 0)
        stubs = self.stubs[head]
        idx = stubs.index(arriving)
        nkey, nend = stubs[(idx - 1) % len(stubs)]
        return (nkey, 0 if nend == 0 else 1)

    def _build_faces(self):
        halves = []
        for key in sorted(self.edges):
            halves.append((key, 0))
            halves.append((key, 1))
        seen: set = set()
        faces = []
        outer = None
        for h in halves:
            if h in seen:
                continue
            orbit = []
            cur = h
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = self.next_half(cur)
            assert cur == orbit[0], "face walk did not close up"
            if any(k[0] == "g" and d == 1 for k, d in orbit):
                assert outer is None, "two outer faces"
                assert all(k[0] == "g" and d == 1 for k, d in orbit)
                outer = orbit
            else:
                faces.append(orbit)
        assert outer is not None
        self.faces = faces
        self.face_of: dict[tuple, int] = {}
        for fi, orbit in enumerate(faces):
            for h in orbit:
                self.face_of[h] = fi


class Region:
    """A complement component of the picture, as glued arrangement faces."""

    def __init__(self, index):
        self.index = index
        self.faces: list[tuple[int, int]] = []
        # each cycle: list of (half, head node), halves being chord
        # segments and boundary-edge gaps; interior gaps are spliced out
        self.cycles: list[list] = []
        self.chi = 0
        self.boundary_gaps: list[tuple] = []  # ((t, half), (edge, gap idx))
        self.meets_boundary = False

    def crossing_nodes(self) -> set:
        return {
            node
            for cyc in self.cycles
            for _, node in cyc
            if node[0] == "x"
        }

    def __repr__(self):
        return (
            f"Region(chi={self.chi}, faces={len(self.faces)}, "
            f"cycles={len(self.cycles)}, bd={self.meets_boundary})"
        )


class Analysis:
    """Snapshot of arrangements, faces and glued regions of a picture."""

    def __init__(self, pic: Picture):
        self.pic = pic
        tri = pic.tri_strands()
        self.tris: dict[int, _TriArr] = {
            t: _TriArr(pic, t, tri.get(t, []))
            for t in range(pic.surface.num_triangles)
        }
        self.pt_by_serial = {
            pt.serial: pt for l in pic.edge_pts for pt in l
        }
        self._build_regions()
        # region side of each mark on a region boundary, along the mark's
        # slot direction: a chord segment arriving at a mark has the region
        # on the rank increasing side, one leaving it on the decreasing
        # side; a boundary gap lies on the increasing side of its tail mark
        # and the decreasing side of its head mark.  At a region corner the
        # two rules agree.  0 poisons an ambiguous entry (region touching
        # both sides), which no reroute ever queries.
        self._region_side: dict[tuple, int] = {}

        def reg(key, val):
            old = self._region_side.get(key)
            if old is None:
                self._region_side[key] = val
            elif old != val:
                self._region_side[key] = 0

        for region in self.regions:
            for cyc in region.cycles:
                for h, head in cyc:
                    tail = self.half_nodes(h)[0]
                    is_gap = h[0][0] == "g"
                    if head[0] == "m":
                        reg((region.index, head), -1 if is_gap else +1)
                    if tail[0] == "m":
                        reg((region.index, tail), +1 if is_gap else -1)

    # ----- lookups

    def _arr_of_key(self, key) -> _TriArr:
        if key[0] == "g":
            return self.tris[key[1]]
        ci, k = key[1]
        sa, _ = self.pic.comps[ci].slots[k]
        return self.tris[sa[0]]

    def half_edge(self, half) -> _AEdge:
        return self._arr_of_key(half[0]).edges[half[0]]

    def half_nodes(self, half):
        key, d = half
        e = self.half_edge(half)
        return (e.n1, e.n2) if d == 0 else (e.n2, e.n1)

    def half_comp(self, half) -> int:
        key = half[0]
        assert key[0] == "s", f"expected a chord segment, got {key}"
        return key[1][0]

    def comp_strand_at(self, x_node, ci) -> tuple[int, int]:
        assert x_node[0] == "x"
        for ref in (x_node[1], x_node[2]):
            if ref[0] == ci:
                return ref
        raise AssertionError(f"component {ci} not at crossing {x_node}")

    def region_side(self, region: Region, node) -> int:
        side = self._region_side.get((region.index, node))
        assert side, f"no unambiguous region side for {node}"
        return side

    def span_forward(self, ref_start, ref_end, moved_run, x_start, x_end):
        """Does the moved run follow its component's own orientation?"""
        ci, k = ref_start
        comp = self.pic.comps[ci]
        if len(moved_run) == 1:
            assert ref_start == ref_end
            sa, _ = comp.slots[k]
            nodes = self.tris[sa[0]].chords[ref_start].nodes
            return nodes.index(x_start) < nodes.index(x_end)
        first = moved_run[0][1]
        assert first[0] == "m"
        pa, pb = comp.strand_pts(k)
        if first[1] == pb.serial:
            return True
        assert first[1] == pa.serial
        return False

    def path_from_items(self, items):
        """Junction marks and per-chord slot pairs of a reroute path.

        items are (half, flip) along the path; flip means the half is
        traversed against its own direction.  Crossing ends give None
        slots, filled by the caller from the spliced component.
        """
        junctions = []
        slots = []
        for idx, (h, flip) in enumerate(items):
            tail, head = self.half_nodes(h)
            if flip:
                tail, head = head, tail
            sa = tail[2] if tail[0] == "m" else None
            sb = head[2] if head[0] == "m" else None
            slots.append((sa, sb))
            if idx > 0:
                assert tail[0] == "m"
                junctions.append(tail)
        return junctions, slots

    # ----- regions

    def _build_regions(self):
        surface = self.pic.surface
        parent: dict[tuple, tuple] = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for t, arr in self.tris.items():
            for fi in range(len(arr.faces)):
                parent[(t, fi)] = (t, fi)
        gap_face = {}
        for t, arr in self.tris.items():
            for key, e in arr.edges.items():
                if e.kind == "gap":
                    gap_face[(t, key)] = (t, arr.face_of[(key, 0)])
        self._gap_partner: dict[tuple, tuple] = {}
        for edge in surface.edges:
            if edge.is_boundary:
                continue
            s1, s2 = edge.slots
            w = len(self.pic.edge_pts[edge.index])
            t1, t2 = s1[0], s2[0]
            for k in range(w + 1):
                g1 = self.tris[t1].gap_at[(s1, k)]
                g2 = self.tris[t2].gap_at[(s2, w - k)]
                union(gap_face[(t1, g1)], gap_face[(t2, g2)])
                self._gap_partner[(t1, g1)] = (t2, g2)
                self._gap_partner[(t2, g2)] = (t1, g1)
        groups: dict[tuple, list] = {}
        for t, arr in self.tris.items():
            for fi in range(len(arr.faces)):
                groups.setdefault(find((t, fi)), []).append((t, fi))
        self.regions: list[Region] = []
        self.region_of_face: dict[tuple, int] = {}
        for root in sorted(groups, key=lambda r: min(groups[r])):
            region = Region(len(self.regions))
            region.faces = sorted(groups[root])
            for f in region.faces:
                self.region_of_face[f] = region.index
            self.regions.append(region)
        for region in self.regions:
            self._region_details(region)

    def _is_interior_gap(self, t, key) -> bool:
        e = self.tris[t].edges[key]
        return e.kind == "gap" and not self.pic.surface.is_boundary_slot(
            e.info[0]
        )

    def _region_details(self, region: Region):
        surface = self.pic.surface
        boundary_halves = []
        interior_gap_halves = set()
        tei = 0
        for t, fi in region.faces:
            arr = self.tris[t]
            orbit = arr.faces[fi]
            tei += len(orbit)
            for h in orbit:
                key, _ = h
                e = arr.edges[key]
                if e.kind == "gap" and self._is_interior_gap(t, key):
                    interior_gap_halves.add((t, h))
                else:
                    boundary_halves.append((t, h))
                    if e.kind == "gap":
                        slot, gidx = e.info
                        eidx = surface.edge_of(slot).index
                        region.boundary_gaps.append(((t, h), (eidx, gidx)))
        region.meets_boundary = bool(region.boundary_gaps)

        # Euler characteristic of the region cut open along the surface's
        # edges and reglued: faces are the arrangement faces, edges their
        # cycle edges with glued interior gap pairs identified, vertices
        # the face corners identified across those gluings.
        igi = len(interior_gap_halves)
        assert igi % 2 == 0
        E = tei - igi // 2

        corner_parent: dict[tuple, tuple] = {}

        def cfind(x):
            while corner_parent[x] != x:
                corner_parent[x] = corner_parent[corner_parent[x]]
                x = corner_parent[x]
            return x

        def cunion(x, y):
            rx, ry = cfind(x), cfind(y)
            if rx != ry:
                corner_parent[rx] = ry

        pos_of_half = {}
        face_len = {}
        for t, fi in region.faces:
            orbit = self.tris[t].faces[fi]
            face_len[(t, fi)] = len(orbit)
            for p in range(len(orbit)):
                corner_parent[((t, fi), p)] = ((t, fi), p)
            for p, h in enumerate(orbit):
                pos_of_half[(t, h)] = ((t, fi), p)
        for t, h in interior_gap_halves:
            partner_t, pkey = self._gap_partner[(t, h[0])]
            f1, p1 = pos_of_half[(t, h)]
            f2, p2 = pos_of_half[(partner_t, (pkey, 0))]
            m1, m2 = face_len[f1], face_len[f2]
            cunion((f1, p1), (f2, (p2 + 1) % m2))
            cunion((f1, (p1 + 1) % m1), (f2, p2))
        V = len({cfind(x) for x in corner_parent})
        region.chi = V - E + len(region.faces)

        # boundary cycles: walk face cycles, splicing through interior gaps
        unvisited = set(boundary_halves)
        cycles = []
        for start in sorted(unvisited):
            if start not in unvisited:
                continue
            cyc = []
            cur = start
            while True:
                unvisited.discard(cur)
                t, h = cur
                cyc.append((h, self.tris[t].half_nodes(h)[1]))
                nxt = (t, self.tris[t].next_half(h))
                while nxt in interior_gap_halves:
                    t2, g2 = self._gap_partner[(nxt[0], nxt[1][0])]
                    nxt = (t2, self.tris[t2].next_half((g2, 0)))
                cur = nxt
                if cur == start:
                    break
            cycles.append(cyc)
        region.cycles = cycles

    # ----- crossings along components

    def crossings_along(self, ci: int) -> list[dict]:
        """Crossings met walking component ci, in traversal order.

        Sign convention: +1 when the other strand's source sits inside the
        cyclic interval from this strand's source to its target.
        """
        comp = self.pic.comps[ci]
        out = []
        for k in range(comp.strand_count()):
            sa, _ = comp.slots[k]
            arr = self.tris[sa[0]]
            chord = arr.chords[(ci, k)]
            for node in chord.nodes[1:-1]:
                other_ref = node[2] if node[1] == (ci, k) else node[1]
                o = arr.chords[other_ref]
                sign = +1 if _between(chord.r1, chord.r2, o.r1, arr.L) else -1
                out.append(
                    {"node": node, "strand": k, "other": other_ref, "sign": sign}
                )
        return out


# ======================================================================
# building pictures from positions


def _traversal(pos: Position) -> list[tuple[str, list, list]]:
    """Each component of a position as (kind, marks in order, strand slots)."""
    strand_info: dict[tuple, list] = {}
    for a, b, t, j in pos.strands():
        sa = (t, (j + 2) % 3)
        sb = (t, j)
        strand_info.setdefault(a, []).append((b, (sa, sb)))
        strand_info.setdefault(b, []).append((a, (sb, sa)))
    boundary_edges = {e.index for e in pos.surface.edges if e.is_boundary}
    out = []
    for comp in pos.components():
        if comp["kind"] == "arc":
            start = comp["ends"][0]
        else:
            start = min(comp["marks"])
        order = [start]
        slots = []
        prev = None
        prev_slots = None
        cur = start
        while True:
            cand = list(strand_info[cur])
            if prev is None:
                cand.sort(key=lambda ms: ms[0])
            else:
                for i, (m, s) in enumerate(cand):
                    if m == prev and s == (prev_slots[1], prev_slots[0]):
                        cand.pop(i)
                        break
            nxt, sl = cand[0]
            slots.append(sl)
            prev, prev_slots = cur, sl
            cur = nxt
            if comp["kind"] == "closed" and cur == start:
                break
            order.append(cur)
            if comp["kind"] == "arc" and cur[0] in boundary_edges:
                break
        out.append((comp["kind"], order, slots))
    return out


def picture_from_positions(
    positions: Sequence[Position],
    names: Sequence[str] | None = None,
    share_endpoints: bool | None = None,
) -> Picture:
    """Draw the given single-component positions together in one picture.

    Points of later positions go after earlier ones on every edge, except
    that for exactly two arcs with matching endpoint edges and sharing
    requested (or left automatic) the endpoint marks are interleaved into
    adjacent pairs, recorded in the picture's pairing.  The layout and the
    traversal starting points are deterministic, so the same inputs always
    produce the same picture.
    """
    assert positions, "need at least one position"
    surface = positions[0].surface
    for p in positions:
        assert p.surface.same_as(surface)
    share = False
    if len(positions) == 2:
        both_arcs = all(p.is_arc() for p in positions)
        match = False
        if both_arcs:
            slots0 = sorted(s for s, _ in positions[0].endpoints())
            slots1 = sorted(s for s, _ in positions[1].endpoints())
            match = slots0 == slots1
        if share_endpoints is None:
            share = match
        elif share_endpoints:
            if not match:
                raise KindMismatch(
                    "cannot share endpoints: endpoint edges do not match"
                )
            share = True
    elif share_endpoints:
        raise KindMismatch("endpoint sharing needs exactly two arcs")

    pic = Picture(surface)
    all_marks: list[tuple[str, list, list]] = []
    for pos in positions:
        comps = _traversal(pos)
        if len(comps) != 1:
            raise KindMismatch(
                "pictures are drawn from single-component positions"
            )
        all_marks.append(comps[0])

    comps: list[Comp] = []
    for pi, (kind, _, _) in enumerate(all_marks):
        name = (names[pi] if names else "") or f"c{pi}"
        comp = Comp(kind, name)
        comps.append(comp)
        pic.comps.append(comp)

    mark_pt: list[dict] = [dict() for _ in positions]
    for ei, edge in enumerate(surface.edges):
        per_pos = [
            sorted(m for m in order if m[0] == ei)
            for _, order, _ in all_marks
        ]
        if share and edge.is_boundary:
            a_marks, b_marks = per_pos
            assert len(a_marks) == len(b_marks)
            seq = []
            for am, bm in zip(a_marks, b_marks):
                seq.append((0, am))
                seq.append((1, bm))
        else:
            seq = [(pi, m) for pi, marks in enumerate(per_pos) for m in marks]
        for pi, m in seq:
            pt = Pt(ei, comps[pi])
            pic.edge_pts[ei].append(pt)
            mark_pt[pi][m] = pt

    for pi, (kind, order, slots) in enumerate(all_marks):
        comps[pi].pts = [mark_pt[pi][m] for m in order]
        comps[pi].slots = list(slots)

    if share:
        boundary_edges = {e.index for e in surface.edges if e.is_boundary}
        ends0 = sorted(m for m in all_marks[0][1] if m[0] in boundary_edges)
        ends1 = sorted(m for m in all_marks[1][1] if m[0] in boundary_edges)
        for m0, m1 in zip(ends0, ends1):
            pic.pairing.append((mark_pt[0][m0], mark_pt[1][m1]))
    pic.validate()
    return pic
