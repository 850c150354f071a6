"""Dehn twists acting on normal positions.

A twist about a closed curve c is computed by drawing c together with the
target, pulling the pair tight, and then replacing the target by its image
curve drawn explicitly: wherever the target used to cross c it now enters
a collar around c, winds |power| times around parallel copies of c, and
exits where it entered.  Normalizing the drawn image gives the answer in
normal coordinates.

The image is assembled from exact bookkeeping rather than isotopy moves:

* each crossing gets a fractional spot t along c (strand index plus rank
  within the strand), so all spirals start at distinct angles;
* a spiral pass near the c point with index p carries a depth key
  G in (0, 1) measuring how far across the collar it sits, right side of
  c at 0, left at 1; following a spiral from the side it enters, G moves
  linearly, so the i-th step of a run entered from the right has
  G = u_i / (|power| L) with u_i the angular distance traveled, and one
  entered from the left has the complement;
* the cluster of all passes near a given c point is sorted by G and laid
  out along the edge from the right of c to its left, replacing the c
  point itself;
* the entry side of each crossing is the sign of that crossing in the
  target's own traversal: +1 means the target enters from c's left.

The direction a run winds is sigma for right entries and -sigma for left
entries, where sigma = sign(power) * TWIST_HANDEDNESS; the handedness
constant is calibrated so that twisting with power +1 about the core of
the annulus drags a transversal arc into the wrap whose endpoint signs
against the original arc are positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import KindMismatch
from .picture import Comp, Picture, Pt, picture_from_positions
from .position import Position

TWIST_HANDEDNESS = -1


@dataclass(frozen=True)
class Twist:
    """One Dehn twist: ``power`` full turns about ``curve``."""

    curve: Position
    power: int


def apply_twist(curve: Position, power: int, target: Position) -> Position:
    """Normal coordinates of the image of target under the twist."""
    if not curve.is_closed_curve():
        raise KindMismatch("can only twist about a single closed curve")
    pic = picture_from_positions([curve, target], share_endpoints=False)
    pic.tighten()
    if power == 0 or pic.crossings_between(0, 1) == 0:
        return target
    img = _twist_picture(pic, power)
    img.validate()
    img.assert_embedded(0)
    status, out = img.extract(0)
    assert status == "ok", f"twist image degenerated to {status}"
    return out


def apply_word(word: Iterable[Twist], target: Position) -> Position:
    """Apply a composition of twists, rightmost twist first."""
    for tw in reversed(list(word)):
        target = apply_twist(tw.curve, tw.power, target)
    return target


def simplify_word(word: Iterable[Twist]) -> list[Twist]:
    """Merge adjacent twists about equal curves, drop zero powers."""
    out: list[Twist] = []
    for tw in word:
        if tw.power == 0:
            continue
        if out and out[-1].curve.counts == tw.curve.counts:
            merged = out[-1].power + tw.power
            out.pop()
            if merged:
                out.append(Twist(tw.curve, merged))
        else:
            out.append(tw)
    return out


def _twist_picture(pic: Picture, power: int) -> Picture:
    ana = pic.analyze()
    c = pic.comps[0]
    b = pic.comps[1]
    L = len(c.pts)
    nu = abs(power)
    sigma = 1 if power * TWIST_HANDEDNESS > 0 else -1

    per_strand: dict[int, list] = {}
    for entry in ana.crossings_along(0):
        per_strand.setdefault(entry["strand"], []).append(entry)
    t_of = {}
    for j, entries in per_strand.items():
        for r, entry in enumerate(entries):
            t_of[entry["node"]] = j + Fraction(r + 1, len(entries) + 1)

    img = Picture(pic.surface)
    comp = Comp(b.kind, b.name)
    img.comps.append(comp)
    copies = {pt.serial: Pt(pt.edge, comp) for pt in b.pts}
    clusters: dict[int, list] = {p: [] for p in range(L)}

    def run_for(node, e_entry):
        """Spiral for one crossing: pts, inner chords, end slots."""
        t_x = t_of[node]
        d = -e_entry * sigma
        j = int(t_x)
        p1 = j + 1 if d == 1 else j
        u1 = (p1 - t_x) * d
        assert 0 < u1 < 1
        pts = []
        slots = []
        for i in range(nu * L):
            p = (p1 + d * i) % L
            G = Fraction(u1 + i, nu * L)
            if e_entry == 1:
                G = 1 - G
            pt = Pt(c.pts[p].edge, comp)
            clusters[p].append((G, pt))
            pts.append(pt)
            if i:
                if d == 1:
                    slots.append(c.slots[(p - 1) % L])
                else:
                    sa, sb = c.slots[p]
                    slots.append((sb, sa))
        if d == 1:
            first_slot, last_slot = c.slots[j][1], c.slots[j][0]
        else:
            first_slot, last_slot = c.slots[j][0], c.slots[j][1]
        return pts, slots, first_slot, last_slot

    by_strand: dict[int, list] = {}
    for entry in ana.crossings_along(1):
        by_strand.setdefault(entry["strand"], []).append(entry)

    nstr = b.strand_count()
    new_pts = [copies[b.pts[0].serial]]
    new_slots = []
    for k in range(nstr):
        sa, sb = b.slots[k]
        cur_slot = sa
        for entry in by_strand.get(k, ()):
            rpts, rslots, first_slot, last_slot = run_for(
                entry["node"], entry["sign"]
            )
            new_slots.append((cur_slot, first_slot))
            new_pts.extend(rpts)
            new_slots.extend(rslots)
            cur_slot = last_slot
        new_slots.append((cur_slot, sb))
        if not (b.is_closed and k == nstr - 1):
            new_pts.append(copies[b.pts[k + 1].serial])
    comp.pts = new_pts
    comp.slots = new_slots

    m = sum(len(v) for v in by_strand.values())
    cluster_pts = {}
    for p, items in clusters.items():
        assert len(items) == m * nu
        items.sort(key=lambda gp: gp[0])
        ordered = [pt for _, pt in items]
        # lay the cluster out from the right of c to its left: ascending
        # rank along the slot where c arrives at this point
        arriving = c.slots[(p - 1) % L][1]
        if arriving != pic.surface.edge_of(arriving).canonical_slot:
            ordered.reverse()
        cluster_pts[p] = ordered

    qindex = {pt.serial: i for i, pt in enumerate(c.pts)}
    for ei, lst in enumerate(pic.edge_pts):
        out = []
        for pt in lst:
            if pt.comp is b:
                out.append(copies[pt.serial])
            else:
                out.extend(cluster_pts[qindex[pt.serial]])
        img.edge_pts[ei] = out
    return img
