"""Brute force minimal crossing count between two drawn positions.

Deliberately independent of the picture engine: enumerate every way the
marks of the two positions can interleave along each edge, place straight
chords in every triangle, count interleaving chord pairs, and take the
minimum over all interleavings.  With shared endpoint pairs, only
interleavings keeping each pair adjacent are allowed.  Exponential, fine
for the small inputs the tests feed it.
"""

import itertools


def _chords(pos):
    """Chords as (triangle, side_a, mark_a, side_b, mark_b)."""
    return [
        (t, (j + 2) % 3, a, j, b) for a, b, t, j in pos.strands()
    ]


def _edge_options(wa, wb, pair_positions):
    """All merged orderings of wa + wb marks on one edge.

    Yields (rank_a, rank_b) tuples mapping each position's own mark index
    to its merged rank.  pair_positions lists (a index, b index) pairs that
    must end up adjacent.
    """
    total = wa + wb
    for a_ranks in itertools.combinations(range(total), wa):
        b_ranks = tuple(r for r in range(total) if r not in a_ranks)
        if all(
            abs(a_ranks[pa] - b_ranks[pb]) == 1
            for pa, pb in pair_positions
        ):
            yield a_ranks, b_ranks


def min_crossings(pos_a, pos_b, shared_pairs=()):
    """Minimal crossings between the two positions over all interleavings.

    shared_pairs: ((edge, pos_a mark), (edge, pos_b mark)) pairs whose
    marks must stay adjacent on their edge.
    """
    surface = pos_a.surface
    assert pos_b.surface.same_as(surface)
    wa = [pos_a.slot_weight(e.slots[0]) for e in surface.edges]
    wb = [pos_b.slot_weight(e.slots[0]) for e in surface.edges]
    pairs_on = [[] for _ in surface.edges]
    for (ea, pa), (eb, pb) in shared_pairs:
        assert ea == eb, "shared endpoints must sit on one edge"
        pairs_on[ea].append((pa, pb))
    options = [
        list(_edge_options(wa[e.index], wb[e.index], pairs_on[e.index]))
        for e in surface.edges
    ]
    assert all(options), "over-constrained edge"
    chords_a = _chords(pos_a)
    chords_b = _chords(pos_b)

    best = None
    for choice in itertools.product(*options):
        rank_a = [c[0] for c in choice]
        rank_b = [c[1] for c in choice]
        total = 0
        for t in range(surface.num_triangles):
            block = []
            offset = 0
            for i in range(3):
                edge = surface.edge_of((t, i))
                block.append((offset, edge))
                offset += wa[edge.index] + wb[edge.index]
            L = offset

            def at(side, mark, ranks):
                e, p = mark
                off, edge = block[side]
                r = ranks[e][p]
                width = wa[e] + wb[e]
                if (t, side) != edge.canonical_slot:
                    r = width - 1 - r
                return off + r

            if L == 0:
                continue
            spans_a = [
                (at(sa, ma, rank_a), at(sb, mb, rank_a))
                for tt, sa, ma, sb, mb in chords_a
                if tt == t
            ]
            spans_b = [
                (at(sa, ma, rank_b), at(sb, mb, rank_b))
                for tt, sa, ma, sb, mb in chords_b
                if tt == t
            ]
            for x1, x2 in spans_a:
                for y1, y2 in spans_b:
                    in1 = 0 < (y1 - x1) % L < (x2 - x1) % L
                    in2 = 0 < (y2 - x1) % L < (x2 - x1) % L
                    if in1 != in2:
                        total += 1
        if best is None or total < best:
            best = total
        if best == 0:
            break
    return best


def shared_endpoint_pairs(pos_a, pos_b):
    """Endpoint mark pairs, matching sorted boundary marks in order."""
    ends_a = pos_a.components()[0]["ends"]
    ends_b = pos_b.components()[0]["ends"]
    assert len(ends_a) == len(ends_b) == 2
    assert [e for e, _ in ends_a] == [e for e, _ in ends_b]
    return list(zip(ends_a, ends_b))
