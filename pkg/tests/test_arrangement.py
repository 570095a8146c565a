"""Codimension-2 flats, containment queries, and parabolic closures."""

from math import comb

import pytest

from crg.arrangement import codim2_flats, parabolic_reflections, reflections_containing
from crg.groups import build_coxeter, build_series


def is_diagonal(g, s):
    m = g.reflections[s].matrix
    return all(m[i, j] == 0 for i in range(g.rank) for j in range(g.rank) if i != j)


def test_a2_single_flat():
    g = build_coxeter("A", 2)
    table = codim2_flats(g)
    assert [f.members for f in table.flats] == [(0, 1, 2)]


def test_b2_single_flat():
    g = build_coxeter("B", 2)
    table = codim2_flats(g)
    assert [f.members for f in table.flats] == [(0, 1, 2, 3)]


def test_a3_flat_census():
    g = build_coxeter("A", 3)
    table = codim2_flats(g)
    sizes = sorted(len(f.members) for f in table.flats)
    assert sizes == [2, 2, 2, 3, 3, 3, 3]


def test_pair_map_total_and_disjoint():
    for g in [
        build_coxeter("A", 3),
        build_coxeter("B", 3),
        build_series(3, 3, 3),
        build_coxeter("H3"),
    ]:
        table = codim2_flats(g)
        n = g.size
        assert len(table.pair_to_flat) == comb(n, 2)
        assert sum(comb(len(f.members), 2) for f in table.flats) == comb(n, 2)
        for s in range(n):
            for u in range(s + 1, n):
                flat = table.flat_of_pair(s, u)
                assert s in flat.members and u in flat.members


def test_disjoint_transpositions_span_their_own_flat():
    g = build_coxeter("A", 3)
    table = codim2_flats(g)
    pairs = [f.members for f in table.flats if len(f.members) == 2]
    assert len(pairs) == 3
    for s, u in pairs:
        assert reflections_containing(g, s, u) == (s, u)


def test_containment_rejects_equal_arguments():
    g = build_coxeter("A", 2)
    with pytest.raises(ValueError):
        reflections_containing(g, 1, 1)


def test_single_reflection_has_no_flats():
    g = build_coxeter("A", 1)
    table = codim2_flats(g)
    assert len(table) == 0


def test_parabolic_of_b3_transposition_pair():
    g = build_coxeter("B", 3)
    trans = [s for s in range(g.size) if not is_diagonal(g, s)]
    closures = set()
    for i, s in enumerate(trans):
        for u in trans[i + 1 :]:
            members = parabolic_reflections(g, [s, u])
            if len(members) == 3:
                closures.add(members)
                assert all(x in trans for x in members)
    # The triples inside B3 are copies of the transposition triangle.
    assert closures


def test_parabolic_full_seed_gives_everything():
    g = build_coxeter("A", 3)
    assert parabolic_reflections(g, range(g.size)) == tuple(range(g.size))


def test_parabolic_rejects_empty_seed():
    g = build_coxeter("A", 2)
    with pytest.raises(ValueError):
        parabolic_reflections(g, [])


def test_parabolic_closed_under_mutual_conjugation():
    for g in [build_coxeter("B", 3), build_series(4, 4, 3), build_coxeter("H3")]:
        seeds = [[0, 1], [g.size - 1, g.size // 2]]
        for seed in seeds:
            members = set(parabolic_reflections(g, seed))
            for y in members:
                for x in members:
                    assert g.conj_table[y][x] in members


def test_third_reflection_in_every_nonsplit_pair():
    # If conjugating u by y moves it, y lies in the flat spanned by u and yuy.
    for g in [
        build_coxeter("A", 3),
        build_coxeter("B", 3),
        build_series(3, 3, 3),
        build_coxeter("H3"),
        build_coxeter("F4"),
    ]:
        table = codim2_flats(g)
        for y in range(g.size):
            for u in range(g.size):
                t = g.conj_table[y][u]
                if t != u:
                    assert y in table.flat_of_pair(u, t).members
