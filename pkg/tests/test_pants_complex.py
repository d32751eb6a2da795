"""Canonical forms, validation errors, and census identities for the spine."""

import itertools

import pytest

from crosslab import pants_complex as pc


def dihedral_orbit(word):
    n = len(word)
    for base in (word, word[::-1]):
        for i in range(n):
            yield base[i:] + base[:i]


class TestCanonicalCyclic:
    def test_known_forms(self):
        assert pc.canonical_cyclic((2, 1, 3, 1)) == (1, 2, 1, 3)
        assert pc.canonical_cyclic((1, 2)) == (1, 2)
        assert pc.canonical_cyclic((3, 1, 2, 1)) == (1, 2, 1, 3)

    def test_idempotent_and_orbit_constant(self):
        # Exhaustive over all valid cyclic words up to length 8.
        for n in range(2, 9):
            for w in itertools.product(pc.EDGES, repeat=n):
                if any(w[i] == w[(i + 1) % n] for i in range(n)):
                    continue
                c = pc.canonical_cyclic(w)
                assert pc.canonical_cyclic(c) == c
                assert all(pc.canonical_cyclic(o) == c for o in dihedral_orbit(w))

    def test_rejects_backtracking(self):
        with pytest.raises(pc.Backtracking):
            pc.canonical_cyclic((1, 1, 2))
        with pytest.raises(pc.Backtracking):
            pc.canonical_cyclic((1, 2, 3, 3))
        with pytest.raises(pc.Backtracking):
            pc.canonical_cyclic((2, 1, 3, 2))  # wraps around

    def test_rejects_degenerate(self):
        with pytest.raises(pc.EmptyWord):
            pc.canonical_cyclic(())
        with pytest.raises(pc.Backtracking):
            pc.canonical_cyclic((1,))
        with pytest.raises(pc.InvalidLabel):
            pc.canonical_cyclic((1, 4))


class TestMakeCurve:
    def test_cuff(self):
        c = pc.make_curve((1, 2))
        assert c.word == (1, 2)
        assert c.length == 2

    def test_nonprimitive(self):
        with pytest.raises(pc.NonPrimitive):
            pc.make_curve((1, 2, 1, 2))

    def test_odd_length(self):
        with pytest.raises(pc.OddLength):
            pc.make_curve((1, 2, 3))

    def test_canonicalizes(self):
        assert pc.make_curve((2, 1, 3, 1)).word == (1, 2, 1, 3)


class TestPrimitivity:
    @pytest.mark.parametrize(
        "word,expected",
        [((1, 2, 1, 3), True), ((1, 2, 1, 2), False), ((1, 2), True),
         ((1, 2, 3, 1, 2, 3), False), ((1, 2, 1, 3, 1, 2, 1, 3), False)],
    )
    def test_values(self, word, expected):
        assert pc.is_primitive(word) is expected


class TestRibbonStructure:
    def test_stubs_pair_up_on_cuffs(self):
        for i in (1, 2, 3):
            assert pc.cuff_of(f"f{i}") == pc.cuff_of(f"b{i}") == i

    def test_cuff_words(self):
        # Cuff i is the face carrying stubs f_i, b_i; with the fixed ribbon
        # cycles its spine word is the pair below.
        assert pc.CUFF_WORD == {1: (1, 2), 2: (2, 3), 3: (1, 3)}

    def test_straight_maps_are_mutually_inverse(self):
        for h in pc.HALF_EDGES:
            e = pc.first_edge(h)
            assert pc.straight_exit(e, pc.vertex_of(h)) == h

    def test_cuff_loops_traverse_cuff_words(self):
        for cuff in pc.CUFFS:
            for vtype in (pc.FRONT, pc.BACK):
                loop = pc.cuff_loop(cuff, vtype)
                assert tuple(sorted(loop)) == pc.CUFF_WORD[cuff]


class TestArcs:
    def test_three_length_one_arcs(self):
        arcs = pc.enumerate_arcs(1)
        assert len(arcs) == 3
        assert {a.cuffs for a in arcs} == {(1, 2), (1, 3), (2, 3)}

    def test_back_route_normalizes_to_front(self):
        a = pc.make_arc("b1", (), "b2")
        b = pc.make_arc("f1", (), "f2")
        assert a == b

    def test_length_and_parity(self):
        a = pc.turns_to_edges("f1", ())
        assert a.length == 2
        assert pc.vertex_of(a.start) != pc.vertex_of(a.end)

    def test_rejects_non_straight_entry(self):
        bad = [e for e in pc.EDGES if e != pc.first_edge("f1")][0]
        with pytest.raises(pc.NotGeodesic):
            pc.make_arc("f1", (bad,), pc.straight_exit(bad, pc.BACK))

    def test_rejects_same_cuff_stub_pair(self):
        with pytest.raises(pc.Backtracking):
            pc.make_arc("f1", (), "b1")

    def test_turns_bijection(self):
        for L in range(2, 8):
            seen = {}
            for start in pc.HALF_EDGES:
                for turns in itertools.product("LR", repeat=L - 2):
                    arc = pc.turns_to_edges(start, turns)
                    seen.setdefault(arc, []).append((start, turns))
            # each arc is hit by exactly its two orientations
            assert all(len(v) == 2 for v in seen.values())
            assert len(seen) == 3 * 2 ** (L - 2)

    def test_turns_round_trip(self):
        for L in range(2, 7):
            for start in pc.HALF_EDGES:
                for turns in itertools.product("LR", repeat=L - 2):
                    arc = pc.turns_to_edges(start, turns)
                    back = pc.edges_to_turns(arc.start, arc.interior)
                    assert pc.turns_to_edges(arc.start, back) == arc

    def test_distinct_turns_distinct_arcs(self):
        for L in (3, 4, 5):
            arcs = {
                pc.turns_to_edges("f1", turns)
                for turns in itertools.product("LR", repeat=L - 2)
            }
            assert len(arcs) == 2 ** (L - 2)


class TestCensusCounts:
    def test_arc_census_identity(self):
        for L in range(1, 11):
            assert len(pc.enumerate_arcs(L)) == 3 * 2 ** (L - 1)

    def test_curve_census_small(self):
        assert [c.word for c in pc.enumerate_curves(2)] == [(1, 2), (1, 3), (2, 3)]
        census4 = pc.enumerate_curves(4)
        assert len(census4) == 6
        new4 = [c for c in census4 if c.length == 4]
        assert len(new4) == 3
        assert pc.CurveClass((1, 2, 1, 3)) in new4

    def test_monotone_and_deterministic(self):
        sizes = [len(pc.enumerate_curves(L)) for L in (2, 4, 6, 8)]
        assert sizes == sorted(sizes)
        assert pc.enumerate_curves(6) == pc.enumerate_curves(6)

    def test_cap_guard(self):
        with pytest.raises(pc.CensusCapExceeded):
            pc.enumerate_arcs(8, cap=10)

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv(pc.CAP_ENV_VAR, "4")
        with pytest.raises(pc.CensusCapExceeded):
            pc.enumerate_arcs(3)
        monkeypatch.setenv(pc.CAP_ENV_VAR, "100000")
        assert len(pc.enumerate_arcs(3)) == 12
