from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regionum.diagram import (
    Diagram,
    apply_region_changes,
    change_crossings,
    connected_sum,
    crossing_change,
    from_map,
    from_pd,
    gen_torus,
    is_reduced,
    mirror,
    nugatory_crossings,
    parse_pd,
    region_change_targets,
    to_map,
    unknot,
)
from regionum.errors import (
    LabelError,
    MalformedInput,
    NotAKnot,
    NotPlanar,
    UnknownCrossing,
    UnknownRegion,
)
from regionum.goeritz import determinant
from regionum.invariants import is_unknot, jones_normalized, writhe

from conftest import CORPUS, TREFOIL_BIGON, worked

TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
KINK = [[1, 1, 2, 2]]

diagrams = st.sampled_from([r.diagram for r in CORPUS])


def costs(d: Diagram) -> list[int]:
    return sorted(r.cost for r in d.regions)


class TestParsing:
    def test_trefoil_counts(self):
        d = parse_pd(TREFOIL)
        assert (d.crossing_count, d.edge_count, len(d.regions)) == (3, 6, 5)

    def test_empty_is_unknot(self):
        d = parse_pd("[]")
        assert d.crossing_count == 0 and len(d.regions) == 2 and d == unknot()

    def test_mathematica_style(self):
        assert parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == parse_pd(TREFOIL)

    @pytest.mark.parametrize(
        "text, exc",
        [
            ("[[1,2,3,4]]", LabelError),
            ("[[1,4,2,5],[3,6,4", MalformedInput),
            ('[["a",1,2,3]]', MalformedInput),
            ("[[1,2,3]]", MalformedInput),
            ("[[0,1,1,0]]", MalformedInput),
            # Hopf link: two components
            ("[[1,3,2,4],[3,1,4,2]]", NotAKnot),
        ],
    )
    def test_errors(self, text, exc):
        with pytest.raises(exc):
            parse_pd(text)

    def test_non_planar_gauss_code(self):
        # the virtual trefoil: a consistent walk whose faces fail Euler's count
        with pytest.raises((NotPlanar, LabelError)):
            from_pd([[1, 3, 2, 4], [4, 2, 1, 3]])

    def test_labels_normalised_along_strand(self):
        d = from_pd([[11, 14, 12, 15], [13, 16, 14, 11], [15, 12, 16, 13]])
        assert d == parse_pd(TREFOIL)
        for x in d.crossings:
            assert x.slots[2] % d.edge_count == (x.slots[0] + 1) % d.edge_count

    def test_round_trip_text(self):
        for rec in CORPUS[:20]:
            assert parse_pd(str(rec.diagram)) == rec.diagram


class TestFaces:
    def test_trefoil_costs(self):
        assert costs(parse_pd(TREFOIL)) == [2, 2, 2, 3, 3]

    def test_kink(self):
        d = from_pd(KINK)
        assert costs(d) == [1, 1, 1]
        outer = [r for r in d.regions if len(r.corners) == 2]
        assert len(outer) == 1

    def test_empty(self):
        assert [r.incident_crossings for r in unknot().regions] == [frozenset(), frozenset()]

    @given(diagrams)
    def test_face_count_and_corner_partition(self, d):
        assert len(d.regions) == d.crossing_count + 2
        corners = Counter(c for r in d.regions for c in r.corners)
        assert set(corners) == {(i, k) for i in range(d.crossing_count) for k in range(4)}
        assert set(corners.values()) == {1}
        assert sum(r.cost for r in d.regions) == 4 * d.crossing_count
        assert min(r.cost for r in d.regions) >= 1

    def test_region_ids_ordered_by_first_corner(self):
        for rec in CORPUS[:30]:
            firsts = [min(4 * i + k for i, k in r.corners) for r in rec.diagram.regions]
            assert firsts == sorted(firsts)


class TestCrossingChange:
    @given(diagrams, st.data())
    def test_involution(self, d, data):
        c = data.draw(st.integers(0, d.crossing_count - 1))
        assert crossing_change(crossing_change(d, c), c) == d
        assert crossing_change(d, c) != d

    def test_trefoil_single_change_unknots(self):
        d = parse_pd(TREFOIL)
        assert [determinant(crossing_change(d, c)) for c in range(3)] == [1, 1, 1]

    def test_unknown_crossing(self):
        with pytest.raises(UnknownCrossing):
            crossing_change(unknot(), 0)

    @given(diagrams, st.data())
    def test_region_ids_stable(self, d, data):
        t = data.draw(st.sets(st.integers(0, d.crossing_count - 1)))
        e = change_crossings(d, t)
        assert [r.corners for r in e.regions] == [r.corners for r in d.regions]


class TestRegionChange:
    def test_trefoil_bigon_unknots(self):
        d = worked("3_1_region_change")
        assert d.regions[TREFOIL_BIGON].cost == 2
        assert is_unknot(apply_region_changes(d, [TREFOIL_BIGON])).is_unknot

    def test_kink_monogon_gives_mirror_kink(self):
        d = from_pd(KINK)
        loop = next(r.id for r in d.regions if len(r.corners) == 1 and r.id != 0)
        e = apply_region_changes(d, [loop])
        assert e == mirror(d)
        assert jones_normalized(e) == jones_normalized(d) == 1

    def test_unknown_region(self):
        with pytest.raises(UnknownRegion):
            apply_region_changes(parse_pd(TREFOIL), [5])

    @given(diagrams, st.data())
    def test_gf2_action(self, d, data):
        n = len(d.regions)
        s = data.draw(st.sets(st.integers(0, n - 1)))
        t = data.draw(st.sets(st.integers(0, n - 1)))
        assert apply_region_changes(apply_region_changes(d, s), t) == apply_region_changes(d, s ^ t)
        assert apply_region_changes(apply_region_changes(d, s), s) == d

    @given(diagrams, st.data())
    def test_targets_are_odd_incidence(self, d, data):
        s = data.draw(st.sets(st.integers(0, len(d.regions) - 1)))
        hits = Counter(c for r in s for c in d.regions[r].incident_crossings)
        assert region_change_targets(d, s) == {c for c, k in hits.items() if k % 2}

    @given(diagrams, st.data())
    def test_projection_unchanged(self, d, data):
        s = data.draw(st.sets(st.integers(0, len(d.regions) - 1)))
        e = apply_region_changes(d, s)
        assert [sorted(x.slots) for x in e.crossings] == [sorted(x.slots) for x in d.crossings]

    @given(diagrams, st.data())
    def test_mirror_commutes(self, d, data):
        s = data.draw(st.sets(st.integers(0, len(d.regions) - 1)))
        assert mirror(apply_region_changes(d, s)) == apply_region_changes(mirror(d), s)


class TestNugatory:
    def test_examples(self):
        assert nugatory_crossings(parse_pd(TREFOIL)) == set()
        assert nugatory_crossings(from_pd(KINK)) == {0}
        assert nugatory_crossings(unknot()) == set()

    def test_corpus_reduced(self):
        assert all(is_reduced(r.diagram) for r in CORPUS)

    def test_kinked_trefoil(self):
        d = connected_sum(parse_pd(TREFOIL), from_pd(KINK))
        assert len(nugatory_crossings(d)) == 1


class TestMirror:
    @given(diagrams)
    def test_involution_and_writhe(self, d):
        assert mirror(mirror(d)) == d
        assert writhe(mirror(d)) == -writhe(d)

    def test_trefoil_determinant(self):
        d = parse_pd(TREFOIL)
        assert determinant(mirror(d)) == determinant(d) == 3


class TestConstructions:
    def test_sum_with_unknot(self):
        d = parse_pd(TREFOIL)
        assert connected_sum(d, unknot()) == d
        assert connected_sum(unknot(), d) == d

    def test_granny_from_sum(self):
        t = gen_torus(1)
        d = connected_sum(t, t)
        assert d.crossing_count == 6 and len(d.regions) == 8
        assert determinant(d) == 9

    def test_sum_multiplies_determinant(self):
        a, b = CORPUS[1].diagram, CORPUS[3].diagram
        assert determinant(connected_sum(a, b)) == determinant(a) * determinant(b)

    @pytest.mark.parametrize(
        "k, expected",
        [(1, [2, 2, 2, 3, 3]), (2, [2, 2, 2, 2, 2, 5, 5]), (3, [2] * 7 + [7, 7])],
    )
    def test_torus_costs(self, k, expected):
        d = gen_torus(k)
        assert costs(d) == expected
        assert len(d.regions) == 2 * k + 3
        assert all(x.sign == 1 for x in d.crossings)

    def test_torus_bad_k(self):
        with pytest.raises(ValueError):
            gen_torus(0)

    @given(diagrams)
    def test_map_round_trip(self, d):
        link, under = to_map(d)
        assert from_map(link, under) == d
