import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reference import groups
from subsum.closed_form import (
    component_spectrum,
    predict_clique_independence,
    predict_components,
    predict_connectivity_diameter,
    predict_domination,
    predict_girth,
    predict_invariants,
    predict_prime_sum,
    predict_spectrum,
    general_clique_independence,
)
from subsum.errors import InvalidParameterError
from subsum.graphs import bipartite_minus, build_extended, build_subgroup_sum, complete_minus
from subsum.groups import (
    classify_cosets,
    full_subgroup,
    make_group,
    subgroup_generated,
    subgroup_nG,
    zero_subgroup,
)
from subsum.report import INF
from subsum.spectrum import QuadraticRoot, SpectrumSpec


def stats_of(orders, n=None, sub=None):
    g = make_group(orders)
    h = sub(g) if sub else subgroup_nG(g, n)
    return classify_cosets(g, h)


class TestComponents:
    def test_z9_extended(self):
        ext, _ = predict_components(stats_of([9], 3))
        assert sorted(ext) == sorted([bipartite_minus(3), complete_minus(3)])

    def test_z8_sum(self):
        _, ssum = predict_components(stats_of([8], 2))
        assert ssum == [complete_minus(4, 1), complete_minus(4, 2)]

    def test_z4_z2_extended(self):
        ext, _ = predict_components(stats_of([4, 2], 2))
        assert ext == [complete_minus(2)] * 4

    def test_trivial_subgroup_degenerates(self):
        ext, ssum = predict_components(stats_of([6], sub=zero_subgroup))
        assert ext == sorted([complete_minus(1)] * 2 + [complete_minus(2)] * 2)
        assert ssum == [complete_minus(1)] * 6


class TestCliqueIndependence:
    def test_z6_doubles(self):
        _, s = predict_clique_independence(stats_of([6], 2))
        assert (s.omega, s.beta) == (2, 4)

    def test_z2_z9(self):
        # published: k/2 + 2^(q-1) = 4, k(p^r - 1)/2 + 2 = 8
        _, s = predict_clique_independence(stats_of([2, 9], 3))
        assert (s.omega, s.beta) == (4, 8)

    def test_z4_z2_exceptional(self):
        # published: 2^(r+1) - 2^q = 6
        _, s = predict_clique_independence(stats_of([4, 2], 2))
        assert s.beta == 6

    def test_perfectness_identities(self):
        for e in predict_clique_independence(stats_of([12], 2)):
            assert e.chi == e.omega and e.theta == e.beta

    @settings(max_examples=80, deadline=None)
    @given(groups, st.data())
    def test_general_formulas_agree_with_components(self, g, data):
        a = data.draw(st.integers(0, g.order - 1))
        h = subgroup_generated(g, [g.from_index(a)])
        s = classify_cosets(g, h)
        if not 1 < s.k < s.n:
            with pytest.raises(InvalidParameterError):
                general_clique_independence(s)
            return
        t_ext, t_sum = general_clique_independence(s)
        p_ext, p_sum = predict_clique_independence(s)
        assert t_ext == p_ext
        assert t_sum.beta == p_sum.beta
        # (k + s(H))/2 can drop below the edge of a K_{k,k} minus a perfect matching
        assert p_sum.omega == max(t_sum.omega, 2 if s.m1 else 1)

    def test_trivial_fallbacks(self):
        e, s = predict_clique_independence(stats_of([6], sub=zero_subgroup))
        assert (s.omega, s.beta) == (1, 6)
        assert (e.omega, e.beta) == (2, 4)
        e, s = predict_clique_independence(stats_of([6], sub=full_subgroup))
        assert (e.omega, e.beta) == (6, 1)
        assert (s.omega, s.beta) == (4, 2)


class TestGirth:
    @pytest.mark.parametrize(
        "orders, n, expected",
        [
            ([9], 3, (3, 6)),
            ([6], 2, (3, INF)),  # k = 3 without Type 1 cosets: two paths
            ([8], 2, (3, 3)),
            ([4], 2, (INF, INF)),
            ([4, 2], 2, (INF, INF)),
            ([8], 4, (4, INF)),
        ],
    )
    def test_examples(self, orders, n, expected):
        assert predict_girth(stats_of(orders, n)) == expected


class TestConnectivity:
    def test_z6_doubles(self):
        e, s = predict_connectivity_diameter(stats_of([6], 2))
        assert not s.connected
        assert (s.complement_connected, s.complement_diameter, s.complement_radius) == (True, 2, 2)

    def test_null_graph_complement_is_complete(self):
        _, s = predict_connectivity_diameter(stats_of([4], sub=zero_subgroup))
        assert (s.complement_diameter, s.complement_radius) == (1, 1)

    def test_isolated_vertices_give_radius_one(self):
        _, s = predict_connectivity_diameter(stats_of([4], 2))
        assert s.complement_radius == 1 and s.complement_diameter == 2

    def test_full_subgroup_connected(self):
        e, s = predict_connectivity_diameter(stats_of([7], sub=full_subgroup))
        assert e.connected and s.connected
        assert not e.complement_connected


class TestDomination:
    def test_examples(self):
        assert predict_domination(stats_of([8], 2))[1] == 3
        assert predict_domination(stats_of([9], 3))[0] == 3
        assert predict_domination(stats_of([6], 2))[3] == 2

    @settings(max_examples=60, deadline=None)
    @given(groups, st.data())
    def test_general_formulas(self, g, data):
        a = data.draw(st.integers(0, g.order - 1))
        s = classify_cosets(g, subgroup_generated(g, [g.from_index(a)]))
        ext, ssum, _, _ = predict_domination(s)
        if s.k >= 2:
            assert ext == s.m
            assert ssum == s.m + s.m2
        else:
            assert ext == s.n - (s.n - s.sG) // 2


class TestSpectrum:
    def test_k4_minus_edge(self):
        spec = component_spectrum(complete_minus(4, 1))
        assert spec == SpectrumSpec.from_pairs(
            [(QuadraticRoot(1, 4, 1), 1), (QuadraticRoot(1, 4, -1), 1), (0, 1), (-1, 1)]
        )

    def test_cocktail_party(self):
        assert component_spectrum(complete_minus(4, 2)).entries == ((-2, 1), (0, 2), (2, 1))

    def test_z9_extended(self):
        ext, _ = predict_spectrum(stats_of([9], 3))
        assert ext.entries == ((-3, 1), (-1, 2), (0, 4), (2, 1), (3, 1))

    def test_c6(self):
        assert component_spectrum(bipartite_minus(3, 3)).entries == ((-2, 1), (-1, 2), (1, 2), (2, 1))

    @settings(max_examples=60, deadline=None)
    @given(groups, st.data())
    def test_moments(self, g, data):
        a = data.draw(st.integers(0, g.order - 1))
        h = subgroup_generated(g, [g.from_index(a)])
        s = classify_cosets(g, h)
        for spec, gr in zip(predict_spectrum(s), (build_extended(g, h), build_subgroup_sum(g, h))):
            assert spec.size == g.order
            assert spec.trace() == 0
            assert spec.second_moment() == 2 * gr.edge_count


class TestPrimeSum:
    def test_z2_z9(self):
        r = predict_prime_sum(make_group([2, 9]), 3)
        assert (r.case, r.k, r.r, r.q, r.omega, r.beta) == ("general", 6, 1, 1, 4, 8)

    def test_z4_z2(self):
        r = predict_prime_sum(make_group([4, 2]), 2)
        assert (r.omega, r.beta, r.m2, r.m3) == (2, 6, 2, 2)

    def test_not_dividing(self):
        r = predict_prime_sum(make_group([5]), 3)
        assert r.case == "full" and r.k == 5 and r.omega_plus == 5

    def test_not_prime(self):
        with pytest.raises(InvalidParameterError):
            predict_prime_sum(make_group([6]), 4)


class TestReportJson:
    def test_schema(self):
        doc = json.loads(predict_invariants(stats_of([6], 2), "Z6", "n:2").dumps())
        assert doc["sum"]["girth"] == "inf"
        assert doc["extended"]["girth"] == 3
        assert doc["params"]["m3"] == 2
        assert {c["kind"] for c in doc["sum"]["components"]} == {"CompleteMinusMatching"}

    def test_quadratic_serialization(self):
        doc = json.loads(predict_invariants(stats_of([8], 2)).dumps())
        values = [e["value"] for e in doc["sum"]["spectrum"]]
        assert {"T": 1, "C": 4, "sign": "+"} in values
        assert sum(e["multiplicity"] for e in doc["sum"]["spectrum"]) == 8

    def test_null_graph_report(self):
        rep = predict_invariants(stats_of([6], sub=zero_subgroup)).sum
        assert rep.edges == 0 and rep.clique == 1 and rep.independence == 6
        assert math.isinf(rep.girth)
