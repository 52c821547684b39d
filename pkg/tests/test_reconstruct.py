import itertools

import pytest

from subsum.errors import AmbiguityError, NotASumGraphError
from subsum.graphs import Graph, build_extended, build_subgroup_sum, from_json, to_json
from subsum.groups import make_group, subgroup_nG
from subsum.reconstruct import analyze_extended, analyze_subgroup_sum


def built(orders, n, extended):
    g = make_group(orders)
    return (build_extended if extended else build_subgroup_sum)(g, subgroup_nG(g, n))


def test_extended_z4():
    assert analyze_extended(built([4], 2, True)).to_json() == {"order_G": 4, "k": 2, "sGH": 2}


def test_extended_z9():
    assert analyze_extended(built([9], 3, True)).to_json() == {"order_G": 9, "k": 3, "sGH": 1}


def test_extended_rejects_c5():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    with pytest.raises(NotASumGraphError):
        analyze_extended(c5)


def test_extended_trivial_subgroup():
    # K1 + K2 is the extended graph of (Z3, {0}); K2 counts as K_{1,1}
    gr = Graph.from_edges(3, [(1, 2)])
    assert analyze_extended(gr).to_json() == {"order_G": 3, "k": 1, "sGH": 1}


def test_extended_needs_complete_component():
    # all K2 is read as k=2, never as K_{1,1} pairs with no K1
    assert analyze_extended(Graph.from_edges(4, [(0, 1), (2, 3)])).k == 2
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(NotASumGraphError):
        analyze_extended(c4)


def test_extended_mixed_sizes_rejected():
    gr = Graph.from_edges(8, [(0, 1), (2, 3)] + list(itertools.combinations(range(4, 8), 2)))
    with pytest.raises(NotASumGraphError):
        analyze_extended(gr)


def test_extended_component_count_check():
    # K3 + K3: k=3, sGH=2, m=2 gives (2+2)/2 = 2 components, consistent
    assert analyze_extended(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])).sGH == 2
    # K2 + K1 + K1 + K2 would need k=1 with K1 count 2, m=6: (6+2)/2 = 4, consistent
    assert analyze_extended(Graph.from_edges(6, [(0, 1), (4, 5)])).k == 1


def test_sum_z8():
    assert analyze_subgroup_sum(built([8], 2, False)).to_json() == {
        "order_G": 8, "k": 4, "sGH": 2, "m2": 1, "m3": 1, "sH": 2, "sG": 2,
    }


def test_sum_z6():
    p = analyze_subgroup_sum(built([6], 2, False))
    assert (p.order_G, p.k, p.m2, p.m3, p.sH, p.sG) == (6, 3, 0, 2, 1, 2)


def test_sum_z9():
    p = analyze_subgroup_sum(built([9], 3, False))
    assert (p.order_G, p.k, p.m2, p.m3, p.sH, p.sG) == (9, 3, 0, 1, 1, 1)


def test_sum_small_k_is_ambiguous():
    with pytest.raises(AmbiguityError) as info:
        analyze_subgroup_sum(built([4], 2, False))
    assert info.value.candidates


def test_sum_rejects_unstructured():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    with pytest.raises(NotASumGraphError):
        analyze_subgroup_sum(c5)


def test_json_input_round_trip():
    gr = from_json(to_json(built([2, 9], 3, False)))
    p = analyze_subgroup_sum(gr)
    assert (p.k, p.m2, p.m3, p.sH) == (6, 0, 1, 2)
