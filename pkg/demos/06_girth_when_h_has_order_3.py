"""Girth of the sum graph when |H| = 3.

A 6-cycle needs a coset of the first type.  Without one, every component
is a triangle minus an edge, so the graph is a forest.

Run: python3 demos/06_girth_when_h_has_order_3.py
"""

from subsum import build_subgroup_sum, classify_cosets, make_group, predict_girth, subgroup_nG
from subsum.oracle import oracle_girth_diameter

for orders, n in [([9], 3), ([6], 2), ([2, 2, 3], 2), ([3, 9], 3), ([15], 5)]:
    g = make_group(orders)
    h = subgroup_nG(g, n)
    s = classify_cosets(g, h)
    if s.k != 3:
        continue
    _, closed = predict_girth(s)
    searched = oracle_girth_diameter(build_subgroup_sum(g, h))[0]
    print(f"{str(g):>10}, {n}G: type-1 cosets {s.m1}, girth predicted {closed}, found by BFS {searched}")
