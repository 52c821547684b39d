"""Domination numbers of the graphs and of their complements.

Run: python3 demos/04_domination.py
"""

from subsum import (
    build_extended,
    build_subgroup_sum,
    classify_cosets,
    complement,
    make_group,
    oracle_domination,
    predict_domination,
    subgroup_nG,
)

print(f"{'G':>10} {'H':>4} | {'m':>2} {'m2':>2} | ext  sum  co-ext  co-sum")
for orders, n in [([8], 2), ([9], 3), ([6], 2), ([4], 2), ([4, 4], 2), ([2, 3, 5], 5)]:
    g = make_group(orders)
    h = subgroup_nG(g, n)
    s = classify_cosets(g, h)
    predicted = predict_domination(s)
    graphs = [build_extended(g, h), build_subgroup_sum(g, h)]
    graphs += [complement(gr) for gr in graphs]
    searched = [oracle_domination(gr)[0] for gr in graphs]
    cells = "  ".join(f"{a}/{b}".rjust(4) for a, b in zip(predicted, searched))
    print(f"{str(g):>10} {str(n) + 'G':>4} | {s.m:2} {s.m2:2} | {cells}")
print("\ncells read predicted/searched")
