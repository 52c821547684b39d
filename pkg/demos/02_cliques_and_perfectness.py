"""Clique and independence numbers, checked by exhaustive search.

Both graphs are perfect, so the chromatic number equals the clique number
and the clique cover number equals the independence number.  The hole
search below looks for the obstructions (odd holes and antiholes) anyway.

Run: python3 demos/02_cliques_and_perfectness.py
"""

from subsum import (
    build_subgroup_sum,
    classify_cosets,
    make_group,
    oracle_clique,
    oracle_independence_chromatic,
    oracle_perfectness,
    predict_clique_independence,
    predict_prime_sum,
    subgroup_nG,
)

for orders, p in [([2, 9], 3), ([4, 2], 2), ([3, 3, 2], 3), ([8, 2], 2)]:
    g = make_group(orders)
    h = subgroup_nG(g, p)
    gr = build_subgroup_sum(g, h)

    _, predicted = predict_clique_independence(classify_cosets(g, h))
    prime = predict_prime_sum(g, p)
    omega, witness = oracle_clique(gr)
    beta, chi, theta = oracle_independence_chromatic(gr)
    perfect, hole = oracle_perfectness(gr, max_hole=7)

    print(f"G = {g}, H = {p}G (r={prime.r}, q={prime.q})")
    print(f"  clique number      predicted {predicted.omega:3}  prime formula {prime.omega:3}  searched {omega:3}")
    print(f"  independence       predicted {predicted.beta:3}  prime formula {prime.beta:3}  searched {beta:3}")
    print(f"  chromatic {chi}, clique cover {theta}, a largest clique: {[gr.labels[v] for v in witness]}")
    print(f"  odd holes or antiholes up to length 7: {'none' if perfect else hole}")
    print()
