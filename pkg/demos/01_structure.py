"""How the coset census predicts the shape of both sum graphs.

Run: python3 demos/01_structure.py
"""

from collections import Counter

from subsum import (
    build_extended,
    build_subgroup_sum,
    classify_cosets,
    components_with_profiles,
    make_group,
    predict_components,
    subgroup_nG,
)


def census(gr):
    return Counter(str(p) for _, p in components_with_profiles(gr))


for orders, n in [([9], 3), ([8], 2), ([2, 9], 3), ([4, 2], 2)]:
    g = make_group(orders)
    h = subgroup_nG(g, n)
    s = classify_cosets(g, h)
    print(f"G = {g}, H = {n}G, |H| = {s.k}")
    print(f"  cosets: m={s.m}  type1={s.m1}  type2={s.m2}  type3={s.m3}"
          f"  s(G)={s.sG}  s(H)={s.sH}  s(G/H)={s.sGH}")

    ext, plain = predict_components(s)
    for name, gr, predicted in (("x+y in H     ", build_extended(g, h), ext),
                                ("x+y in H\\{0} ", build_subgroup_sum(g, h), plain)):
        built = census(gr)
        agree = built == Counter(map(str, predicted))
        shown = ", ".join(f"{c} x {p}" for p, c in sorted(built.items()))
        print(f"  {name}: {shown}   (prediction {'matches' if agree else 'DIFFERS'})")
    print()
