"""Exact adjacency spectra against a Jacobi eigensolver.

A complete graph minus a matching that misses some vertices has two
irrational eigenvalues, the roots of a monic integer quadratic.  They are
carried exactly and only turned into floats for the comparison.

Run: python3 demos/03_spectrum.py
"""

from subsum import (
    build_subgroup_sum,
    classify_cosets,
    make_group,
    oracle_spectrum,
    predict_spectrum,
    subgroup_nG,
)

g = make_group([8])
h = subgroup_nG(g, 2)
_, exact = predict_spectrum(classify_cosets(g, h))
numeric = oracle_spectrum(build_subgroup_sum(g, h))

print(f"sum graph of ({g}, 2G): components K4 minus one edge and K4 minus two")
print(f"  exact:   {exact}")
print(f"  numeric: {[round(x, 6) for x in numeric]}")
print(f"  largest gap: {max(abs(a - b) for a, b in zip(exact.numeric(), numeric)):.2e}")
print(f"  trace {exact.trace()}, sum of squares {exact.second_moment()} (twice the edge count)")
