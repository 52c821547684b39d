"""What a bare graph reveals about the group and subgroup behind it.

The graph fixes |G|, |H|, the coset type counts and a few involution
counts.  Nothing finer: below, non-isomorphic groups give identical graphs.

Run: python3 demos/05_reconstruction.py
"""

import json
from collections import Counter

from subsum import analyze_extended, analyze_subgroup_sum, build_extended, build_subgroup_sum, make_group
from subsum.errors import AmbiguityError
from subsum.graphs import components_with_profiles, from_json, to_json
from subsum.literals import parse_subgroup


def unlabelled(gr):
    # labels are dropped, as for an untrusted input file
    doc = json.loads(to_json(gr))
    del doc["labels"]
    return from_json(json.dumps(doc))


def profile(gr):
    return sorted(Counter(str(p) for _, p in components_with_profiles(gr)).items())


cases = [
    ([2, 9], "n:3"),
    ([2, 3, 3], "gens:(1,1,1)"),
    ([16, 2], "n:4"),
    ([8, 4], "gens:(2,0)"),
]
for orders, literal in cases:
    g = make_group(orders)
    h = parse_subgroup(g, literal)
    plain = unlabelled(build_subgroup_sum(g, h))
    extended = unlabelled(build_extended(g, h))
    print(f"{str(g):>9} H={literal:<13} sum graph {profile(plain)}")
    print(f"{'':>24}recovered {analyze_subgroup_sum(plain).to_json()}")
    print(f"{'':>24}extended graph gives {analyze_extended(extended).to_json()}")

g = make_group([4, 2])
try:
    analyze_subgroup_sum(build_subgroup_sum(g, parse_subgroup(g, "n:2")))
except AmbiguityError as exc:
    print(f"\n{g} with |H| = 2: {exc}")
