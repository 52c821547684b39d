"""Pure-Python reference computations used as independent oracles in tests.

These work straight from the definitions on coordinate tuples and itertools,
sharing no code with the package beyond the Group container.
"""

import itertools
import math

from hypothesis import strategies as st

from subsum.groups import make_group


def elements(orders):
    return list(itertools.product(*[range(n) for n in orders]))


def add(orders, x, y):
    return tuple((a + b) % n for a, b, n in zip(x, y, orders))


def scale(orders, k, x):
    return tuple((k * a) % n for a, n in zip(x, orders))


def brute_census(orders, h_elems):
    """(m, m1, m2, m3, sG, sH, sGH) straight from the coset definitions."""
    h = set(h_elems)
    els = elements(orders)
    zero = tuple(0 for _ in orders)
    seen, cosets = set(), []
    for a in els:
        if a in seen:
            continue
        coset = {add(orders, a, x) for x in h}
        seen |= coset
        cosets.append((a, coset))
    m1 = m2 = m3 = 0
    for a, coset in cosets:
        if scale(orders, 2, a) not in h:
            m1 += 1
        elif any(scale(orders, 2, x) == zero for x in coset):
            m3 += 1
        else:
            m2 += 1
    s_g = sum(1 for x in els if scale(orders, 2, x) == zero)
    s_h = sum(1 for x in h if scale(orders, 2, x) == zero)
    s_gh = sum(1 for x in els if scale(orders, 2, x) in h) // len(h)
    return len(cosets), m1, m2, m3, s_g, s_h, s_gh


def brute_edges(orders, allowed):
    """Edge set {x, y} (as frozensets of tuples) with x != y and x + y in allowed."""
    allowed = set(allowed)
    els = elements(orders)
    return {
        frozenset((x, y))
        for x, y in itertools.combinations(els, 2)
        if add(orders, x, y) in allowed
    }


def graph_edge_set(gr):
    return {frozenset((gr.labels[u], gr.labels[v])) for u, v in gr.edges()}


# small abelian groups as lists of factor orders
factor_lists = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=3).filter(
    lambda fs: math.prod(fs) <= 72
)
groups = factor_lists.map(make_group)
