"""Invariants of the sum graphs computed from the coset census alone.

Nothing here looks at adjacency.  The census fixes the multiset of component
types, and every invariant below is a sum, maximum or small case analysis
over those component types.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .graphs import ComponentProfile, Kind, bipartite_minus, complete_minus, normalize_profile
from .groups import CosetStats, Group, factorize, is_prime
from .report import INF, GraphReport, InvariantReport, profile_counts
from .spectrum import SpectrumSpec, quadratic_roots


# -- component census -----------------------------------------------------------


def nominal_components(stats: CosetStats) -> tuple[list[ComponentProfile], list[ComponentProfile]]:
    """One profile per coset-derived component, for (extended, sum) graphs.

    These are the components as the coset types name them; for
    ``k <= 2`` some of them are disconnected or have a second name, which
    :func:`predict_components` resolves.
    """
    k, half = stats.k, stats.m1 // 2
    extended = [bipartite_minus(k, 0)] * half + [complete_minus(k, 0)] * (stats.m2 + stats.m3)
    subgroup_sum = (
        [bipartite_minus(k, k)] * half
        + [complete_minus(k, k // 2)] * stats.m2
        + [complete_minus(k, (k - stats.sH) // 2)] * stats.m3
    )
    return extended, subgroup_sum


def _actual(profiles):
    out = []
    for p in profiles:
        out.extend(normalize_profile(p))
    return sorted(out)


def predict_components(stats: CosetStats) -> tuple[list[ComponentProfile], list[ComponentProfile]]:
    """Sorted connected-component profiles of (extended, sum) graphs."""
    ext, ssum = nominal_components(stats)
    return _actual(ext), _actual(ssum)


# -- per-component invariants ---------------------------------------------------
#
# All take a connected, normalised profile.


def _unstructured(p):
    raise ValueError(f"no closed form for unstructured component {p}")


def component_clique(p: ComponentProfile) -> int:
    if p.kind is Kind.COMPLETE_MINUS_MATCHING:
        return p.part_sizes[0] - p.matching_size
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        return 2
    return _unstructured(p)


def component_independence(p: ComponentProfile) -> int:
    if p.kind is Kind.COMPLETE_MINUS_MATCHING:
        return 2 if p.matching_size else 1
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        return p.part_sizes[0]
    return _unstructured(p)


def component_domination(p: ComponentProfile) -> int:
    if p.kind is Kind.COMPLETE_MINUS_MATCHING:
        # a vertex missed by the matching is universal
        return 1 if p.part_sizes[0] > 2 * p.matching_size else 2
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        return 2
    return _unstructured(p)


def component_girth(p: ComponentProfile) -> float:
    if p.kind is Kind.COMPLETE_MINUS_MATCHING:
        c, s = p.part_sizes[0], p.matching_size
        if c - s >= 3:
            return 3
        return 4 if (c, s) == (4, 2) else INF
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        j, s = p.part_sizes[0], p.matching_size
        if s == 0:
            return 4 if j >= 2 else INF
        if j >= 4:
            return 4
        return 6 if j == 3 else INF
    return _unstructured(p)


def component_spectrum(p: ComponentProfile) -> SpectrumSpec:
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        j = p.part_sizes[0]
        if p.matching_size == 0:
            return SpectrumSpec.from_pairs([(j, 1), (-j, 1), (0, 2 * j - 2)])
        return SpectrumSpec.from_pairs([(j - 1, 1), (1 - j, 1), (1, j - 1), (-1, j - 1)])
    if p.kind is not Kind.COMPLETE_MINUS_MATCHING:
        return _unstructured(p)

    c, s = p.part_sizes[0], p.matching_size
    a, b = 2 * s, c - 2 * s  # vertices covered / missed by the matching
    if s == 0:
        return SpectrumSpec.from_pairs([(c - 1, 1), (-1, c - 1)])
    if b == 0:
        # cocktail party graph
        return SpectrumSpec.from_pairs([(c - 2, 1), (0, s), (-2, s - 1)])
    # covered/uncovered split is an equitable partition with quotient
    # [[a-2, b], [a, b-1]]; the rest of the spectrum is 0, -2, -1
    r1, r2 = quadratic_roots(a + b - 3, a + 2 * b - 2)
    return SpectrumSpec.from_pairs([(r1, 1), (r2, 1), (0, s), (-2, s - 1), (-1, b - 1)])


# -- whole-graph invariants ------------------------------------------------------


def _complement_shape(profiles: list[ComponentProfile]) -> tuple[bool, float, float, int]:
    """(connected, diameter, radius, domination number) of the complement."""
    if len(profiles) == 1:
        p = profiles[0]
        if p.vertex_count == 1:
            return True, 0, 0, 1
        if p.kind is Kind.COMPLETE_MINUS_MATCHING:
            # complement is the deleted matching plus isolated vertices
            c, s = p.part_sizes[0], p.matching_size
            return False, INF, INF, c - s
        if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
            if p.matching_size == 0:
                return False, INF, INF, 2  # two disjoint cliques
            return True, 2, 2, 2  # two cliques joined by a perfect matching
        return _unstructured(p)
    isolated = any(p.vertex_count == 1 for p in profiles)
    edgeless = all(p.vertex_count == 1 for p in profiles)
    diameter = 1 if edgeless else 2
    radius = 1 if isolated else 2
    return True, diameter, radius, 1 if isolated else 2


def graph_report(profiles: list[ComponentProfile]) -> GraphReport:
    """Closed-form report for a graph given its connected component profiles."""
    clique = max(component_clique(p) for p in profiles)
    independence = sum(component_independence(p) for p in profiles)
    spectrum = SpectrumSpec.from_pairs(
        pair for p in profiles for pair in component_spectrum(p).entries
    )
    c_conn, c_diam, c_rad, c_dom = _complement_shape(profiles)
    return GraphReport(
        vertices=sum(p.vertex_count for p in profiles),
        edges=sum(p.edge_count for p in profiles),
        component_count=len(profiles),
        components=profile_counts(profiles),
        clique=clique,
        independence=independence,
        # both graphs are perfect, as are their complements
        chromatic=clique,
        clique_cover=independence,
        girth=min(component_girth(p) for p in profiles),
        connected=len(profiles) == 1,
        domination=sum(component_domination(p) for p in profiles),
        complement_connected=c_conn,
        complement_diameter=c_diam,
        complement_radius=c_rad,
        complement_domination=c_dom,
        spectrum=spectrum,
    )


def stats_params(stats: CosetStats) -> dict:
    return {
        "order": stats.n,
        "k": stats.k,
        "m": stats.m,
        "m1": stats.m1,
        "m2": stats.m2,
        "m3": stats.m3,
        "sG": stats.sG,
        "sH": stats.sH,
        "sGH": stats.sGH,
    }


def predict_invariants(stats: CosetStats, group: str = "", subgroup: str = "") -> InvariantReport:
    ext, ssum = predict_components(stats)
    return InvariantReport(
        group=group,
        subgroup=subgroup,
        extended=graph_report(ext),
        sum=graph_report(ssum),
        engine="closed",
        params=stats_params(stats),
    )


# -- the individual operations ----------------------------------------------------


@dataclass(frozen=True)
class CliqueNumbers:
    omega: int
    beta: int
    chi: int
    theta: int


def predict_clique_independence(stats: CosetStats) -> tuple[CliqueNumbers, CliqueNumbers]:
    """(omega, beta, chi, theta) for the extended and the sum graph."""
    out = []
    for profiles in predict_components(stats):
        w = max(component_clique(p) for p in profiles)
        b = sum(component_independence(p) for p in profiles)
        out.append(CliqueNumbers(w, b, w, b))
    return out[0], out[1]


def general_clique_independence(stats: CosetStats) -> tuple[CliqueNumbers, CliqueNumbers]:
    """The general clique/independence formulas, valid for ``1 < |H| < |G|``."""
    k, m1, m2, m3, sH = stats.k, stats.m1, stats.m2, stats.m3, stats.sH
    if not 1 < k < stats.n:
        raise InvalidParameterError("formulas need a non-trivial proper subgroup")
    ext = CliqueNumbers(k, k * m1 // 2 + m2 + m3, k, k * m1 // 2 + m2 + m3)
    w = (k + sH) // 2
    b = k * m1 // 2 + (2 * (m2 + m3) if sH < k else 2 * m2 + m3)
    return ext, CliqueNumbers(w, b, w, b)


def predict_girth(stats: CosetStats) -> tuple[float, float]:
    ext, ssum = predict_components(stats)
    return min(map(component_girth, ext)), min(map(component_girth, ssum))


@dataclass(frozen=True)
class Connectivity:
    connected: bool
    complement_connected: bool
    complement_diameter: float
    complement_radius: float


def predict_connectivity_diameter(stats: CosetStats) -> tuple[Connectivity, Connectivity]:
    out = []
    for profiles in predict_components(stats):
        conn, diam, rad, _ = _complement_shape(profiles)
        out.append(Connectivity(len(profiles) == 1, conn, diam, rad))
    return out[0], out[1]


def predict_domination(stats: CosetStats) -> tuple[int, int, int, int]:
    """Domination numbers of (extended, sum, complement of extended, complement of sum)."""
    ext, ssum = predict_components(stats)
    return (
        sum(map(component_domination, ext)),
        sum(map(component_domination, ssum)),
        _complement_shape(ext)[3],
        _complement_shape(ssum)[3],
    )


def predict_spectrum(stats: CosetStats) -> tuple[SpectrumSpec, SpectrumSpec]:
    out = []
    for profiles in predict_components(stats):
        out.append(
            SpectrumSpec.from_pairs(pair for p in profiles for pair in component_spectrum(p).entries)
        )
    return out[0], out[1]


# -- prime sum graphs H = pG --------------------------------------------------------


@dataclass(frozen=True)
class PrimeSumReport:
    p: int
    case: str  # "general", "full" (pG = G) or "zero" (pG = 0)
    k: int
    r: int
    q: int
    m1: int
    m2: int
    m3: int
    omega_plus: int
    beta_plus: int
    omega: int
    beta: int


def _two_part(n: int) -> int:
    return 2 ** factorize(n).get(2, 0)


def predict_prime_sum(g: Group, p: int) -> PrimeSumReport:
    """Census and clique/independence numbers of the graphs on (G, pG).

    Uses only the cyclic factor orders of G, never the subgroup itself.
    """
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    n = g.order
    orders = [o for o in g.orders if o > 1]
    if p == 2:
        r = sum(1 for o in orders if o % 2 == 0)
        q = sum(1 for o in orders if _two_part(o) == 2)
    else:
        r = sum(1 for o in orders if o % p == 0)
        q = sum(1 for o in orders if o % 2 == 0)
    s_g = 2 ** sum(1 for o in orders if o % 2 == 0)

    if n % p:
        # pG = G: complete extended graph, K_n minus (n - s(G))/2 edges
        return PrimeSumReport(
            p, "full", n, r, q, 0, 0, 1,
            omega_plus=n, beta_plus=1,
            omega=(n + s_g) // 2, beta=2 if n > s_g else 1,
        )
    k = n // p**r
    if k == 1:
        # pG = 0: null sum graph, extended graph a partial matching
        pairs = (n - s_g) // 2
        return PrimeSumReport(
            p, "zero", 1, r, q, n - s_g, 0, s_g,
            omega_plus=2 if pairs else 1, beta_plus=n - pairs,
            omega=1, beta=n,
        )

    if p == 2:
        m1, m2, m3 = 0, 2**r - 2**q, 2**q
        omega = (k + 2 ** (r - q)) // 2
        only_2_and_4 = all(o in (2, 4) for o in orders)
        beta = 2 ** (r + 1) - (2**q if only_2_and_4 else 0)
        return PrimeSumReport(p, "general", k, r, q, m1, m2, m3, k, 2**r, omega, beta)

    m1, m2, m3 = p**r - 1, 0, 1
    omega = k // 2 + 2 ** (q - 1) if q > 0 else (k + 1) // 2
    # G = C_2^q x C_p^r
    elementary = all(o in (2, p, 2 * p) for o in orders)
    beta = k * (p**r - 1) // 2 + (1 if elementary else 2)
    return PrimeSumReport(
        p, "general", k, r, q, m1, m2, m3, k, k * (p**r - 1) // 2 + 1, omega, beta
    )
