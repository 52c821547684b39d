"""Read off the (G, H) parameters that a bare sum graph determines.

An extended sum graph fixes |G|, |H| and s(G/H); a subgroup sum graph also
fixes m2, m3, s(H) and s(G).  Nothing finer is recoverable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

from .errors import AmbiguityError, NotASumGraphError
from .graphs import Graph, Kind, bits, components_with_profiles, mask_of, popcount


@dataclass(frozen=True)
class RecoveredParams:
    order_G: int
    k: int
    sGH: int
    m2: int | None = None
    m3: int | None = None
    sH: int | None = None
    sG: int | None = None

    def to_json(self) -> dict:
        return {key: v for key, v in asdict(self).items() if v is not None}


def _is_complete(gr: Graph, comp) -> bool:
    return gr.is_clique(comp)


def _is_balanced_complete_bipartite(gr: Graph, comp) -> bool:
    c = len(comp)
    if c % 2:
        return False
    j = c // 2
    if any(gr.degree(v) != j for v in comp):
        return False
    # the non-neighbours of the first vertex (itself included) form one side
    cm = mask_of(comp)
    side = cm & ~gr.adj[comp[0]]
    return popcount(side) == j and all(gr.adj[v] & side == 0 for v in bits(side))


def analyze_extended(gr: Graph) -> RecoveredParams:
    """Parameters of a graph shaped like an extended subgroup sum graph.

    Each component must be K_k or K_{k,k} for a single k, with at least one
    K_k present.  If several k fit, :class:`AmbiguityError` lists them.
    """
    comps = components_with_profiles(gr)
    complete = [len(c) for c, _ in comps if _is_complete(gr, c)]
    if not complete:
        raise NotASumGraphError("no complete component, so this is not an extended sum graph")

    candidates = []
    for k in sorted(set(complete)):
        ok = True
        for comp, _ in comps:
            if len(comp) == k and _is_complete(gr, comp):
                continue
            if len(comp) == 2 * k and _is_balanced_complete_bipartite(gr, comp):
                continue
            ok = False
            break
        if ok:
            candidates.append(k)
    if not candidates:
        bad = [str(p) for _, p in comps]
        raise NotASumGraphError(f"components {bad} are not all K_k or K_k,k for one k")
    if len(candidates) > 1:
        raise AmbiguityError(f"k is not determined: candidates {candidates}", candidates)

    k = candidates[0]
    s_gh = sum(1 for c, _ in comps if len(c) == k and _is_complete(gr, c))
    m = gr.n // k
    if (m + s_gh) % 2 or (m + s_gh) // 2 != len(comps) or gr.n % k:
        raise NotASumGraphError("component count inconsistent with (m + s(G/H))/2")
    return RecoveredParams(order_G=gr.n, k=k, sGH=s_gh)


def analyze_subgroup_sum(gr: Graph) -> RecoveredParams:
    """Parameters of a graph shaped like a subgroup sum graph with |H| >= 3."""
    comps = components_with_profiles(gr)
    if any(p.kind is Kind.UNSTRUCTURED for _, p in comps):
        bad = [str(p) for _, p in comps if p.kind is Kind.UNSTRUCTURED]
        raise NotASumGraphError(f"unstructured components {bad}")
    k = min(len(c) for c, _ in comps)
    if k <= 2:
        sizes = sorted(Counter(len(c) for c, _ in comps).items())
        raise AmbiguityError(
            f"components of size <= 2 (sizes {sizes}) do not determine the subgroup order",
            candidates=sorted({s for s, _ in sizes} | {2 * s for s, _ in sizes}),
        )

    perfect, deficient = 0, Counter()
    for comp, p in comps:
        if len(comp) == k and p.kind is Kind.COMPLETE_MINUS_MATCHING:
            if 2 * p.matching_size == k:
                perfect += 1
            else:
                deficient[p.matching_size] += 1
        elif len(comp) == 2 * k and p.kind is Kind.BIPARTITE_MINUS_MATCHING and p.matching_size == k:
            pass
        else:
            raise NotASumGraphError(f"component {p} does not fit |H| = {k}")
    if len(deficient) != 1:
        raise NotASumGraphError(
            f"need exactly one deficient matching size among size-{k} components, got {dict(deficient)}"
        )
    (size, m3), = deficient.items()
    s_h = k - 2 * size
    return RecoveredParams(
        order_G=gr.n, k=k, sGH=perfect + m3, m2=perfect, m3=m3, sH=s_h, sG=m3 * s_h
    )
