"""Brute-force invariants computed from explicit adjacency.

Every search here works on bitset rows and runs per connected component;
results are combined by max (clique, chromatic number) or sum (independence,
clique cover, domination).  Nothing in this module knows about groups or
coset types.
"""

from __future__ import annotations

import os
from collections import deque

import numpy as np

from .errors import InvalidParameterError, NumericError, ResourceLimitError
from .graphs import (
    Graph,
    bits,
    build_extended,
    build_subgroup_sum,
    complement,
    components_with_profiles,
    connected_components,
    popcount,
)
from .report import INF, GraphReport, InvariantReport, profile_counts

DEFAULT_MAX_VERTICES = 512
JACOBI_TOL = 1e-10
JACOBI_MAX_SWEEPS = 60


def max_vertices() -> int:
    return int(os.environ.get("SUBSUM_MAX_N", DEFAULT_MAX_VERTICES))


def _check_size(gr: Graph):
    limit = max_vertices()
    if gr.n > limit:
        raise ResourceLimitError(f"graph has {gr.n} vertices, limit is {limit} (SUBSUM_MAX_N)")


def _local_rows(gr: Graph, comp, complemented=False) -> list[int]:
    """Adjacency of the induced subgraph on comp, renumbered 0..len-1."""
    sub = gr.subgraph(comp)
    if complemented:
        full = sub.vertex_mask
        return [full & ~r & ~(1 << i) for i, r in enumerate(sub.adj)]
    return list(sub.adj)


# -- cliques ----------------------------------------------------------------------


def _greedy_color_order(rows, p):
    """Greedy colouring of candidate set p: vertices and their colour numbers."""
    order, colors = [], []
    uncolored = p
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique_rows(rows: list[int]) -> int:
    """Mask of a maximum clique (branch and bound with colouring bound)."""
    n = len(rows)
    if n == 0:
        return 0
    best = [1, 1]  # mask, size

    def expand(r, size, p):
        order, colors = _greedy_color_order(rows, p)
        for v, c in zip(reversed(order), reversed(colors)):
            if size + c <= best[1]:
                return
            bit = 1 << v
            newp = p & rows[v]
            if newp:
                expand(r | bit, size + 1, newp)
            elif size + 1 > best[1]:
                best[0], best[1] = r | bit, size + 1
            p &= ~bit

    expand(0, 0, (1 << n) - 1)
    return best[0]


def oracle_clique(gr: Graph) -> tuple[int, tuple[int, ...]]:
    """Clique number and a maximum clique."""
    _check_size(gr)
    if gr.n == 0:
        return 0, ()
    best: tuple[int, ...] = ()
    for comp in connected_components(gr):
        if len(comp) <= len(best):
            continue
        found = [comp[i] for i in bits(max_clique_rows(_local_rows(gr, comp)))]
        if len(found) > len(best):
            best = tuple(found)
    if not gr.is_clique(best):
        raise AssertionError(f"clique witness {best} is not a clique")
    return len(best), best


# -- colourings ---------------------------------------------------------------------


def chromatic_number_rows(rows: list[int]) -> int:
    """Exact chromatic number by DSATUR backtracking with a clique lower bound."""
    n = len(rows)
    if n == 0:
        return 0
    full = (1 << n) - 1
    lower = popcount(max_clique_rows(rows))
    degree = [popcount(r) for r in rows]

    def pick(classes, colored):
        best_v, best_key = -1, None
        for v in bits(full & ~colored):
            sat = sum(1 for cls in classes if cls & rows[v])
            key = (sat, degree[v])
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    # greedy DSATUR for the upper bound
    classes: list[int] = []
    colored = 0
    while colored != full:
        v = pick(classes, colored)
        for i, cls in enumerate(classes):
            if not cls & rows[v]:
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
        colored |= 1 << v
    best = [len(classes)]
    if best[0] == lower:
        return lower

    def rec(classes, colored):
        if colored == full:
            best[0] = len(classes)
            return best[0] == lower
        v = pick(classes, colored)
        bit = 1 << v
        for i, cls in enumerate(classes):
            if not cls & rows[v]:
                classes[i] = cls | bit
                if rec(classes, colored | bit):
                    return True
                classes[i] = cls
        if len(classes) + 1 < best[0]:
            classes.append(bit)
            if rec(classes, colored | bit):
                return True
            classes.pop()
        return False

    rec([], 0)
    return best[0]


def oracle_independence_chromatic(gr: Graph) -> tuple[int, int, int]:
    """(independence number, chromatic number, clique cover number)."""
    _check_size(gr)
    beta = chi = theta = 0
    for comp in connected_components(gr):
        rows = _local_rows(gr, comp)
        co_rows = _local_rows(gr, comp, complemented=True)
        independent = [comp[i] for i in bits(max_clique_rows(co_rows))]
        if not gr.is_independent(independent):
            raise AssertionError("independent-set witness has an edge")
        beta += len(independent)
        chi = max(chi, chromatic_number_rows(rows))
        theta += chromatic_number_rows(co_rows)
    return beta, chi, theta


# -- distances -------------------------------------------------------------------------


def girth(gr: Graph) -> float:
    """Length of a shortest cycle (BFS from every vertex), INF if acyclic."""
    nbrs = [gr.neighbors(v) for v in range(gr.n)]
    best = INF
    for s in range(gr.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def eccentricities(gr: Graph) -> list[float]:
    out = []
    full = gr.vertex_mask
    for s in range(gr.n):
        seen = frontier = 1 << s
        d = 0
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= gr.adj[v]
            frontier = reach & ~seen
            if frontier:
                d += 1
                seen |= frontier
        out.append(d if seen == full else INF)
    return out


def oracle_girth_diameter(gr: Graph) -> tuple[float, float, float, bool, int]:
    """(girth, diameter, radius, connected, number of components)."""
    comps = connected_components(gr)
    ecc = eccentricities(gr)
    diameter = max(ecc) if ecc else 0
    radius = min(ecc) if ecc else 0
    return girth(gr), diameter, radius, len(comps) == 1, len(comps)


# -- domination -------------------------------------------------------------------------


def min_dominating_rows(rows: list[int]) -> int:
    """Mask of a minimum dominating set, by iterative deepening.

    Branches on the undominated vertex with the fewest dominators.
    """
    n = len(rows)
    full = (1 << n) - 1
    closed = [r | 1 << v for v, r in enumerate(rows)]
    max_cover = max(popcount(c) for c in closed)

    def search(dominated, chosen, budget):
        if dominated == full:
            return chosen
        if budget == 0:
            return None
        missing = full & ~dominated
        if popcount(missing) > budget * max_cover:
            return None
        u = min(bits(missing), key=lambda x: popcount(closed[x]))
        for w in sorted(bits(closed[u]), key=lambda x: -popcount(closed[x] & missing)):
            found = search(dominated | closed[w], chosen | 1 << w, budget - 1)
            if found is not None:
                return found
        return None

    for size in range(1, n + 1):
        found = search(0, 0, size)
        if found is not None:
            return found
    raise AssertionError("unreachable: the whole vertex set dominates")


def oracle_domination(gr: Graph) -> tuple[int, tuple[int, ...]]:
    _check_size(gr)
    chosen = []
    for comp in connected_components(gr):
        mask = min_dominating_rows(_local_rows(gr, comp))
        chosen.extend(comp[i] for i in bits(mask))
    chosen.sort()
    if not gr.dominates(chosen):
        raise AssertionError("dominating-set witness does not dominate")
    return len(chosen), tuple(chosen)


# -- spectrum -----------------------------------------------------------------------------


def _round_robin(m: int):
    """m - 1 rounds of disjoint pairs covering every pair of 0..m-1 (m even)."""
    players = list(range(m))
    for _ in range(m - 1):
        yield [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        players = [players[0], players[-1]] + players[1:-1]


def jacobi_eigenvalues(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations are applied a round at a time: each round is a set of disjoint
    index pairs, so its rotations commute and are applied together.
    Converged when the off-diagonal Frobenius norm drops below ``tol``.
    """
    A = np.array(a, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or not np.allclose(A, A.T):
        raise ValueError("need a square symmetric matrix")
    if n <= 1:
        return np.sort(np.diag(A))
    m = n + (n % 2)  # odd n: index n is a bye
    rounds = []
    for pairs in _round_robin(m):
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))

    def off(M):
        return float(np.linalg.norm(M - np.diag(np.diag(M))))

    for _ in range(max_sweeps):
        if off(A) < tol:
            return np.sort(np.diag(A))
        for P, Q in rounds:
            apq = A[P, Q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            P, Q, apq = P[active], Q[active], apq[active]
            tau = (A[Q, Q] - A[P, P]) / (2 * apq)
            t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
            c = 1 / np.sqrt(1 + t * t)
            s = t * c
            # A <- J^T A J with J[p,p] = J[q,q] = c, J[p,q] = s, J[q,p] = -s
            cp, cq = A[:, P].copy(), A[:, Q].copy()
            A[:, P] = c * cp - s * cq
            A[:, Q] = s * cp + c * cq
            rp, rq = A[P, :].copy(), A[Q, :].copy()
            A[P, :] = c[:, None] * rp - s[:, None] * rq
            A[Q, :] = s[:, None] * rp + c[:, None] * rq
    if off(A) < tol:
        return np.sort(np.diag(A))
    raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps")


def oracle_spectrum(gr: Graph) -> list[float]:
    """Sorted adjacency eigenvalues, computed one component at a time."""
    _check_size(gr)
    values: list[float] = []
    for comp in connected_components(gr):
        values.extend(jacobi_eigenvalues(gr.subgraph(comp).matrix()).tolist())
    return sorted(values)


# -- perfectness falsifier ------------------------------------------------------------------


def find_induced_cycle(gr: Graph, lengths) -> tuple[int, ...] | None:
    """An induced (chordless) cycle whose length is in ``lengths``, or None."""
    lengths = set(lengths)
    if not lengths:
        return None
    longest = max(lengths)
    adj = gr.adj

    def extend(path, path_mask, inner, higher):
        t = len(path) - 1
        p0, pt = path[0], path[-1]
        cand = adj[pt] & higher & ~inner & ~path_mask
        if t + 2 in lengths:
            close = cand & adj[p0]
            if close:
                w = (close & -close).bit_length() - 1
                return tuple(path) + (w,)
        if t + 2 < longest:
            new_inner = inner | adj[pt] | 1 << pt
            for w in bits(cand & ~adj[p0]):
                found = extend(path + [w], path_mask | 1 << w, new_inner, higher)
                if found:
                    return found
        return None

    for v0 in range(gr.n):
        higher = gr.vertex_mask & ~((1 << (v0 + 1)) - 1)
        for v1 in bits(adj[v0] & higher):
            found = extend([v0, v1], 1 << v0 | 1 << v1, 0, higher)
            if found:
                return found
    return None


def is_induced_cycle(gr: Graph, cycle) -> bool:
    c = len(cycle)
    if c < 3 or len(set(cycle)) != c:
        return False
    for i in range(c):
        for j in range(i + 1, c):
            should = (j - i) in (1, c - 1)
            if gr.has_edge(cycle[i], cycle[j]) != should:
                return False
    return True


def oracle_perfectness(gr: Graph, max_hole: int = 7) -> tuple[bool, tuple[int, ...] | None]:
    """Look for odd holes and odd antiholes of length 5..max_hole.

    Returns ``(True, None)`` when none exist, else ``(False, witness)`` where the
    witness is an induced cycle of ``gr`` or of its complement.
    """
    if max_hole < 5 or max_hole % 2 == 0:
        raise InvalidParameterError("max_hole must be odd and at least 5")
    _check_size(gr)
    lengths = range(5, max_hole + 1, 2)
    for target in (gr, complement(gr)):
        found = find_induced_cycle(target, lengths)
        if found is not None:
            if not is_induced_cycle(target, found):
                raise AssertionError(f"hole witness {found} is not an induced cycle")
            return False, found
    return True, None


# -- full report ------------------------------------------------------------------------------


def oracle_graph_report(gr: Graph, max_hole: int | None = None) -> GraphReport:
    _check_size(gr)
    comps = components_with_profiles(gr)
    omega, clique_witness = oracle_clique(gr)
    beta, chi, theta = oracle_independence_chromatic(gr)
    g_girth, _, _, connected, count = oracle_girth_diameter(gr)
    gamma, dom_witness = oracle_domination(gr)
    co = complement(gr)
    _, co_diam, co_rad, co_conn, _ = oracle_girth_diameter(co)
    co_gamma, _ = oracle_domination(co)
    perfect = hole = None
    if max_hole is not None:
        perfect, hole = oracle_perfectness(gr, max_hole)
    return GraphReport(
        vertices=gr.n,
        edges=gr.edge_count,
        component_count=count,
        components=profile_counts(p for _, p in comps),
        clique=omega,
        independence=beta,
        chromatic=chi,
        clique_cover=theta,
        girth=g_girth,
        connected=connected,
        domination=gamma,
        complement_connected=co_conn,
        complement_diameter=co_diam,
        complement_radius=co_rad,
        complement_domination=co_gamma,
        spectrum=tuple(oracle_spectrum(gr)),
        clique_witness=clique_witness,
        domination_witness=dom_witness,
        perfect=perfect,
        perfectness_witness=hole,
    )


def oracle_invariants(g, h, max_hole: int | None = None, group: str = "", subgroup: str = "") -> InvariantReport:
    """Brute-force report for the extended and the plain sum graph of (G, H)."""
    return InvariantReport(
        group=group or str(g),
        subgroup=subgroup,
        extended=oracle_graph_report(build_extended(g, h), max_hole),
        sum=oracle_graph_report(build_subgroup_sum(g, h), max_hole),
        engine="oracle",
    )
