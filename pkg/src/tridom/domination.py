"""Exact domination and connected domination solvers, with certificates.

Two independent routes to the connected domination number are provided and
cross-validated against each other:

* ``exact_gamma_c``  - iterative deepening over connected vertex sets, with
  admissible pruning (coverage potential and distance reachability);
* ``gamma_c_by_contraction`` - iterative deepening over connected acyclic
  edge sets, contracting each candidate set edge by edge and testing whether
  the merged vertex is universal in the resulting minor.

Correctness of the contraction route: contracting a spanning tree of a
minimum connected dominating set (k = value-1 edges) merges it into a vertex
adjacent to everything else, so the search succeeds at k = value-1; and a
success at k yields a connected dominating set of size k+1 (the spanned
vertex set), so it cannot succeed earlier.  Only acyclic edge sets are
searched: a connected set with a cycle contracts to a minor on more than
n-k vertices, where no vertex of degree n-k-1 is universal.

Pruning soundness in ``exact_gamma_c``: with s = |S| and m = k - s vertices
still to add, any superset grown from S covers at most |N[S]| + m*(Delta+1)
vertices, and every vertex it covers lies within distance m+1 of S.  Both
tests therefore never cut a feasible branch.  The deepening may start at
max(packing bound, diameter-1): disjoint closed neighborhoods need distinct
dominators, and the internal path of a connected dominating set spans the
graph within one step of every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graphs import (
    PRUNE,
    STOP,
    Graph,
    bits,
    closed_neighborhood,
    degree_stats,
    enumerate_connected_sets,
    is_connected,
)
from .planar import Triangulation, underlying_graph

METHOD_SUBSET = "subset-search"
METHOD_CONTRACTION = "contraction"
METHOD_BFS_TREE = "bfs-tree-bound"
METHOD_DELTA = "delta-shortcut"


@dataclass(frozen=True)
class DominationCertificate:
    value: int
    witness: int  # vertex bitmask
    method: str

    def witness_vertices(self) -> Tuple[int, ...]:
        return tuple(bits(self.witness))


@dataclass(frozen=True)
class ContractionWitness:
    edges: Tuple[Tuple[int, int], ...]
    universal_degree: int

    def spanned_vertices(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        return m


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError(
            "graph is disconnected; graphs with more than one component "
            "have no connected dominating set"
        )


def _closed(g: Graph) -> List[int]:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def _ball2(adjn: List[int]) -> List[int]:
    out = []
    for m in adjn:
        b = 0
        x = m
        while x:
            lo = x & -x
            b |= adjn[lo.bit_length() - 1]
            x ^= lo
        out.append(b)
    return out


def _packing_bound(uncovered: int, ball2: List[int]) -> int:
    """Greedy count of pairwise-disjoint closed neighborhoods in uncovered."""
    cnt = 0
    while uncovered:
        v = (uncovered & -uncovered).bit_length() - 1
        cnt += 1
        uncovered &= ~ball2[v]
    return cnt


def exact_gamma(g: Graph) -> DominationCertificate:
    """Minimum dominating set, branch and bound, lexicographically least witness."""
    _require_connected(g)
    n = g.n
    full = g.full
    if n == 1:
        return DominationCertificate(1, 1, METHOD_SUBSET)
    adjn = _closed(g)
    ball2 = _ball2(adjn)
    covcnt = [m.bit_count() for m in adjn]

    def feasible(covered: int, used: int, target: int) -> bool:
        if covered == full:
            return True
        if used == target:
            return False
        uncovered = full & ~covered
        if used + _packing_bound(uncovered, ball2) > target:
            return False
        # branch on an uncovered vertex with the fewest coverers
        u = -1
        best = n + 2
        x = uncovered
        while x:
            lo = x & -x
            v = lo.bit_length() - 1
            if covcnt[v] < best:
                best = covcnt[v]
                u = v
            x ^= lo
        for v in bits(adjn[u]):
            if feasible(covered | adjn[v], used + 1, target):
                return True
        return False

    value = _packing_bound(full, ball2)
    while not feasible(0, 0, value):
        value += 1

    def lex_witness(start: int, covered: int, left: int) -> Optional[int]:
        if left == 0:
            return 0 if covered == full else None
        if _packing_bound(full & ~covered, ball2) > left:
            return None
        for v in range(start, n - left + 1):
            gain = adjn[v] & ~covered
            if not gain:
                continue  # redundant vertex cannot occur in a minimum set
            rest = lex_witness(v + 1, covered | adjn[v], left - 1)
            if rest is not None:
                return rest | (1 << v)
        return None

    witness = lex_witness(0, 0, value)
    assert witness is not None
    return DominationCertificate(value, witness, METHOD_SUBSET)


def _distance_balls(g: Graph, adjn: List[int]) -> Tuple[List[List[int]], int]:
    """balls[r][v] = vertices within distance r of v; saturates at the diameter."""
    full = g.full
    balls = [[1 << v for v in range(g.n)], list(adjn)]
    while any(m != full for m in balls[-1]):
        prev = balls[-1]
        nxt = []
        for m in prev:
            if m == full:
                nxt.append(full)
                continue
            b = m
            x = m
            while x:
                lo = x & -x
                b |= adjn[lo.bit_length() - 1]
                x ^= lo
            nxt.append(b)
        if nxt == prev:
            raise ValueError("graph is disconnected")
        balls.append(nxt)
    return balls, len(balls) - 1


def _gamma_c_search(g: Graph, k: int, adjn: List[int], balls: List[List[int]],
                    rmax: int, dmax: int, collect_all: bool) -> List[int]:
    """Connected dominating sets of size <= k; first hit only unless collect_all."""
    full = g.full
    n = g.n
    found: List[int] = []

    def visitor(s: int) -> Optional[str]:
        size = s.bit_count()
        m = k - size
        r = balls[m + 1 if m + 1 < rmax else rmax]
        cover = 0
        ball = 0
        x = s
        while x:
            lo = x & -x
            v = lo.bit_length() - 1
            cover |= adjn[v]
            ball |= r[v]
            x ^= lo
        if cover == full:
            if not collect_all:
                found.append(s)
                return STOP
            if size == k:
                found.append(s)
            return None
        if m == 0:
            return PRUNE
        if cover.bit_count() + m * (dmax + 1) < n:
            return PRUNE
        if ball != full:
            return PRUNE
        return None

    enumerate_connected_sets(g, k, visitor)
    return found


def exact_gamma_c(g: Graph) -> DominationCertificate:
    """Minimum connected dominating set by deepening subset search."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("connected domination needs at least two vertices")
    adjn = _closed(g)
    _, dmax, _ = degree_stats(g)
    balls, rmax = _distance_balls(g, adjn)
    ecc_max = rmax  # the last radius added is the diameter
    k0 = max(1, _packing_bound(g.full, _ball2(adjn)), ecc_max - 1)
    for k in range(k0, g.n + 1):
        hits = _gamma_c_search(g, k, adjn, balls, rmax, dmax, collect_all=False)
        if hits:
            s = hits[0]
            return DominationCertificate(s.bit_count(), s, METHOD_SUBSET)
    raise AssertionError("connected graph always has a connected dominating set")


def all_minimum_cds(g: Graph) -> List[int]:
    """Every minimum connected dominating set, sorted by vertex tuple."""
    value = exact_gamma_c(g).value
    adjn = _closed(g)
    _, dmax, _ = degree_stats(g)
    balls, rmax = _distance_balls(g, adjn)
    hits = _gamma_c_search(g, value, adjn, balls, rmax, dmax, collect_all=True)
    return sorted(hits, key=lambda m: tuple(bits(m)))


def bfs_tree_cds(g: Graph) -> DominationCertificate:
    """Internal vertices of a breadth-first tree rooted at a max-degree vertex.

    Always a connected dominating set of size at most n - Delta; an upper
    bound for the connected domination number, not necessarily tight.
    """
    _require_connected(g)
    if g.n < 2:
        raise ValueError("needs at least two vertices")
    _, _, root = degree_stats(g)
    adj = g.adj
    seen = 1 << root
    queue = [root]
    internal = 0
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        children = adj[x] & ~seen
        if children:
            internal |= 1 << x
            seen |= children
            queue.extend(bits(children))
    return DominationCertificate(internal.bit_count(), internal, METHOD_BFS_TREE)


def contract_edge(g: Graph, e: Tuple[int, int]) -> Graph:
    """Contract edge e: merge into the smaller endpoint, shift larger indices down.

    Parallel edges collapse and loops vanish, so the result is simple.
    """
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
        raise ValueError(f"{e} is not an edge")
    keep, drop = (u, v) if u < v else (v, u)
    kb = 1 << keep
    db = 1 << drop
    low = db - 1
    merged = (g.adj[keep] | g.adj[drop]) & ~(kb | db)
    adj = []
    for x in range(g.n):
        if x == drop:
            continue
        if x == keep:
            m = merged
        else:
            m = g.adj[x]
            if m & db:
                m = (m & ~db) | kb
        adj.append((m & low) | ((m >> (drop + 1)) << drop))
    return Graph(g.n - 1, adj)


def _minor_has_universal_merge(g: Graph, edge_set: Tuple[Tuple[int, int], ...]) -> bool:
    """Contract the edges in order; test whether the merged vertex is universal."""
    labels = list(range(g.n))
    cur = g
    for x, y in edge_set:
        cx, cy = labels[x], labels[y]
        if cx == cy:
            return False
        lo, hi = (cx, cy) if cx < cy else (cy, cx)
        cur = contract_edge(cur, (lo, hi))
        labels = [lo if l == hi else (l - 1 if l > hi else l) for l in labels]
    merged = labels[edge_set[0][0]]
    return cur.adj[merged].bit_count() == cur.n - 1


def contraction_search(g: Graph, k: int) -> Optional[ContractionWitness]:
    """Least connected set of k edges whose contraction merges to a universal vertex.

    Edge sets are restricted to connected acyclic sets (trees); candidates
    are compared as sorted tuples of (u, v) pairs and the lexicographically
    least success is returned, or None when no set of k edges works.
    """
    _require_connected(g)
    if k < 0:
        raise ValueError("k must be >= 0")
    n = g.n
    if k == 0:
        for v in range(n):
            if g.degree(v) == n - 1:
                return ContractionWitness((), n - 1)
        return None
    edge_list = g.edges()
    m = len(edge_list)
    if k > n - 1:
        return None  # a tree on n vertices has at most n-1 edges
    incident = [0] * n
    for i, (a, b) in enumerate(edge_list):
        incident[a] |= 1 << i
        incident[b] |= 1 << i
    successes: List[Tuple[Tuple[int, int], ...]] = []

    def grow(chosen: List[int], span: int, nbrs: int, forb: int) -> None:
        if len(chosen) == k:
            eset = tuple(edge_list[i] for i in sorted(chosen))
            if _minor_has_universal_merge(g, eset):
                successes.append(eset)
            return
        cand = nbrs & ~forb
        while cand:
            b = cand & -cand
            cand ^= b
            ei = b.bit_length() - 1
            x, y = edge_list[ei]
            xin = span >> x & 1
            yin = span >> y & 1
            if not (xin and yin):  # skip cycle-closing edges
                w = y if xin else x
                chosen.append(ei)
                grow(chosen, span | (1 << w), nbrs | incident[w], forb)
                chosen.pop()
            forb |= b

    for root in range(m):
        a, b = edge_list[root]
        grow([root], (1 << a) | (1 << b), incident[a] | incident[b], (1 << (root + 1)) - 1)
        if successes:
            return ContractionWitness(min(successes), n - k - 1)
    return None


def gamma_c_by_contraction(g: Graph) -> DominationCertificate:
    """Connected domination number via repeated edge contraction.

    Searches k = 0, 1, 2, ... for a connected set of k edges contracting to
    a universal vertex; the first success gives value k+1 and the spanned
    vertex set as witness (the universal vertex itself for k = 0).
    """
    _require_connected(g)
    if g.n < 2:
        raise ValueError("connected domination needs at least two vertices")
    for k in range(g.n):
        w = contraction_search(g, k)
        if w is not None:
            if k == 0:
                v = next(v for v in range(g.n) if g.degree(v) == g.n - 1)
                witness = 1 << v
            else:
                witness = w.spanned_vertices()
            return DominationCertificate(k + 1, witness, METHOD_CONTRACTION)
    raise AssertionError("contraction search must succeed by k = n-1")


def classify(t: Triangulation) -> DominationCertificate:
    """Connected domination number of a triangulation, shortcuts first.

    Max degree n-1 forces value 1 and n-2 forces value 2 (with an explicit
    two-vertex witness); everything else goes through the contraction
    solver.  The method field records which path produced the answer.
    """
    g = underlying_graph(t)
    n = g.n
    _, dmax, vmax = degree_stats(g)
    if dmax == n - 1:
        return DominationCertificate(1, 1 << vmax, METHOD_DELTA)
    if dmax == n - 2:
        w = (g.full & ~closed_neighborhood(g, vmax)).bit_length() - 1
        common = g.adj[vmax] & g.adj[w]
        u = (common & -common).bit_length() - 1
        return DominationCertificate(2, (1 << vmax) | (1 << u), METHOD_DELTA)
    return gamma_c_by_contraction(g)
