"""Independent oracles used by the test suite.

Everything here deliberately avoids the package's production algorithms:
triangulations are re-enumerated by gluing directed triangles into closed
surfaces, domination numbers are recomputed by raw subset enumeration, and
connected sets by powerset filtering.  Agreement between these oracles and
the fast paths is what the tests assert.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from tridom.graphs import Graph, induces_connected, is_dominating, vset
from tridom.planar import Triangulation, canonical_code, verify_triangulation
from tridom.generate import K4, successors


def brute_gamma(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if is_dominating(g, vset(combo)):
                return k
    raise AssertionError("no dominating set found")


def brute_gamma_c(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            s = vset(combo)
            if is_dominating(g, s) and induces_connected(g, s):
                return k
    raise AssertionError("no connected dominating set found")


def brute_minimum_dominating_sets(g: Graph, k: int) -> List[int]:
    return [vset(c) for c in combinations(range(g.n), k) if is_dominating(g, vset(c))]


def powerset_connected_sets(g: Graph, max_size: int) -> Set[int]:
    out = set()
    for k in range(1, max_size + 1):
        for combo in combinations(range(g.n), k):
            s = vset(combo)
            if induces_connected(g, s):
                out.add(s)
    return out


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if n == 1 or induces_connected(g, g.full):
            return g


def random_triangulation(rng: random.Random, n: int) -> Triangulation:
    """Random expansion walk from K4 up to order n."""
    t = K4
    while t.n < n:
        kids = list(successors(t))
        t = kids[rng.randrange(len(kids))]
    return t


def random_permutation(rng: random.Random, n: int) -> List[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


# ---------------------------------------------------------------------------
# Independent enumeration of plane triangulations on exactly n vertices by
# assembling directed triangles into a closed oriented surface, rooted at the
# face (0, 1, 2), with new vertex labels introduced in first-use order.

def assemble_triangulations(n: int) -> Set[bytes]:
    codes: Set[bytes] = set()
    used: Dict[Tuple[int, int], bool] = {(0, 1): True, (1, 2): True, (2, 0): True}
    faces_acc: List[Tuple[int, int, int]] = [(0, 1, 2)]
    max_faces = 2 * n - 4

    def least_open() -> Optional[Tuple[int, int]]:
        best = None
        for (u, v) in used:
            if (v, u) not in used and (best is None or (u, v) < best):
                best = (u, v)
        return best

    def close_up(max_v: int) -> None:
        if max_v != n - 1:
            return
        succ: List[Dict[int, int]] = [dict() for _ in range(n)]
        for a, b, c in faces_acc:
            for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                succ[v][u] = w
        rot = []
        for v in range(n):
            if not succ[v]:
                return
            start = min(succ[v])
            cyc = [start]
            while True:
                nxt = succ[v].get(cyc[-1])
                if nxt is None or len(cyc) > len(succ[v]):
                    return
                if nxt == start:
                    break
                cyc.append(nxt)
            if len(cyc) != len(succ[v]):
                return
            rot.append(tuple(cyc))
        t = Triangulation(n, rot)
        if verify_triangulation(t).ok:
            codes.add(canonical_code(t))

    def rec(max_v: int) -> None:
        e = least_open()
        if e is None:
            close_up(max_v)
            return
        if len(faces_acc) >= max_faces:
            return
        if (n - 1 - max_v) > max_faces - len(faces_acc):
            return  # not enough faces left to introduce the missing vertices
        u, v = e
        for w in range(min(max_v + 1, n - 1) + 1):
            if w == u or w == v:
                continue
            de = ((v, u), (u, w), (w, v))
            if any(d in used for d in de):
                continue
            for d in de:
                used[d] = True
            faces_acc.append((v, u, w))
            rec(max(max_v, w))
            faces_acc.pop()
            for d in de:
                del used[d]

    rec(2)
    return codes


# ---------------------------------------------------------------------------
# Cones over triangulated polygons: every triangulation with a universal
# vertex arises this way, giving an independent count of the gamma_c = 1
# classes of each order.

def polygon_triangulations(poly: List[int]) -> List[List[Tuple[int, int, int]]]:
    if len(poly) == 3:
        return [[tuple(poly)]]
    out = []
    a, b = poly[0], poly[1]
    for i in range(2, len(poly)):
        c = poly[i]
        left = poly[1:i + 1]
        right = [a] + poly[i:]
        for part_l in (polygon_triangulations(left) if len(left) >= 3 else [[]]):
            for part_r in (polygon_triangulations(right) if len(right) >= 3 else [[]]):
                out.append([(a, b, c)] + part_l + part_r)
    return out


def cone_triangulations(m: int) -> Set[bytes]:
    """Canonical codes of all (m+1)-vertex triangulations with a universal vertex."""
    from tridom.planar import from_face_list
    codes = set()
    for tri in polygon_triangulations(list(range(m))):
        face_set = list(tri) + [(m, (i + 1) % m, i) for i in range(m)]
        t = from_face_list(m + 1, face_set)
        assert verify_triangulation(t).ok
        codes.add(canonical_code(t))
    return codes
