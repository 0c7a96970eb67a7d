"""Extremal triangulation families built from clique sums and edge gluings.

The octahedron sum glues the 4-regular 6-vertex triangulation onto a face
(a clique sum over a triangle): new triangle e, f, g inside face (a, b, c)
with edges ae, af, bf, bg, ce, cg.  Iterating it on the freshly added
triangle produces order-3k triangulations whose connected domination number
grows by one or two per step depending on how the chosen face meets the
minimum connected dominating sets; families A and B below follow the two
known base graphs on nine vertices.

The icosahedron chain glues k icosahedra along outer-face edges so that all
copies share one vertex, then triangulates the outer hole with a fan of
chords; its domination number grows like k while the connected domination
number grows like 3k, so their difference is unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .domination import all_minimum_cds, exact_gamma_c
from .planar import Face, Triangulation, faces, from_face_list, is_face, underlying_graph
from . import generate


def octahedron() -> Triangulation:
    """The unique 4-regular plane triangulation on six vertices."""
    return from_face_list(6, [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
        (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
    ])


def icosahedron() -> Triangulation:
    """The 5-regular plane triangulation on twelve vertices.

    The designated outer face is (0, 1, 2): vertex 0 plays u, 1 plays v and
    2 plays w in the chain construction.  (0, 1, 2) is a traced face.
    """
    top = [(0, i, i % 5 + 1) for i in range(1, 6)]
    down = [(i, i % 5 + 1, i + 5) for i in range(1, 6)]
    up = [(i + 5, i % 5 + 6, i % 5 + 1) for i in range(1, 6)]
    bottom = [(11, i + 5, i % 5 + 6) for i in range(1, 6)]
    return from_face_list(12, top + down + up + bottom)


def octahedron_sum(t: Triangulation, f: Face) -> Triangulation:
    """Clique sum of t with the octahedron over face f = (a, b, c).

    Adds three vertices e = n, f = n+1, g = n+2 forming a triangle, joined
    by edges ae, af, bf, bg, ce, cg; the new triangle (n, n+1, n+2) bounds a
    face of the result and is the site for iterating the construction.
    """
    if not is_face(t, f):
        raise ValueError(f"{f} is not a face")
    a, b, c = f
    n = t.n
    e, ff, g = n, n + 1, n + 2
    rot = list(t.rot)
    ia = rot[a].index(c) + 1
    rot[a] = rot[a][:ia] + (e, ff) + rot[a][ia:]      # between c and b
    ib = rot[b].index(a) + 1
    rot[b] = rot[b][:ib] + (ff, g) + rot[b][ib:]      # between a and c
    ic = rot[c].index(b) + 1
    rot[c] = rot[c][:ic] + (g, e) + rot[c][ic:]       # between b and a
    rot.append((a, c, g, ff))   # e
    rot.append((a, e, g, b))    # f
    rot.append((b, ff, e, c))   # g
    return Triangulation(n + 3, rot)


def new_triangle(t_before: Triangulation) -> Face:
    """The face added by octahedron_sum applied to t_before."""
    return (t_before.n, t_before.n + 1, t_before.n + 2)


@dataclass(frozen=True)
class SumReport:
    """How one octahedron sum moved the connected domination number.

    face_hits is the largest overlap between the chosen face and any minimum
    connected dominating set of the base.  Overlap 0 predicts an increment
    of 2 and overlap 1 an increment of 1; larger overlaps carry no
    prediction and consistent is None.
    """
    base_value: int
    summed_value: int
    face_hits: int
    predicted_increment: Optional[int]
    observed_increment: int
    consistent: Optional[bool]


def octahedron_sum_report(t: Triangulation, f: Face) -> SumReport:
    if not is_face(t, f):
        raise ValueError(f"{f} is not a face")
    g = underlying_graph(t)
    fmask = (1 << f[0]) | (1 << f[1]) | (1 << f[2])
    hits = max((s & fmask).bit_count() for s in all_minimum_cds(g))
    base = exact_gamma_c(g).value
    summed = exact_gamma_c(underlying_graph(octahedron_sum(t, f))).value
    predicted = {0: 2, 1: 1}.get(hits)
    observed = summed - base
    consistent = (observed == predicted) if predicted is not None else None
    return SumReport(base, summed, hits, predicted, observed, consistent)


@lru_cache(maxsize=None)
def family_base(which: str) -> Tuple[Triangulation, Face]:
    """Nine-vertex base triangulation and designated face for family A or B.

    B's base is the unique 9-vertex triangulation whose connected domination
    number is 3, with the face whose octahedron sum keeps the value at 3.
    A's base is the code-least 9-vertex triangulation with value 2 having a
    face disjoint from every minimum connected dominating set.
    """
    if which not in ("A", "B"):
        raise ValueError("family must be 'A' or 'B'")
    level9 = generate.triangulations(9)
    if which == "B":
        with_3 = [t for t in level9 if exact_gamma_c(underlying_graph(t)).value == 3]
        if len(with_3) != 1:
            raise RuntimeError(f"expected exactly one 9-vertex graph with value 3, found {len(with_3)}")
        t = with_3[0]
        for f in faces(t):
            summed = exact_gamma_c(underlying_graph(octahedron_sum(t, f))).value
            if summed == 3:
                return t, f
        raise RuntimeError("no face of the base keeps the value at 3 after one sum")
    for t in level9:
        g = underlying_graph(t)
        if exact_gamma_c(g).value != 2:
            continue
        minima = all_minimum_cds(g)
        for f in faces(t):
            fmask = (1 << f[0]) | (1 << f[1]) | (1 << f[2])
            if all((s & fmask) == 0 for s in minima):
                return t, f
    raise RuntimeError("no 9-vertex base with a face avoiding all minimum sets")


def expected_family_value(which: str, k: int) -> int:
    """Connected domination number of family member k (order 3k)."""
    if which == "A":
        return 2 if k == 3 else k
    if which == "B":
        return 3 if k <= 4 else k
    raise ValueError("family must be 'A' or 'B'")


def family(which: str, k: int, verify_cap: int = 24) -> Triangulation:
    """Member k (order 3k) of family A or B by iterated octahedron sums.

    Starting from the nine-vertex base, k-3 sums are applied, each on the
    most recently added triangle.  While the order stays within verify_cap
    the exact solver checks the value after every step; a mismatch raises,
    since it would contradict the construction's invariant.
    """
    if k < 3:
        raise ValueError("family members need k >= 3 (order 3k >= 9)")
    t, face = family_base(which)
    if t.n <= verify_cap:
        _check_family_value(which, 3, t)
    site = face
    for j in range(4, k + 1):
        prev = t
        t = octahedron_sum(t, site)
        site = new_triangle(prev)
        if t.n <= verify_cap:
            _check_family_value(which, j, t)
    return t


def _check_family_value(which: str, k: int, t: Triangulation) -> None:
    got = exact_gamma_c(underlying_graph(t)).value
    want = expected_family_value(which, k)
    if got != want:
        raise RuntimeError(
            f"family {which} at k={k} has connected domination number {got}, expected {want}"
        )


@dataclass(frozen=True)
class FamilySpec:
    """Which extremal construction to build: family A/B at 3k vertices, or a chain."""
    kind: str  # "A", "B" or "chain"
    k: int

    def __post_init__(self) -> None:
        if self.kind in ("A", "B"):
            if self.k < 3:
                raise ValueError("families A and B need k >= 3")
        elif self.kind == "chain":
            if self.k < 2:
                raise ValueError("chains need k >= 2")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def build(self, verify_cap: int = 24) -> Triangulation:
        if self.kind == "chain":
            return icosa_chain(self.k)
        return family(self.kind, self.k, verify_cap)


def _linear_from(seq: Tuple[int, ...], start: int) -> Tuple[int, ...]:
    i = seq.index(start)
    return seq[i:] + seq[:i]


def _glue_edge(t: Triangulation, a: int, b: int,
               s: Triangulation, p: int, q: int) -> Tuple[Triangulation, List[int]]:
    """Glue a mirrored copy of s onto t, identifying s's edge (p,q) with t's (a,b).

    The copy lands in t's face containing the directed edge (a, b), opened
    against s's face containing directed (p, q); mirroring s makes the two
    orientations compatible.  Returns the merged triangulation and the label
    map from s's vertices into it (fresh labels are assigned in ascending
    order of the original s labels).
    """
    if b not in t.rot[a] or q not in s.rot[p]:
        raise ValueError("gluing sites must be edges")
    mapping = [0] * s.n
    mapping[p] = a
    mapping[q] = b
    nxt = t.n
    for x in range(s.n):
        if x != p and x != q:
            mapping[x] = nxt
            nxt += 1
    srev = [r[::-1] for r in s.rot]
    rot = list(t.rot)
    block_a = tuple(mapping[x] for x in _linear_from(tuple(srev[p]), q)[1:])
    rot[a] = _linear_from(rot[a], b) + block_a
    tb = _linear_from(rot[b], a)
    block_b = tuple(mapping[x] for x in _linear_from(tuple(srev[q]), p)[1:])
    rot[b] = tb[1:] + (a,) + block_b
    for x in range(s.n):
        if x != p and x != q:
            rot.append(tuple(mapping[y] for y in srev[x]))
    return Triangulation(t.n + s.n - 2, rot), mapping


def _split_quad(t: Triangulation, q0: int, q1: int, q2: int, q3: int) -> Triangulation:
    """Add the chord q1-q3 inside the quadrilateral face traced (q0,q1,q2,q3)."""
    if t.succ(q1, q0) != q2 or t.succ(q2, q1) != q3 or t.succ(q3, q2) != q0 or t.succ(q0, q3) != q1:
        raise ValueError("not a quadrilateral face")
    rot = list(t.rot)
    i1 = rot[q1].index(q0) + 1
    rot[q1] = rot[q1][:i1] + (q3,) + rot[q1][i1:]
    i3 = rot[q3].index(q2) + 1
    rot[q3] = rot[q3][:i3] + (q1,) + rot[q3][i3:]
    return Triangulation(t.n, rot)


def icosa_chain(k: int) -> Triangulation:
    """Chain of k icosahedra sharing one vertex, outer hole fanned from w1.

    Copies are glued edge to edge: the first pair along (u, v), then each
    next copy along (u, w_i); all u's merge into a single vertex.  The outer
    boundary (u, w_1, v, w_2, ..., w_k) is triangulated by the fixed fan of
    chords w_1-w_j.  Order 10k + 2.
    """
    if k < 2:
        raise ValueError("chains need k >= 2")
    ico = icosahedron()
    t = ico
    w1 = 2
    prev_b = 1  # v of the first copy, then w_{i-1}
    for _ in range(2, k + 1):
        t, mapping = _glue_edge(t, 0, prev_b, ico, 0, 1)
        wi = mapping[2]
        t = _split_quad(t, prev_b, w1, 0, wi)
        prev_b = wi
    return t
