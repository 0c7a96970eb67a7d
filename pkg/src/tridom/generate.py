"""Isomorph-free generation of plane triangulations by vertex insertion.

Every plane triangulation on n+1 >= 5 vertices arises from one on n vertices
by inserting a vertex of degree 3 (inside a face), degree 4 (across an edge)
or degree 5 (over a fan of three consecutive faces at an apex of degree at
least 5).  Enumeration is level-synchronous: all moves are applied to every
triangulation of one order and the results deduplicated by canonical code,
so the next level holds each isomorphism class exactly once.

Moves that would break simplicity are skipped silently during enumeration
but raise when one of the expansion functions is called directly.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .planar import Face, Triangulation, canonical_code, faces, is_face, triangulation_from_code

MIN_ORDER = 4
MAX_ORDER = 14

#: K4 with a fixed clockwise rotation system (outer face 0,1,2; center 3).
K4 = Triangulation(4, ((1, 3, 2), (0, 2, 3), (0, 3, 1), (0, 1, 2)))


def _insert_after(seq: Tuple[int, ...], anchor: int, items: Tuple[int, ...]) -> Tuple[int, ...]:
    i = seq.index(anchor) + 1
    return seq[:i] + items + seq[i:]


def _replace(seq: Tuple[int, ...], old: int, new: int) -> Tuple[int, ...]:
    i = seq.index(old)
    return seq[:i] + (new,) + seq[i + 1:]


def expand_deg3(t: Triangulation, f: Face) -> Triangulation:
    """Insert a new vertex of degree 3 inside face f = (a, b, c)."""
    if not is_face(t, f):
        raise ValueError(f"{f} is not a face")
    a, b, c = f
    v = t.n
    rot = list(t.rot)
    rot[a] = _insert_after(rot[a], c, (v,))   # between c and b
    rot[b] = _insert_after(rot[b], a, (v,))   # between a and c
    rot[c] = _insert_after(rot[c], b, (v,))   # between b and a
    rot.append((a, c, b))
    return Triangulation(t.n + 1, rot)


def opposite_vertices(t: Triangulation, e: Tuple[int, int]) -> Tuple[int, int]:
    """Third vertices (c, d) of the two faces meeting at edge e = (a, b)."""
    a, b = e
    if b not in t.rot[a]:
        raise ValueError(f"{e} is not an edge")
    return t.succ(b, a), t.succ(a, b)


def expand_deg4(t: Triangulation, e: Tuple[int, int]) -> Triangulation:
    """Replace edge e = (a, b) by a new degree-4 vertex joined to a, c, b, d.

    c and d are the third vertices of the two faces at e; they must differ,
    otherwise the insertion would create a doubled gadget.
    """
    a, b = e
    c, d = opposite_vertices(t, e)
    if c == d:
        raise ValueError(f"edge {e} has coinciding opposite vertices")
    v = t.n
    rot = list(t.rot)
    rot[a] = _replace(rot[a], b, v)
    rot[b] = _replace(rot[b], a, v)
    rot[c] = _insert_after(rot[c], b, (v,))   # between b and a
    rot[d] = _insert_after(rot[d], a, (v,))   # between a and b
    rot.append((a, c, b, d))
    return Triangulation(t.n + 1, rot)


def expand_deg5(t: Triangulation, apex: int, x1: int) -> Triangulation:
    """Insert a degree-5 vertex over the fan of three consecutive faces at apex.

    The fan is determined by the apex a and the first fan neighbor x1: with
    x2, x3, x4 following x1 in the rotation at a, the faces (a,x1,x2),
    (a,x2,x3), (a,x3,x4) are replaced by the wheel of the new vertex over the
    pentagon a, x1, x2, x3, x4 (edges a-x2 and a-x3 are removed).  Requires
    degree(a) >= 5.
    """
    if not 0 <= apex < t.n:
        raise ValueError(f"vertex {apex} out of range")
    ra = t.rot[apex]
    d = len(ra)
    if d < 5:
        raise ValueError(f"apex degree {d} below 5")
    if x1 not in ra:
        raise ValueError(f"{x1} is not a neighbor of apex {apex}")
    i = ra.index(x1)
    x2, x3, x4 = ra[(i + 1) % d], ra[(i + 2) % d], ra[(i + 3) % d]
    if len({apex, x1, x2, x3, x4}) != 5:
        raise ValueError("fan vertices are not pairwise distinct")
    v = t.n
    rot = list(t.rot)
    ra2 = tuple(u for u in ra if u not in (x2, x3))
    rot[apex] = _insert_after(ra2, x1, (v,))          # between x1 and x4
    rot[x1] = _insert_after(rot[x1], x2, (v,))        # between x2 and apex
    rot[x2] = _replace(rot[x2], apex, v)
    rot[x3] = _replace(rot[x3], apex, v)
    rot[x4] = _insert_after(rot[x4], apex, (v,))      # between apex and x3
    rot.append((apex, x1, x2, x3, x4))
    return Triangulation(t.n + 1, rot)


def collapse_deg5(t: Triangulation, v: int, apex: int) -> Triangulation:
    """Inverse of expand_deg5: delete degree-5 vertex v, re-fan from apex.

    apex must be a neighbor of v; the two pentagon chords from apex are added
    back.  Raises if a chord already exists (the collapse would double it).
    """
    rv = t.rot[v]
    if len(rv) != 5:
        raise ValueError(f"vertex {v} has degree {len(rv)}, need 5")
    if apex not in rv:
        raise ValueError(f"{apex} is not a neighbor of {v}")
    if v != t.n - 1:
        raise ValueError("only the last-added vertex can be collapsed")
    i = rv.index(apex)
    x1, x2, x3, x4 = rv[(i + 1) % 5], rv[(i + 2) % 5], rv[(i + 3) % 5], rv[(i + 4) % 5]
    if x2 in t.rot[apex] or x3 in t.rot[apex]:
        raise ValueError("re-fanning would create a doubled edge")
    rot = list(t.rot[:-1])
    rot[apex] = _insert_after(_replace(rot[apex], v, x2), x2, (x3,))
    rot[x1] = tuple(u for u in rot[x1] if u != v)
    rot[x2] = _replace(rot[x2], v, apex)
    rot[x3] = _replace(rot[x3], v, apex)
    rot[x4] = tuple(u for u in rot[x4] if u != v)
    return Triangulation(t.n - 1, rot)


def successors(t: Triangulation) -> Iterator[Triangulation]:
    """All children of t under the three moves, invalid sites skipped."""
    for f in faces(t):
        yield expand_deg3(t, f)
    for e in t.edges():
        c, d = opposite_vertices(t, e)
        if c != d:
            yield expand_deg4(t, e)
    for a in range(t.n):
        ra = t.rot[a]
        if len(ra) >= 5:
            for x1 in ra:
                yield expand_deg5(t, a, x1)


def levels(n_max: int) -> Iterator[Tuple[int, List[Triangulation]]]:
    """Yield (order, triangulations) level by level from K4 up to n_max.

    Each level lists canonical representatives sorted by canonical code, so
    the output is independent of expansion order.
    """
    if not MIN_ORDER <= n_max <= MAX_ORDER:
        raise ValueError(f"order must be in {MIN_ORDER}..{MAX_ORDER}, got {n_max}")
    current = [canonical_code(K4)]
    yield 4, [triangulation_from_code(c) for c in current]
    for n in range(5, n_max + 1):
        seen: Dict[bytes, None] = {}
        for code in current:
            parent = triangulation_from_code(code)
            for child in successors(parent):
                ccode = canonical_code(child)
                if ccode not in seen:
                    seen[ccode] = None
        current = sorted(seen)
        yield n, [triangulation_from_code(c) for c in current]


def triangulations(n: int) -> List[Triangulation]:
    """All plane triangulations of order n, one canonical form per class."""
    for order, level in levels(n):
        if order == n:
            return level
    raise AssertionError("unreachable")
