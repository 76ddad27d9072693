"""Sphere triangulations stored as rotation systems.

A rotation system lists, for every vertex, its neighbours in cyclic order.
Faces are traced by the permutation ``(u, v) -> (v, succ_v(u))`` where
``succ_v`` is the cyclic successor in the rotation at ``v``.

Isomorphism of triangulations is decided on embeddings: by Whitney's
theorem a 3-connected planar graph has a unique embedding up to reflection,
so comparing rotation codes over both orientations is equivalent to
comparing the underlying abstract graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DiagonalAdjacent, EdgeNotPresent, NonSimple, NotATriangulation, WrongDegree
from .graph import SimpleGraph, build_graph

Face = tuple[int, int, int]
Rotations = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlaneTriangulation:
    rotations: Rotations

    @property
    def order(self) -> int:
        return len(self.rotations)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.rotations]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, r in enumerate(self.rotations) for v in sorted(r) if u < v]

    def graph(self) -> SimpleGraph:
        return build_graph(self.order, self.edges())

    def successor(self, v: int, u: int) -> int:
        r = self.rotations[v]
        return r[(r.index(u) + 1) % len(r)]

    def reflected(self) -> "PlaneTriangulation":
        return PlaneTriangulation(tuple(tuple(reversed(r)) for r in self.rotations))

    def relabel(self, perm: Sequence[int]) -> "PlaneTriangulation":
        rot = [()] * self.order
        for v, r in enumerate(self.rotations):
            rot[perm[v]] = tuple(perm[u] for u in r)
        return PlaneTriangulation(tuple(rot))


def _trace_faces(rotations: Rotations) -> list[list[int]]:
    succ = [{u: r[(i + 1) % len(r)] for i, u in enumerate(r)} for r in rotations]
    seen = set()
    faces = []
    for u, r in enumerate(rotations):
        for v in r:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                a, b = b, succ[b][a]
            faces.append(face)
    return faces


def from_rotation_system(rotations: Sequence[Sequence[int]]) -> PlaneTriangulation:
    """Validate a rotation system and wrap it as a triangulation."""
    rot = tuple(tuple(int(u) for u in r) for r in rotations)
    n = len(rot)
    if n < 4:
        raise NotATriangulation(f"need at least 4 vertices, got {n}")
    for v, r in enumerate(rot):
        if len(set(r)) != len(r):
            raise NonSimple(f"repeated neighbour in rotation of {v}")
        for u in r:
            if u == v:
                raise NonSimple(f"self-loop at {v}")
            if not 0 <= u < n:
                raise NonSimple(f"neighbour {u} of {v} out of range")
            if v not in rot[u]:
                raise NonSimple(f"edge {v}-{u} missing from rotation of {u}")
    faces = _trace_faces(rot)
    for f in faces:
        if len(f) != 3:
            raise NotATriangulation(f"face of length {len(f)}: {f}", face=tuple(f))
    n_edges = sum(len(r) for r in rot) // 2
    if len(faces) != 2 * n - 4 or n_edges != 3 * n - 6:
        raise NotATriangulation(f"{len(faces)} faces and {n_edges} edges on {n} vertices")
    return PlaneTriangulation(rot)


def faces(t: PlaneTriangulation) -> list[Face]:
    """All faces, each rotated to start at its smallest vertex, sorted."""
    out = []
    for f in _trace_faces(t.rotations):
        i = f.index(min(f))
        out.append(tuple(f[i:] + f[:i]))
    return sorted(out)


def flip_edge(t: PlaneTriangulation, e: tuple[int, int]) -> Optional[PlaneTriangulation]:
    """Replace edge ab by the opposite diagonal cd; None if cd already exists."""
    a, b = e
    if not t.has_edge(a, b):
        raise EdgeNotPresent(e)
    rot = t.rotations
    c = t.successor(b, a)  # face a -> b -> c
    d = t.successor(a, b)  # face b -> a -> d
    if c == d or d in rot[c]:
        return None
    if len(rot[a]) <= 3 or len(rot[b]) <= 3:
        # a degree-3 endpoint would drop to 2; only possible when c-d exists
        return None
    new = list(rot)
    new[a] = tuple(x for x in rot[a] if x != b)
    new[b] = tuple(x for x in rot[b] if x != a)
    rc = rot[c]
    i = rc.index(b)
    new[c] = rc[: i + 1] + (d,) + rc[i + 1:]
    rd = rot[d]
    j = rd.index(a)
    new[d] = rd[: j + 1] + (c,) + rd[j + 1:]
    return PlaneTriangulation(tuple(new))


def _drop_vertex(rot: list[tuple[int, ...]], v: int) -> PlaneTriangulation:
    shift = lambda x: x if x < v else x - 1
    return PlaneTriangulation(
        tuple(tuple(shift(u) for u in r) for w, r in enumerate(rot) if w != v)
    )


def delete_degree3_vertex(t: PlaneTriangulation, v: int) -> PlaneTriangulation:
    """Remove a 3-vertex; labels above v shift down by one."""
    if t.degree(v) != 3:
        raise WrongDegree(f"vertex {v} has degree {t.degree(v)}, expected 3")
    if t.order < 5:
        raise WrongDegree("deleting from K4 would leave a triangle")
    rot = [tuple(u for u in r if u != v) for r in t.rotations]
    return _drop_vertex(rot, v)


def collapse_degree4_vertex(
    t: PlaneTriangulation, v: int, diagonal: tuple[int, int]
) -> PlaneTriangulation:
    """Delete a 4-vertex v and add the diagonal xy across the resulting 4-face."""
    if t.degree(v) != 4:
        raise WrongDegree(f"vertex {v} has degree {t.degree(v)}, expected 4")
    x, y = diagonal
    rv = t.rotations[v]
    if x not in rv or y not in rv or (rv.index(x) - rv.index(y)) % 4 != 2:
        raise ValueError(f"{diagonal} are not opposite neighbours of {v}")
    if t.has_edge(x, y):
        raise DiagonalAdjacent(f"{x} and {y} are already adjacent")
    rot = []
    for w, r in enumerate(t.rotations):
        if w == x:
            r = tuple(y if u == v else u for u in r)
        elif w == y:
            r = tuple(x if u == v else u for u in r)
        else:
            r = tuple(u for u in r if u != v)
        rot.append(r)
    return _drop_vertex(rot, v)


# --- canonical codes ------------------------------------------------------


def _bfs_code(rot: Rotations, pos: list[dict[int, int]], v0: int, w0: int, step: int) -> tuple:
    n = len(rot)
    number = [0] * n
    first = [0] * n
    number[v0] = 1
    first[v0] = w0
    queue = [v0]
    code = []
    nxt = 2
    i = 0
    while i < n:
        v = queue[i]
        i += 1
        r = rot[v]
        d = len(r)
        k = pos[v][first[v]]
        for _ in range(d):
            u = r[k]
            k = (k + step) % d
            if not number[u]:
                number[u] = nxt
                nxt += 1
                first[u] = v
                queue.append(u)
            code.append(number[u])
        code.append(0)
    return tuple(code)


def _start_darts(rot: Rotations) -> list[tuple[int, int]]:
    # the darts whose (deg tail, deg head) class is rarest; the class is
    # defined without reference to labels, so the minimum stays canonical
    degs = [len(r) for r in rot]
    classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for v, r in enumerate(rot):
        dv = degs[v]
        for u in r:
            classes.setdefault((dv, degs[u]), []).append((v, u))
    key = min(classes, key=lambda k: (len(classes[k]), k))
    return classes[key]


def canonical_triangulation_code(t: PlaneTriangulation) -> tuple:
    """Label-free code; equal codes iff the underlying graphs are isomorphic."""
    rot = t.rotations
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    best = None
    for v, w in _start_darts(rot):
        for step in (1, -1):
            c = _bfs_code(rot, pos, v, w, step)
            if best is None or c < best:
                best = c
    return best


# --- constructions --------------------------------------------------------


def tetrahedron() -> PlaneTriangulation:
    return from_rotation_system([(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])


def stack_vertex(t: PlaneTriangulation, face: Face) -> PlaneTriangulation:
    """Insert a new vertex inside a face, joined to its three corners."""
    a, b, c = face
    if t.successor(b, a) != c:
        a, b, c = a, c, b
    if t.successor(b, a) != c:
        raise NotATriangulation(f"{face} is not a face", face=face)
    n = t.order
    rot = list(t.rotations)
    # face a -> b -> c: the new vertex goes after a at b, after b at c, after c at a
    for x, after in ((b, a), (c, b), (a, c)):
        r = rot[x]
        i = r.index(after) + 1
        rot[x] = r[:i] + (n,) + r[i:]
    rot.append((a, c, b))
    return PlaneTriangulation(tuple(rot))


def stacked_triangulation(n: int) -> PlaneTriangulation:
    """K4 with vertices repeatedly stacked into a face at the last vertex."""
    t = tetrahedron()
    while t.order < n:
        v = t.order - 1
        r = t.rotations[v]
        t = stack_vertex(t, (v, r[0], r[1]) if t.successor(r[0], v) == r[1] else (v, r[1], r[0]))
    return t


def octahedron() -> PlaneTriangulation:
    # poles 0 and 5, equator 1-2-3-4
    return from_rotation_system(
        [(1, 2, 3, 4), (0, 4, 5, 2), (0, 1, 5, 3), (0, 2, 5, 4), (0, 3, 5, 1), (1, 4, 3, 2)]
    )


def icosahedron() -> PlaneTriangulation:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom; lower vertex i
    # sits between upper vertices i and i+1
    up = lambda i: 1 + i % 5
    lo = lambda i: 6 + i % 5
    rot = [()] * 12
    rot[0] = tuple(up(i) for i in range(5))
    rot[11] = tuple(lo(i) for i in reversed(range(5)))
    for i in range(5):
        rot[up(i)] = (0, up(i - 1), lo(i - 1), lo(i), up(i + 1))
        rot[lo(i)] = (up(i + 1), up(i), lo(i - 1), 11, lo(i + 1))
    return from_rotation_system(rot)
