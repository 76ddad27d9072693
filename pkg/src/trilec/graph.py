"""Small labeled simple graphs: isomorphism, subgraph embedding, K3,3 subdivisions.

Everything here targets graphs with at most ~16 vertices.  Adjacency is kept
both as frozensets (public) and as integer bitmasks (used by the searches).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import GraphError

Edge = tuple[int, int]
CanonicalCode = tuple[int, tuple[int, ...]]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    adjacency: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency length differs from order")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            m = 0
            for u in nbrs:
                if not 0 <= u < self.order:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.order) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def is_regular(self, k: Optional[int] = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        return k is None or degs <= {k}

    def relabel(self, perm: list[int]) -> "SimpleGraph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return build_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def subgraph_without(self, v: int) -> "SimpleGraph":
        """Delete vertex v, shifting the labels above it down by one."""
        shift = lambda x: x if x < v else x - 1
        return build_graph(
            self.order - 1, [(shift(a), shift(b)) for a, b in self.edges() if v not in (a, b)]
        )


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    adj = [set() for _ in range(order)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
        adj[u].add(v)
        adj[v].add(u)
    return SimpleGraph(order, tuple(frozenset(a) for a in adj))


def from_adjacency(adj: Iterable[Iterable[int]]) -> SimpleGraph:
    """Build from a list of neighbor lists (full or upper-triangular)."""
    adj = [list(a) for a in adj]
    return build_graph(len(adj), [(u, v) for u, nbrs in enumerate(adj) for v in nbrs])


def complete_graph(n: int) -> SimpleGraph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> SimpleGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> SimpleGraph:
    return build_graph(n, [])


def degree_profile(g: SimpleGraph) -> dict[int, int]:
    """Map each occurring degree d to the number of vertices of degree d."""
    return dict(sorted(Counter(g.degrees()).items()))


# --- canonical form -------------------------------------------------------


def _refine(g: SimpleGraph, cells: list[list[int]]) -> list[list[int]]:
    # colour refinement to an equitable ordered partition; splits are sorted
    # by label-free keys so the result commutes with relabeling
    masks = g.masks
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _twins(g: SimpleGraph, u: int, v: int) -> bool:
    mu = g.masks[u] & ~(1 << v)
    mv = g.masks[v] & ~(1 << u)
    return mu == mv


def canonical_labeling(g: SimpleGraph) -> tuple[CanonicalCode, list[int]]:
    """Return (code, order) where order[i] is the vertex given canonical label i.

    Individualisation/refinement over an equitable partition seeded by
    degrees; the code is the lexicographically least row-bitmask sequence
    over all leaves.  Twin vertices are explored only once per cell since the
    transposition swapping them is an automorphism.
    """
    n = g.order
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(g.degree(v), []).append(v)
    start = _refine(g, [by_deg[d] for d in sorted(by_deg)])

    best: list = [None, None]

    def leaf(cells):
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = g.masks[v]
            r = 0
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows.append(r)
        code = tuple(rows)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order

    def search(cells):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    if n == 0:
        return (0, ()), []
    search(start)
    return (n, best[0]), best[1]


def canonical_code(g: SimpleGraph) -> CanonicalCode:
    return canonical_labeling(g)[0]


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> Optional[list[int]]:
    """Return images[v] in g2 for each vertex v of g1, or None."""
    if g1.order != g2.order or g1.size != g2.size:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, o1 = canonical_labeling(g1)
    c2, o2 = canonical_labeling(g2)
    if c1 != c2:
        return None
    images = [0] * g1.order
    for a, b in zip(o1, o2):
        images[a] = b
    return images


def is_embedding(h: SimpleGraph, g: SimpleGraph, images: list[int]) -> bool:
    """Check that images is injective and sends every edge of h to an edge of g."""
    if len(images) != h.order or len(set(images)) != h.order:
        return False
    if any(not 0 <= x < g.order for x in images):
        return False
    return all(g.has_edge(images[u], images[v]) for u, v in h.edges())


# --- subgraph embedding ---------------------------------------------------


def _embedding_order(h: SimpleGraph) -> list[int]:
    # connectivity-first order so each new vertex is constrained by placed ones
    order: list[int] = []
    placed = 0
    remaining = set(range(h.order))
    while remaining:
        v = max(
            remaining,
            key=lambda x: ((h.masks[x] & placed).bit_count(), h.degree(x), -x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def iter_subgraph_embeddings(h: SimpleGraph, g: SimpleGraph) -> Iterator[list[int]]:
    """Yield every injective edge-preserving map from h into g (not necessarily induced)."""
    if h.order > g.order or h.size > g.size:
        return
    order = _embedding_order(h)
    hdeg = h.degrees()
    gdeg = g.degrees()
    # earlier-placed h-neighbours of each vertex in the search order
    back = []
    for i, v in enumerate(order):
        back.append([u for u in order[:i] if h.has_edge(u, v)])
    images = [-1] * h.order
    full = (1 << g.order) - 1

    def extend(i: int, used: int):
        if i == len(order):
            yield list(images)
            return
        v = order[i]
        cand = full & ~used
        for u in back[i]:
            cand &= g.masks[images[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if gdeg[x] < hdeg[v]:
                continue
            images[v] = x
            yield from extend(i + 1, used | low)
        images[v] = -1

    yield from extend(0, 0)


def subgraph_embedding(h: SimpleGraph, g: SimpleGraph) -> Optional[list[int]]:
    return next(iter_subgraph_embeddings(h, g), None)


# --- K3,3 subdivisions ----------------------------------------------------


def _disjoint_paths(g: SimpleGraph, pairs: list[Edge], free: int) -> bool:
    # free: bitmask of vertices usable as path interiors
    if not pairs:
        return True
    if len(pairs) > free.bit_count():
        return False
    a, b = pairs[0]
    rest = pairs[1:]
    masks = g.masks

    def walk(x: int, avail: int) -> bool:
        if masks[x] >> b & 1:
            if _disjoint_paths(g, rest, avail):
                return True
        nxt = masks[x] & avail
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            if walk(low.bit_length() - 1, avail & ~low):
                return True
        return False

    # first step must enter an interior vertex: a and b are not adjacent here
    nxt = masks[a] & free
    while nxt:
        low = nxt & -nxt
        nxt ^= low
        if walk(low.bit_length() - 1, free & ~low):
            return True
    return False


def _links_k33(g: SimpleGraph, left: tuple[int, ...], right: tuple[int, ...]) -> bool:
    branch = 0
    for v in left + right:
        branch |= 1 << v
    free = ((1 << g.order) - 1) & ~branch
    pairs = [(a, b) for a in left for b in right if not g.has_edge(a, b)]
    # a branch vertex needs a distinct free neighbour for each missing direct edge
    for v in left + right:
        need = sum(1 for a, b in pairs if v in (a, b))
        if (g.masks[v] & free).bit_count() < need:
            return False
    pairs.sort(key=lambda p: (g.masks[p[0]] & free).bit_count() + (g.masks[p[1]] & free).bit_count())
    return _disjoint_paths(g, pairs, free)


def contains_k33_subdivision(g: SimpleGraph) -> bool:
    """True iff some subdivision of K3,3 is a subgraph of g (brute force)."""
    cand = [v for v in range(g.order) if g.degree(v) >= 3]
    for six in combinations(cand, 6):
        first, others = six[0], six[1:]
        for pair in combinations(others, 2):
            left = (first,) + pair
            right = tuple(v for v in others if v not in pair)
            if _links_k33(g, left, right):
                return True
    return False
