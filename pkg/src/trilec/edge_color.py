"""List edge colouring by exact backtracking.

Lists and colourings are plain dicts keyed by normalised edges ``(u, v)``
with ``u < v``.  Colours are small nonnegative integers; internally each
list is a bitmask.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Mapping, Optional

import numpy as np

from .errors import MissingList, TooLarge, WrongDegree
from .graph import Edge, SimpleGraph, norm_edge
from .plane import PlaneTriangulation

ListAssignment = dict[Edge, frozenset[int]]
EdgeColoring = dict[Edge, int]


def _mask(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def _normalise_lists(g: SimpleGraph, lists: Mapping) -> list[int]:
    norm = {norm_edge(*e): v for e, v in lists.items()}
    out = []
    for e in g.edges():
        if e not in norm:
            raise MissingList(e)
        out.append(_mask(norm[e]))
    return out


def is_proper(coloring: Mapping[Edge, int]) -> bool:
    seen: dict[int, set[int]] = {}
    for (u, v), c in coloring.items():
        for x in (u, v):
            s = seen.setdefault(x, set())
            if c in s:
                return False
            s.add(c)
    return True


def respects_lists(coloring: Mapping[Edge, int], lists: Mapping) -> bool:
    norm = {norm_edge(*e): v for e, v in lists.items()}
    return all(c in norm[norm_edge(*e)] for e, c in coloring.items())


def _solve(edges: list[Edge], masks: list[int], used: dict[int, int]) -> Optional[list[int]]:
    # fail-first: always branch on the edge with fewest available colours,
    # breaking ties towards larger degree sum
    m = len(edges)
    colors = [-1] * m
    weight = {}
    for u, v in edges:
        weight[u] = weight.get(u, 0) + 1
        weight[v] = weight.get(v, 0) + 1
    tie = [-(weight[u] + weight[v]) for u, v in edges]

    def rec(left: int) -> bool:
        if not left:
            return True
        best = -1
        best_avail = 0
        best_key = None
        for i in range(m):
            if colors[i] >= 0:
                continue
            u, v = edges[i]
            avail = masks[i] & ~(used.get(u, 0) | used.get(v, 0))
            key = (avail.bit_count(), tie[i])
            if best_key is None or key < best_key:
                best, best_avail, best_key = i, avail, key
                if key[0] == 0:
                    return False
        u, v = edges[best]
        uu, uv = used.get(u, 0), used.get(v, 0)
        avail = best_avail
        while avail:
            bit = avail & -avail
            avail ^= bit
            colors[best] = bit.bit_length() - 1
            used[u] = uu | bit
            used[v] = uv | bit
            if rec(left - 1):
                return True
        colors[best] = -1
        used[u] = uu
        used[v] = uv
        return False

    return colors if rec(m) else None


def find_list_edge_coloring(g: SimpleGraph, lists: Mapping) -> Optional[EdgeColoring]:
    """A proper colouring choosing each edge's colour from its list, or None."""
    edges = g.edges()
    masks = _normalise_lists(g, lists)
    colors = _solve(edges, masks, {})
    if colors is None:
        return None
    return dict(zip(edges, colors))


def uniform_lists(g: SimpleGraph, k: int) -> ListAssignment:
    full = frozenset(range(1, k + 1))
    return {e: full for e in g.edges()}


def chromatic_index(g: SimpleGraph) -> int:
    if g.size == 0:
        raise ValueError("graph has no edges")
    k = g.max_degree
    while find_list_edge_coloring(g, uniform_lists(g, k)) is None:
        k += 1
    return k


def residual_lists(
    g: SimpleGraph, partial: Mapping[Edge, int], lists: Mapping, frontier
) -> ListAssignment:
    """Remove from each frontier edge's list the colours already seen at its ends."""
    at_vertex: dict[int, set[int]] = {}
    for (u, v), c in partial.items():
        at_vertex.setdefault(u, set()).add(c)
        at_vertex.setdefault(v, set()).add(c)
    norm = {norm_edge(*e): frozenset(c) for e, c in lists.items()}
    out = {}
    for e in frontier:
        e = norm_edge(*e)
        seen = at_vertex.get(e[0], set()) | at_vertex.get(e[1], set())
        out[e] = norm[e] - seen
    return out


def extend_over_removed_vertex(
    t: PlaneTriangulation, v: int, phi: Mapping[Edge, int], lists: Mapping
) -> Optional[EdgeColoring]:
    """Extend a colouring of t - v (in t's labels) to the three edges at v.

    The two edges with the smallest residual lists get distinct colours
    first and the third edge takes whatever is left; if that greedy step
    fails, all combinations are tried before giving up.
    """
    if t.degree(v) != 3:
        raise WrongDegree(f"vertex {v} has degree {t.degree(v)}, expected 3")
    phi = {norm_edge(*e): c for e, c in phi.items()}
    star = [norm_edge(v, x) for x in t.rotations[v]]
    res = residual_lists(t.graph(), phi, lists, star)
    ordered = sorted(star, key=lambda e: (len(res[e]), e))
    a, b, c = ordered
    for ca in sorted(res[a]):
        for cb in sorted(res[b] - {ca}):
            left = res[c] - {ca, cb}
            if left:
                out = dict(phi)
                out.update({a: ca, b: cb, c: min(left)})
                return out
    return None


def _canonical_assignments(m: int, k: int) -> Iterator[list[frozenset[int]]]:
    # lists drawn from colours 0..k*m-1 where every fresh colour is the next
    # unused one, which removes assignments that differ by a colour renaming
    def rec(i: int, used: int, acc: list[frozenset[int]]):
        if i == m:
            yield list(acc)
            return
        for s in range(min(k, used), -1, -1):
            fresh = frozenset(range(used, used + k - s))
            for old in combinations(range(used), s):
                acc.append(frozenset(old) | fresh)
                yield from rec(i + 1, used + k - s, acc)
                acc.pop()

    yield from rec(0, 0, [])


def exhaustive_choosability(g: SimpleGraph, k: int) -> bool:
    """True iff every assignment of k-element lists to E(g) admits a colouring."""
    edges = g.edges()
    if len(edges) > 6:
        raise TooLarge(f"{len(edges)} edges; exhaustive check is capped at 6")
    for lists in _canonical_assignments(len(edges), k):
        colors = _solve(edges, [_mask(l) for l in lists], {})
        if colors is None:
            return False
    return True


def sample_list_assignments(
    g: SimpleGraph, k: int, universe: int, trials: int, seed: int
) -> Iterator[ListAssignment]:
    """Seeded stream of assignments; each list is a uniform k-subset of 1..universe."""
    if universe < k:
        raise ValueError("universe smaller than list size")
    rng = np.random.default_rng(seed)
    edges = g.edges()
    for _ in range(trials):
        yield {
            e: frozenset(int(c) + 1 for c in rng.choice(universe, size=k, replace=False))
            for e in edges
        }
