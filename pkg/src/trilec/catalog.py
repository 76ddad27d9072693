"""Named graphs from the case analysis and the structural relations between them.

Three 6-regular graphs (G4P, G15P, G16P) are decoded from their published
upper-adjacency lists.  The triangulations G4, G15, G16, G17, G18 and the
icosahedron are each the only triangulation with their degree profile, so
they are taken from the enumeration rather than transcribed.  G11 is found
by searching the 7-vertex triangulations for the described structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import UnknownName
from .graph import SimpleGraph, build_graph, from_adjacency, subgraph_embedding
from .plane import PlaneTriangulation
from .enumeration import DegreeTriple, TriangulationSet, enumerate_triangulations, filter_by_profile

PAPER_VERBATIM = "PAPER-VERBATIM"
ENUMERATED = "ENUMERATED"
CONSTRUCTED = "CONSTRUCTED"

# upper-adjacency lists: entry i holds the neighbours of i that exceed i
UPPER_LISTS = {
    "G4P": [[1, 2, 3, 4, 5, 6], [2, 3, 4, 5, 7], [3, 5, 6, 7], [4, 6, 7], [5, 6, 7], [6, 7], [7], []],
    # printed without its opening bracket; the 12-entry reading is the only 6-regular one
    "G15P": [
        [1, 2, 3, 4, 5, 11], [2, 4, 6, 9, 11], [3, 6, 7, 11], [4, 7, 8, 11], [8, 9, 11],
        [6, 7, 8, 9, 10], [7, 9, 10], [8, 10], [9, 10], [10], [11], [],
    ],
    "G16P": [
        [1, 2, 3, 6, 8, 9], [2, 3, 4, 5, 8], [3, 5, 7, 8], [4, 6, 9], [5, 6, 7, 9],
        [6, 7, 9], [7, 8], [8, 9], [9], [],
    ],
}

SIGNED_SUMS = {"G4P": -288, "G15P": -384, "G16P": 256}

PROFILES = {
    "G4": DegreeTriple(2, 0, 6),
    "G11": DegreeTriple(1, 3, 3),
    "G15": DegreeTriple(0, 2, 8),
    "G16": DegreeTriple(0, 3, 6),
    "G17": DegreeTriple(0, 4, 4),
    "G18": DegreeTriple(0, 5, 2),
    "ICOSA": DegreeTriple(0, 0, 12),
}

NAMES = ("G4", "G4P", "G11", "G15", "G15P", "G16", "G16P", "G17", "G18", "ICOSA")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SimpleGraph
    embedding: Optional[PlaneTriangulation]
    provenance: str


SetGetter = Callable[[int], TriangulationSet]


@lru_cache(maxsize=None)
def _default_set(n: int) -> TriangulationSet:
    return enumerate_triangulations(n)


def is_g11(t: PlaneTriangulation) -> bool:
    """A 3-vertex on a triangle of 5-vertices, 4-vertices forming a triangle,
    and each 5-vertex adjacent to exactly two 4-vertices."""
    d = t.degrees()
    if sorted(d) != [3, 4, 4, 4, 5, 5, 5]:
        return False
    g = t.graph()
    v = d.index(3)
    tri = list(t.rotations[v])
    fours = [x for x in range(t.order) if d[x] == 4]
    if any(d[x] != 5 for x in tri):
        return False
    if not all(g.has_edge(a, b) for a in tri for b in tri if a < b):
        return False
    if not all(g.has_edge(a, b) for a in fours for b in fours if a < b):
        return False
    return all(sum(g.has_edge(x, f) for f in fours) == 2 for x in tri)


def unique_member(s: TriangulationSet, triple: DegreeTriple) -> PlaneTriangulation:
    hits = list(filter_by_profile(s, triple))
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} triangulations with profile {triple.as_tuple()}")
    return hits[0]


def catalog_graph(name: str, get_set: SetGetter = _default_set) -> CatalogEntry:
    if name in UPPER_LISTS:
        return CatalogEntry(name, from_adjacency(UPPER_LISTS[name]), None, PAPER_VERBATIM)
    if name == "G11":
        triple = PROFILES[name]
        hits = [t for t in filter_by_profile(get_set(triple.order), triple) if is_g11(t)]
        if len(hits) != 1:
            raise ValueError(f"{len(hits)} triangulations match the G11 description")
        return CatalogEntry(name, hits[0].graph(), hits[0], CONSTRUCTED)
    if name in PROFILES:
        triple = PROFILES[name]
        t = unique_member(get_set(triple.order), triple)
        return CatalogEntry(name, t.graph(), t, ENUMERATED)
    raise UnknownName(name)


# --- regularisation -------------------------------------------------------


def regularize(g: SimpleGraph, k: int, max_extra: int = 6) -> Optional[SimpleGraph]:
    """A simple k-regular graph of even order containing g on its own labels.

    New vertices get labels order(g), order(g)+1, ...; tries 0..max_extra
    additional vertices and returns the first completion found.
    """
    if g.max_degree > k:
        return None
    for extra in range(max_extra + 1):
        n = g.order + extra
        if n % 2 or n < k + 1:
            continue
        found = _complete(g, n, k)
        if found is not None:
            return found
    return None


def _complete(g: SimpleGraph, n: int, k: int) -> Optional[SimpleGraph]:
    need = [k - g.degree(v) for v in range(g.order)] + [k] * (n - g.order)
    if sum(need) % 2:
        return None
    adj = [set(g.adjacency[v]) if v < g.order else set() for v in range(n)]
    added: list[tuple[int, int]] = []

    def rec() -> bool:
        v = next((x for x in range(n) if need[x] > 0), None)
        if v is None:
            return True
        # new vertices are interchangeable: only the first untouched one is tried
        seen_blank = False
        for u in range(v + 1, n):
            if need[u] <= 0 or u in adj[v]:
                continue
            if u >= g.order and not adj[u]:
                if seen_blank:
                    continue
                seen_blank = True
            adj[v].add(u)
            adj[u].add(v)
            need[v] -= 1
            need[u] -= 1
            added.append((v, u))
            if rec():
                return True
            added.pop()
            need[v] += 1
            need[u] += 1
            adj[v].discard(u)
            adj[u].discard(v)
        return False

    if not rec():
        return None
    return build_graph(n, g.edges() + added)


# --- structural claims ----------------------------------------------------

CONTAINMENTS = [
    ("G4", "G4P"),
    ("G15", "G15P"),
    ("G16", "G16P"),
    ("G17", "G4P"),
    ("G18", "G4P"),
    ("G11", "G4"),
]

NON_CONTAINMENTS = [(a, b) for a in ("G4", "G17", "G18") for b in ("G4", "G17", "G18") if a != b]


def containment_witnesses(get_set: SetGetter = _default_set) -> dict[tuple[str, str], Optional[list[int]]]:
    entries = {name: catalog_graph(name, get_set) for name in NAMES}
    return {
        (h, g): subgraph_embedding(entries[h].graph, entries[g].graph)
        for h, g in CONTAINMENTS + NON_CONTAINMENTS
    }


def verify_catalog_claims(get_set: SetGetter = _default_set) -> dict[str, tuple[bool, object]]:
    """Check the containment relations, chi'(ICOSA) = 5 and the three signed sums."""
    from .edge_color import chromatic_index
    from .factor_sign import signed_factorization_sum

    entries = {name: catalog_graph(name, get_set) for name in NAMES}
    out: dict[str, tuple[bool, object]] = {}
    for h, g in CONTAINMENTS:
        m = subgraph_embedding(entries[h].graph, entries[g].graph)
        out[f"subgraph-{h}-in-{g}"] = (m is not None, m)
    cross = {
        f"{h}-in-{g}": subgraph_embedding(entries[h].graph, entries[g].graph) is not None
        for h, g in NON_CONTAINMENTS
    }
    out["no-subgraph-G4-G17-G18"] = (not any(cross.values()), cross)
    k = chromatic_index(entries["ICOSA"].graph)
    out["chromatic-index-icosahedron"] = (k == 5, k)
    for name, want in SIGNED_SUMS.items():
        r = signed_factorization_sum(entries[name].graph)
        out[f"atsum-{name}"] = (r.value == want, {"value": r.value, "factorizations": r.factorization_count})
    return out
