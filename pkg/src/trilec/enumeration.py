"""Sphere triangulations on up to 12 vertices, and the degree-sequence cases.

Generation is a breadth-first search of the flip graph starting from a
stacked triangulation.  Completeness rests on Wagner's theorem that any two
triangulations of the sphere on n vertices are joined by a sequence of
diagonal flips; ``is_flip_closed`` and the known counts
1, 1, 2, 5, 14, 50, 233, 1249, 7595 (n = 4..12) back this up.

In a triangulation with maximum degree 5 every vertex has degree 3, 4 or 5
and ``3*n3 + 2*n4 + n5 = 12``; ``degree_sequence_cases`` lists the 19
solutions in the usual table order (n3 descending, then n4 ascending).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import OutOfRange
from .plane import PlaneTriangulation, canonical_triangulation_code, flip_edge, stacked_triangulation

KNOWN_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595}


@dataclass(frozen=True)
class DegreeTriple:
    n3: int
    n4: int
    n5: int

    def __post_init__(self):
        if min(self.n3, self.n4, self.n5) < 0 or 3 * self.n3 + 2 * self.n4 + self.n5 != 12:
            raise ValueError(f"({self.n3}, {self.n4}, {self.n5}) violates 3*n3 + 2*n4 + n5 = 12")

    @property
    def order(self) -> int:
        return self.n3 + self.n4 + self.n5

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n3, self.n4, self.n5)


@dataclass
class TriangulationSet:
    n: int
    members: dict[tuple, PlaneTriangulation] = field(default_factory=dict)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members.values())

    def __contains__(self, code):
        return code in self.members


def degree_sequence_cases() -> list[DegreeTriple]:
    """The 19 nonnegative solutions, case 1 first."""
    return [
        DegreeTriple(n3, n4, 12 - 3 * n3 - 2 * n4)
        for n3 in range(4, -1, -1)
        for n4 in range((12 - 3 * n3) // 2 + 1)
    ]


def enumerate_triangulations(
    n: int, progress: Optional[Callable[[int], None]] = None
) -> TriangulationSet:
    """All triangulations of the sphere on n vertices up to isomorphism."""
    if not 4 <= n <= 12:
        raise OutOfRange(f"n={n} outside 4..12")
    seed = stacked_triangulation(n)
    found = TriangulationSet(n, {canonical_triangulation_code(seed): seed})
    queue = [seed]
    i = 0
    while i < len(queue):
        t = queue[i]
        i += 1
        for e in t.edges():
            f = flip_edge(t, e)
            if f is None:
                continue
            code = canonical_triangulation_code(f)
            if code not in found.members:
                found.members[code] = f
                queue.append(f)
        if progress is not None:
            progress(len(found))
    return found


def is_flip_closed(s: TriangulationSet) -> bool:
    for t in s:
        for e in t.edges():
            f = flip_edge(t, e)
            if f is not None and canonical_triangulation_code(f) not in s.members:
                return False
    return True


def profile_of(t: PlaneTriangulation) -> tuple[int, int, int]:
    d = t.degrees()
    return (d.count(3), d.count(4), d.count(5))


def filter_by_profile(s: TriangulationSet, triple: DegreeTriple) -> TriangulationSet:
    """Members whose degrees are exactly n3 threes, n4 fours and n5 fives."""
    if triple.order != s.n:
        return TriangulationSet(s.n)
    want = triple.as_tuple()
    return TriangulationSet(
        s.n,
        {c: t for c, t in s.members.items() if t.order == sum(want) and profile_of(t) == want},
    )


def three_vertices_see_only_fives(t: PlaneTriangulation) -> bool:
    """Every degree-3 vertex has all its neighbours of degree 5."""
    d = t.degrees()
    return all(
        all(d[u] == 5 for u in t.rotations[v]) for v in range(t.order) if d[v] == 3
    )


@dataclass
class CaseVerdict:
    case: int
    triple: DegreeTriple
    with_profile: int
    max_degree_five: int
    admissible: int
    members: list[PlaneTriangulation]

    @property
    def count(self) -> int:
        return self.admissible


def case_verdicts(get_set: Callable[[int], TriangulationSet]) -> list[CaseVerdict]:
    """Counts for each of the 19 cases.

    ``with_profile`` counts every triangulation with the exact degrees;
    ``max_degree_five`` keeps those with a 5-vertex; ``admissible`` further
    requires each 3-vertex to have only 5-vertex neighbours, the condition
    any edge-minimal counterexample satisfies.  ``members`` lists the
    admissible triangulations.
    """
    out = []
    for i, triple in enumerate(degree_sequence_cases(), start=1):
        s = filter_by_profile(get_set(triple.order), triple)
        delta5 = [t for t in s if triple.n5 > 0]
        adm = [t for t in delta5 if three_vertices_see_only_fives(t)]
        out.append(CaseVerdict(i, triple, len(s), len(delta5), len(adm), adm))
    return out


EXPECTED_CASE_COUNTS = {4: 1, 11: 1, 13: 1, 15: 1, 16: 1, 17: 1, 18: 1}


def verify_uniqueness_cases(get_set: Callable[[int], TriangulationSet]) -> list[dict]:
    """One record per case: the three counts and whether the verdict matches."""
    out = []
    for v in case_verdicts(get_set):
        want = EXPECTED_CASE_COUNTS.get(v.case, 0)
        out.append(
            {
                "case": v.case,
                "profile": list(v.triple.as_tuple()),
                "with_profile": v.with_profile,
                "max_degree_five": v.max_degree_five,
                "admissible": v.admissible,
                "expected": want,
                "ok": v.admissible == want,
            }
        )
    return out
