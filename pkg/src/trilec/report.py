"""The verify-paper pipeline: every checkable claim, one record each.

Claims run in a fixed order and never abort the run; an exception inside a
check is recorded as FAIL with the error as witness.  With ``skip_enum``
only cached enumerations are used and claims needing a missing one SKIP.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from . import catalog as cat
from .cache import TriangulationCache
from .edge_color import (
    exhaustive_choosability,
    find_list_edge_coloring,
    is_proper,
    respects_lists,
    sample_list_assignments,
)
from .enumeration import KNOWN_COUNTS, TriangulationSet, degree_sequence_cases, is_flip_closed, verify_uniqueness_cases
from .factor_sign import oracle_signed_sum, signed_factorization_sum
from .graph import (
    build_graph,
    canonical_code,
    complete_bipartite,
    complete_graph,
    contains_k33_subdivision,
    cycle_graph,
)
from .plane import canonical_triangulation_code, icosahedron

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

# columns of the published case table as (|V3|, |V4|, |V5|)
TABLE_1 = [
    (4, 0, 0), (3, 0, 3), (3, 1, 1), (2, 0, 6), (2, 1, 4), (2, 2, 2), (2, 3, 0),
    (1, 0, 9), (1, 1, 7), (1, 2, 5), (1, 3, 3), (1, 4, 1), (0, 0, 12), (0, 1, 10),
    (0, 2, 8), (0, 3, 6), (0, 4, 4), (0, 5, 2), (0, 6, 0),
]

ORACLE_CORPUS = {
    "K4": lambda: complete_graph(4),
    "K6": lambda: complete_graph(6),
    "C4": lambda: cycle_graph(4),
    "C6": lambda: cycle_graph(6),
    "Q3": lambda: build_graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b]),
    "K33": lambda: complete_bipartite(3, 3),
    "K8-PM": lambda: build_graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8) if v != u + 4]),
}


@dataclass
class Claim:
    id: str
    description: str
    status: str
    witness: Any = None
    elapsed: float = 0.0

    def record(self, timings: bool = False) -> dict:
        out = {"id": self.id, "description": self.description, "status": self.status, "witness": self.witness}
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class CertificationReport:
    claims: list[Claim] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.claims:
            counts[c.status] += 1
        return counts

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.claims) else PASS

    def by_id(self, cid: str) -> Claim:
        return next(c for c in self.claims if c.id == cid)

    def to_json(self, timings: bool = False) -> str:
        # timings are off by default so that equal inputs give identical bytes
        return json.dumps([c.record(timings) for c in self.claims], indent=1, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"{c.status:4}  {c.id:30} {c.description}  [{c.elapsed:.2f}s]" for c in self.claims]
        s = self.summary()
        lines.append(f"overall {self.status}: {s[PASS]} pass, {s[FAIL]} fail, {s[SKIP]} skip")
        return "\n".join(lines) + "\n"


class Skipped(Exception):
    pass


def run_verify_paper(
    seed: int = 0,
    trials: int = 100,
    skip_enum: bool = False,
    workers: int = 1,
    cache: Optional[TriangulationCache] = None,
    log: Optional[Callable[[str], None]] = None,
) -> CertificationReport:
    cache = cache if cache is not None else TriangulationCache()
    report = CertificationReport()

    def claim(cid: str, description: str):
        def wrap(fn: Callable[[], tuple[bool, Any]]):
            t0 = time.perf_counter()
            try:
                ok, witness = fn()
                status = PASS if ok else FAIL
            except Skipped as exc:
                status, witness = SKIP, str(exc)
            except Exception as exc:
                status, witness = FAIL, f"{type(exc).__name__}: {exc}"
            report.claims.append(Claim(cid, description, status, witness, time.perf_counter() - t0))
            if log:
                log(f"{status:4}  {cid}")
            return fn

        return wrap

    def get_set(n: int) -> TriangulationSet:
        if skip_enum:
            s = cache.load(n)
            if s is None:
                raise Skipped(f"no cached enumeration for n={n}")
            return s
        return cache.get(n)

    def entry(name: str):
        return cat.catalog_graph(name, get_set)

    @claim("table1", "the 19 solutions of 3*n3 + 2*n4 + n5 = 12 in table order")
    def _():
        got = [t.as_tuple() for t in degree_sequence_cases()]
        return got == TABLE_1, [list(t) for t in got]

    for n in range(4, 13):
        @claim(f"enum-n{n:02d}", f"{KNOWN_COUNTS[n]} triangulations on {n} vertices")
        def _(n=n):
            count = len(get_set(n))
            return count == KNOWN_COUNTS[n], count

    @claim("enum-flip-closed", "every enumerated set for n <= 8 is closed under flips")
    def _():
        closed = {str(n): is_flip_closed(get_set(n)) for n in range(4, 9)}
        return all(closed.values()), closed

    cases: dict[str, list[dict]] = {}

    def case_records() -> list[dict]:
        if "all" not in cases:
            cases["all"] = verify_uniqueness_cases(get_set)
        return cases["all"]

    for i in range(1, 20):
        @claim(f"case-{i:02d}", f"case {i}: Delta=5 triangulations whose 3-vertices see only 5-vertices")
        def _(i=i):
            rec = case_records()[i - 1]
            return rec["ok"], {k: v for k, v in rec.items() if k != "ok"}

    @claim("case-unique-raw", "profiles of cases 4, 11, 13, 15-18 occur once and case 14 never")
    def _():
        recs = case_records()
        got = {str(i): recs[i - 1]["with_profile"] for i in (4, 11, 13, 14, 15, 16, 17, 18)}
        return all(v == (0 if k == "14" else 1) for k, v in got.items()), got

    @claim("case-13-icosahedron", "the case-13 triangulation is the icosahedron")
    def _():
        t = entry("ICOSA").embedding
        return canonical_triangulation_code(t) == canonical_triangulation_code(icosahedron()), t.order

    @claim("case-11-g11", "the case-11 triangulation matches the G11 description")
    def _():
        g11 = entry("G11")
        return g11.embedding is not None and cat.is_g11(g11.embedding), [list(e) for e in g11.graph.edges()]

    @claim("catalog-enumerated", "named triangulations are the unique members of their profiles")
    def _():
        out = {}
        for name in ("G4", "G15", "G16", "G17", "G18", "ICOSA"):
            triple = cat.PROFILES[name]
            member = cat.unique_member(get_set(triple.order), triple)
            out[name] = canonical_code(entry(name).graph) == canonical_code(member.graph())
        return all(out.values()), out

    claims_box: dict[str, dict] = {}

    def catalog_claims() -> dict:
        if "all" not in claims_box:
            claims_box["all"] = cat.verify_catalog_claims(get_set)
        return claims_box["all"]

    for h, g in cat.CONTAINMENTS:
        @claim(f"subgraph-{h}-in-{g}", f"{h} is a subgraph of {g}")
        def _(key=f"subgraph-{h}-in-{g}"):
            return catalog_claims()[key]

    @claim("no-subgraph-G4-G17-G18", "none of G4, G17, G18 is a subgraph of another")
    def _():
        return catalog_claims()["no-subgraph-G4-G17-G18"]

    @claim("chromatic-index-icosahedron", "the icosahedron has chromatic index 5")
    def _():
        return catalog_claims()["chromatic-index-icosahedron"]

    for name, want in cat.SIGNED_SUMS.items():
        @claim(f"atsum-{name}", f"signed 1-factorization sum of {name} equals {want}")
        def _(name=name, want=want):
            r = signed_factorization_sum(cat.catalog_graph(name).graph, workers=workers)
            return r.value == want, {"value": r.value, "factorizations": r.factorization_count}

    @claim("atsum-ICOSA", "signed 1-factorization sum of the icosahedron is nonzero")
    def _():
        r = signed_factorization_sum(icosahedron().graph(), workers=workers)
        return r.value != 0, {"value": r.value, "factorizations": r.factorization_count}

    @claim("oracle-equivalence", "recursive signed sum equals brute-force enumeration on the corpus")
    def _():
        out = {}
        for name, make in ORACLE_CORPUS.items():
            g = make()
            out[name] = [signed_factorization_sum(g).value, oracle_signed_sum(g).value]
        return all(a == b for a, b in out.values()), out

    @claim("atsum-relabel-invariance", "|signed sum| unchanged under 20 random relabelings of K6 and G4P")
    def _():
        rng = np.random.default_rng(seed)
        out = {}
        for name, g in (("K6", complete_graph(6)), ("G4P", cat.catalog_graph("G4P").graph)):
            values = {abs(signed_factorization_sum(g).value)}
            for _ in range(20):
                perm = [int(x) for x in rng.permutation(g.order)]
                values.add(abs(signed_factorization_sum(g.relabel(perm)).value))
            out[name] = sorted(values)
        return all(len(v) == 1 for v in out.values()), out

    def low_degree_members() -> list[tuple[int, int, Any]]:
        out = []
        for n in range(4, 13):
            members = [t for _, t in sorted(get_set(n).members.items()) if max(t.degrees()) <= 5]
            out.extend((n, idx, t) for idx, t in enumerate(members))
        return out

    @claim("sampled-6-list-colouring", f"{trials} seeded 6-lists from 12 colours colour every Delta<=5 triangulation")
    def _():
        failures = []
        checked = 0
        for n, idx, t in low_degree_members():
            g = t.graph()
            for lists in sample_list_assignments(g, 6, 12, trials, seed * 1_000_003 + 1000 * n + idx):
                col = find_list_edge_coloring(g, lists)
                checked += 1
                if col is None or not (is_proper(col) and respects_lists(col, lists)):
                    failures.append([n, idx])
        return not failures, {"assignments": checked, "failures": failures}

    @claim("no-k33-subdivision", "no Delta<=5 triangulation contains a subdivided K3,3 (K3,3 itself does)")
    def _():
        found = [[n, idx] for n, idx, t in low_degree_members() if contains_k33_subdivision(t.graph())]
        sanity = contains_k33_subdivision(complete_bipartite(3, 3))
        return sanity and not found, {"offenders": found}

    @claim("choosability-micro", "a triangle is not 2-edge-choosable and C4 is")
    def _():
        got = [exhaustive_choosability(cycle_graph(3), 2), exhaustive_choosability(cycle_graph(4), 2)]
        return got == [False, True], got

    return report
