"""Signs of 1-factors and the signed sum over 1-factorizations.

For a perfect matching written with each edge as ``(i, j)``, ``i < j``, two
edges cross when their endpoints interleave.  The sign of a matching is
``(-1) ** crossings`` and the sign of a factorization is the product of its
factor signs.  A nonzero sum of signs over all 1-factorizations of a
k-regular graph certifies that the graph is k-list-edge-colourable.

``signed_factorization_sum`` is a recursive procedure: vertices
are matched lowest-first, the sign of a new edge flips once for every still
unmatched vertex it jumps over, and each factor begins by matching vertex 0
to its first remaining neighbour so that every unordered factorization is
visited once.  Completed factors are memoised on the remaining edge set.

``enumerate_one_factorizations`` is the brute-force oracle: it lists all
partitions of the edge set into perfect matchings with no sign tricks.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotRegular, OddOrder
from .graph import Edge, SimpleGraph

OrderedMatching = tuple[Edge, ...]
OrderedFactorization = tuple[OrderedMatching, ...]


@dataclass(frozen=True)
class SignedSumResult:
    value: int
    factorization_count: int


def edge_crossing(e1: Edge, e2: Edge) -> bool:
    (a, b), (c, d) = e1, e2
    return a < c < b < d or c < a < d < b


def ordered_matching(edges: Iterable[tuple[int, int]]) -> OrderedMatching:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def factor_sign(m: Sequence[Edge]) -> int:
    m = ordered_matching(m)
    crossings = sum(
        edge_crossing(m[i], m[j]) for i in range(len(m)) for j in range(i + 1, len(m))
    )
    return -1 if crossings % 2 else 1


def factorization_sign(f: Iterable[Sequence[Edge]]) -> int:
    return math.prod(factor_sign(m) for m in f)


def _check_input(g: SimpleGraph) -> int:
    if g.order % 2:
        raise OddOrder(f"order {g.order} is odd")
    if not g.is_regular():
        raise NotRegular(f"degree sequence {sorted(set(g.degrees()))} is not constant")
    return g.degree(0) if g.order else 0


def _upper_masks(g: SimpleGraph) -> tuple[int, ...]:
    return tuple(m & ~((2 << v) - 1) for v, m in enumerate(g.masks))


class _SignedSum:
    def __init__(self, order: int):
        self.full = (1 << order) - 1
        self.memo: dict[tuple[int, ...], tuple[int, int]] = {}

    def factorizations(self, upper: tuple[int, ...]) -> tuple[int, int]:
        # start a new factor on the remaining (regular) graph
        if not upper[0]:
            return 1, 1
        hit = self.memo.get(upper)
        if hit is not None:
            return hit
        first = upper[0] & -upper[0]
        sgn = -1 if (first.bit_length() - 2) % 2 else 1
        value, count = self.extend(
            (upper[0] ^ first,) + upper[1:], self.full & ~1 & ~first
        )
        result = (sgn * value, count)
        self.memo[upper] = result
        return result

    def extend(self, upper: tuple[int, ...], unmatched: int) -> tuple[int, int]:
        if not unmatched:
            return self.factorizations(upper)
        low = unmatched & -unmatched
        v = low.bit_length() - 1
        rest = unmatched ^ low
        cand = upper[v] & rest
        total = 0
        count = 0
        while cand:
            nbr = cand & -cand
            cand ^= nbr
            # unmatched vertices strictly between v and nbr are bridged
            sgn = -1 if (rest & (nbr - 1)).bit_count() % 2 else 1
            value, c = self.extend(upper[:v] + (upper[v] ^ nbr,) + upper[v + 1:], rest ^ nbr)
            total += sgn * value
            count += c
        return total, count

    def first_factor_branches(self, upper: tuple[int, ...]) -> list[tuple[int, tuple[int, ...], int]]:
        """Split the first factor after its two lowest forced choices."""
        first = upper[0] & -upper[0]
        sgn0 = -1 if (first.bit_length() - 2) % 2 else 1
        upper = (upper[0] ^ first,) + upper[1:]
        unmatched = self.full & ~1 & ~first
        if not unmatched:
            return [(sgn0, upper, 0)]
        low = unmatched & -unmatched
        v = low.bit_length() - 1
        rest = unmatched ^ low
        cand = upper[v] & rest
        branches = []
        while cand:
            nbr = cand & -cand
            cand ^= nbr
            sgn = -1 if (rest & (nbr - 1)).bit_count() % 2 else 1
            branches.append((sgn0 * sgn, upper[:v] + (upper[v] ^ nbr,) + upper[v + 1:], rest ^ nbr))
        return branches


def _run_branch(args: tuple[int, int, tuple[int, ...], int]) -> tuple[int, int]:
    order, sgn, upper, unmatched = args
    value, count = _SignedSum(order).extend(upper, unmatched)
    return sgn * value, count


def signed_factorization_sum(g: SimpleGraph, workers: int = 1) -> SignedSumResult:
    """Exact sum of factorization signs over the unordered 1-factorizations of g.

    Summing over ordered factorizations instead multiplies the value by k!.
    With ``workers > 1`` the branches of the first factor run in separate
    processes; the result does not depend on the worker count.
    """
    _check_input(g)
    if g.order == 0:
        return SignedSumResult(1, 1)
    upper = _upper_masks(g)
    engine = _SignedSum(g.order)
    if not upper[0]:
        return SignedSumResult(1, 1)
    if workers <= 1:
        value, count = engine.factorizations(upper)
        return SignedSumResult(value, count)
    tasks = [(g.order, s, u, m) for s, u, m in engine.first_factor_branches(upper)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_branch, tasks))
    return SignedSumResult(sum(p[0] for p in parts), sum(p[1] for p in parts))


# --- brute-force oracle ---------------------------------------------------


def perfect_matchings(order: int, edges: Iterable[Edge]) -> list[OrderedMatching]:
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out: list[OrderedMatching] = []

    def rec(free: frozenset[int], chosen: list[Edge]):
        if not free:
            out.append(ordered_matching(chosen))
            return
        v = min(free)
        for u in sorted(adj[v] & free):
            chosen.append((v, u))
            rec(free - {v, u}, chosen)
            chosen.pop()

    rec(frozenset(range(order)), [])
    return out


def enumerate_one_factorizations(g: SimpleGraph) -> list[OrderedFactorization]:
    """Every partition of E(g) into perfect matchings, each listed once.

    Factors inside a factorization are sorted, so the output is a set of
    unordered factorizations in a fixed presentation.
    """
    _check_input(g)
    if g.order == 0 or g.size == 0:
        return [()]
    out: list[OrderedFactorization] = []

    def rec(remaining: frozenset[Edge], chosen: list[OrderedMatching]):
        if not remaining:
            out.append(tuple(sorted(chosen)))
            return
        e = min(remaining)
        for m in perfect_matchings(g.order, remaining):
            if e in m:
                chosen.append(m)
                rec(remaining - set(m), chosen)
                chosen.pop()

    rec(frozenset(g.edges()), [])
    return out


def oracle_signed_sum(g: SimpleGraph) -> SignedSumResult:
    facs = enumerate_one_factorizations(g)
    return SignedSumResult(sum(factorization_sign(f) for f in facs), len(facs))
