import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algorithm1 import upper_lists, weighted_sum
from trilec.catalog import catalog_graph
from trilec.errors import NotRegular, OddOrder
from trilec.factor_sign import (
    edge_crossing,
    enumerate_one_factorizations,
    factor_sign,
    factorization_sign,
    oracle_signed_sum,
    perfect_matchings,
    signed_factorization_sum,
)
from trilec.graph import build_graph, complete_bipartite, complete_graph, cycle_graph
from trilec.plane import icosahedron
from trilec.report import ORACLE_CORPUS


@pytest.mark.parametrize(
    "e1, e2, want",
    [((0, 2), (1, 3), True), ((0, 1), (2, 3), False), ((0, 3), (1, 2), False), ((1, 3), (0, 2), True)],
)
def test_edge_crossing(e1, e2, want):
    assert edge_crossing(e1, e2) is want


@pytest.mark.parametrize(
    "m, want",
    [([(0, 1), (2, 3)], 1), ([(0, 2), (1, 3)], -1), ([(0, 3), (1, 4), (2, 5)], -1), ([(2, 3), (0, 1)], 1)],
)
def test_factor_sign(m, want):
    assert factor_sign(m) == want


def test_factorization_signs():
    k4 = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]
    assert factorization_sign(k4) == -1
    assert factorization_sign(reversed(k4)) == -1
    assert factorization_sign([[(0, 1), (2, 3)], [(1, 2), (0, 3)]]) == 1
    assert factorization_sign([[(0, 2), (1, 3)]]) == -1


def test_published_sums(catalog):
    assert signed_factorization_sum(catalog["G4P"].graph).value == -288
    assert signed_factorization_sum(catalog["G15P"].graph).value == -384
    assert signed_factorization_sum(catalog["G16P"].graph).value == 256


def test_small_sums():
    assert signed_factorization_sum(complete_graph(2)).value == 1
    r = signed_factorization_sum(complete_graph(4))
    assert (r.value, r.factorization_count) == (-1, 1)
    assert signed_factorization_sum(complete_graph(6)).value == 6


def test_no_perfect_matching_gives_zero():
    # two disjoint triangles: 2-regular and even order, but each component is odd
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert signed_factorization_sum(g) == oracle_signed_sum(g)
    assert signed_factorization_sum(g).factorization_count == 0


def test_input_validation():
    with pytest.raises(OddOrder):
        signed_factorization_sum(cycle_graph(5))
    with pytest.raises(NotRegular):
        signed_factorization_sum(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    with pytest.raises(OddOrder):
        enumerate_one_factorizations(cycle_graph(5))


def test_oracle_counts():
    assert len(enumerate_one_factorizations(complete_graph(4))) == 1
    facs = enumerate_one_factorizations(cycle_graph(6))
    assert len(facs) == 1 and len(facs[0]) == 2
    assert len(enumerate_one_factorizations(complete_graph(6))) == 6
    assert len(perfect_matchings(6, complete_graph(6).edges())) == 15


@pytest.mark.parametrize("name", sorted(ORACLE_CORPUS))
def test_engine_matches_oracle_and_transcription(name):
    g = ORACLE_CORPUS[name]()
    engine = signed_factorization_sum(g)
    assert engine == oracle_signed_sum(g)
    assert engine.value == weighted_sum(upper_lists(g))


@pytest.mark.parametrize("name", ["G4P", "G16P"])
def test_engine_matches_transcription_on_catalog(catalog, name):
    g = catalog[name].graph
    assert signed_factorization_sum(g).value == weighted_sum(upper_lists(g))


def test_parity_invariant():
    for make in ORACLE_CORPUS.values():
        r = signed_factorization_sum(make())
        assert (r.value - r.factorization_count) % 2 == 0


@st.composite
def regular_graphs(draw):
    kind = draw(st.sampled_from(["K6", "Q3", "K33", "K8-PM", "C8", "K44"]))
    g = {
        "K6": lambda: complete_graph(6),
        "Q3": ORACLE_CORPUS["Q3"],
        "K33": lambda: complete_bipartite(3, 3),
        "K8-PM": ORACLE_CORPUS["K8-PM"],
        "C8": lambda: cycle_graph(8),
        "K44": lambda: complete_bipartite(4, 4),
    }[kind]()
    perm = draw(st.permutations(range(g.order)))
    return g.relabel(list(perm))


@settings(max_examples=40, deadline=None)
@given(regular_graphs())
def test_relabelled_graphs_agree_with_oracle(g):
    r = signed_factorization_sum(g)
    assert r == oracle_signed_sum(g)
    assert r.value == weighted_sum(upper_lists(g))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(8)))
def test_magnitude_relabel_invariant_g4p(perm):
    g = catalog_graph("G4P").graph
    r = signed_factorization_sum(g.relabel(list(perm)))
    assert abs(r.value) == 288
    assert r.factorization_count == 416


def test_workers_do_not_change_result(catalog):
    g = catalog["G15P"].graph
    assert signed_factorization_sum(g, workers=2) == signed_factorization_sum(g)


def test_icosahedron_sum_nonzero():
    r = signed_factorization_sum(icosahedron().graph())
    assert r.value != 0


def test_every_oracle_factorization_is_a_partition():
    g = complete_graph(6)
    for f in enumerate_one_factorizations(g):
        edges = list(itertools.chain.from_iterable(f))
        assert sorted(edges) == g.edges()
        for m in f:
            assert sorted(itertools.chain.from_iterable(m)) == list(range(6))
