import random

import pytest

from splithc.errors import DegreeTooHigh, NotBipartite, UsesCliqueEdge
from splithc.generators import GenSpec, generate
from splithc.graph import HamCycle, cycle_graph, graph_from_edges, validate_ham_cycle
from splithc.oracle import oracle_solve
from splithc.reduction import (
    BipartiteInstance,
    bipartite_from_graph,
    map_solution_back,
    reduce_to_split,
    verify_k15_free,
)
from splithc.split import NotSplit, recognize_split


def test_c6_example():
    g = cycle_graph(6)
    b = BipartiteInstance(g, (0, 2, 4), (1, 3, 5))
    out = reduce_to_split(b)
    assert oracle_solve(g).has_cycle
    r1, r2 = oracle_solve(out.h1), oracle_solve(out.h2)
    assert r1.has_cycle and r2.has_cycle
    back = map_solution_back(b, r1.cycle, r2.cycle)
    assert validate_ham_cycle(g, back)


def test_single_edge_example():
    g = graph_from_edges(2, [(0, 1)])
    out = reduce_to_split(BipartiteInstance(g, (0,), (1,)))
    assert sorted(out.h1.edges()) == [(0, 1)] == sorted(out.h2.edges())
    assert not oracle_solve(out.h1).has_cycle


def test_star_example_needs_both_images():
    # The 3-star with A = {hub}: h2 becomes K4 (Hamiltonian) while h1
    # stays the star; the conjunction answers no, like the source.
    star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    b = BipartiteInstance(star, (0,), (1, 2, 3))
    out = reduce_to_split(b)
    assert not oracle_solve(star).has_cycle
    assert not oracle_solve(out.h1).has_cycle
    assert oracle_solve(out.h2).has_cycle


def test_degree_guard():
    star5 = graph_from_edges(5, [(0, j) for j in range(1, 5)])
    with pytest.raises(DegreeTooHigh):
        BipartiteInstance(star5, (0,), (1, 2, 3, 4))


def test_not_bipartite_witnesses():
    tri = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotBipartite):
        BipartiteInstance(tri, (0, 2), (1,))
    with pytest.raises(NotBipartite) as exc:
        bipartite_from_graph(tri)
    walk = exc.value.witness
    assert len(walk) % 2 == 1  # odd closed walk


def test_two_coloring_roundtrip():
    g = cycle_graph(6)
    b = bipartite_from_graph(g)
    assert set(b.part_a) | set(b.part_b) == set(range(6))
    assert all(abs(len(b.part_a) - len(b.part_b)) <= 6 for _ in (0,))


def test_images_are_split_and_k15_free():
    rng = random.Random(8)
    for _ in range(150):
        na = rng.randrange(1, 8)
        nb = rng.randrange(1, 8)
        inst = generate(GenSpec("BipartiteDeg3",
                                {"na": na, "nb": nb, "plant": rng.randrange(2)},
                                rng.randrange(10**6)))
        b = BipartiteInstance(inst.graph, inst.part_a, inst.part_b)
        out = reduce_to_split(b)
        for h, p in ((out.h1, out.partition1), (out.h2, out.partition2)):
            assert not isinstance(recognize_split(h), NotSplit)
            assert verify_k15_free(h, p) is True


def test_dichotomy_on_random_instances():
    rng = random.Random(14)
    both = neither = 0
    for _ in range(250):
        na = rng.randrange(2, 7)
        nb = rng.randrange(2, 7)
        inst = generate(GenSpec("BipartiteDeg3",
                                {"na": na, "nb": nb, "plant": rng.randrange(2)},
                                rng.randrange(10**6)))
        g = inst.graph
        b = BipartiteInstance(g, inst.part_a, inst.part_b)
        out = reduce_to_split(b)
        src = oracle_solve(g).has_cycle
        img = oracle_solve(out.h1).has_cycle and oracle_solve(out.h2).has_cycle
        assert src == img
        both += src
        neither += not src
    assert both >= 10 and neither >= 10


def test_balance_forced_when_both_hamiltonian():
    rng = random.Random(15)
    for _ in range(120):
        n = rng.randrange(2, 7)
        inst = generate(GenSpec("BipartiteDeg3", {"na": n, "nb": n, "plant": 1},
                                rng.randrange(10**6)))
        b = BipartiteInstance(inst.graph, inst.part_a, inst.part_b)
        out = reduce_to_split(b)
        if oracle_solve(out.h1).has_cycle and oracle_solve(out.h2).has_cycle:
            assert len(b.part_a) == len(b.part_b)


def test_map_back_rejects_invalid_certificates():
    from splithc.errors import PremiseViolated
    g = cycle_graph(6)
    b = BipartiteInstance(g, (0, 2, 4), (1, 3, 5))
    out = reduce_to_split(b)
    good = oracle_solve(out.h1).cycle
    with pytest.raises(PremiseViolated):
        map_solution_back(b, HamCycle((0, 2, 1, 4, 3, 5)), good)
    with pytest.raises(PremiseViolated):
        map_solution_back(b, good, HamCycle((0, 2, 1, 4, 3, 5)))


def test_clique_edge_unreachable_on_valid_pipelines():
    # Whenever both images are Hamiltonian, mapping back never trips the
    # clique-edge guard and the result is a source cycle.
    rng = random.Random(16)
    mapped = 0
    for _ in range(150):
        n = rng.randrange(2, 7)
        inst = generate(GenSpec("BipartiteDeg3", {"na": n, "nb": n, "plant": 1},
                                rng.randrange(10**6)))
        b = BipartiteInstance(inst.graph, inst.part_a, inst.part_b)
        out = reduce_to_split(b)
        r1, r2 = oracle_solve(out.h1), oracle_solve(out.h2)
        if r1.has_cycle and r2.has_cycle:
            back = map_solution_back(b, r1.cycle, r2.cycle)   # must not raise
            assert validate_ham_cycle(inst.graph, back)
            mapped += 1
    assert mapped >= 20
