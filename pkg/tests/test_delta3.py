import random

import pytest

from splithc.delta3 import (
    Delta3Context,
    construct_cycle,
    extend_to_hamiltonian,
    find_universal_v1,
    prepare_context,
)
from splithc.errors import ClaimViolated, CoverageGap, PremiseViolated
from splithc.generators import GenSpec, generate
from splithc.graph import OrientedPath, validate_ham_cycle
from splithc.oracle import OracleBudget, oracle_solve
from splithc.paths import PathSystem, ShortCycleWitness
from splithc.split import recognize_split, star_free_level

from conftest import mk_split


def _premise_instance(seed, k=10, i=8, **extra):
    params = {"k": k, "i": i}
    params.update(extra)
    return generate(GenSpec("SplitDelta3InPremise", params, seed)).graph


def test_short_cycle_gate():
    found = 0
    for seed in range(60):
        g = _premise_instance(seed, k=11, i=8, plant_short=1)
        p = recognize_split(g)
        ctx = prepare_context(g, p)
        if isinstance(ctx, ShortCycleWitness):
            found += 1
            assert oracle_solve(g).kind == "no_cycle"
    assert found >= 1


def test_prepare_context_shape():
    g = _premise_instance(3)
    p = recognize_split(g)
    ctx = prepare_context(g, p)
    assert isinstance(ctx, Delta3Context)
    assert p.d_i[ctx.v] == 3 and len(ctx.n_i_v) == 3
    # The apex is always a singleton path of the reduced system.
    assert (ctx.v,) in [q.order for q in ctx.system.paths]
    # Census covers exactly the independent side minus the triple.
    total_i = sum((j - 1) // 2 * c for j, c in ctx.census.items())
    assert total_i == len(p.independent) - 3


def test_census_constraints_on_generated():
    sizes = [(9, 8), (10, 8), (11, 8), (13, 9), (15, 10)]
    for seed in range(150):
        k, i = sizes[seed % len(sizes)]
        g = _premise_instance(seed + 400, k=k, i=i)
        p = recognize_split(g)
        ctx = prepare_context(g, p)
        if isinstance(ctx, ShortCycleWitness):
            continue
        c = ctx.census
        assert not any(j >= 13 for j in c)
        if c.get(11):
            assert not (c.get(5) or c.get(7) or c.get(9))
        if c.get(9):
            assert not (c.get(5) or c.get(7) or c.get(11))
        assert c.get(7, 0) <= 2
        if c.get(7, 0) == 2:
            assert not c.get(5)
        if c.get(7, 0) == 1:
            assert c.get(5, 0) <= 1
        if not any(c.get(j) for j in (7, 9, 11)):
            assert c.get(5, 0) <= 2


def test_missing_triple_neighbor_is_a_star_witness():
    # A clique vertex with no neighbor among the apex triple completes an
    # induced 4-star, so such graphs are caught by the star classifier.
    g = mk_split(6, [(0, 1), (0, 2), (0, 3)])  # clique 4, 5 untouched by I
    p = recognize_split(g)
    st = star_free_level(g, p)
    assert not st.k14_free
    center, arms = st.witness4
    assert p.d_i[center] == 3
    k_arm = [a for a in arms if a in p.clique_set]
    assert len(k_arm) == 1


def _two_p5_instance():
    # Clique 0..9; near-universal 10 misses 9, whose star is covered by
    # the degree-3 chain vertices 14 and 16.  The reduced system is two
    # 5-paths, one 3-path and two singletons.
    return mk_split(10, [
        tuple(range(9)),          # 10
        (0, 1, 4, 7, 8, 9),       # 11
        (0, 3),                   # 12
        (1, 2),                   # 13
        (2, 3, 9),                # 14
        (4, 5),                   # 15
        (5, 6, 9),                # 16
        (7, 8),                   # 17
    ])


def _p7_p5_instance():
    # Same skeleton, with a joined 7-path (via the degree-3 vertex 14)
    # and an extended 5-path.
    return mk_split(10, [
        tuple(range(9)),          # 10
        (0, 1, 4, 5, 8, 9),       # 11
        (0, 8),                   # 12
        (1, 2),                   # 13
        (2, 3, 9),                # 14
        (3, 4),                   # 15
        (5, 6),                   # 16
        (6, 7, 9),                # 17
    ])


def _crafted_context(g):
    p = recognize_split(g)
    assert p.delta_i == 3 and star_free_level(g, p).k14_free
    ctx = prepare_context(g, p)
    assert isinstance(ctx, Delta3Context)
    return ctx


def test_two_p5_census_and_universal():
    ctx = _crafted_context(_two_p5_instance())
    assert ctx.census.get(5) == 2 and ctx.census.get(3) == 1
    big = [q for q in ctx.system.paths if len(q) == 5]
    v1 = find_universal_v1(ctx, big)
    assert v1 == 10
    for q in big:
        for w in q.order[2:-1:2]:
            assert ctx.g.has_edge(v1, w)
    cycle = construct_cycle(ctx)
    assert validate_ham_cycle(ctx.g, cycle)
    assert oracle_solve(ctx.g).has_cycle


def test_p7_p5_census_and_universal():
    ctx = _crafted_context(_p7_p5_instance())
    assert ctx.census.get(7) == 1 and ctx.census.get(5) == 1
    big = [q for q in ctx.system.paths if len(q) >= 5]
    v1 = find_universal_v1(ctx, big)
    assert v1 == 10
    cycle = construct_cycle(ctx)
    assert validate_ham_cycle(ctx.g, cycle)


def test_find_universal_v1_on_generated():
    # The guarantee covers two or more paths of five-plus vertices (the
    # cross-path pair argument) or one eleven-plus path; a lone 7-path
    # has only consecutive internal vertices and promises nothing.
    checked = 0
    for seed in range(150):
        g = _premise_instance(seed + 900, k=12 + seed % 3, i=9)
        p = recognize_split(g)
        ctx = prepare_context(g, p)
        if isinstance(ctx, ShortCycleWitness):
            continue
        big = [q for q in ctx.system.paths if len(q) >= 5]
        if len(big) < 2 and not any(len(q) >= 11 for q in ctx.system.paths):
            continue
        v1 = find_universal_v1(ctx, big)
        for q in big:
            for w in q.order[2:-1:2]:
                assert ctx.g.has_edge(v1, w)
        checked += 1
    # Qualifying configurations are rare in random draws (the crafted
    # fixtures above cover them deterministically); the loop asserts the
    # guarantee whenever one appears.


def test_find_universal_v1_trivial_for_three_vertex_paths():
    g = _premise_instance(5)
    p = recognize_split(g)
    ctx = prepare_context(g, p)
    if isinstance(ctx, ShortCycleWitness):
        pytest.skip("short-cycle draw")
    small = [q for q in ctx.system.paths if len(q) == 3][:1]
    if small:
        assert find_universal_v1(ctx, small) == ctx.n_i_v[0]


def test_construct_cycle_validates_everywhere():
    sizes = [(9, 8), (10, 8), (11, 8), (12, 8), (13, 9), (15, 10), (17, 9), (18, 8)]
    budget = OracleBudget(nodes=10_000_000, seconds=60)
    built = 0
    for seed in range(160):
        k, i = sizes[seed % len(sizes)]
        g = _premise_instance(seed + 2000, k=k, i=i)
        p = recognize_split(g)
        ctx = prepare_context(g, p)
        if isinstance(ctx, ShortCycleWitness):
            continue
        cycle = construct_cycle(ctx)
        assert validate_ham_cycle(g, cycle)
        built += 1
        if g.n <= 18:
            assert oracle_solve(g, budget).has_cycle
    assert built >= 100


def test_extend_to_hamiltonian_examples():
    # Desired walk covering everything closes directly.
    g = mk_split(4, [(0, 1), (2, 3)])
    p = recognize_split(g)
    desired = OrientedPath((0, 4, 1, 2, 5, 3))
    cycle = extend_to_hamiltonian(g, p, desired, [])
    assert validate_ham_cycle(g, cycle)

    # Leftover singleton drops into a clique-clique junction.
    g = mk_split(5, [(0, 1), (2, 3)])
    p = recognize_split(g)
    cycle = extend_to_hamiltonian(g, p, OrientedPath((0, 5, 1, 2, 6, 3)),
                                  [OrientedPath((4,))])
    assert validate_ham_cycle(g, cycle)

    # Leftover path splices in before an anchor adjacent to its endpoint.
    g = mk_split(6, [(0, 1, 4), (2, 3), (4, 5)])
    p = recognize_split(g)
    cycle = extend_to_hamiltonian(g, p, OrientedPath((0, 6, 1, 2, 7, 3)),
                                  [OrientedPath((4, 8, 5))], triple=(6, 7))
    assert validate_ham_cycle(g, cycle)


def test_extend_coverage_gap():
    g = mk_split(5, [(0, 1)])
    p = recognize_split(g)
    with pytest.raises(CoverageGap):
        extend_to_hamiltonian(g, p, OrientedPath((0, 5, 1)), [])


def test_verdict_iff_no_short_cycle():
    # The headline characterization on in-premise instances.
    from splithc.paths import find_short_cycle
    from splithc.solver import solve
    sizes = [(10, 8), (11, 8), (13, 9)]
    for seed in range(90):
        k, i = sizes[seed % len(sizes)]
        g = _premise_instance(seed + 5000, k=k, i=i, plant_short=1)
        p = recognize_split(g)
        out = solve(g)
        assert out.has_cycle == (find_short_cycle(g, p) is None)
