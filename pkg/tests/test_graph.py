import random

import pytest

from univoque import digits as dg
from univoque.base import BaseClass, golden_ratio_base, new_base_context, v_successor
from univoque.graph import (FULL, TILDE, TILDE1, build_graph, check_isomorphic,
                            connectivity_report, count_label_paths, cycle_word_matches,
                            is_strongly_connected, path_words, scc, tower_decompose)
from conftest import random_context


def names_of(g):
    return set(g.names())


def edges_by_name(g):
    byidx = {v.index: g.vertex_name(v) for v in g.vertices}
    return {(byidx[i], k, byidx[j]) for i, k, j in g.edges}


def test_vertex_count_formulas(battery):
    for ctx in battery:
        full = build_graph(ctx, FULL)
        assert len(full.vertices) == 2 * ctx.n_period + ctx.M - 1
        succ = v_successor(ctx)
        sfull = build_graph(succ, FULL)
        assert len(sfull.vertices) == succ.n_period + succ.M - 1


def test_min_v_graphs():
    g2 = build_graph(golden_ratio_base(2), FULL)
    assert len(g2.vertices) == 2
    assert sorted(g2.edges) == [(0, 0, 0), (1, 2, 1)]
    g1 = build_graph(golden_ratio_base(1), FULL)
    assert sorted(g1.edges) == [(0, 0, 0), (1, 1, 1)]
    # odd alphabet: middle vertices only receive edges from the extremes
    g3 = build_graph(golden_ratio_base(3), FULL)
    assert len(g3.vertices) == 4
    assert sorted(g3.edges) == [(0, 0, 0), (0, 0, 1), (3, 3, 2), (3, 3, 3)]


def test_central_fixture_322(base322):
    g = build_graph(base322, TILDE)
    assert names_of(g) == {"(b1,a3)", "(et2,a2)", "(a2,b2)", "(b2,th3)", "(b3,a1)"}
    assert edges_by_name(g) == {
        ("(b1,a3)", 1, "(b2,th3)"),
        ("(b1,a3)", 1, "(b3,a1)"),
        ("(et2,a2)", 2, "(b1,a3)"),
        ("(b2,th3)", 2, "(b3,a1)"),
        ("(b3,a1)", 3, "(b1,a3)"),
        ("(b3,a1)", 3, "(et2,a2)"),
        ("(a2,b2)", 2, "(et2,a2)"),
        ("(a2,b2)", 2, "(a2,b2)"),
        ("(a2,b2)", 2, "(b2,th3)"),
    }
    comps, cond = scc(g)
    byidx = {v.index: g.vertex_name(v) for v in g.vertices}
    comp_names = [sorted(byidx[v] for v in c) for c in comps]
    assert ["(a2,b2)"] in comp_names
    assert sorted(len(c) for c in comps) == [1, 4]
    core = build_graph(base322, TILDE1)
    assert names_of(core) == {"(b1,a3)", "(et2,a2)", "(b2,th3)", "(b3,a1)"}


def test_single_selfloop_is_one_scc(base322):
    g = build_graph(base322, TILDE)
    sub = [v for v in g.vertices if g.vertex_name(v) == "(a2,b2)"]
    assert len(sub) == 1
    comps, _ = scc(g)
    assert [sub[0].index] in comps


def test_uniform_out_labels(battery):
    for ctx in battery:
        for variant in (FULL, TILDE, TILDE1):
            g = build_graph(ctx, variant)
            for v in g.vertices:
                labels = {k for k, _j in g.out[v.index]}
                assert len(labels) <= 1
                if labels:
                    assert labels == {v.label}


def test_every_vertex_has_outgoing_edge(battery):
    # holds away from the smallest admissible base (the odd-alphabet minimum
    # has sink vertices between the switch intervals)
    for ctx in battery:
        for c in (ctx, v_successor(ctx)):
            g = build_graph(c, FULL)
            assert all(g.out[v.index] for v in g.vertices), c.beta


def test_edge_reflection_symmetry(battery):
    for ctx in battery:
        for variant in (FULL, TILDE):
            g = build_graph(ctx, variant)
            edges = {(i, k, j) for i, k, j in g.edges}
            for i, k, j in edges:
                ri = g.reflected_vertex_index(i)
                rj = g.reflected_vertex_index(j)
                assert (ri, ctx.M - k, rj) in edges


def test_incoming_below_b1_forced_to_zero(battery):
    for ctx in battery:
        g = build_graph(ctx, FULL)
        b1 = g.order.index_of["b1"]
        low = {v.index for v in g.vertices if v.right <= b1}
        first = g.vertices[0].index
        for i, k, j in g.edges:
            if j in low:
                assert i == first and k == 0


def test_core_subgraph_strongly_connected(battery):
    for ctx in battery:
        core = build_graph(ctx, TILDE1)
        assert is_strongly_connected(core), ctx.beta
        w = ctx.alpha_word()
        words = path_words(core, len(w))
        assert tuple(w) in words
        assert dg.word_reflect(w, ctx.M) in words


def test_connectivity_battery():
    expected = {
        (1, "111(0)"): (True, True),
        (1, "11011(0)"): (True, True),
        (4, "4331(0)"): (True, True),
        (3, "331(0)"): (True, True),
        (4, "322(0)"): (False, False),
        (1, "111001010(0)"): (True, False),   # connected, endpoint test inconclusive
        (1, "1110011011(0)"): (True, True),
        (1, "111001000111001(0)"): (False, False),
    }
    for (M, beta), (sc, suff) in expected.items():
        rep = connectivity_report(new_base_context(M, beta))
        assert rep.strongly_connected == sc, beta
        assert rep.reach_criterion == sc, beta
        assert rep.sufficient_b2 == suff, beta
        if M == 1:
            assert rep.m1_ab_criterion == sc, beta


def test_connectivity_patterns_differ_by_alphabet():
    # same digit pattern, opposite verdicts for alphabets {0,1} and {0,..,2}
    assert not connectivity_report(new_base_context(1, "111001000111001(0)")).strongly_connected
    assert connectivity_report(new_base_context(2, "222002000222002(0)")).strongly_connected


def test_isomorphism_chain(tribonacci, base331):
    for ctx in (tribonacci, base331):
        g0 = build_graph(ctx, FULL)
        c1 = v_successor(ctx)
        g1 = build_graph(c1, FULL)
        mapping = check_isomorphic(g0, g1)
        assert mapping is not None
        e1 = {(mapping[i], k, mapping[j]) for i, k, j in g0.edges}
        assert e1 == {(i, k, j) for i, k, j in g1.edges}
        g2 = build_graph(v_successor(c1), FULL)
        assert check_isomorphic(g1, g2) is None
    g = build_graph(tribonacci, FULL)
    ident = check_isomorphic(g, g)
    assert ident is not None


def test_tower_tribonacci(tribonacci):
    dec = tower_decompose(tribonacci, 2)
    assert [len(b) for b in dec.blocks] == [3, 6]
    assert len(dec.residual) == 3
    assert cycle_word_matches(dec.cycles[0][1], (1, 1, 0))
    assert cycle_word_matches(dec.cycles[1][1], (1, 1, 1, 0, 0, 0))


def test_tower_331(base331):
    dec = tower_decompose(base331, 3)
    assert [len(b) for b in dec.blocks] == [3, 6, 12]
    assert len(dec.residual) == 3 + base331.M - 1
    assert cycle_word_matches(dec.cycles[1][1], (3, 3, 1, 0, 0, 2))
    assert cycle_word_matches(dec.cycles[2][1], (3, 3, 1, 0, 0, 3, 0, 0, 2, 3, 3, 0))
    # pure cycles beyond the first level: one in-block successor each
    top = dec.graphs[-1]
    for path, _w in dec.cycles[1:]:
        inside = set(path)
        for v in path:
            assert sum(1 for _k, j in top.out[v] if j in inside) == 1


def test_isomorphism_rejects_same_size_pair(base331):
    # equal vertex and edge counts, different label structure
    other = new_base_context(3, "332(0)")
    ga = build_graph(base331, FULL)
    gb = build_graph(other, FULL)
    assert len(ga.vertices) == len(gb.vertices) and len(ga.edges) == len(gb.edges)
    assert check_isomorphic(ga, gb) is None


def test_tower_depth_four(tribonacci):
    dec = tower_decompose(tribonacci, 4)
    assert [len(b) for b in dec.blocks] == [3, 6, 12, 24]
    assert len(dec.residual) == 3


def test_tower_trivial_decomposition(tribonacci):
    dec = tower_decompose(tribonacci, 1)
    assert [len(b) for b in dec.blocks] == [3]
    assert len(dec.residual) == 3
    assert len(dec.graphs) == 2


def test_count_label_paths_basics(tribonacci):
    g2 = build_graph(golden_ratio_base(2), FULL)
    for L in (1, 3, 7):
        total, words = count_label_paths(g2, L, want_words=True)
        assert total == 2
        assert words == [(0,) * L, (2,) * L]
    g = build_graph(tribonacci, FULL)
    total, words = count_label_paths(g, 0, want_words=True)
    assert total == 1 and words == [()]
    t8, w8 = count_label_paths(g, 8, want_words=True)
    assert t8 == len(w8) == len(set(w8))


def test_dot_and_json_exports_deterministic(base322):
    g = build_graph(base322, TILDE)
    assert g.to_dot() == g.to_dot()
    payload = g.to_json()
    assert payload["variant"] == TILDE
    assert len(payload["vertices"]) == 5 and len(payload["edges"]) == 9
    assert g.to_dot().count("->") == 9


def test_central_subgraph_empty_at_even_minimum():
    # at the even-alphabet minimum the central interval is one switch block
    g = build_graph(golden_ratio_base(2), TILDE)
    assert g.vertices == [] and g.edges == []
    assert not is_strongly_connected(g)


def test_wide_alphabet_graph():
    ctx = golden_ratio_base(11)
    g = build_graph(ctx, FULL)
    assert len(g.vertices) == ctx.M + 1
    assert "th10" in g.to_dot()
    for v in g.vertices:
        assert len({k for k, _j in g.out[v.index]}) <= 1


def test_unsupported_classes_rejected():
    with pytest.raises(Exception):
        build_graph(new_base_context(1, "101(0)"), FULL)     # below the minimum
    with pytest.raises(Exception):
        build_graph(new_base_context(1, "(1)"), FULL)        # unique expansion of 1


def test_randomized_graph_properties():
    rng = random.Random(31)
    for _ in range(20):
        ctx = random_context(rng)
        g = build_graph(ctx, FULL)
        coalesced = ctx.n_period == 1 and ctx.M % 2 == 0   # the even-alphabet minimum
        if not coalesced:
            n_expected = (2 * ctx.n_period if ctx.base_class is BaseClass.IN_CLOSURE_U_NOT_U
                          else ctx.n_period) + ctx.M - 1
            assert len(g.vertices) == n_expected
        edges = {(i, k, j) for i, k, j in g.edges}
        for i, k, j in edges:
            assert (g.reflected_vertex_index(i), ctx.M - k,
                    g.reflected_vertex_index(j)) in edges
        for v in g.vertices:
            assert len({k for k, _j in g.out[v.index]}) <= 1
