import pytest

from univoque import digits as dg
from univoque.base import golden_ratio_base, new_base_context, v_successor
from univoque.graph import FULL, build_graph, path_words
from univoque.oracle import (U_PREFIX, V_PREFIX, brute_count_expansions,
                             enumerate_admissible_words)
from univoque import expansions as ex


def seq(text):
    return dg.parse_seq(text)


def test_empty_word(tribonacci):
    assert enumerate_admissible_words(tribonacci, 0, V_PREFIX) == {()}
    assert enumerate_admissible_words(tribonacci, 0, U_PREFIX) == {()}


def test_golden_ratio_words():
    phi = golden_ratio_base(1)
    assert enumerate_admissible_words(phi, 3, U_PREFIX) == {(0, 0, 0), (1, 1, 1)}
    weak = enumerate_admissible_words(phi, 3, V_PREFIX)
    assert weak == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)}
    # the weak set is closed under reflection
    assert {dg.word_reflect(w, 1) for w in weak} == weak


def test_integer_base_strict_vs_weak():
    q2 = golden_ratio_base(2)
    assert enumerate_admissible_words(q2, 4, U_PREFIX) == {(0,) * 4, (2,) * 4}
    weak = enumerate_admissible_words(q2, 2, V_PREFIX)
    assert (0, 1) in weak and (1, 1) in weak and (2, 0) not in weak


def test_prefix_sets_are_prefix_closed(tribonacci):
    for mode in (U_PREFIX, V_PREFIX):
        w5 = enumerate_admissible_words(tribonacci, 5, mode)
        w3 = enumerate_admissible_words(tribonacci, 3, mode)
        assert {w[:3] for w in w5} == w3


def test_successor_identity(tribonacci):
    # the weak language of a limit base is the strict language of its successor
    succ = v_successor(tribonacci)
    for L in (2, 5, 8):
        assert (enumerate_admissible_words(tribonacci, L, V_PREFIX)
                == enumerate_admissible_words(succ, L, U_PREFIX))


def test_graph_language_equality_spot(battery):
    for ctx in battery[:3]:
        g = build_graph(ctx, FULL)
        for L in (1, 3, 6):
            assert path_words(g, L) == enumerate_admissible_words(ctx, L, V_PREFIX)


def test_graph_language_equality_random_contexts():
    import random
    from conftest import random_context
    from univoque.base import BaseClass

    rng = random.Random(53)
    done = 0
    while done < 10:
        ctx = random_context(rng)
        mode = V_PREFIX if ctx.base_class is BaseClass.IN_CLOSURE_U_NOT_U else U_PREFIX
        g = build_graph(ctx, FULL)
        for L in (2, 5):
            assert path_words(g, L) == enumerate_admissible_words(ctx, L, mode), \
                (ctx.M, ctx.beta, L)
        done += 1


def test_brute_bounds_random_points(tribonacci, base322):
    import random

    rng = random.Random(59)
    for ctx in (tribonacci, base322):
        for _ in range(8):
            s = dg.EpSeq(tuple(rng.randint(0, ctx.M) for _ in range(rng.randint(0, 2))),
                         tuple(rng.randint(0, ctx.M) for _ in range(rng.randint(1, 2))))
            x = ctx.value(s)
            res = ex.count_expansions(ctx, x, cap=20000)
            lo, hi = brute_count_expansions(ctx, x, 12)
            if res.kind == ex.EXACT:
                assert lo <= res.count, (ctx.beta, s)
            else:
                assert hi >= 1 and hi >= lo >= 0


def test_length_cap():
    with pytest.raises(ValueError):
        enumerate_admissible_words(golden_ratio_base(1), 13, V_PREFIX)


def test_brute_bounds_trivial(tribonacci):
    zero = tribonacci.value(dg.ZERO)
    assert brute_count_expansions(tribonacci, zero, 10) == (1, 1)


def test_brute_bounds_witness(tribonacci):
    c = ex.default_tail(tribonacci)
    x2, _ = ex.build_witness_xm(tribonacci, 2, c)
    lo, hi = brute_count_expansions(tribonacci, x2, 18)
    assert lo == hi == 2


def test_brute_bounds_bracket_counts(tribonacci, base322):
    for ctx, texts in [(tribonacci, ["(110)", "0(10)", "(100)"]),
                       (base322, ["(321)", "1(30)"])]:
        for t in texts:
            x = ctx.value(seq(t))
            res = ex.count_expansions(ctx, x, cap=20000)
            if res.kind != ex.EXACT:
                continue
            lo, hi = brute_count_expansions(ctx, x, 14)
            assert lo <= res.count <= hi, (ctx.beta, t, lo, res.count, hi)


def test_brute_lower_bound_grows_for_infinite():
    q2 = new_base_context(2, "2(0)")
    one = q2.value(seq("(1)"))
    lo12, _ = brute_count_expansions(q2, one, 12)
    assert lo12 >= 12
    lo16, _ = brute_count_expansions(q2, one, 16)
    assert lo16 > lo12
