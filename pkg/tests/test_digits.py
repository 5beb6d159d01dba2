import random

import pytest

from univoque import digits as dg
from univoque.digits import EpSeq, BaseClass


def seq(text):
    return dg.parse_seq(text)


def test_canonical_period_is_primitive():
    assert EpSeq((), (1, 0, 1, 0)) == EpSeq((), (1, 0))
    assert EpSeq((1, 1), (0, 0, 0)) == EpSeq((1, 1), (0,))


def test_canonical_preperiod_is_minimal():
    assert EpSeq((1, 1, 1, 0), (0,)) == EpSeq((1, 1, 1), (0,))
    assert EpSeq((1, 0), (1, 0)) == EpSeq((), (1, 0))
    # canonicalizing twice changes nothing
    s = EpSeq((0, 1, 1, 0, 1), (1, 0, 1))
    assert EpSeq(s.pre, s.per) == s


def test_equality_is_structural():
    assert seq("111(0)") == seq("1110(0)")
    assert seq("(10)") != seq("(01)")
    assert hash(seq("111(0)")) == hash(seq("11100(0)"))


def test_grammar_roundtrip():
    for text in ["111(0)", "(110)", "0(01)", "3,12,0(5,1)", "(1)"]:
        assert dg.format_seq(seq(text)) == text
    assert seq("111") == seq("111(0)")
    assert seq("(110)^") == seq("(110)")
    assert seq("0(10)") == seq("(01)")     # canonical form absorbs the preperiod
    with pytest.raises(ValueError):
        seq("1(")
    with pytest.raises(ValueError):
        seq("")


def test_reflect_examples():
    assert dg.reflect((1, 1, 0), 1) == (0, 0, 1)
    assert dg.reflect(seq("(10)"), 1) == seq("(01)")
    with pytest.raises(dg.AlphabetError):
        dg.reflect((2,), 1)


def test_reflect_is_involution():
    rng = random.Random(7)
    for _ in range(200):
        M = rng.randint(1, 5)
        s = EpSeq(tuple(rng.randint(0, M) for _ in range(rng.randint(0, 5))),
                  tuple(rng.randint(0, M) for _ in range(rng.randint(1, 5))))
        assert dg.reflect(dg.reflect(s, M), M) == s


def test_shift_examples():
    assert dg.shift(seq("(110)"), 1) == seq("(101)")
    assert dg.shift(seq("01(110)"), 2) == seq("(110)")
    s = seq("10(01)")
    assert dg.shift(s, 0) == s


def test_lex_cmp_examples():
    assert dg.lex_cmp(seq("(10)"), seq("(1100)")) == dg.LT
    s = seq("11(01)")
    assert dg.lex_cmp(s, s) == dg.EQ
    assert dg.lex_cmp(seq("(0)"), seq("0001(0100)")) == dg.LT


def test_lex_cmp_total_order_and_reflection():
    rng = random.Random(11)
    pool = []
    for _ in range(40):
        M = 2
        pool.append(EpSeq(tuple(rng.randint(0, M) for _ in range(rng.randint(0, 4))),
                          tuple(rng.randint(0, M) for _ in range(rng.randint(1, 4)))))
    for a in pool:
        for b in pool:
            c = dg.lex_cmp(a, b)
            assert c == -dg.lex_cmp(b, a)
            assert (c == dg.EQ) == (a == b)
            # reflection reverses the order
            assert dg.lex_cmp(dg.reflect(b, 2), dg.reflect(a, 2)) == c
    # transitivity on sorted triples
    import functools
    ordered = sorted(pool, key=functools.cmp_to_key(dg.lex_cmp))
    for x, y in zip(ordered, ordered[1:]):
        assert dg.lex_cmp(x, y) != dg.GT


def test_greedy_beta_predicate():
    assert dg.is_greedy_beta(1, seq("111(0)"))
    assert dg.is_greedy_beta(1, seq("1(0)"))          # the base-1 boundary word
    assert dg.is_greedy_beta(1, seq("101(0)"))        # greedy for the root of t^3-t^2-1
    assert not dg.is_greedy_beta(1, seq("011(0)"))
    assert not dg.is_greedy_beta(1, seq("(10)"))      # tail repeats the whole sequence
    assert not dg.is_greedy_beta(1, seq("(0)"))


def test_quasigreedy_alpha_predicate():
    assert dg.is_quasigreedy_alpha(1, seq("(110)"))
    assert dg.is_quasigreedy_alpha(1, seq("(10)"))
    assert not dg.is_quasigreedy_alpha(1, seq("(011)"))
    assert not dg.is_quasigreedy_alpha(1, seq("110(0)"))   # finite, hence not quasi-greedy
    assert dg.is_quasigreedy_alpha(1, seq("(0)"))


def test_quasigreedy_bound_holds_at_every_position():
    rng = random.Random(13)
    found = 0
    while found < 50:
        M = rng.randint(1, 3)
        s = EpSeq((), tuple(rng.randint(0, M) for _ in range(rng.randint(1, 6))))
        if not dg.is_quasigreedy_alpha(M, s):
            continue
        found += 1
        for n in range(1, len(s.pre) + 2 * len(s.per) + 1):
            assert dg.lex_cmp(dg.shift(s, n), s) != dg.GT


def test_classify_alpha():
    assert dg.classify_alpha(1, seq("(110)")) is BaseClass.IN_CLOSURE_U_NOT_U
    assert dg.classify_alpha(1, seq("(10)")) is BaseClass.IN_V_NOT_CLOSURE_U
    assert dg.classify_alpha(1, seq("(1)")) is BaseClass.IN_U
    assert dg.classify_alpha(1, seq("(100)")) is BaseClass.NOT_IN_V
    assert dg.classify_alpha(2, seq("(21)")) is BaseClass.IN_CLOSURE_U_NOT_U
    with pytest.raises(ValueError):
        dg.classify_alpha(1, seq("(011)"))


def test_classify_monotone_in_strictness():
    # the classes are nested: U passes the closure test, closure passes the V test
    rng = random.Random(17)
    seen = set()
    while len(seen) < 60:
        M = rng.randint(1, 4)
        s = EpSeq((), tuple(rng.randint(0, M) for _ in range(rng.randint(1, 6))))
        if not dg.is_quasigreedy_alpha(M, s):
            continue
        cls = dg.classify_alpha(M, s)
        seen.add((M, s, cls))
        strict = dg._reflected_tail_test(M, s, strict=True)
        weak = dg._reflected_tail_test(M, s, strict=False)
        if cls in (BaseClass.IN_U, BaseClass.IN_CLOSURE_U_NOT_U):
            assert strict and weak
        if cls is BaseClass.IN_V_NOT_CLOSURE_U:
            assert weak and not strict


def test_unique_expansion_seq():
    alpha = seq("(110)")
    assert dg.is_unique_expansion_seq(alpha, seq("(0)"), 1, dg.UNIQUE)
    assert not dg.is_unique_expansion_seq(alpha, seq("(110)"), 1, dg.UNIQUE)
    assert dg.is_unique_expansion_seq(alpha, seq("(110)"), 1, dg.DOUBLY_INFINITE)
    # strict implies weak
    assert dg.is_unique_expansion_seq(alpha, seq("(00101)"), 1, dg.UNIQUE)
    assert dg.is_unique_expansion_seq(alpha, seq("(00101)"), 1, dg.DOUBLY_INFINITE)


def test_finite_infinite_doubly_infinite():
    assert seq("111(0)").is_finite()
    assert not seq("(110)").is_finite()
    assert seq("(0)").is_infinite_seq()          # the zero sequence counts as infinite
    assert not seq("111(0)").is_infinite_seq()
    # doubly infinite: both the sequence and its reflection are infinite,
    # with the two constant sequences included by convention
    assert seq("(0)").is_doubly_infinite(1)
    assert seq("(1)").is_doubly_infinite(1)
    assert seq("(10)").is_doubly_infinite(1)
    assert not seq("111(0)").is_doubly_infinite(1)
    assert not seq("0(1)").is_doubly_infinite(1)


def test_beta_alpha_conversion():
    assert dg.alpha_from_beta(1, seq("111(0)")) == seq("(110)")
    assert dg.beta_from_alpha(1, seq("(110)")) == seq("111(0)")
    assert dg.beta_from_alpha(2, seq("(2)")) == seq("(2)")   # all-digits-M stays infinite
    assert dg.alpha_from_beta(1, seq("(1)")) == seq("(1)")
