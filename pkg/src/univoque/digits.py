"""Finite words and eventually periodic digit sequences.

Everything downstream (base classification, graph construction, expansion
counting) compares digit sequences lexicographically.  This module provides
the two carriers -- plain words as tuples of ints, and :class:`EpSeq` for
eventually periodic infinite sequences -- together with reflection, shifting,
and the lexicographic admissibility predicates for greedy / quasi-greedy
sequences and for the base classes.

A sequence over the alphabet ``{0, ..., M}`` is *finite* if it has a last
nonzero digit and *infinite* otherwise (the zero sequence counts as
infinite).  It is *doubly infinite* if both the sequence and its digit-wise
reflection ``c -> M - c`` are infinite.  All predicates here decide their
condition over a finite window, which is sufficient because every input is
eventually periodic.
"""

from __future__ import annotations

import math
from enum import Enum

Word = tuple  # digits as a tuple of ints

LT, EQ, GT = -1, 0, 1


class AlphabetError(ValueError):
    """A digit lies outside the ambient alphabet {0, ..., M}."""


class BaseClass(Enum):
    IN_U = "U"
    IN_CLOSURE_U_NOT_U = "closureU\\U"
    IN_V_NOT_CLOSURE_U = "V\\closureU"
    NOT_IN_V = "notInV"


def check_alphabet(digits, M):
    for d in digits:
        if not 0 <= d <= M:
            raise AlphabetError(f"digit {d} outside alphabet 0..{M}")


def word_reflect(w, M):
    check_alphabet(w, M)
    return tuple(M - d for d in w)


def word_plus(w, M):
    """Increment the last digit (requires it to be below M)."""
    if not w or w[-1] >= M:
        raise AlphabetError(f"cannot increment last digit of {w} within 0..{M}")
    return w[:-1] + (w[-1] + 1,)


def word_minus(w):
    """Decrement the last digit (requires it to be positive)."""
    if not w or w[-1] <= 0:
        raise AlphabetError(f"cannot decrement last digit of {w}")
    return w[:-1] + (w[-1] - 1,)


def _primitive(per):
    n = len(per)
    for p in range(1, n):
        if n % p == 0 and per == per[:p] * (n // p):
            return per[:p]
    return per


class EpSeq:
    """An eventually periodic sequence ``pre . (per)^inf`` in canonical form.

    Canonical means the period is primitive (not a power of a shorter word)
    and the preperiod is as short as possible: its last digit differs from
    the last digit of the period, so two EpSeq are equal as infinite
    sequences iff their (pre, per) pairs are identical.
    """

    __slots__ = ("pre", "per")

    def __init__(self, pre=(), per=(0,)):
        pre, per = tuple(pre), tuple(per)
        if not per:
            raise ValueError("period must be nonempty")
        if any(d < 0 for d in pre + per):
            raise ValueError("digits must be nonnegative")
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def __setattr__(self, *a):
        raise AttributeError("EpSeq is immutable")

    def __eq__(self, other):
        return isinstance(other, EpSeq) and self.pre == other.pre and self.per == other.per

    def __hash__(self):
        return hash((self.pre, self.per))

    def __repr__(self):
        return f"EpSeq({format_seq(self)!r})"

    def digit(self, i):
        """The digit at 0-based position ``i``."""
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n):
        return tuple(self.digit(i) for i in range(n))

    def is_zero(self):
        return not self.pre and self.per == (0,)

    def is_finite(self):
        """True if the sequence has a last nonzero digit."""
        return self.per == (0,) and bool(self.pre)

    def is_infinite_seq(self):
        """Infinitely many nonzero digits, or identically zero."""
        return not self.is_finite()

    def is_doubly_infinite(self, M):
        check_alphabet(self.pre + self.per, M)
        if self.per == (0,) and not self.pre:
            return True
        if self.per == (M,) and not self.pre:
            return True
        return any(d > 0 for d in self.per) and any(d < M for d in self.per)

    def finite_word(self):
        """The digits up to the last nonzero one (requires a finite sequence)."""
        if not self.is_finite() and not self.is_zero():
            raise ValueError(f"{self!r} is not finite")
        return self.pre


ZERO = EpSeq((), (0,))


def const_seq(d):
    return EpSeq((), (d,))


def reflect(s, M):
    """Digit-wise complement ``c -> M - c`` of a word or EpSeq."""
    if isinstance(s, EpSeq):
        return EpSeq(word_reflect(s.pre, M), word_reflect(s.per, M))
    return word_reflect(s, M)


def shift(s, n):
    """Drop the first ``n`` digits of an EpSeq."""
    if n < 0:
        raise ValueError("shift amount must be nonnegative")
    if n <= len(s.pre):
        return EpSeq(s.pre[n:], s.per)
    k = (n - len(s.pre)) % len(s.per)
    return EpSeq((), s.per[k:] + s.per[:k])


def _window(a, b):
    return max(len(a.pre), len(b.pre)) + math.lcm(len(a.per), len(b.per))


def lex_cmp(a, b):
    """Lexicographic comparison of two EpSeq; returns -1, 0 or 1.

    Decided over a window of length max preperiod + lcm of the periods,
    which covers every (phase, phase) pair of the two sequences.
    """
    for i in range(_window(a, b)):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return LT if da < db else GT
    return EQ


def _shift_window(s):
    # positions 1..|pre|+|per| exhaust all distinct (digit, shifted tail) pairs
    return len(s.pre) + len(s.per)


def is_greedy_beta(M, s):
    """True iff ``s`` is the greedy expansion of 1 in some base in (1, M+1].

    Characterization: every shifted tail after a digit below M is
    lexicographically smaller than the whole sequence.
    """
    check_alphabet(s.pre + s.per, M)
    if s.is_zero():
        return False
    for n in range(1, _shift_window(s) + 1):
        if s.digit(n - 1) < M and lex_cmp(shift(s, n), s) != LT:
            return False
    return True


def is_quasigreedy_alpha(M, s):
    """True iff ``s`` is the quasi-greedy expansion of 1 in some base in [1, M+1].

    Weak form of the greedy condition; when it holds, the shifted-tail bound
    in fact holds at every position.
    """
    check_alphabet(s.pre + s.per, M)
    if s.is_finite():
        return False
    for n in range(1, _shift_window(s) + 1):
        if s.digit(n - 1) < M and lex_cmp(shift(s, n), s) == GT:
            return False
    return True


def beta_from_alpha(M, alpha):
    """The greedy expansion of 1 for the base whose quasi-greedy expansion is ``alpha``.

    For a purely periodic alpha whose period ends below M the greedy
    expansion is the incremented period followed by zeros; otherwise the
    greedy expansion is infinite and equals alpha itself.
    """
    if not alpha.pre and alpha.per[-1] < M:
        return EpSeq(word_plus(alpha.per, M), (0,))
    return alpha


def alpha_from_beta(M, beta):
    """Quasi-greedy expansion of 1 derived from the greedy expansion ``beta``.

    A finite greedy expansion ``d1..dk`` resolves to the periodic sequence
    ``(d1..dk^-)^inf``; an infinite one is already quasi-greedy.
    """
    if beta.is_finite():
        return EpSeq((), word_minus(beta.finite_word()))
    return beta


def _reflected_tail_test(M, s, strict):
    # reflected shifted tails bounded by s at every position after a positive digit
    for n in range(1, _shift_window(s) + 1):
        if s.digit(n - 1) > 0:
            c = lex_cmp(reflect(shift(s, n), M), s)
            if c == GT or (strict and c == EQ):
                return False
    return True


def classify_alpha(M, s):
    """Classify the base with quasi-greedy expansion ``s`` (precondition:
    ``is_quasigreedy_alpha``).

    Returns the finest of: unique expansion of 1 (IN_U), limit of such bases
    (IN_CLOSURE_U_NOT_U), unique doubly infinite expansion only
    (IN_V_NOT_CLOSURE_U), or none of these (NOT_IN_V).  The first test runs
    on the greedy expansion, the other two on ``s`` itself.
    """
    if not is_quasigreedy_alpha(M, s):
        raise ValueError(f"{s!r} is not a quasi-greedy expansion over 0..{M}")
    if not _reflected_tail_test(M, s, strict=False):
        return BaseClass.NOT_IN_V
    if not _reflected_tail_test(M, s, strict=True):
        return BaseClass.IN_V_NOT_CLOSURE_U
    beta = beta_from_alpha(M, s)
    if _reflected_tail_test(M, beta, strict=True):
        return BaseClass.IN_U
    return BaseClass.IN_CLOSURE_U_NOT_U


UNIQUE = "UNIQUE"
DOUBLY_INFINITE = "DOUBLY_INFINITE"


def is_unique_expansion_seq(ctx_alpha, c, M, mode=UNIQUE):
    """Membership test for a digit sequence against the bound ``ctx_alpha``.

    UNIQUE mode decides whether ``c`` is the unique expansion of its value
    (strict inequalities); DOUBLY_INFINITE mode decides whether the value has
    a unique doubly infinite expansion, i.e. lies in the two-sided survivor
    set (weak inequalities).
    """
    if not is_quasigreedy_alpha(M, ctx_alpha):
        raise ValueError("context sequence is not quasi-greedy")
    check_alphabet(c.pre + c.per, M)
    strict = mode == UNIQUE
    for n in range(1, _shift_window(c) + 1):
        d = c.digit(n - 1)
        if d < M:
            r = lex_cmp(shift(c, n), ctx_alpha)
            if r == GT or (strict and r == EQ):
                return False
        if d > 0:
            r = lex_cmp(reflect(shift(c, n), M), ctx_alpha)
            if r == GT or (strict and r == EQ):
                return False
    return True


# ---------------------------------------------------------------------------
# text grammar: digits 0-9 written directly, larger digits comma-separated,
# period in parentheses, e.g. "111(0)", "(110)", "3,12,0(5,1)"

def parse_word(text):
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(ch) for ch in text)


def parse_seq(text):
    """Parse the digit-string grammar into an EpSeq.

    A missing parenthesized period means a finite word, i.e. period "(0)".
    A trailing caret after the closing parenthesis is accepted.
    """
    text = text.strip()
    if text.endswith("^"):
        text = text[:-1]
    if "(" in text:
        head, _, rest = text.partition("(")
        body, sep, tail = rest.partition(")")
        if not sep or tail:
            raise ValueError(f"malformed sequence literal {text!r}")
        per = parse_word(body)
        if not per:
            raise ValueError(f"empty period in {text!r}")
        return EpSeq(parse_word(head), per)
    word = parse_word(text)
    if not word:
        raise ValueError("empty sequence literal")
    return EpSeq(word, (0,))


def format_word(w):
    if any(d >= 10 for d in w):
        return ",".join(str(d) for d in w)
    return "".join(str(d) for d in w)


def format_seq(s):
    if any(d >= 10 for d in s.pre + s.per):
        pre = ",".join(str(d) for d in s.pre)
        per = ",".join(str(d) for d in s.per)
        return f"{pre}({per})"
    return f"{format_word(s.pre)}({format_word(s.per)})"
