"""Digit expansions of concrete points and exact expansion counting.

Expansions of x are infinite paths in the digit-transition system whose
states are exact remainders: from value v the digit d is feasible when
q*v - d stays inside [0, M/(q-1)].  Because remainders of eventually
periodic inputs form a finite set, exhaustive exploration with exact
memoization decides whether a point has finitely many expansions (and then
materializes all of them) or reaches a branching cycle, which yields
infinitely many.

The witness constructor produces, for any admissible tail sequence, a point
with exactly m expansions for each m >= 1, by prefixing the tail with
``1 0^((m-1)N)``; the admissibility filters for the tail family are also
implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import digits as dg
from .algebraic import value_of_sequence
from .base import chain_limit_alpha
from .digits import EpSeq

EXACT = "EXACT"
INFINITE_CYCLE = "INFINITE_CYCLE"
CAP_EXCEEDED = "CAP_EXCEEDED"

DEFAULT_STATE_CAP = 10_000


class RangeError(ValueError):
    """The point lies outside [0, M/(q-1)]."""


class PeriodicityBoundError(RuntimeError):
    """No eventually periodic structure found within the step bound."""


def _check_range(ctx, x):
    if x.sign() < 0 or (x - ctx.kappa).sign() > 0:
        raise RangeError("value outside the expandable interval")


def greedy_digit(ctx, x):
    """Largest digit d with q*x - d >= 0."""
    qx = ctx.q * x
    for d in range(ctx.M, -1, -1):
        if (qx - d).sign() >= 0:
            return d, qx - d
    raise RangeError("negative value has no expansion digit")


def greedy_expand(ctx, x, L):
    """First L digits of the lexicographically largest expansion of x."""
    _check_range(ctx, x)
    out = []
    for _ in range(L):
        d, x = greedy_digit(ctx, x)
        out.append(d)
    return tuple(out)


def quasi_greedy_expand(ctx, x, step_bound=4096):
    """The lexicographically largest infinite expansion of x, as an EpSeq.

    Greedy digits are generated with exact remainders until either the
    remainder vanishes (finite greedy expansion: decrement the last digit
    and append the expansion of 1) or a remainder repeats (the greedy
    expansion itself is eventually periodic).  Points whose remainders do
    not close up within ``step_bound`` raise, never truncate.
    """
    _check_range(ctx, x)
    if x.sign() == 0:
        return dg.ZERO
    seen = {x: 0}
    digits = []
    cur = x
    for _step in range(step_bound):
        d, cur = greedy_digit(ctx, cur)
        digits.append(d)
        if cur.sign() == 0:
            word = tuple(digits)
            return EpSeq(dg.word_minus(word) + ctx.alpha.pre, ctx.alpha.per)
        if cur in seen:
            k = seen[cur]
            return EpSeq(tuple(digits[:k]), tuple(digits[k:]))
        seen[cur] = len(digits)
    raise PeriodicityBoundError(f"no periodic remainder within {step_bound} steps")


@dataclass
class ExpansionCount:
    kind: str
    count: int | None = None
    witnesses: tuple = ()

    def __repr__(self):
        if self.kind == EXACT:
            return f"ExpansionCount(EXACT({self.count}))"
        return f"ExpansionCount({self.kind})"


def count_expansions(ctx, x, cap=DEFAULT_STATE_CAP):
    """Count the expansions of x by exact exploration of its remainder graph.

    Returns EXACT(k) with all k expansions as witnesses when every reachable
    cycle is deterministic (each cycle state has a single feasible digit),
    INFINITE_CYCLE when some branching state lies on or above a cycle, and
    CAP_EXCEEDED when more than ``cap`` distinct remainders appear.
    """
    _check_range(ctx, x)
    kappa = ctx.kappa
    succ = {}
    frontier = [x]
    while frontier:
        v = frontier.pop()
        if v in succ:
            continue
        moves = []
        qv = ctx.q * v
        for d in range(ctx.M + 1):
            nxt = qv - d
            if nxt.sign() >= 0 and (nxt - kappa).sign() <= 0:
                moves.append((d, nxt))
        succ[v] = moves
        if len(succ) > cap:
            return ExpansionCount(CAP_EXCEEDED)
        for _d, nxt in moves:
            if nxt not in succ:
                frontier.append(nxt)

    comp_of, cyclic = _scc_values(succ)
    # a cycle is pure when all its states have out-degree 1
    impure = {c for v, c in comp_of.items() if c in cyclic and len(succ[v]) > 1}
    reach_impure = _reaches(succ, comp_of, impure, x)
    if reach_impure:
        return ExpansionCount(INFINITE_CYCLE)

    def emit_cycle(v):
        # deterministic tail from v: follow forced digits until v recurs
        tail = []
        cur = v
        while True:
            d, nxt = succ[cur][0]
            tail.append(d)
            cur = nxt
            if cur == v:
                break
        return tuple(tail)

    witnesses = []
    stack = [(x, ())]
    while stack:
        v, path = stack.pop()
        if comp_of[v] in cyclic:
            witnesses.append(EpSeq(path, emit_cycle(v)))
            if len(witnesses) > cap:
                return ExpansionCount(CAP_EXCEEDED)
            continue
        for d, nxt in reversed(succ[v]):
            stack.append((nxt, path + (d,)))
    witnesses.sort(key=lambda s: (s.pre, s.per))
    return ExpansionCount(EXACT, len(witnesses), tuple(witnesses))


def _scc_values(succ):
    """Tarjan over the remainder graph; returns component ids and cyclic ids."""
    index, low, comp_of = {}, {}, {}
    counter = [0]
    stack, onstack = [], set()
    cyclic = set()
    ncomp = [0]
    for root in list(succ):
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for _d, w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                cid = ncomp[0]
                ncomp[0] += 1
                for w in comp:
                    comp_of[w] = cid
                if len(comp) > 1 or any(nxt == v for _d, nxt in succ[v]):
                    cyclic.add(cid)
    return comp_of, cyclic


def _reaches(succ, comp_of, bad_comps, start):
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        if comp_of[v] in bad_comps:
            return True
        for _d, w in succ[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return False


# --- admissibility filters for tail families ---------------------------------

STRICT, WEAK = "STRICT", "WEAK"


@dataclass
class FilterReport:
    ok: bool
    failures: list                     # condition tags with the failing index
    starts_with_reflected_period: bool
    splice_pair_ok: bool               # simpler sufficient pair for the splice bound

    def __bool__(self):
        return self.ok


def f_family_filter(ctx, c, strictness=WEAK):
    """Admissibility of a tail sequence for the exact-count witnesses.

    Three families of lexicographic bounds against alpha: every tail of c
    after a digit below M (and at the start) stays below alpha; every
    reflected tail after a positive digit stays below alpha; and alpha's own
    tail spliced with c (incremented period tail followed by c) stays below
    alpha wherever the period digit is below M.  STRICT demands strict
    inequalities, WEAK allows equality.
    """
    ctx.require_graph_class()
    M, alpha = ctx.M, ctx.alpha
    w = ctx.alpha_word()
    N = len(w)
    strict = strictness == STRICT
    failures = []

    def bad(r):
        return r == dg.GT or (strict and r == dg.EQ)

    window = len(c.pre) + len(c.per)
    for n in range(0, window + 1):
        tail = dg.shift(c, n)
        if n == 0 or c.digit(n - 1) < M:
            if bad(dg.lex_cmp(tail, alpha)):
                failures.append(f"tail_upper@{n}")
        if n == 0 or c.digit(n - 1) > 0:
            if bad(dg.lex_cmp(dg.reflect(tail, M), alpha)):
                failures.append(f"tail_lower@{n}")
    for k in range(1, N):
        if w[k - 1] < M:
            spliced = EpSeq(dg.word_plus(w[k:], M) + c.pre, c.per)
            if bad(dg.lex_cmp(spliced, alpha)):
                failures.append(f"splice@{k}")

    pair_ok = True
    for k in range(1, N):
        if w[k - 1] < M:
            if not (tuple(c.prefix(k)) <= dg.word_reflect(w[:k], M)
                    and dg.lex_cmp(dg.shift(c, k), alpha) != dg.GT):
                pair_ok = False
    starts = c.prefix(N) == dg.word_reflect(w, M)
    return FilterReport(ok=not failures, failures=failures,
                        starts_with_reflected_period=starts, splice_pair_ok=pair_ok)


def default_tail(ctx, strictness=STRICT, max_period=None):
    """Lexicographically least admissible periodic tail in witness normal form.

    Candidates are the periodic sequences of period at most twice the alpha
    period that start with the reflected period word.  The default STRICT
    filter is what makes the exact-count witnesses exact; weak tails may put
    the remainder orbit on the switch boundary and blow the count up to
    infinity.
    """
    ctx.require_graph_class()
    w = ctx.alpha_word()
    N = len(w)
    cap = max_period or 2 * N
    rw = dg.word_reflect(w, ctx.M)
    # keep the exhaustive search bounded for long periods: shorten the free
    # suffix until the candidate pool is manageable
    while cap > N and (ctx.M + 1) ** (cap - N) > 20000:
        cap -= 1

    def extensions(prefix, upto):
        if len(prefix) == upto:
            yield prefix
            return
        for d in range(ctx.M + 1):
            yield from extensions(prefix + (d,), upto)

    best = None
    for length in range(N, cap + 1):
        for word in extensions(rw, length):
            c = EpSeq((), word)
            if c.prefix(N) != rw:
                continue
            if f_family_filter(ctx, c, strictness):
                if best is None or dg.lex_cmp(c, best) == dg.LT:
                    best = c
    if best is None:
        raise ValueError("no admissible periodic tail within the period cap")
    return best


def build_witness_xm(ctx, m, c=None):
    """A point with exactly m expansions, plus the m expansions themselves.

    The point is the value of ``1 0^((m-1)N) c``; its other expansions
    trade the leading 1 for j full alpha periods, the incremented period,
    and a shortened zero block, j = 0..m-2.
    """
    ctx.require_graph_class()
    if m < 1:
        raise ValueError("need m >= 1")
    if c is None:
        c = default_tail(ctx)
    rep = f_family_filter(ctx, c, WEAK)
    if not rep:
        raise ValueError(f"tail fails the admissibility filter: {rep.failures}")
    w = ctx.alpha_word()
    N = len(w)
    given = EpSeq((1,) + (0,) * ((m - 1) * N) + c.pre, c.per)
    x = value_of_sequence(ctx.field, given)
    expansions = [given]
    for j in range(m - 1):
        pre = (0,) + w * j + dg.word_plus(w, ctx.M) + (0,) * ((m - 2 - j) * N) + c.pre
        expansions.append(EpSeq(pre, c.per))
    return x, tuple(expansions)


# --- location of a base inside its chain window ------------------------------

@dataclass
class AlphaDecomposition:
    trivial: bool                  # the base is the window's left endpoint
    k_values: tuple                # block exponents, one full alpha period
    k_cycle_start: int


def alpha_structure(ctx, left_ctx):
    """Block decomposition of alpha over the window of a smaller base.

    For a base strictly inside the window of ``left_ctx`` (between it and
    the limit of its chain), alpha factors as ``w+`` followed by
    alternating blocks ``reflect(w^k w+)`` and ``w^k w+`` with a periodic,
    first-dominated exponent sequence.  Returns None when the base lies
    outside the window.
    """
    left_ctx.require_graph_class()
    ctx.require_graph_class()
    w = left_ctx.alpha_word()
    M = left_ctx.M
    if ctx.M != M:
        raise ValueError("windows require a common alphabet")
    if ctx.alpha == left_ctx.alpha:
        return AlphaDecomposition(trivial=True, k_values=(), k_cycle_start=0)
    limit = chain_limit_alpha(left_ctx)
    if dg.lex_cmp(left_ctx.beta, ctx.beta) != dg.LT or dg.lex_cmp(ctx.alpha, limit) != dg.LT:
        return None
    wp = dg.word_plus(w, M)
    rw, rwp = dg.word_reflect(w, M), dg.word_reflect(wp, M)
    mlen = len(w)
    alpha = ctx.alpha

    if tuple(alpha.prefix(mlen)) != wp:
        return None
    pos = mlen
    ks = []
    states = {}
    reflected = True
    k_cap = (len(alpha.pre) + 2 * len(alpha.per)) // mlen + 2
    while True:
        state = ((pos - len(alpha.pre)) % len(alpha.per) if pos >= len(alpha.pre) else -pos,
                 reflected)
        if state in states:
            return AlphaDecomposition(trivial=False, k_values=tuple(ks),
                                      k_cycle_start=states[state])
        states[state] = len(ks)
        plain, plus = (rw, rwp) if reflected else (w, wp)
        k = 0
        while alpha.prefix(pos + mlen)[pos:] == plain:
            pos += mlen
            k += 1
            if k > k_cap:
                return None
        if alpha.prefix(pos + mlen)[pos:] != plus:
            return None
        pos += mlen
        if ks and k > ks[0]:
            return None
        ks.append(k)
        reflected = not reflected
