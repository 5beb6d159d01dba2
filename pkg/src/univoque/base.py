"""Base contexts: classification, successor chains, and the special points.

A base is always given symbolically through the greedy expansion of 1 (a
finite digit word, or a periodic sequence for bases where that expansion is
infinite); the numeric value q is never an input.  For bases whose
quasi-greedy expansion alpha is periodic with primitive period N, the
context carries the partition points of the graph construction:

* ``a_i`` -- the value of the greedy digit tail starting at position i,
  for i = 1..N+1 (a_1 = 1, a_{N+1} = 0);
* ``b_i = M/(q-1) - a_i`` -- their reflections;
* ``theta_j = j/q`` and ``eta_j = (j-1)/q + M/(q^2-q)`` -- the endpoints of
  the switch region, where the first digit of an expansion is not forced.

Each point also gets its quasi-greedy expansion as an exact comparison key;
sorting by those keys must agree with exact algebraic comparison, and
``order_points`` verifies that it does.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import digits as dg
from .algebraic import Q, AlgebraicReal, base_polynomial, field_for_base, value_of_sequence
from .digits import BaseClass, EpSeq


class InternalConsistencyError(AssertionError):
    """The lexicographic and algebraic orders disagreed; must never happen."""


class UnsupportedClassError(ValueError):
    """Operation requires a base whose expansion of 1 is periodic (not unique)."""


GRAPH_CLASSES = (BaseClass.IN_CLOSURE_U_NOT_U, BaseClass.IN_V_NOT_CLOSURE_U)


@dataclass
class BaseContext:
    M: int
    beta: EpSeq
    alpha: EpSeq
    base_class: BaseClass
    defining_poly: tuple
    field: object
    n_period: int = 0                   # primitive period of alpha when periodic
    below_min_v: bool = False           # informational flag for NOT_IN_V inputs
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def q(self):
        return AlgebraicReal(self.field, self.field.gen())

    @property
    def kappa(self):
        """The right endpoint M/(q-1) of the expandable interval."""
        if "kappa" not in self._cache:
            self._cache["kappa"] = self.M / (self.q - 1)
        return self._cache["kappa"]

    def value(self, seq):
        return value_of_sequence(self.field, seq)

    def q_approx(self, places=8):
        return self.q.decimal(places)

    def require_graph_class(self):
        if self.base_class not in GRAPH_CLASSES:
            raise UnsupportedClassError(
                f"base class {self.base_class.value} has no interval graph "
                "(the expansion of 1 must be periodic but not unique)")

    def alpha_word(self):
        """The primitive period of alpha (graph classes only)."""
        self.require_graph_class()
        return self.alpha.per

    def to_json(self):
        return {
            "M": self.M,
            "beta": dg.format_seq(self.beta),
            "alpha": dg.format_seq(self.alpha),
            "class": self.base_class.value,
            "q_approx": self.q_approx(12),
            "poly": list(self.defining_poly),
        }


def new_base_context(M, beta, precision=Q(1, 10**12)):
    """Build a context from the greedy expansion of 1 (digit string or EpSeq)."""
    if isinstance(beta, str):
        beta = dg.parse_seq(beta)
    dg.check_alphabet(beta.pre + beta.per, M)
    if not dg.is_greedy_beta(M, beta):
        raise ValueError(f"{dg.format_seq(beta)} is not a greedy expansion of 1 over 0..{M}")
    if beta == EpSeq((1,), (0,)):
        raise ValueError("greedy expansion 1(0) means base 1, which is outside every construction")
    alpha = dg.alpha_from_beta(M, beta)
    base_class = dg.classify_alpha(M, alpha)
    n_period = 0
    if base_class in GRAPH_CLASSES:
        n_period = len(alpha.per)
        rebuilt = EpSeq(dg.word_plus(alpha.per, M), (0,))
        if rebuilt != beta:
            raise ValueError(
                f"non-primitive greedy input {dg.format_seq(beta)}: the periodic expansion "
                f"{dg.format_seq(alpha)} corresponds to {dg.format_seq(rebuilt)}")
    ctx = BaseContext(
        M=M,
        beta=beta,
        alpha=alpha,
        base_class=base_class,
        defining_poly=base_polynomial(M, beta),
        field=field_for_base(M, beta, precision),
        n_period=n_period,
        below_min_v=(base_class is BaseClass.NOT_IN_V),
    )
    return ctx


def golden_ratio_base(M):
    """The smallest base with a unique doubly infinite expansion of 1."""
    if M < 1:
        raise ValueError("alphabet bound must be at least 1")
    if M % 2 == 0:
        m = M // 2
        return new_base_context(M, EpSeq((m + 1,), (0,)))
    m = (M + 1) // 2
    return new_base_context(M, EpSeq((m, m), (0,)))


def v_successor(ctx):
    """The next base (upward) whose expansion of 1 is doubly-infinite-unique.

    If alpha has primitive period w, the successor's alpha is
    ``(w+ reflect(w+))^inf``, equivalently its greedy expansion is
    ``w+ reflect(w) 0^inf``.
    """
    ctx.require_graph_class()
    w = ctx.alpha_word()
    wp = dg.word_plus(w, ctx.M)
    beta = EpSeq(wp + dg.word_reflect(w, ctx.M), (0,))
    out = new_base_context(ctx.M, beta)
    if out.base_class is not BaseClass.IN_V_NOT_CLOSURE_U:
        raise InternalConsistencyError("successor base must fall strictly between the closure classes")
    return out


def r_chain(ctx, k):
    """The k-th base of the chain ``beta(r_k) = w+ reflect(w)^k 0^inf``.

    The chain starts at the given context (k = 0) and increases strictly; its
    first element is of the in-between class and all later ones are limits of
    uniqueness bases.
    """
    ctx.require_graph_class()
    if k < 0:
        raise ValueError("chain index must be nonnegative")
    if k == 0:
        return ctx
    w = ctx.alpha_word()
    wp = dg.word_plus(w, ctx.M)
    beta = EpSeq(wp + dg.word_reflect(w, ctx.M) * k, (0,))
    out = new_base_context(ctx.M, beta)
    expected = BaseClass.IN_V_NOT_CLOSURE_U if k == 1 else BaseClass.IN_CLOSURE_U_NOT_U
    if out.base_class is not expected:
        raise InternalConsistencyError(
            f"chain element {k} classified as {out.base_class.value}, expected {expected.value}")
    return out


def chain_limit_alpha(ctx):
    """Quasi-greedy expansion at the upper endpoint of the chain: ``w+ reflect(w)^inf``."""
    w = ctx.alpha_word()
    return EpSeq(dg.word_plus(w, ctx.M), dg.word_reflect(w, ctx.M))


# --- special points ---------------------------------------------------------

POINT_KIND_RANK = {"a": 0, "b": 1, "th": 2, "et": 3}


def point_sort_key(name):
    for prefix in ("th", "et", "a", "b"):
        if name.startswith(prefix):
            return (POINT_KIND_RANK[prefix], int(name[len(prefix):]))
    raise ValueError(f"unknown point name {name!r}")


@dataclass
class SpecialPoints:
    """Exact values and quasi-greedy comparison keys of the partition points.

    ``a`` and ``b`` are 1-based lists of length N+2 (index N+1 holds the
    interval endpoints 0 and M/(q-1)); ``theta`` is indexed 0..M and ``eta``
    1..M+1.  ``qg_key`` maps the point names "a1".."aN", "b1".."bN",
    "th0".."thM", "et1".."etM+1" to EpSeq keys, and ``value`` to the exact
    values.
    """

    a: list
    b: list
    theta: list
    eta: list
    qg_key: dict
    value: dict


def special_points(ctx):
    ctx.require_graph_class()
    if "special_points" in ctx._cache:
        return ctx._cache["special_points"]
    M, N = ctx.M, ctx.n_period
    w = ctx.alpha_word()
    qinv = 1 / ctx.q
    kappa = ctx.kappa

    a = [None] * (N + 2)
    b = [None] * (N + 2)
    keys, values = {}, {}
    for i in range(1, N + 1):
        tail = dg.word_plus(w[i - 1:], M)
        a[i] = ctx.value(EpSeq(tail, (0,)))
        b[i] = kappa - a[i]
        keys[f"a{i}"] = EpSeq(w[i - 1:], w)
        keys[f"b{i}"] = dg.reflect(keys[f"a{i}"], M)
        values[f"a{i}"] = a[i]
        values[f"b{i}"] = b[i]
    a[N + 1] = ctx.value(dg.ZERO)
    b[N + 1] = kappa

    theta = [None] * (M + 1)
    eta = [None] * (M + 2)
    for j in range(0, M + 1):
        theta[j] = j * qinv
        name = f"th{j}"
        keys[name] = dg.ZERO if j == 0 else EpSeq((j - 1,), w)
        values[name] = theta[j]
    for j in range(1, M + 2):
        eta[j] = kappa - theta[M + 1 - j]
        name = f"et{j}"
        keys[name] = dg.reflect(keys[f"th{M + 1 - j}"], M)
        values[name] = eta[j]

    pts = SpecialPoints(a=a, b=b, theta=theta, eta=eta, qg_key=keys, value=values)
    ctx._cache["special_points"] = pts
    return pts


@dataclass
class PointOrder:
    """Sorted equality classes of the named partition points.

    ``classes[k]`` is the list of names whose values coincide, sorted by the
    fixed name precedence (a, b, th, et, then index); ``values[k]`` is the
    common exact value.  ``index_of`` maps each name to its class index.
    """

    classes: list
    values: list
    index_of: dict

    def chain(self):
        return "<".join("=".join(cls) for cls in self.classes)


def order_points(ctx):
    """Total order of the special points, cross-checked two ways.

    Points are sorted by the lexicographic order of their quasi-greedy keys;
    exact algebraic comparison then confirms every coincidence and every
    strict step.  A disagreement would falsify the order isomorphism between
    sequences and values and raises InternalConsistencyError.
    """
    if "point_order" in ctx._cache:
        return ctx._cache["point_order"]
    pts = special_points(ctx)
    names = sorted(pts.qg_key, key=point_sort_key)
    names.sort(key=lambda nm: _KeyWrap(pts.qg_key[nm]))
    classes, values = [], []
    for nm in names:
        if classes and dg.lex_cmp(pts.qg_key[nm], values[-1][0]) == dg.EQ:
            classes[-1].append(nm)
        else:
            classes.append([nm])
            values.append((pts.qg_key[nm], pts.value[nm]))
    for cls, (key, val) in zip(classes, values):
        cls.sort(key=point_sort_key)
        for nm in cls[1:]:
            if pts.value[nm].cmp(val) != 0:
                raise InternalConsistencyError(
                    f"key order says {cls[0]} = {nm} but the values differ")
    for k in range(len(values) - 1):
        if values[k][1].cmp(values[k + 1][1]) >= 0:
            raise InternalConsistencyError(
                f"key order says {classes[k][0]} < {classes[k+1][0]} but the values disagree")
    order = PointOrder(
        classes=classes,
        values=[v for _, v in values],
        index_of={nm: k for k, cls in enumerate(classes) for nm in cls},
    )
    ctx._cache["point_order"] = order
    return order


class _KeyWrap:
    """Adapter giving EpSeq keys a total order for list.sort."""

    __slots__ = ("seq",)

    def __init__(self, seq):
        self.seq = seq

    def __lt__(self, other):
        return dg.lex_cmp(self.seq, other.seq) == dg.LT
