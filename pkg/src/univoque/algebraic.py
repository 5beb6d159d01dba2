"""Exact arithmetic in the field generated by the base.

A base q is specified symbolically as the unique root in (1, M+1] of an
integer polynomial obtained by clearing denominators in the defining
relation ``sum(beta_i / q^i) = 1``.  That polynomial may be reducible, so
the field is built on its irreducible factor vanishing at q (the minimal
polynomial, found once with sympy).  Elements of Q(q) are then coefficient
vectors modulo the minimal polynomial; equality is structural, and sign
determination refines the isolating interval until interval evaluation of
the element's polynomial has constant sign.  This terminates for every
nonzero element because nothing of degree below the minimal polynomial can
vanish at q.

All rationals are gmpy2.mpq (fractions.Fraction works identically if gmpy2
is unavailable).
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

from .digits import EpSeq, check_alphabet, is_greedy_beta


class DegenerateInputError(ValueError):
    """Root isolation did not find exactly one root in the target interval."""


# --- integer/rational polynomials as little-endian coefficient tuples -----

def poly_trim(p):
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def poly_add(p, r):
    n = max(len(p), len(r))
    return poly_trim(tuple((p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(n)))


def poly_neg(p):
    return tuple(-c for c in p)


def poly_sub(p, r):
    return poly_add(p, poly_neg(r))


def poly_mul(p, r):
    if not p or not r:
        return ()
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return poly_trim(out)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_divmod_monic(p, m):
    """Divide by a monic polynomial; exact over the coefficient ring."""
    assert m and m[-1] == 1
    p = list(p)
    q = [0] * max(0, len(p) - len(m) + 1)
    for i in range(len(p) - len(m), -1, -1):
        c = p[i + len(m) - 1]
        if c:
            q[i] = c
            for j, mj in enumerate(m):
                p[i + j] -= c * mj
    return poly_trim(q), poly_trim(p)


def poly_div_exact_linear(p, root):
    """Exact division of p by (t - root) for an integer root."""
    out = []
    acc = 0
    for c in reversed(p):
        acc = acc * root + c
        out.append(acc)
    rem = out.pop()
    assert rem == 0, "not divisible"
    return tuple(reversed([c for c in out]))


def poly_interval_eval(p, lo, hi):
    """Interval Horner evaluation; returns rational bounds on p([lo, hi])."""
    alo = ahi = Q(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


def _sign(x):
    return (x > 0) - (x < 0)


def isolate_root(P, M, precision=Q(1, 10**12)):
    """Isolating rational interval for the unique root of ``P`` in (1, M+1].

    Bisection with exact rational evaluation; the returned interval has
    width at most ``precision`` (or is a degenerate [r, r] when the root is
    rational).  Raises DegenerateInputError when a coarse scan does not see
    exactly one sign change on (1, M+1].
    """
    P = poly_trim(P)
    if not P:
        raise DegenerateInputError("zero polynomial")
    lo, hi = Q(1), Q(M + 1)
    grid = 64
    marks = [lo + (hi - lo) * i / grid for i in range(grid + 1)]
    signs = [_sign(poly_eval(P, x)) for x in marks]
    if signs[0] == 0:
        raise DegenerateInputError("polynomial vanishes at 1")
    changes = []
    for i in range(grid):
        if signs[i + 1] == 0:
            if i + 1 < grid and signs[i + 2] == 0:
                raise DegenerateInputError("polynomial vanishes on a subinterval")
            changes.append((marks[i + 1], marks[i + 1]))
        elif signs[i] != 0 and signs[i] != signs[i + 1]:
            changes.append((marks[i], marks[i + 1]))
    if len(changes) != 1:
        raise DegenerateInputError(
            f"expected exactly one root in (1, {M + 1}], found {len(changes)} sign changes")
    lo, hi = changes[0]
    if lo == hi:
        return lo, hi
    slo = _sign(poly_eval(P, lo))
    while hi - lo > precision:
        mid = (lo + hi) / 2
        sm = _sign(poly_eval(P, mid))
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _minimal_factor(P, lo, hi):
    """Irreducible monic factor of P with a root in [lo, hi].

    P is monic, so its irreducible integer factors are monic and exactly one
    of them changes sign over any interval isolating the root.
    """
    import sympy

    t = sympy.Symbol("t")
    _, factors = sympy.Poly(list(reversed(P)), t).factor_list()
    candidates = []
    for f, _mult in factors:
        coeffs = tuple(int(c) for c in reversed(f.all_coeffs()))
        if lo == hi:
            if poly_eval(coeffs, lo) == 0:
                candidates.append(coeffs)
        elif _sign(poly_eval(coeffs, lo)) * _sign(poly_eval(coeffs, hi)) < 0:
            candidates.append(coeffs)
    if len(candidates) != 1:
        raise DegenerateInputError("could not isolate a unique irreducible factor")
    m = candidates[0]
    assert m[-1] == 1, "factor of a monic polynomial must be monic"
    return m


class NumberField:
    """Q(q) for the root q of a monic irreducible polynomial in an isolating
    interval.

    Elements are coefficient tuples of length ``deg`` over Q.  The isolating
    interval is refined in place on demand; refinement only ever shrinks it,
    so previously returned signs stay valid.  Share a field between threads
    only if refinement is serialized (clone per thread otherwise).
    """

    def __init__(self, min_poly, lo, hi):
        min_poly = poly_trim(min_poly)
        assert min_poly[-1] == 1 and len(min_poly) >= 2
        self.min_poly = min_poly
        self.deg = len(min_poly) - 1
        self.lo, self.hi = Q(lo), Q(hi)
        self._slo = _sign(poly_eval(min_poly, self.lo)) if lo != hi else 0

    # elements -------------------------------------------------------------

    def zero(self):
        return (Q(0),) * self.deg

    def one(self):
        return self.rational(1)

    def rational(self, r):
        return (Q(r),) + (Q(0),) * (self.deg - 1)

    def gen(self):
        """The generator q as a field element."""
        if self.deg == 1:
            return (Q(-self.min_poly[0]),)
        return (Q(0), Q(1)) + (Q(0),) * (self.deg - 2)

    def _pad(self, p):
        return tuple(p) + (Q(0),) * (self.deg - len(p))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = poly_mul(a, b)
        _, rem = poly_divmod_monic(prod, self.min_poly)
        return self._pad(rem)

    def scal(self, r, a):
        r = Q(r)
        return tuple(r * x for x in a)

    def inv(self, a):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        r0, r1 = tuple(Q(c) for c in self.min_poly), poly_trim(a)
        s0, s1 = (), (Q(1),)
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        c = r1[0]
        return self._pad(tuple(x / c for x in s1))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_gen(self, n):
        """q**n as a field element (n >= 0)."""
        out = self.one()
        q = self.gen()
        for _ in range(n):
            out = self.mul(out, q)
        return out

    # sign and approximation ------------------------------------------------

    def refine(self):
        if self.lo == self.hi:
            return
        mid = (self.lo + self.hi) / 2
        sm = _sign(poly_eval(self.min_poly, mid))
        if sm == 0:
            self.lo = self.hi = mid
        elif sm == self._slo:
            self.lo = mid
        else:
            self.hi = mid

    def sign(self, a):
        if not any(a):
            return 0
        if not any(a[1:]):
            return _sign(a[0])
        while True:
            vlo, vhi = poly_interval_eval(poly_trim(a), self.lo, self.hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            if vlo == vhi == 0:
                return 0
            self.refine()

    def bounds(self, a, eps):
        """Rational bounds on the real value of ``a`` with width <= eps."""
        eps = Q(eps)
        while True:
            vlo, vhi = poly_interval_eval(poly_trim(a), self.lo, self.hi)
            if vhi - vlo <= eps:
                return vlo, vhi
            self.refine()

    def decimal(self, a, places=12):
        scale = 10**places
        vlo, vhi = self.bounds(a, Q(1, 10 * scale))
        n = round(Q((vlo + vhi) * scale) / 2)
        sign = "-" if n < 0 else ""
        n = abs(n)
        return f"{sign}{n // scale}.{n % scale:0{places}d}"


class AlgebraicReal:
    """An element of Q(q), carried as a coefficient vector over its field.

    Supports exact ring arithmetic, exact division, and exact comparison;
    hashing and equality are structural on the canonical coefficient vector,
    so these values serve directly as memoization keys.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _lift(self, other):
        if isinstance(other, AlgebraicReal):
            if other.field is not self.field:
                raise ValueError("mixed field contexts")
            return other
        return AlgebraicReal(self.field, self.field.rational(other))

    def __add__(self, other):
        other = self._lift(other)
        return AlgebraicReal(self.field, self.field.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return AlgebraicReal(self.field, self.field.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return AlgebraicReal(self.field, self.field.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return AlgebraicReal(self.field, self.field.div(self.coeffs, other.coeffs))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __neg__(self):
        return AlgebraicReal(self.field, self.field.neg(self.coeffs))

    def sign(self):
        return self.field.sign(self.coeffs)

    def cmp(self, other):
        return (self - self._lift(other)).sign()

    def __eq__(self, other):
        if isinstance(other, AlgebraicReal):
            return self.field is other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __float__(self):
        lo, hi = self.field.bounds(self.coeffs, Q(1, 10**17))
        return float(Q(lo + hi) / 2)

    def __repr__(self):
        return f"<{self.field.decimal(self.coeffs, 6)}...>"

    def decimal(self, places=12):
        return self.field.decimal(self.coeffs, places)

    def as_fraction(self):
        """(integer numerator polynomial, positive integer denominator)."""
        dens = [int(Q(c).denominator) for c in self.coeffs]
        lcm = 1
        for d in dens:
            lcm = lcm * d // math.gcd(lcm, d)
        nums = [int(c * lcm) for c in self.coeffs]
        return poly_trim(nums), lcm

    def to_json(self):
        num, den = self.as_fraction()
        return {"num": list(num) or [0], "den": [den], "approx": self.decimal(12)}


def compare(x, y):
    """Exact three-way comparison of two AlgebraicReal values."""
    return x.cmp(y)


def apply_digit_map(x, k):
    """The affine digit-consumption map x -> q*x - k."""
    q = AlgebraicReal(x.field, x.field.gen())
    return q * x - k


def base_polynomial(M, beta):
    """Integer polynomial with the base as its unique root in (1, M+1].

    For a finite greedy expansion ``d1..dK`` this is
    ``t^K - d1 t^(K-1) - ... - dK``; in general the defining relation is
    cleared of denominators and spurious roots at t = 1 are removed.
    """
    check_alphabet(beta.pre + beta.per, M)
    if not is_greedy_beta(M, beta):
        raise ValueError(f"{beta!r} is not a greedy expansion of 1 over 0..{M}")
    if beta == EpSeq((1,), (0,)):
        raise ValueError("greedy expansion 1(0) corresponds to base 1")
    if beta.is_finite():
        w = beta.finite_word()
        return poly_trim(tuple(-d for d in reversed(w)) + (1,))
    w, p = beta.pre, beta.per
    W = tuple(reversed(w))          # digit polynomial of the preperiod
    P = tuple(reversed(p))          # digit polynomial of the period
    tp = (0,) * len(p) + (1,)       # t^|p|
    tw = (0,) * len(w) + (1,)       # t^|w|
    cyc = poly_sub(tp, (1,))
    poly = poly_sub(poly_add(poly_mul(W, cyc), P), poly_mul(tw, cyc))
    while poly and poly_eval(poly, 1) == 0:
        poly = poly_div_exact_linear(poly, 1)
    if poly and poly[-1] < 0:
        poly = poly_neg(poly)
    return poly_trim(poly)


def field_for_base(M, beta, precision=Q(1, 10**12)):
    """NumberField for the base defined by the greedy expansion ``beta``."""
    P = base_polynomial(M, beta)
    lo, hi = isolate_root(P, M, precision)
    if lo == hi:
        r = lo
        assert Q(r).denominator == 1, "rational root of a monic polynomial is an integer"
        m = (-int(r), 1)
    else:
        m = _minimal_factor(P, lo, hi)
    return NumberField(m, lo, hi)


def value_of_sequence(field, s):
    """Exact value ``sum(s_i / q^i)`` of an eventually periodic digit sequence.

    With preperiod digit polynomial W and period digit polynomial P, the
    value is (W(q)(q^p - 1) + P(q)) / (q^w (q^p - 1)).
    """
    w, p = s.pre, s.per
    q = AlgebraicReal(field, field.gen())
    W = AlgebraicReal(field, field.zero())
    for d in w:
        W = W * q + d
    P = AlgebraicReal(field, field.zero())
    for d in p:
        P = P * q + d
    qp = AlgebraicReal(field, field.pow_gen(len(p)))
    qw = AlgebraicReal(field, field.pow_gen(len(w)))
    cyc = qp - 1
    return (W * cyc + P) / (qw * cyc)


def _qpoly_divmod(a, b):
    """Division with remainder over Q[t] (little-endian Q tuples)."""
    a = list(a)
    q = [Q(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return poly_trim(q), poly_trim(a)
