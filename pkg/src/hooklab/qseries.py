"""Exact truncated power series for the class generating functions.

Everything here is integer-exact: a :class:`TruncatedSeries` holds the
coefficients of sum(c_n q^n) + O(q^(N+1)) as Python ints, and the engine is
division-free -- dividing by (1 - q^p) is realized as multiplication by the
truncated geometric series of period p, an O(N) in-place pass.

The eight univariate series:

* ``series_S(1, 1)``  sum of n q^(n^2) / (q;q)_n                (1-hooks, gap-2 class)
* ``series_S(2, 1)``  [1/(q,q^4;q^5)_inf] (q+q^4)/(1-q^5)       (1-hooks, mod-5 class)
* ``series_S(1, 2)``  sum n q^(n^2)/(q;q)_n - sum q^(n^2)/(q;q)_(n-1)
* ``series_S(2, 2)``  [1/(q,q^4;q^5)_inf] ((q^4+q^6)/(1-q^5) + (q^2+q^8)/(1-q^10))
* ``series_H(1, 1)``  sum n q^(n^2+n) (-1/q;q^2)_n / (q^2;q^2)_n
* ``series_H(2, 1)``  [1/(q,q^5,q^6;q^8)_inf] (q+q^5+q^6)/(1-q^8)
* ``series_H(1, 2)``  sum n q^(n^2+n) (-q;q^2)_(n+1) / (q^2;q^2)_n
* ``series_H(2, 2)``  [1/(q,q^5,q^6;q^8)_inf]
                      ((q^5+q^6+q^9)/(1-q^8) + (q^2+q^10-q^11+q^12)/(1-q^16))

and the matching bivariate refinements sum_lambda x^(statistic) q^|lambda|
are built from the same primitives.  The factor (-1/q;q^2)_n carries the one
negative exponent in the whole engine; it lives in :class:`LaurentSeries`
during term assembly and is checked away before anything escapes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classes import ClassId


class OrderMismatchError(ValueError):
    """Two series of different truncation orders were combined."""


class XDegreeOverflowError(ValueError):
    """A bivariate coefficient landed above the x-degree cap."""


class NegativeExponentError(ValueError):
    """A finalized series kept a nonzero coefficient at a negative exponent."""


# --------------------------------------------------------------------------
# univariate series
# --------------------------------------------------------------------------


class TruncatedSeries:
    """Power series mod q^(order+1) with exact integer coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        if coeffs is None:
            self.coeffs = [0] * (order + 1)
        else:
            if len(coeffs) != order + 1:
                raise ValueError("coeffs must have exactly order+1 entries")
            self.coeffs = list(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        s = cls(order)
        s.coeffs[0] = 1
        return s

    @classmethod
    def from_terms(cls, order: int, terms: dict, *, clip: bool = False) -> "TruncatedSeries":
        """Series from {exponent: coefficient}; exponents above order are an
        error unless ``clip`` is set (they then truncate away silently)."""
        s = cls(order)
        for e, c in terms.items():
            if e < 0:
                raise NegativeExponentError(f"exponent {e} < 0")
            if e > order:
                if clip:
                    continue
                raise ValueError(f"exponent {e} exceeds order {order}")
            s.coeffs[e] += c
        return s

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[: min(8, self.order + 1)])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"

    # -- in-place exact primitives (used by the series builders) ----------

    def imul_geometric(self, period: int) -> "TruncatedSeries":
        """Multiply by 1/(1 - q^period) in place."""
        if period < 1:
            raise ValueError("period must be >= 1")
        c = self.coeffs
        for k in range(period, self.order + 1):
            c[k] += c[k - period]
        return self

    def imul_one_plus(self, exp: int, sign: int = 1) -> "TruncatedSeries":
        """Multiply by (1 + sign q^exp) in place, exp >= 1."""
        if exp < 1:
            raise ValueError("exp must be >= 1")
        c = self.coeffs
        for k in range(self.order, exp - 1, -1):
            c[k] += sign * c[k - exp]
        return self

    def shifted(self, exp: int) -> "TruncatedSeries":
        """New series equal to q^exp times this one (exp >= 0)."""
        if exp < 0:
            raise ValueError("exp must be >= 0")
        out = TruncatedSeries(self.order)
        out.coeffs[exp:] = self.coeffs[: self.order + 1 - exp]
        return out

    def iadd_scaled(self, other: "TruncatedSeries", k: int = 1) -> "TruncatedSeries":
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} != {other.order}")
        for i, c in enumerate(other.coeffs):
            if c:
                self.coeffs[i] += k * c
        return self

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        return series_mul(self, other)


def _common_order(a: TruncatedSeries, b: TruncatedSeries, allow_truncation: bool) -> int:
    if a.order == b.order:
        return a.order
    if allow_truncation:
        return min(a.order, b.order)
    raise OrderMismatchError(
        f"orders differ: {a.order} != {b.order} (pass allow_truncation=True to take the min)"
    )


def series_add(
    a: TruncatedSeries, b: TruncatedSeries, *, allow_truncation: bool = False
) -> TruncatedSeries:
    """Coefficientwise sum; strict about equal orders by default."""
    order = _common_order(a, b, allow_truncation)
    return TruncatedSeries(
        order, [a.coeffs[k] + b.coeffs[k] for k in range(order + 1)]
    )


def series_mul(
    a: TruncatedSeries, b: TruncatedSeries, *, allow_truncation: bool = False
) -> TruncatedSeries:
    """Cauchy product truncated at the (common) order."""
    order = _common_order(a, b, allow_truncation)
    out = [0] * (order + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs[: order + 1]):
        if ai:
            hi = order - i
            for j in range(hi + 1):
                bj = bc[j]
                if bj:
                    out[i + j] += ai * bj
    return TruncatedSeries(order, out)


def series_scale(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return TruncatedSeries(a.order, [k * c for c in a.coeffs])


def _mul_sparse(series: TruncatedSeries, terms) -> TruncatedSeries:
    """series times sum(sign q^exp) for (exp, sign) pairs, exponents >= 0."""
    out = TruncatedSeries(series.order)
    src = series.coeffs
    for exp, sign in terms:
        if exp < 0:
            raise ValueError("numerator exponents must be >= 0")
        for k in range(exp, series.order + 1):
            v = src[k - exp]
            if v:
                out.coeffs[k] += sign * v
    return out


def apply_rational(series: TruncatedSeries, terms, period: int) -> TruncatedSeries:
    """series times (sum of signed monomials)/(1 - q^period)."""
    return _mul_sparse(series, terms).imul_geometric(period)


def rational_factor(numerator_terms, denominator_period: int, order: int) -> TruncatedSeries:
    """Expansion of (sum sign q^exp) / (1 - q^period) to the given order."""
    return apply_rational(TruncatedSeries.one(order), numerator_terms, denominator_period)


def inv_pochhammer_product(residues, modulus: int, order: int) -> TruncatedSeries:
    """Expansion of 1 / prod_{n >= 1, n = r (mod m) for some r} (1 - q^n).

    Only factors with exponent <= order contribute; this is the partition
    counting series for parts restricted to the given residue classes.
    """
    residues = set(residues)
    if not residues:
        raise ValueError("residues must be nonempty")
    if any(not 1 <= r <= modulus for r in residues):
        raise ValueError(f"residues must lie in [1, {modulus}]")
    keys = {r % modulus for r in residues}
    out = TruncatedSeries.one(order)
    for e in range(1, order + 1):
        if e % modulus in keys:
            out.imul_geometric(e)
    return out


def counting_series(class_id: ClassId, order: int) -> TruncatedSeries:
    """Partition-count series of a class, via the product side of its
    identity (R1 and G1 share the product of their congruence partner)."""
    if class_id in (ClassId.R1, ClassId.R2):
        return inv_pochhammer_product({1, 4}, 5, order)
    return inv_pochhammer_product({1, 5, 6}, 8, order)


def _geometric_tail(first: int, period: int, order: int) -> TruncatedSeries:
    """q^first + q^(first+period) + ... truncated (zero if first > order)."""
    out = TruncatedSeries(order)
    for e in range(first, order + 1, period):
        out.coeffs[e] = 1
    return out


def _monomial(exp: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(order, {exp: 1}, clip=True)


# --------------------------------------------------------------------------
# Laurent intermediates (the (-1/q; q^2)_n factor)
# --------------------------------------------------------------------------


class LaurentSeries:
    """Series over exponents [min_exp, hard_order], min_exp possibly negative.

    ``valid_order`` tracks how far coefficients are trustworthy: multiplying
    by a polynomial with a negative exponent pulls unknown high-order mass
    downward, so validity drops by that amount; an upward monomial shift
    restores it (clamped to the storage ceiling ``hard_order``).
    """

    __slots__ = ("min_exp", "hard_order", "valid_order", "coeffs")

    def __init__(self, min_exp: int, hard_order: int, coeffs: list, valid_order: int | None = None):
        if len(coeffs) != hard_order - min_exp + 1:
            raise ValueError("coeffs must cover [min_exp, hard_order]")
        self.min_exp = min_exp
        self.hard_order = hard_order
        self.valid_order = hard_order if valid_order is None else valid_order
        self.coeffs = list(coeffs)

    @classmethod
    def monomial(cls, exp: int, hard_order: int) -> "LaurentSeries":
        if exp > hard_order:
            raise ValueError("monomial exponent exceeds storage order")
        return cls(exp, hard_order, [1] + [0] * (hard_order - exp))

    def __getitem__(self, e: int) -> int:
        if e > self.valid_order:
            raise IndexError(f"exponent {e} beyond valid order {self.valid_order}")
        if e < self.min_exp:
            return 0
        return self.coeffs[e - self.min_exp]

    def imul_terms(self, terms: dict) -> "LaurentSeries":
        """Multiply in place by an exact signed polynomial {exp: coef};
        exponents may be negative."""
        low = min(terms)
        new_min = self.min_exp + low
        out = [0] * (self.hard_order - new_min + 1)
        for e, coef in terms.items():
            if coef == 0:
                continue
            base = e - new_min
            for i, c in enumerate(self.coeffs):
                if c:
                    pos = base + self.min_exp + i
                    if pos <= self.hard_order - new_min:
                        out[pos] += coef * c
        self.min_exp = new_min
        self.coeffs = out
        if low < 0:
            self.valid_order += low
        return self

    def imul_one_plus(self, exp: int, sign: int = 1) -> "LaurentSeries":
        """Multiply by (1 + sign q^exp), exp >= 1; validity unchanged."""
        if exp < 1:
            raise ValueError("exp must be >= 1")
        c = self.coeffs
        for k in range(len(c) - 1, exp - 1, -1):
            c[k] += sign * c[k - exp]
        return self

    def imul_geometric(self, period: int) -> "LaurentSeries":
        """Multiply by 1/(1 - q^period); validity unchanged."""
        if period < 1:
            raise ValueError("period must be >= 1")
        c = self.coeffs
        for k in range(period, len(c)):
            c[k] += c[k - period]
        return self

    def shift(self, exp: int) -> "LaurentSeries":
        """Multiply by q^exp (exp >= 1) in place; validity recovers up to the
        storage ceiling, coefficients pushed past it fall away."""
        if exp < 1:
            raise ValueError("exp must be >= 1")
        self.min_exp += exp
        self.valid_order = min(self.valid_order + exp, self.hard_order)
        overhang = self.min_exp + len(self.coeffs) - 1 - self.hard_order
        if overhang > 0:
            del self.coeffs[-overhang:]
        return self

    def finalize(self, order: int) -> TruncatedSeries:
        """Convert to a TruncatedSeries on [0, order].

        Raises :class:`NegativeExponentError` if any nonzero coefficient sits
        at a negative exponent, and :class:`OrderMismatchError` if validity
        does not reach the requested order.
        """
        if self.valid_order < order:
            raise OrderMismatchError(
                f"series only valid to order {self.valid_order}, need {order}"
            )
        out = TruncatedSeries(order)
        for i, c in enumerate(self.coeffs):
            e = self.min_exp + i
            if e < 0:
                if c:
                    raise NegativeExponentError(
                        f"nonzero coefficient {c} at exponent {e}"
                    )
                continue
            if e > order:
                break
            out.coeffs[e] = c
        return out


# --------------------------------------------------------------------------
# Nahm-sum term streams
# --------------------------------------------------------------------------


def _rr_terms(order: int):
    """(n, q^(n^2)/(q;q)_n) for n = 0, 1, ... while n^2 <= order."""
    term = TruncatedSeries.one(order)
    yield 0, term.copy()
    n = 1
    while n * n <= order:
        term = term.shifted(2 * n - 1).imul_geometric(n)
        yield n, term.copy()
        n += 1


def _rr_shifted_terms(order: int):
    """(n, q^(n^2)/(q;q)_(n-1)) for n = 1, 2, ... while n^2 <= order."""
    if order < 1:
        return
    term = _monomial(1, order)
    yield 1, term.copy()
    n = 2
    while n * n <= order:
        term = term.shifted(2 * n - 1)
        term.imul_geometric(n - 1)
        yield n, term.copy()
        n += 1


def _rr_second_terms(order: int):
    """(n, q^(n^2+n)/(q;q)_n) for n = 0, 1, ... while n^2 + n <= order."""
    term = TruncatedSeries.one(order)
    yield 0, term.copy()
    n = 1
    while n * n + n <= order:
        term = term.shifted(2 * n).imul_geometric(n)
        yield n, term.copy()
        n += 1


def _lg_terms(order: int):
    """(n, q^(n^2+n) (-1/q;q^2)_n / (q^2;q^2)_n) while n^2 + n - 1 <= order.

    Terms for n >= 1 are assembled in a LaurentSeries one order higher, so
    the single (1 + 1/q) factor costs no exactness at the target order.
    """
    yield 0, TruncatedSeries.one(order)
    if order < 1:
        return
    base = LaurentSeries.monomial(2, order + 1)
    base.imul_terms({-1: 1, 0: 1})
    base.imul_geometric(2)
    n = 1
    while n * n + n - 1 <= order:
        if n > 1:
            base.shift(2 * n)
            base.imul_one_plus(2 * n - 3)
            base.imul_geometric(2 * n)
        yield n, base.finalize(order)
        n += 1


def _lg12_terms(order: int):
    """(n, q^(n^2+n) (-q;q^2)_(n+1) / (q^2;q^2)_n) while n^2 + n - 1 <= order.

    The n = 0 term is (-q;q^2)_1 = 1 + q, not 1."""
    zeroth = TruncatedSeries.one(order)
    if order >= 1:
        zeroth.imul_one_plus(1)
    yield 0, zeroth
    if order < 2:
        return
    term = _monomial(2, order).imul_one_plus(1).imul_one_plus(3).imul_geometric(2)
    n = 1
    while n * n + n - 1 <= order:
        if n > 1:
            term = term.shifted(2 * n)
            term.imul_one_plus(2 * n + 1)
            term.imul_geometric(2 * n)
        yield n, term.copy()
        n += 1


# --------------------------------------------------------------------------
# the eight hook generating functions
# --------------------------------------------------------------------------


def series_S(j: int, t: int, order: int) -> TruncatedSeries:
    """Generating function of the t-hook counts of the Rogers-Ramanujan
    class pair: j = 1 the gap-2 class, j = 2 the mod-5 class; t in {1, 2}."""
    if (j, t) not in {(1, 1), (1, 2), (2, 1), (2, 2)}:
        raise ValueError(f"series_S undefined for (j, t) = ({j}, {t})")
    if j == 1:
        acc = TruncatedSeries.zero(order)
        for n, term in _rr_terms(order):
            if n:
                acc.iadd_scaled(term, n)
        if t == 1:
            return acc
        for _, term in _rr_shifted_terms(order):
            acc.iadd_scaled(term, -1)
        return acc
    prod = inv_pochhammer_product({1, 4}, 5, order)
    if t == 1:
        return apply_rational(prod, [(1, 1), (4, 1)], 5)
    return series_add(
        apply_rational(prod, [(4, 1), (6, 1)], 5),
        apply_rational(prod, [(2, 1), (8, 1)], 10),
    )


def series_H(j: int, t: int, order: int) -> TruncatedSeries:
    """Generating function of the t-hook counts of the little Gollnitz class
    pair: j = 1 the gap class, j = 2 the mod-8 class; t in {1, 2}."""
    if (j, t) not in {(1, 1), (1, 2), (2, 1), (2, 2)}:
        raise ValueError(f"series_H undefined for (j, t) = ({j}, {t})")
    if j == 1:
        acc = TruncatedSeries.zero(order)
        stream = _lg_terms(order) if t == 1 else _lg12_terms(order)
        for n, term in stream:
            if n:
                acc.iadd_scaled(term, n)
        return acc
    prod = inv_pochhammer_product({1, 5, 6}, 8, order)
    if t == 1:
        return apply_rational(prod, [(1, 1), (5, 1), (6, 1)], 8)
    return series_add(
        apply_rational(prod, [(5, 1), (6, 1), (9, 1)], 8),
        apply_rational(prod, [(2, 1), (10, 1), (11, -1), (12, 1)], 16),
    )


# --------------------------------------------------------------------------
# bivariate refinements
# --------------------------------------------------------------------------


def _default_x_order(order: int, nahm: bool) -> int:
    if not nahm:
        return order
    r = math.isqrt(order)
    if r * r < order:
        r += 1
    return r + 2


class BivariateSeries:
    """Series in q and x, stored as one TruncatedSeries per x-degree."""

    __slots__ = ("order_q", "order_x", "cols")

    def __init__(self, order_q: int, order_x: int):
        self.order_q = order_q
        self.order_x = order_x
        self.cols = [TruncatedSeries.zero(order_q) for _ in range(order_x + 1)]

    @classmethod
    def one(cls, order_q: int, order_x: int) -> "BivariateSeries":
        b = cls(order_q, order_x)
        b.cols[0] = TruncatedSeries.one(order_q)
        return b

    def coefficient(self, n: int, k: int) -> int:
        """Coefficient of x^k q^n."""
        if not 0 <= k <= self.order_x:
            raise IndexError(f"x-degree {k} outside table")
        return self.cols[k][n]

    def add_row(self, k: int, series: TruncatedSeries) -> None:
        if k > self.order_x:
            if not series.is_zero():
                raise XDegreeOverflowError(
                    f"x-degree {k} exceeds cap {self.order_x}"
                )
            return
        self.cols[k] = series_add(self.cols[k], series)

    def imul_factor(self, pieces) -> "BivariateSeries":
        """Multiply in place by sum(x^p s_p(q)) over pieces (p, series)."""
        new_cols = [TruncatedSeries.zero(self.order_q) for _ in range(self.order_x + 1)]
        for p, s in pieces:
            if s.is_zero():
                continue
            for k, col in enumerate(self.cols):
                if col.is_zero():
                    continue
                prod = series_mul(col, s)
                if k + p > self.order_x:
                    if prod.is_zero():
                        continue  # all mass truncated away in q; nothing lost
                    raise XDegreeOverflowError(
                        f"x-degree {k + p} exceeds cap {self.order_x}"
                    )
                new_cols[k + p] = series_add(new_cols[k + p], prod)
        self.cols = new_cols
        return self

    def at_x_one(self) -> TruncatedSeries:
        """Marginalize the statistic: substitute x = 1."""
        acc = TruncatedSeries.zero(self.order_q)
        for col in self.cols:
            acc.iadd_scaled(col)
        return acc

    def x_derivative_at_one(self) -> TruncatedSeries:
        """d/dx at x = 1: weights each column by its x-degree."""
        acc = TruncatedSeries.zero(self.order_q)
        for k, col in enumerate(self.cols):
            if k:
                acc.iadd_scaled(col, k)
        return acc


def bivariate_R(j: int, t: int, order: int, x_order: int | None = None) -> BivariateSeries:
    """Bivariate refinement sum_lambda x^(statistic) q^|lambda| over the
    Rogers-Ramanujan class pair; statistics as in :func:`series_S`."""
    if (j, t) not in {(1, 1), (1, 2), (2, 1), (2, 2)}:
        raise ValueError(f"bivariate_R undefined for (j, t) = ({j}, {t})")
    if j == 1:
        K = _default_x_order(order, nahm=True) if x_order is None else x_order
        out = BivariateSeries(order, K)
        if t == 1:
            for n, term in _rr_terms(order):
                out.add_row(n, term)
            return out
        for n, term in _rr_shifted_terms(order):
            out.add_row(n - 1, term)
        for n, term in _rr_second_terms(order):
            out.add_row(n, term)
        return out
    K = _default_x_order(order, nahm=False) if x_order is None else x_order
    out = BivariateSeries.one(order, K)
    one = TruncatedSeries.one(order)
    if t == 1:
        for e in range(1, order + 1):
            if e % 5 in (1, 4):
                out.imul_factor([(0, one), (1, _geometric_tail(e, e, order))])
        return out
    out.imul_factor([(0, series_add(one, _monomial(1, order))), (1, _geometric_tail(2, 1, order))])
    for e in range(2, order + 1):
        if e % 5 in (1, 4):
            out.imul_factor(
                [(0, one), (1, _monomial(e, order)), (2, _geometric_tail(2 * e, e, order))]
            )
    return out


def bivariate_G(j: int, t: int, order: int, x_order: int | None = None) -> BivariateSeries:
    """Bivariate refinement over the little Gollnitz class pair.

    The mod-8 two-hook table couples each residue pair (8m+5, 8m+6): both
    values present merge their corner contributions, which the pair factor
    encodes with the cross term x q^(16m+11) (1-(1-x)q^(8m+5))/(1-q^(8m+5))
    (1-(1-x)q^(8m+6))/(1-q^(8m+6)).
    """
    if (j, t) not in {(1, 1), (1, 2), (2, 1), (2, 2)}:
        raise ValueError(f"bivariate_G undefined for (j, t) = ({j}, {t})")
    if j == 1:
        K = _default_x_order(order, nahm=True) if x_order is None else x_order
        out = BivariateSeries(order, K)
        stream = _lg_terms(order) if t == 1 else _lg12_terms(order)
        for n, term in stream:
            out.add_row(n, term)
        return out
    K = _default_x_order(order, nahm=False) if x_order is None else x_order
    out = BivariateSeries.one(order, K)
    one = TruncatedSeries.one(order)
    if t == 1:
        for e in range(1, order + 1):
            if e % 8 in (1, 5, 6):
                out.imul_factor([(0, one), (1, _geometric_tail(e, e, order))])
        return out
    out.imul_factor([(0, series_add(one, _monomial(1, order))), (1, _geometric_tail(2, 1, order))])
    e = 9
    while e <= order:
        out.imul_factor(
            [(0, one), (1, _monomial(e, order)), (2, _geometric_tail(2 * e, e, order))]
        )
        e += 8
    m = 0
    while 8 * m + 5 <= order:
        a, b = 8 * m + 5, 8 * m + 6
        gt_a = _geometric_tail(a, a, order)
        gt_b = _geometric_tail(b, b, order)
        cross = _monomial(a + b, order)
        pieces = [
            (0, one),
            (1, series_add(_monomial(a, order), _monomial(b, order))),
            (2, series_add(_geometric_tail(2 * a, a, order), _geometric_tail(2 * b, b, order))),
            (1, cross),
            (2, series_mul(cross, series_add(gt_a, gt_b))),
            (3, series_mul(cross, series_mul(gt_a, gt_b))),
        ]
        out.imul_factor(pieces)
        m += 1
    return out


# --------------------------------------------------------------------------
# sum-product identity checks
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of a coefficientwise sum-side vs product-side comparison."""

    which: str
    order: int
    ok: bool
    first_mismatch: int | None = None
    sum_value: int | None = None
    product_value: int | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"{self.which}: sum and product sides agree to order {self.order}"
        return (
            f"{self.which}: first mismatch at q^{self.first_mismatch}: "
            f"sum side {self.sum_value}, product side {self.product_value}"
        )


def identity_check_sum_product(which: str, order: int) -> IdentityCheck:
    """Verify a sum-product identity coefficientwise to the given order.

    ``which`` is ``"RR1"`` (first Rogers-Ramanujan identity,
    sum q^(n^2)/(q;q)_n = 1/(q,q^4;q^5)_inf) or ``"LG1"`` (first little
    Gollnitz identity, sum q^(n^2+n)(-1/q;q^2)_n/(q^2;q^2)_n =
    1/(q,q^5,q^6;q^8)_inf); both sides are computed independently.
    """
    if which == "RR1":
        lhs = TruncatedSeries.zero(order)
        for _, term in _rr_terms(order):
            lhs.iadd_scaled(term)
        rhs = inv_pochhammer_product({1, 4}, 5, order)
    elif which == "LG1":
        lhs = TruncatedSeries.zero(order)
        for _, term in _lg_terms(order):
            lhs.iadd_scaled(term)
        rhs = inv_pochhammer_product({1, 5, 6}, 8, order)
    else:
        raise ValueError(f"unknown identity {which!r} (expected 'RR1' or 'LG1')")
    for n in range(order + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return IdentityCheck(which, order, False, n, lhs.coeffs[n], rhs.coeffs[n])
    return IdentityCheck(which, order, True)
