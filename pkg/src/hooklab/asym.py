"""Floating-point probes of the saddle-point asymptotics.

Everything runs in binary64, with one exception: :func:`eta_asym_residual`
measures a quantity far below double resolution and evaluates its two sides
in scratch arbitrary precision (returning the correctly rounded double).
The probes evaluate the Nahm sums and infinite products directly at
q = e^(-z), z = eps(1 + iy), and compare against their leading-order
models; expansion residuals (Zagier's q-Pochhammer expansion, the
Dedekind-eta log expansion, Euler-Maclaurin summation) are measured against
exact double-series evaluations.

Growth models: each hook-count sequence grows like A n^(-1/4) e^(B sqrt(n))
with B = 2 pi / sqrt(15) for the Rogers-Ramanujan pair and B = pi / 2 for
the little Gollnitz pair; amplitudes A are pinned in :func:`growth_model`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy.special import wofz

PHI = (1.0 + math.sqrt(5.0)) / 2.0
LOG_PHI = math.log(PHI)
SQRT2 = math.sqrt(2.0)
LOG_SILVER = math.log(SQRT2 + 1.0)  # log(1 + sqrt(2))

_SERIES_CAP = 10**6


@dataclass(frozen=True)
class ComplexParam:
    """Point q = e^(-z) near 1, parameterized by z = epsilon (1 + i y)."""

    epsilon: float
    y: float = 0.0

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")

    @property
    def z(self) -> complex:
        return complex(self.epsilon, self.epsilon * self.y)

    @property
    def q(self) -> complex:
        return cmath.exp(-self.z)


@dataclass(frozen=True)
class AsymModel:
    """Growth model A n^(-1/4) e^(B sqrt(n)) for a coefficient sequence."""

    amplitude: float
    growth: float
    label: str

    def value(self, n: float) -> float:
        return self.amplitude * n ** -0.25 * math.exp(self.growth * math.sqrt(n))


@dataclass(frozen=True)
class SaddleProbe:
    """Direct Nahm-sum value at q = e^(-eps) against its main term."""

    target: str
    epsilon: float
    direct_value: float
    main_term: float

    @property
    def ratio(self) -> float:
        return self.direct_value / self.main_term


def _cexpm1(u: complex) -> float | complex:
    """exp(u) - 1 without cancellation for small |u| (complex-capable)."""
    if isinstance(u, float) or isinstance(u, int):
        return math.expm1(u)
    a, b = u.real, u.imag
    # e^(a+ib) - 1 = (expm1(a) cos b - 2 sin^2(b/2)) + i e^a sin b
    return complex(
        math.expm1(a) * math.cos(b) - 2.0 * math.sin(b / 2.0) ** 2,
        math.exp(a) * math.sin(b),
    )


# --------------------------------------------------------------------------
# polylogarithms and Bernoulli polynomials
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _neg_polylog_numerator(k: int) -> tuple:
    """Integer coefficients of P_k with Li_(-k)(w) = P_k(w)/(1-w)^(k+1),
    from P_0 = w and P_(k+1) = w [(1-w) P_k' + (k+1) P_k]."""
    if k == 0:
        return (0, 1)
    prev = _neg_polylog_numerator(k - 1)
    deriv = [i * c for i, c in enumerate(prev)][1:] or [0]
    # (1-w) * deriv
    a = deriv + [0]
    for i in range(len(deriv)):
        a[i + 1] -= deriv[i]
    # + k * prev
    for i, c in enumerate(prev):
        a[i] += k * c
    # * w
    return tuple([0] + a)


def polylog(s: int, w: complex) -> complex:
    """Li_s(w) for integer s <= 2 and |w| < 1.

    For s >= 1 the defining series sum(w^n / n^s); for s <= 0 the closed
    rational form generated by Li_(s-1)(w) = w d/dw Li_s(w) from
    Li_0(w) = w/(1-w).
    """
    if not isinstance(s, int):
        raise TypeError("s must be an integer")
    if s > 2:
        raise ValueError("only s <= 2 is supported")
    if abs(w) >= 1.0:
        raise ValueError(f"|w| = {abs(w)} is outside the open unit disk")
    if s <= 0:
        coeffs = _neg_polylog_numerator(-s)
        num = 0.0 + 0.0j
        for c in reversed(coeffs):
            num = num * w + c
        return num / (1.0 - w) ** (1 - s)
    acc = 0.0 + 0.0j
    term_w = 1.0 + 0.0j
    for n in range(1, _SERIES_CAP + 1):
        term_w *= w
        term = term_w / n**s
        acc += term
        if abs(term) < 1e-17 * abs(acc) + 1e-300:
            break
    else:
        raise RuntimeError("polylog series did not converge")
    return acc


def dilog_gollnitz_identity_check() -> float:
    """Residual of Li_2(sqrt(2)-1) - Li_2(1-sqrt(2)) = pi^2/8 - log^2(1+sqrt(2))/2."""
    w = SQRT2 - 1.0
    lhs = polylog(2, w) - polylog(2, -w)
    rhs = math.pi**2 / 8.0 - LOG_SILVER**2 / 2.0
    return abs(lhs - rhs)


_BERNOULLI_MAX = 20


@lru_cache(maxsize=None)
def _bernoulli_fraction(r: int) -> Fraction:
    # B_0 = 1; sum_{k<m} C(m+1,k) B_k = -C(m+1,m) B_m  (B_1 = -1/2 convention)
    if r == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(r):
        acc += math.comb(r + 1, k) * _bernoulli_fraction(k)
    return -acc / (r + 1)


def bernoulli_number(r: int) -> float:
    """Bernoulli number B_r (B_1 = -1/2), table-backed for r <= 20."""
    if not 0 <= r <= _BERNOULLI_MAX:
        raise ValueError(f"r must be in [0, {_BERNOULLI_MAX}]")
    return float(_bernoulli_fraction(r))


def bernoulli_polynomial(r: int, x) -> complex | float:
    """Bernoulli polynomial B_r(x) = sum C(r,k) B_k x^(r-k), r <= 20."""
    if not 0 <= r <= _BERNOULLI_MAX:
        raise ValueError(f"r must be in [0, {_BERNOULLI_MAX}]")
    acc = 0.0
    for k in range(r + 1):
        acc = acc + math.comb(r, k) * float(_bernoulli_fraction(k)) * x ** (r - k)
    return acc


# --------------------------------------------------------------------------
# expansion residuals
# --------------------------------------------------------------------------


def log_pochhammer_shifted_exact(w: complex, nu: complex, param: ComplexParam) -> complex:
    """Log((w e^(-nu z) q; q)_inf) by the exact double series.

    Log prod_{m>=1} (1 - a q^m) = -sum_{k>=1} a^k q^k / (k (1 - q^k)) with
    a = w e^(-nu z); requires |a q| < 1.
    """
    z = param.z
    a = w * cmath.exp(-nu * z)
    if abs(a * param.q) >= 1.0:
        raise ValueError("|w e^(-nu z) q| >= 1: series diverges")
    if a == 0:
        return 0.0 + 0.0j
    acc = 0.0 + 0.0j
    ak = 1.0 + 0.0j
    for k in range(1, _SERIES_CAP + 1):
        ak *= a
        denom = -_cexpm1(-k * z)  # 1 - q^k, cancellation-free
        term = ak * cmath.exp(-k * z) / (k * denom)
        acc -= term
        if abs(term) < 1e-18 * abs(acc) + 1e-300:
            break
    else:
        raise RuntimeError("log-Pochhammer series did not converge")
    return acc


def zagier_expansion_residual(w: complex, nu: complex, param: ComplexParam, R: int) -> complex:
    """Exact Log((w e^(-nu z) q; q)_inf) minus its truncated expansion

        -Li_2(w)/z - (nu + 1/2) Log(1-w) - nu^2 z w / (2(1-w)) + psi,
        psi = -sum_{r=2}^{R-1} (B_r(-nu) - [r=2] nu^2) Li_(2-r)(w) z^(r-1)/r!

    The residual shrinks like z^(R-1) as z -> 0.
    """
    if not 2 <= R <= 8:
        raise ValueError("R must be in [2, 8]")
    z = param.z
    exact = log_pochhammer_shifted_exact(w, nu, param)
    if w == 0:
        return exact
    expansion = (
        -polylog(2, w) / z
        - (nu + 0.5) * cmath.log(1.0 - w)
        - nu * nu * z / 2.0 * w / (1.0 - w)
    )
    for r in range(2, R):
        coef = bernoulli_polynomial(r, -nu)
        if r == 2:
            coef -= nu * nu
        expansion -= coef * polylog(2 - r, w) * z ** (r - 1) / math.factorial(r)
    return exact - expansion


def eta_asym_residual(param: ComplexParam) -> complex:
    """-Log((q;q)_inf) computed exactly minus pi^2/(6z) + Log(z/2pi)/2 - z/24.

    The residual decays faster than every power of epsilon inside the cone
    (instantiated as |y| <= epsilon^(-1/4)); near the probe scales it sits
    hundreds of orders below binary64 resolution, where a double-precision
    difference of the two sides would only measure its own rounding noise
    (~1e-14, growing as epsilon shrinks).  Both sides are therefore evaluated
    in scratch arbitrary precision, deep enough that the returned complex is
    the correctly rounded double of the true residual; magnitudes below the
    subnormal range come back as an exact 0.
    """
    if abs(param.y) > param.epsilon**-0.25:
        raise ValueError("y outside the cone |y| <= epsilon^(-1/4)")
    import mpmath as mp

    eps, y = param.epsilon, param.y
    # resolve down to the double underflow threshold (|res| ~ e^(-4pi^2/(eps(1+y^2))))
    need = 4.0 * math.pi**2 / (eps * (1.0 + y * y)) / math.log(10.0)
    dps = int(min(need, 370.0)) + 40
    with mp.workdps(dps):
        z = mp.mpc(eps, eps * y) if y else mp.mpf(eps)
        q = mp.exp(-z)
        k_max = int((dps + 12) * math.log(10.0) / eps) + 10
        acc = z * 0
        qk = q / q
        for k in range(1, k_max + 1):
            qk *= q
            acc += qk / (k * (1 - qk))
        expansion = mp.pi**2 / (6 * z) + mp.log(z / (2 * mp.pi)) / 2 - z / 24
        return complex(acc - expansion)


def _erfc(a) -> complex | float:
    """erfc for real or complex argument (wofz-backed off the real line)."""
    if isinstance(a, complex) and a.imag != 0.0:
        if a.real >= 0.0:
            return cmath.exp(-a * a) * wofz(1j * a)
        return 2.0 - cmath.exp(-a * a) * wofz(-1j * a)
    x = a.real if isinstance(a, complex) else a
    return math.erfc(x)


def _hermite(m: int, x) -> complex | float:
    # physicists' Hermite polynomial H_m
    h0, h1 = 1.0, 2.0 * x
    if m == 0:
        return h0
    for k in range(1, m):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1


def euler_maclaurin_gaussian_check(a, step, R: int) -> float:
    """Euler-Maclaurin residual for f(x) = e^(-x^2) sampled at a + n step.

    |sum_{n>=0} f(a + n step)
      - [ (1/step) Int_a^inf f + f(a)/2
          - sum_{r=1}^R B_2r step^(2r-1) f^(2r-1)(a) / (2r)! ]|

    The bracket omits terms of order step^(2R); halving the step shrinks the
    residual accordingly.  Requires |arg(step)| < pi/4 so the Gaussian decays
    along the sampling ray (then the ray integral equals sqrt(pi)/2 erfc(a)).
    """
    if R < 1 or 2 * R > _BERNOULLI_MAX:
        raise ValueError(f"R must be in [1, {_BERNOULLI_MAX // 2}]")
    step_c = complex(step)
    if step_c.real <= 0 or abs(step_c.imag) >= step_c.real:
        raise ValueError("need |arg(step)| < pi/4 for convergence")
    total = 0.0 + 0.0j
    x = complex(a)
    for n in range(_SERIES_CAP):
        term = cmath.exp(-x * x)
        total += term
        if n > 2 and abs(term) < 1e-22 * abs(total) + 1e-300:
            break
        x += step_c
    else:
        raise RuntimeError("Gaussian sum did not converge")

    bracket = (math.sqrt(math.pi) / 2.0) * _erfc(complex(a)) / step_c
    bracket += cmath.exp(-complex(a) ** 2) / 2.0
    for r in range(1, R + 1):
        m = 2 * r - 1
        deriv = (-1) ** m * _hermite(m, complex(a)) * cmath.exp(-complex(a) ** 2)
        bracket -= bernoulli_number(2 * r) * step_c**m * deriv / math.factorial(2 * r)
    return abs(total - bracket)


# --------------------------------------------------------------------------
# saddle geometry along the arc z = eps (1 + iy)
# --------------------------------------------------------------------------


def saddle_functions(y: float, variant: str) -> tuple:
    """Saddle exponent and its normalized real-part deficit along the arc.

    For the Rogers-Ramanujan sum (``variant="RR"``, w = phi^(-(1+iy))):

        exponent(y) = pi^2/6 - log^2(phi) (1+iy)^2 - Li_2(w),
        deficit(y)  = Re(exponent(y)/(1+iy) - pi^2/15);

    for the little Gollnitz sum (``variant="LG"``, w = (sqrt(2)-1)^(1+iy)):

        exponent(y) = pi^2/4 - Li_2(w) + Li_2(-w) - (1+iy)^2 log^2(1+sqrt(2))/2,
        deficit(y)  = Re(exponent(y)/(2(1+iy)) - pi^2/16).

    The deficit is <= 0 everywhere, vanishing only at y = 0: off-axis arcs
    are exponentially suppressed against the y = 0 main term.
    """
    u = 1.0 + 1j * y
    if variant == "RR":
        w = cmath.exp(-u * LOG_PHI)
        lam = math.pi**2 / 6.0 - LOG_PHI**2 * u * u - polylog(2, w)
        s = (lam / u - math.pi**2 / 15.0).real
        return lam, s
    if variant == "LG":
        w = cmath.exp(-u * LOG_SILVER)
        lam = math.pi**2 / 4.0 - polylog(2, w) + polylog(2, -w) - 0.5 * u * u * LOG_SILVER**2
        s = (lam / (2.0 * u) - math.pi**2 / 16.0).real
        return lam, s
    raise ValueError(f"unknown variant {variant!r} (expected 'RR' or 'LG')")


_MODEL_GROWTH_RR = 2.0 * math.pi / math.sqrt(15.0)
_MODEL_GROWTH_LG = math.pi / 2.0

_MODELS = {
    "r11": (3**0.25 * PHI**0.5 * LOG_PHI / (2.0 * math.pi), _MODEL_GROWTH_RR),
    "r12": (3**0.25 * PHI**0.5 * LOG_PHI / (2.0 * math.pi), _MODEL_GROWTH_RR),
    "r21": (3**0.25 * PHI**0.5 / (5.0 * math.pi), _MODEL_GROWTH_RR),
    "r22": (3**1.25 * PHI**0.5 / (10.0 * math.pi), _MODEL_GROWTH_RR),
    "g11": (LOG_SILVER / (2**1.25 * math.pi), _MODEL_GROWTH_LG),
    "g12": (LOG_SILVER / (2**1.25 * math.pi), _MODEL_GROWTH_LG),
    "g21": (3.0 / (2**3.25 * math.pi), _MODEL_GROWTH_LG),
    "g22": (1.0 / (2**1.25 * math.pi), _MODEL_GROWTH_LG),
}


def growth_model(which: str) -> AsymModel:
    """The A n^(-1/4) e^(B sqrt(n)) model of one hook-count sequence;
    keys r11, r12, r21, r22, g11, g12, g21, g22 (r11/r12 share a model,
    as do g11/g12)."""
    try:
        amp, growth = _MODELS[which]
    except KeyError:
        raise ValueError(f"unknown model {which!r}; expected one of {sorted(_MODELS)}")
    return AsymModel(amp, growth, which)


# --------------------------------------------------------------------------
# direct evaluation near q = 1
# --------------------------------------------------------------------------

_EPS_MIN, _EPS_MAX = 0.003, 0.2  # keeps e^(pi^2/(15 eps)) inside binary64


def saddle_probe(target: str, epsilon: float) -> SaddleProbe:
    """Termwise Nahm-sum value at q = e^(-eps) against the main term.

    ``S11``: sum n q^(n^2)/(q;q)_n  vs  (sqrt(phi)/5^(1/4)) log(phi) e^(pi^2/(15 eps))/eps;
    ``H11``: sum n q^(n^2+n)(-1/q;q^2)_n/(q^2;q^2)_n
             vs  (log(1+sqrt(2))/2^(5/4)) e^(pi^2/(16 eps))/eps.

    Terms are added until the next falls below 1e-18 of the running sum
    (only checked beyond the peak index, where terms decay), with a hard cap
    of 10x the peak index.
    """
    if not _EPS_MIN <= epsilon <= _EPS_MAX:
        raise ValueError(f"epsilon must lie in [{_EPS_MIN}, {_EPS_MAX}]")
    q = math.exp(-epsilon)
    if target == "S11":
        peak = LOG_PHI / epsilon
        cap = math.ceil(10 * peak)
        poch = 1.0
        total = 0.0
        n = 0
        while True:
            n += 1
            if n > cap:
                raise RuntimeError("saddle sum did not converge within the term cap")
            poch *= 1.0 - q**n
            term = n * math.exp(-epsilon * n * n) / poch
            total += term
            if n > peak and term < 1e-18 * total:
                break
        main = (math.sqrt(PHI) / 5**0.25) * LOG_PHI / epsilon * math.exp(math.pi**2 / (15.0 * epsilon))
        return SaddleProbe(target, epsilon, total, main)
    if target == "H11":
        peak = LOG_SILVER / (2.0 * epsilon)
        cap = math.ceil(10 * peak)
        poch2 = 1.0   # (q^2;q^2)_n
        aprod = 1.0   # (-1/q;q^2)_n
        total = 0.0
        n = 0
        while True:
            n += 1
            if n > cap:
                raise RuntimeError("saddle sum did not converge within the term cap")
            poch2 *= 1.0 - q ** (2 * n)
            aprod *= 1.0 + q ** (2 * n - 3)  # factor 1 + q^(2(n-1)-1)
            term = n * math.exp(-epsilon * (n * n + n)) * aprod / poch2
            total += term
            if n > peak and term < 1e-18 * total:
                break
        main = (LOG_SILVER / 2**1.25) / epsilon * math.exp(math.pi**2 / (16.0 * epsilon))
        return SaddleProbe(target, epsilon, total, main)
    raise ValueError(f"unknown target {target!r} (expected 'S11' or 'H11')")


_PRODUCT_MAINS = {
    # residues, modulus, log-amplitude, exponential rate coefficient c in e^(c/eps)
    "RR14": ((1, 4), 5, 0.5 * math.log(PHI) - 0.25 * math.log(5.0), math.pi**2 / 15.0),
    "RR23": ((2, 3), 5, -0.5 * math.log(PHI) - 0.25 * math.log(5.0), math.pi**2 / 15.0),
    "LG": ((1, 5, 6), 8, -0.25 * math.log(2.0), math.pi**2 / 16.0),
}


def product_asym_probe(which: str, epsilon: float) -> float:
    """Ratio of a restricted inverse Pochhammer product at q = e^(-eps) to
    its leading term.

    ``RR14``: 1/(q,q^4;q^5)_inf   vs (phi^(1/2)/5^(1/4)) e^(pi^2/(15 eps)),
    ``RR23``: 1/(q^2,q^3;q^5)_inf vs (phi^(-1/2) 5^(-1/4)) e^(pi^2/(15 eps)),
    ``LG``:   1/(q,q^5,q^6;q^8)_inf vs 2^(-1/4) e^(pi^2/(16 eps)).

    Factors with exponent*eps <= 50 enter the log-product; the omitted tail
    is below 1e-20.
    """
    if not _EPS_MIN <= epsilon <= _EPS_MAX:
        raise ValueError(f"epsilon must lie in [{_EPS_MIN}, {_EPS_MAX}]")
    try:
        residues, modulus, log_amp, rate = _PRODUCT_MAINS[which]
    except KeyError:
        raise ValueError(f"unknown product {which!r}; expected one of {sorted(_PRODUCT_MAINS)}")
    keys = {r % modulus for r in residues}
    log_direct = 0.0
    n_max = int(50.0 / epsilon)
    for n in range(1, n_max + 1):
        if n % modulus in keys:
            log_direct -= math.log(-math.expm1(-n * epsilon))
    log_main = log_amp + rate / epsilon
    return math.exp(log_direct - log_main)
