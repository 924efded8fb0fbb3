"""Limit law of the 5'-3' distance and the asymptotics behind it.

The limiting distribution has the rational generating function
``Q(u) = m1(u) / m2(u)`` over Q(sqrt 5), expanded exactly here.  Quantities
that are not in Q(sqrt 5) (the tail constant ``delta``, square-root
singular expansion coefficients) are evaluated with mpmath at a configurable
binary precision, 100 bits by default.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .qsqrt5 import QSqrt5
from .series import canonical_polynomials, canonical_series, secondary_series
from .tables import distance_table

__all__ = [
    "CheckReport",
    "LimitLaw",
    "M1",
    "M2",
    "ProbeOutOfRange",
    "SingularConstants",
    "convergence_check",
    "delta",
    "dominant_singularity",
    "gamma_density",
    "growth_rate_check",
    "m1",
    "m2",
    "q_series",
    "rho",
    "s_closed_form",
    "singular_constants",
    "singular_residual_check",
    "tail_ratio_check",
    "w_closed_form",
]

DEFAULT_PREC = 100

M1 = (QSqrt5(0), QSqrt5(-7, 3))
M2 = (
    QSqrt5(-2),
    QSqrt5(6, -2),
    QSqrt5(-15, 7),
    QSqrt5(22, -10),
    QSqrt5(-18, 8),
)


class ProbeOutOfRange(ValueError):
    pass


def _horner(coeffs: Sequence[QSqrt5], u) -> QSqrt5:
    acc = QSqrt5(0)
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def m1(u: QSqrt5 | Fraction | int) -> QSqrt5:
    return _horner(M1, u)


def m2(u: QSqrt5 | Fraction | int) -> QSqrt5:
    return _horner(M2, u)


def rho() -> QSqrt5:
    """Dominant singularity ``(3 - sqrt 5) / 2`` of the secondary structure series."""
    return QSqrt5(Fraction(3, 2), Fraction(-1, 2))


def delta(prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Tail base ``(-1 - sqrt5 + sqrt(38 + 18 sqrt5)) / 4``; ``q(d)`` decays like ``delta**-d``."""
    with mpmath.workprec(prec):
        r5 = mpmath.sqrt(5)
        return (-1 - r5 + mpmath.sqrt(38 + 18 * r5)) / 4


@dataclass(frozen=True)
class LimitLaw:
    """Exact limit probabilities ``q(0..D)``; ``q(0) = 0``."""

    D: int
    q: tuple[QSqrt5, ...]

    def __getitem__(self, d: int) -> QSqrt5:
        return self.q[d]

    def decimal(self, d: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
        return self.q[d].to_mpf(prec)

    def partial_sum(self, d: int) -> QSqrt5:
        acc = QSqrt5(0)
        for x in self.q[: d + 1]:
            acc = acc + x
        return acc


def q_series(D: int) -> LimitLaw:
    """Expand ``m1(u) / m2(u)`` exactly up to ``u**D``."""
    if D < 1:
        raise ValueError("D must be at least 1")
    inv_lead = M2[0].inverse()
    q: list[QSqrt5] = []
    for d in range(D + 1):
        acc = M1[d] if d < len(M1) else QSqrt5(0)
        for k in range(1, min(d, len(M2) - 1) + 1):
            acc = acc - M2[k] * q[d - k]
        q.append(acc * inv_lead)
    return LimitLaw(D, tuple(q))


@dataclass(frozen=True)
class SingularConstants:
    """Constants of ``W(z,u) = C0 + V(rho,u) + r_rho (rho - z)^(1/2) + O(rho - z)``.

    ``C0`` is the constant term of ``h(z,u) f(g(z,u))`` alone; ``V(rho,u)`` is
    kept separate.  ``C0_folded`` is the variant that also folds ``rho`` into
    the bracket, which double counts ``V(rho,u)``; it is kept for comparison.
    """

    u: Fraction
    alpha: mpmath.mpf
    t_rho: mpmath.mpf
    C0: mpmath.mpf
    r_rho: mpmath.mpf
    V_rho: mpmath.mpf
    C0_folded: mpmath.mpf
    prec: int


def singular_constants(u: Fraction | int | str, prec: int = DEFAULT_PREC) -> SingularConstants:
    u = Fraction(u)
    if not 0 < u < 1:
        raise ProbeOutOfRange(f"u={u} must lie in (0, 1)")
    with mpmath.workprec(prec + 20):
        uu = mpmath.mpf(u.numerator) / u.denominator
        r5 = mpmath.sqrt(5)
        rh = (3 - r5) / 2
        h = 1 / (1 - rh * uu)
        t_rho = (7 - 3 * r5) * uu / (2 - (3 - r5) * uu)
        alpha = 2 * (-2 + r5) * uu / (2 + (-3 + r5) * uu)
        f_alpha = alpha / (1 - uu * alpha)
        df_alpha = 1 / (1 - uu * alpha) ** 2
        s_jump = mpmath.sqrt(8 * (3 * r5 - 5)) / (-3 + r5) ** 2
        s_minus_one = (r5 - 1) / (3 - r5)
        c1 = f_alpha + df_alpha * t_rho * s_minus_one - alpha * df_alpha
        C0 = h * c1
        r_rho = -h * df_alpha * t_rho * s_jump
        V_rho = rh / (1 - rh * uu)
        C0_folded = h * (c1 + rh)
    if not alpha < 1:
        raise ArithmeticError(f"composition is not subcritical at u={u}: alpha={alpha}")
    with mpmath.workprec(prec):
        return SingularConstants(u, +alpha, +t_rho, +C0, +r_rho, +V_rho, +C0_folded, prec)


def s_closed_form(z, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """``S(z) = (1 - z + z^2 - sqrt((z^2+z+1)(z^2-3z+1))) / (2 z^2)`` for ``0 < z <= rho``."""
    with mpmath.workprec(prec):
        z = mpmath.mpf(z)
        root = mpmath.sqrt((z * z + z + 1) * (z * z - 3 * z + 1))
        return (1 - z + z * z - root) / (2 * z * z)


def w_closed_form(z, u, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Bivariate generating function ``W(z, u)`` evaluated numerically."""
    with mpmath.workprec(prec):
        z = mpmath.mpf(z)
        u = mpmath.mpf(u)
        g = s_closed_form(z, prec) - 1
        a = 1 - z * u
        return u * z * z * g / (a * a - a * (z * u) ** 2 * g) + z / a


@dataclass
class CheckReport:
    check: str
    n_or_d: int
    observed: float
    predicted: float
    deviation: float
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "n_or_d": self.n_or_d,
            "observed": self.observed,
            "predicted": self.predicted,
            "deviation": self.deviation,
        }


def singular_residual_check(
    u: Fraction | int | str, ks: Sequence[int] = range(4, 13), prec: int = DEFAULT_PREC
) -> CheckReport:
    """Fit the order of ``W - C0 - V(rho,u) - r_rho sqrt(rho - z)`` as ``z -> rho``.

    Probes ``z = rho (1 - 2**-k)``; the fitted log-log slope should be 1.
    """
    consts = singular_constants(u, prec)
    with mpmath.workprec(prec + 40):
        rh = (3 - mpmath.sqrt(5)) / 2
        uu = mpmath.mpf(consts.u.numerator) / consts.u.denominator
        eps, res = [], []
        for k in ks:
            z = rh * (1 - mpmath.mpf(2) ** -k)
            e = rh - z
            value = w_closed_form(z, uu, prec + 40) - consts.C0 - consts.V_rho - consts.r_rho * mpmath.sqrt(e)
            eps.append(float(mpmath.log(e)))
            res.append(float(mpmath.log(abs(value))))
    slope = float(np.polyfit(eps, res, 1)[0])
    return CheckReport(
        "singular_residual",
        len(ks),
        slope,
        1.0,
        abs(slope - 1.0),
        {"u": str(consts.u), "log_eps": eps, "log_residual": res},
    )


def gamma_density(lam: float, r: float, x: float) -> float:
    """Density ``lam**r x**(r-1) exp(-lam x) / Gamma(r)`` of a Gamma(lam, r) law; 0 for ``x <= 0``."""
    if lam <= 0 or r <= 0:
        raise ValueError("Gamma parameters must be positive")
    if x <= 0:
        return 0.0
    return math.exp(r * math.log(lam) + (r - 1) * math.log(x) - lam * x - math.lgamma(r))


def tail_ratio_check(D: int, prec: int = DEFAULT_PREC, start: int | None = None) -> CheckReport:
    """Compare ``q(d+1)/q(d)`` with ``((d+2)/(d+1)) / delta`` for ``d`` in ``[start, D]``.

    ``start`` defaults to ``D // 2``.  The deviation is the maximum absolute
    difference over that range.
    """
    if D < 10:
        raise ValueError("D must be at least 10")
    start = D // 2 if start is None else start
    law = q_series(D + 1)
    dl = delta(prec)
    with mpmath.workprec(prec):
        values = [law.decimal(d, prec) for d in range(D + 2)]
        ratios, predicted = {}, {}
        for d in range(1, D + 1):
            ratios[d] = values[d + 1] / values[d]
            predicted[d] = mpmath.mpf(d + 2) / (d + 1) / dl
        devs = {d: abs(ratios[d] - predicted[d]) for d in range(start, D + 1)}
    worst = max(devs, key=devs.get)
    seq = [ratios[d] for d in range(start, D + 1)]
    diffs = [b - a for a, b in zip(seq, seq[1:])]
    monotone = all(x <= 0 for x in diffs) or all(x >= 0 for x in diffs)
    return CheckReport(
        "tail_ratio",
        D,
        float(ratios[D]),
        float(predicted[D]),
        float(devs[worst]),
        {
            "start": start,
            "worst_d": worst,
            "limit_ratio": float(1 / dl),
            "eventually_monotone": monotone,
            "ratios": {d: float(ratios[d]) for d in range(start, D + 1)},
        },
    )


def dominant_singularity(r: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Smallest-modulus root of ``p_r``; exactly ``(3 - sqrt 5)/2`` for ``r = 1``."""
    _, _, p = canonical_polynomials(r)
    with mpmath.workprec(prec):
        roots = mpmath.polyroots(list(reversed(p)), maxsteps=200, extraprec=2 * prec)
        best = min(roots, key=abs)
        if abs(mpmath.im(best)) > mpmath.mpf(2) ** (-prec // 2) or mpmath.re(best) <= 0:
            raise ArithmeticError(f"dominant root of p_{r} is not real positive: {best}")
        return mpmath.re(best)


def growth_rate_check(N: int, r: int = 1, prec: int = DEFAULT_PREC) -> CheckReport:
    """``s_{N+1} / s_N`` against the exponential growth ``1/rho_r``.

    Details also report the ratio corrected by the ``n^(-3/2)`` factor and the
    relative change of ``s_n rho^n n^(3/2)`` between ``n = N/2`` and ``n = N``.
    """
    if N < 100:
        raise ValueError("N must be at least 100")
    s = secondary_series(N + 1).integers() if r == 1 else canonical_series(r, N + 1).integers()
    with mpmath.workprec(prec):
        rh = rho().to_mpf(prec) if r == 1 else dominant_singularity(r, prec)
        ratio = mpmath.mpf(s[N + 1]) / s[N]
        predicted = 1 / rh
        corrected = ratio * (mpmath.mpf(N + 1) / N) ** mpmath.mpf(1.5)

        def scaled(n: int) -> mpmath.mpf:
            return mpmath.mpf(s[n]) * rh**n * mpmath.mpf(n) ** mpmath.mpf(1.5)

        half = N // 2
        c_half, c_full = scaled(half), scaled(N)
        stabilization = abs(c_full - c_half) / c_full
    return CheckReport(
        "growth_rate",
        N,
        float(ratio),
        float(predicted),
        float(abs(ratio - predicted)),
        {
            "r": r,
            "relative_deviation": float(abs(ratio - predicted) / predicted),
            "corrected_ratio": float(corrected),
            "corrected_deviation": float(abs(corrected - predicted)),
            "scaled_at_half": float(c_half),
            "scaled_at_full": float(c_full),
            "stabilization": float(stabilization),
        },
    )


def convergence_check(
    ns: Sequence[int] = (250, 500, 1000, 2000), d_max: int = 20, prec: int = DEFAULT_PREC
) -> dict:
    """Deviations ``|p(n,d) - q(d)|`` for ``d <= d_max`` at each ``n``.

    Returns ``{"deviation": {n: {d: dev}}, "monotone": {d: bool}, "max_at_last": float}``.
    """
    law = q_series(max(d_max, 1))
    table = distance_table(1, max(ns), d_max=d_max)
    dev: dict[int, dict[int, float]] = {}
    with mpmath.workprec(prec):
        qs = [law.decimal(d, prec) for d in range(d_max + 1)]
        for n in ns:
            total = table.totals[n]
            dev[n] = {
                d: float(abs(mpmath.mpf(table.rows[n][d]) / total - qs[d])) for d in range(1, d_max + 1)
            }
    monotone = {d: all(dev[a][d] > dev[b][d] for a, b in zip(ns, ns[1:])) for d in range(1, d_max + 1)}
    return {
        "deviation": dev,
        "monotone": monotone,
        "max_at_last": max(dev[ns[-1]].values()),
    }
