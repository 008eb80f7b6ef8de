"""Sampled checks of the contour-comparison machinery.

The root localization argument compares the dominant product term against
the sum of the remaining ones on the boundary of a rectangle.  This module
evaluates those modulus ratios at concrete sample points: monotonicity in
the order parameter on the right and left edges, the explicit bound on the
horizontal edges, boundary margins for the comparison itself, and the
inequality chain used for the d >= 4 half-plane results.  Everything here is
numerical evidence at sampled points, not proof.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import mpmath as mp

from .errors import DivisionByZeroTerm, DomainViolation, HypothesisViolation
from .scaled import ScaledComplex, scaled_polar

RELATIVE_SLACK = 1e-12  # a strict inequality must clear this margin to "pass"

IMAGINARY_AXIS = "imaginary_axis"
LEFT_EDGE = "left_edge"
HORIZONTAL_EDGE = "horizontal_edge"
_KINDS = (IMAGINARY_AXIS, LEFT_EDGE, HORIZONTAL_EDGE)


def _validate_indices(n: int, d: int, s: int, smallest: int = 0):
    if not (smallest <= s <= d - 1 < n):
        raise DomainViolation(
            f"need {smallest} <= s <= d-1 < n, got (n={n}, d={d}, s={s})"
        )


def _log2_term_modulus(n: int, d: int, s: int, z: complex) -> float:
    """log2 of |C(n,s) * prod_{k=1}^{n-1} ((d-s)z + k - s)|; -inf if it vanishes."""
    slope = float(d - s)
    x, y = z.real, z.imag
    im = slope * y
    im2 = im * im
    total = 0.0
    log2 = math.log2
    for k in range(1, n):
        re = slope * x + (k - s)
        m2 = re * re + im2
        if m2 == 0.0:
            return -math.inf
        total += log2(m2)
    return math.log2(math.comb(n, s)) + 0.5 * total


def f_term_modulus(n: int, d: int, s: int, z: complex) -> ScaledComplex:
    """|C(n,s) * ((d-s)z + n-1-s) ... ((d-s)z + 1-s)| as a scaled magnitude."""
    _validate_indices(n, d, s)
    lg = _log2_term_modulus(n, d, s, complex(z))
    if lg == -math.inf:
        return ScaledComplex(0j)
    return scaled_polar(lg)


def phi(n: int, d: int, s: int, z: complex) -> float:
    """Modulus ratio of the s-th product term to the dominant (s=0) one.

    Computed by exponent difference of the scaled magnitudes, so the huge
    individual products never materialize.
    """
    _validate_indices(n, d, s)
    z = complex(z)
    log_den = _log2_term_modulus(n, d, 0, z)
    if log_den == -math.inf:
        raise DivisionByZeroTerm(f"dominant term vanishes at z={z}")
    if s == 0:
        return 1.0
    log_num = _log2_term_modulus(n, d, s, z)
    gap = log_num - log_den
    if gap == -math.inf:
        return 0.0
    if gap > 1020:
        return math.inf
    return 2.0 ** gap


def default_beta_grid(n: int, points: int = 400):
    """0 plus `points` log-spaced magnitudes in [1e-3, 1e2]*n, both signs."""
    out = [0.0]
    for i in range(points):
        t = -3.0 + 5.0 * i / (points - 1)
        out.append(n * 10.0 ** t)
    out.extend(-b for b in out[1:])
    return out


def _strictly_less(lhs: float, rhs: float) -> bool:
    return lhs < rhs * (1.0 - RELATIVE_SLACK)


def check_migi(n: int, d: int, s: int, beta_samples=None) -> bool:
    """On the imaginary axis, the ratio for order n+1 sits strictly below
    the ratio for order n, at every sampled height.

    Samples where both ratios vanish exactly (the origin, where every s >= 1
    term has a zero factor) are degenerate for a strict comparison and are
    skipped.
    """
    _validate_indices(n, d, s, smallest=1)
    if beta_samples is None:
        beta_samples = default_beta_grid(n)
    for beta in beta_samples:
        z = complex(0.0, beta)
        larger = phi(n, d, s, z)
        smaller = phi(n + 1, d, s, z)
        if larger == 0.0 and smaller == 0.0:
            continue
        if not _strictly_less(smaller, larger):
            return False
    return True


def check_hidari(n: int, d: int, s: int, beta_samples=None) -> bool:
    """On the left edge, the ratio for order n+d sits strictly below the
    ratio for order n; each order is evaluated on its own edge Re = -n/d.

    Requires n >= d^2 - 2, the hypothesis under which the comparison holds.
    """
    if n < d * d - 2:
        raise HypothesisViolation(f"need n >= d^2 - 2 = {d * d - 2}, got n={n}")
    _validate_indices(n, d, s, smallest=1)
    if beta_samples is None:
        beta_samples = default_beta_grid(n)
    for beta in beta_samples:
        z_here = complex(-n / d, -beta)
        z_next = complex(-(n + d) / d, -beta)
        larger = phi(n, d, s, z_here)
        smaller = phi(n + d, d, s, z_next)
        if larger == 0.0 and smaller == 0.0:
            continue
        if not _strictly_less(smaller, larger):
            return False
    return True


def aida_bound(n: int, d: int, s: int, lam: float) -> float:
    """The explicit horizontal-edge bound C(n,s)(((d-s)^2 + 1/lam^2)/d^2)^((n-1)/2)."""
    _validate_indices(n, d, s, smallest=1)
    if lam == 0:
        raise DomainViolation("lam must be nonzero")
    log2bound = math.log2(math.comb(n, s)) + 0.5 * (n - 1) * math.log2(
        ((d - s) ** 2 + 1.0 / (lam * lam)) / (d * d)
    )
    return 2.0 ** log2bound


def check_aida(n: int, d: int, s: int, alpha: float, lam: float) -> bool:
    """At z = -alpha + i*lam*n with 0 <= alpha <= n/d, the ratio stays
    strictly below the explicit bound."""
    _validate_indices(n, d, s, smallest=1)
    if lam == 0:
        raise DomainViolation("lam must be nonzero")
    if not 0 <= alpha <= n / d:
        raise DomainViolation(f"need 0 <= alpha <= n/d = {n / d:.6g}, got {alpha}")
    value = phi(n, d, s, complex(-alpha, lam * n))
    return _strictly_less(value, aida_bound(n, d, s, lam))


@dataclass(frozen=True)
class ContourSpec:
    """One edge of the comparison rectangle and how to sample it.

    kind selects the edge: the imaginary axis (z = i*beta), the left edge
    (z = -n/d + i*beta), or a horizontal edge (z = -alpha + i*lam*n with the
    sign of lam picking top or bottom).  range covers the free parameter
    (beta for vertical edges, alpha in [0, n/d] for horizontal ones); when
    omitted, vertical edges span [-lam*n, lam*n] and horizontal ones the
    full [0, n/d].
    """

    kind: str
    d: int
    n: int
    range: Optional[Tuple[float, float]] = None
    lam: float = math.sqrt(2.0)
    samples: int = 1001

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainViolation(f"unknown contour kind {self.kind!r}")
        if self.samples < 2:
            raise DomainViolation("need at least 2 samples")
        if self.kind == HORIZONTAL_EDGE:
            if self.lam == 0:
                raise DomainViolation("horizontal edge needs lam != 0")
            lo, hi = self.resolved_range()
            if not (0 <= lo <= hi <= self.n / self.d + 1e-12):
                raise DomainViolation(
                    f"horizontal range must lie in [0, n/d], got ({lo}, {hi})"
                )

    def resolved_range(self) -> Tuple[float, float]:
        if self.range is not None:
            return self.range
        if self.kind == HORIZONTAL_EDGE:
            return (0.0, self.n / self.d)
        span = abs(self.lam) * self.n
        return (-span, span)

    def points(self):
        lo, hi = self.resolved_range()
        step = (hi - lo) / (self.samples - 1)
        for i in range(self.samples):
            t = lo + step * i
            if self.kind == IMAGINARY_AXIS:
                yield complex(0.0, t)
            elif self.kind == LEFT_EDGE:
                yield complex(-self.n / self.d, t)
            else:
                yield complex(-t, self.lam * self.n)


@dataclass(frozen=True)
class MarginReport:
    """Worst sampled ratio sum on a contour edge; passed means max < 1."""

    max_ratio: float
    argmax_point: complex
    passed: bool
    nudged: int = 0


def rouche_margin(spec: ContourSpec) -> MarginReport:
    """Max over the edge samples of the sum of the s >= 1 modulus ratios.

    passed=True (max strictly below 1 with slack) is sampled evidence that
    the dominant term controls the boundary, hence that the comparison
    argument localizes all roots inside the rectangle; it is not a proof.
    Sample points within 1e-9 of a zero of the dominant term are nudged by
    1e-6 and counted in `nudged`.
    """
    d, n = spec.d, spec.n
    max_ratio = 0.0
    argmax = complex(0.0, 0.0)
    nudged = 0
    for z in spec.points():
        if abs(z.imag) < 1e-9:
            # zeros of the dominant term sit at -k/d, k = 1..n-1
            k = round(-z.real * d)
            if 1 <= k <= n - 1 and abs(z.real + k / d) < 1e-9:
                z = complex(z.real + 1e-6, z.imag)
                nudged += 1
        total = 0.0
        for s in range(1, d):
            total += phi(n, d, s, z)
        if total > max_ratio:
            max_ratio = total
            argmax = z
    return MarginReport(
        max_ratio=max_ratio,
        argmax_point=argmax,
        passed=_strictly_less(max_ratio, 1.0),
        nudged=nudged,
    )


def geometric_factorial_sum(d: int) -> Fraction:
    """Exact partial sum of (2/3)^s / s! over s = 1..d-1."""
    return sum(
        (Fraction(2 ** s, 3 ** s * math.factorial(s)) for s in range(1, d)),
        Fraction(0),
    )


def ratio_bound(d: int) -> Fraction:
    """(2d-1)(d-1)^2 / (d(2d^2 - 5d + 4)), strictly below 1 for d >= 4."""
    return Fraction((2 * d - 1) * (d - 1) ** 2, d * (2 * d * d - 5 * d + 4))


def check_d4_sum_bound(d: int) -> bool:
    """The two d >= 4 half-plane ingredients on the right side.

    The partial sum of (2/3)^s/s! stays strictly below e^(2/3) - 1 (its own
    limit; the gap is certified by the exact next term) and the per-term
    growth ratio stays strictly below 1.  Both sides are exact where
    possible; the transcendental comparison runs at 60 digits.
    """
    if d < 4:
        raise HypothesisViolation(f"need d >= 4, got {d}")
    partial = geometric_factorial_sum(d)
    next_term = Fraction(2 ** d, 3 ** d * math.factorial(d))
    with mp.workdps(60):
        limit = mp.expm1(mp.mpf(2) / 3)
        value = mp.mpf(partial.numerator) / partial.denominator
        gap_ok = value < limit and mp.mpf(next_term.numerator) / next_term.denominator > 0
    return bool(gap_ok and ratio_bound(d) < 1)


def h_value(d: int, s: float) -> float:
    """log((d-1) (d^2+2d)^s / Gamma(s+1) * ((d-s)/d)^((d-s)(d+1)))."""
    return (
        math.log(d - 1)
        + s * math.log(d * d + 2 * d)
        - math.lgamma(s + 1)
        + (d - s) * (d + 1) * math.log((d - s) / d)
    )


def h_endpoint_chain_bound(d: int) -> Fraction:
    """Exact value of 2^6 * 6^(d-2) * (d-1) / ((d+1)! * d^3) from the s=d-2 chain."""
    return Fraction(2 ** 6 * 6 ** (d - 2) * (d - 1), math.factorial(d + 1) * d ** 3)


def check_h_negative(d: int) -> bool:
    """Negativity of the left-edge exponent function at both endpoints.

    Convexity in s reduces the claim to s=1 and s=d-2; integer s in between
    are sampled as a belt-and-braces check.
    """
    if d < 4:
        raise HypothesisViolation(f"need d >= 4, got {d}")
    if not h_value(d, 1) < -RELATIVE_SLACK:
        return False
    if not h_value(d, d - 2) < -RELATIVE_SLACK:
        return False
    return all(h_value(d, s) < -RELATIVE_SLACK for s in range(1, d - 1))
