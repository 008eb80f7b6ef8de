"""Exact root-location certificates via the Routh table.

All verdicts are computed in integer arithmetic after clearing denominators;
rows are rescaled only by positive constants (their gcd), which preserves
the sign structure the table's first column encodes.  A zero leading element
is reported as Boundary, never perturbed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .ehrhart import HypersimplexParams, ehrhart_polynomial
from .errors import ZeroPolynomial
from .polynomial import RationalPolynomial

STABLE = "Stable"
UNSTABLE = "Unstable"
BOUNDARY = "Boundary"


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of one half-plane test.

    Stable: every root has strictly negative real part.
    Unstable: at least one root with positive real part.
    Boundary: the exact table produced a zero leading element (a root on the
    dividing axis, or a symmetric pair) and counting cannot proceed.
    """

    status: str
    witness: Optional[str] = None

    @property
    def is_stable(self) -> bool:
        return self.status == STABLE


@dataclass(frozen=True)
class StripVerdict:
    """Joint verdict for the open strip -n/d < Re < 0."""

    left_ok: StabilityVerdict
    right_ok: StabilityVerdict
    overall: bool


def shift_polynomial(poly: RationalPolynomial, c) -> RationalPolynomial:
    """Exact Taylor shift: returns q with q(z) = p(z + c)."""
    c = Fraction(c)
    coeffs = list(poly.coeffs)
    deg = len(coeffs) - 1
    # repeated synthetic division by (z - (-c)) accumulates the shifted coefficients
    for i in range(deg):
        for j in range(deg - 1, i - 1, -1):
            coeffs[j] += c * coeffs[j + 1]
    return RationalPolynomial(coeffs)


def reflect_polynomial(poly: RationalPolynomial) -> RationalPolynomial:
    """Returns q with q(z) = p(-z): negate the odd-degree coefficients."""
    return RationalPolynomial(
        [-c if k % 2 else c for k, c in enumerate(poly.coeffs)]
    )


def _integer_coefficients(poly: RationalPolynomial) -> list:
    """Scale by the positive lcm of denominators; same roots, integer entries."""
    lcm = 1
    for c in poly.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return [int(c * lcm) for c in poly.coeffs]


def _reduce_row(row: list) -> list:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


def routh_hurwitz(poly: RationalPolynomial) -> StabilityVerdict:
    """Classify the roots of a real polynomial against the left half-plane.

    Builds the classical Routh table exactly.  Sign changes in the first
    column count roots with positive real part.  A full zero row signals a
    factor whose roots are symmetric about the origin; it is replaced, as in
    the classical procedure, by the derivative of the auxiliary polynomial
    of the row above (an exact step), and the presence of such a factor
    rules out Stable.  A zero leading element in a nonzero row stops the
    count and yields Boundary with the offending row as witness.
    """
    if poly.is_zero or poly.degree < 1:
        raise ZeroPolynomial("stability test needs degree >= 1")
    coeffs = _integer_coefficients(poly)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    deg = len(coeffs) - 1

    # row i holds the coefficients of degree deg-i, deg-i-2, ...
    descending = coeffs[::-1]
    row_prev = _reduce_row(descending[0::2])
    row_cur = _reduce_row(descending[1::2])
    leading = [row_prev[0]]
    symmetric_factor = False

    for index in range(1, deg + 1):
        if not row_cur or all(v == 0 for v in row_cur):
            # auxiliary polynomial A(z) from the row above, at degree k;
            # its derivative restores the row without perturbation
            symmetric_factor = True
            k = deg - index + 1
            row_cur = _reduce_row(
                [(k - 2 * j) * v for j, v in enumerate(row_prev) if k - 2 * j >= 1]
            )
        if row_cur[0] == 0:
            return StabilityVerdict(
                BOUNDARY, witness=f"zero leading element in table row {index}"
            )
        leading.append(row_cur[0])
        if index == deg:
            break
        a, b = row_cur[0], row_prev[0]
        width = (deg - index - 1) // 2 + 1
        nxt = [
            a * (row_prev[j + 1] if j + 1 < len(row_prev) else 0)
            - b * (row_cur[j + 1] if j + 1 < len(row_cur) else 0)
            for j in range(width)
        ]
        if a < 0:
            nxt = [-v for v in nxt]  # keep the row a positive multiple of the true one
        nxt = _reduce_row(nxt)
        row_prev, row_cur = row_cur, nxt

    changes = sum(
        1 for x, y in zip(leading, leading[1:]) if (x > 0) != (y > 0)
    )
    if changes:
        return StabilityVerdict(
            UNSTABLE, witness=f"{changes} sign change(s) in the first column"
        )
    if symmetric_factor:
        # no right-half-plane roots among the symmetric factor: it lies on the axis
        return StabilityVerdict(BOUNDARY, witness="origin-symmetric factor on the axis")
    return StabilityVerdict(STABLE)


def verify_half_plane(
    params: HypersimplexParams, c, side: str
) -> StabilityVerdict:
    """Certify that every root has Re < c (side='left_of') or Re > c ('right_of')."""
    c = Fraction(c)
    poly = ehrhart_polynomial(params)
    if side == "left_of":
        # roots of p(z + c) are the roots of p shifted left by c
        return routh_hurwitz(shift_polynomial(poly, c))
    if side == "right_of":
        # q(z) = p(-z + c): Re(root of p) > c iff q is stable
        return routh_hurwitz(reflect_polynomial(shift_polynomial(poly, c)))
    raise ValueError(f"side must be 'left_of' or 'right_of', got {side!r}")


def verify_strip(params: HypersimplexParams) -> StripVerdict:
    """Exact certification of the open strip -n/d < Re(root) < 0.

    Requires the standing assumption 2d <= n.  The right test applies the
    table to the polynomial itself; the left test applies it to
    q(z) = p(-z - n/d), which maps the half-plane Re > -n/d onto Re < 0.
    """
    params.require_conjecture_domain()
    poly = ehrhart_polynomial(params)
    bound = Fraction(params.n, params.d)
    right = routh_hurwitz(poly)
    left = routh_hurwitz(reflect_polynomial(shift_polynomial(poly, -bound)))
    return StripVerdict(
        left_ok=left,
        right_ok=right,
        overall=left.is_stable and right.is_stable,
    )
