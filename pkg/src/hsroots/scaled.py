"""Complex values with a separate power-of-two exponent.

Products of a hundred-plus linear factors overflow double precision, so the
evaluation layer carries every value as mantissa * 2**exponent with the
mantissa's modulus normalized into [1, 2).  Only the mantissa rounds; the
exponent is an exact integer of unlimited range.
"""

import math
from fractions import Fraction

_ALIGN_LIMIT = 120  # beyond this exponent gap the smaller addend rounds to nothing


class ScaledComplex:
    """value = mantissa * 2**exponent, |mantissa| in [1, 2) unless zero."""

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: complex, exponent: int = 0):
        mantissa = complex(mantissa)
        if mantissa == 0:
            object.__setattr__(self, "mantissa", 0j)
            object.__setattr__(self, "exponent", 0)
            return
        _, e = math.frexp(abs(mantissa))
        # frexp puts |m| in [0.5, 1) * 2**e; shift one bit for [1, 2)
        shift = e - 1
        object.__setattr__(self, "mantissa", complex(
            math.ldexp(mantissa.real, -shift), math.ldexp(mantissa.imag, -shift)
        ))
        object.__setattr__(self, "exponent", exponent + shift)

    def __setattr__(self, name, value):
        raise AttributeError("ScaledComplex is immutable")

    @classmethod
    def from_int(cls, value: int) -> "ScaledComplex":
        if value == 0:
            return cls(0j)
        shift = max(0, value.bit_length() - 62)
        return cls(complex(value >> shift if shift else value), shift)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ScaledComplex":
        return cls.from_int(value.numerator) / cls.from_int(value.denominator)

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    def __mul__(self, other):
        if isinstance(other, ScaledComplex):
            return ScaledComplex(self.mantissa * other.mantissa,
                                 self.exponent + other.exponent)
        return ScaledComplex(self.mantissa * other, self.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ScaledComplex):
            if other.is_zero:
                raise ZeroDivisionError("division by scaled zero")
            return ScaledComplex(self.mantissa / other.mantissa,
                                 self.exponent - other.exponent)
        return ScaledComplex(self.mantissa / other, self.exponent)

    def __neg__(self):
        out = ScaledComplex.__new__(ScaledComplex)
        object.__setattr__(out, "mantissa", -self.mantissa)
        object.__setattr__(out, "exponent", self.exponent)
        return out

    def __add__(self, other):
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        hi, lo = (self, other) if self.exponent >= other.exponent else (other, self)
        gap = hi.exponent - lo.exponent
        if gap > _ALIGN_LIMIT:
            return hi
        return ScaledComplex(hi.mantissa + math.ldexp(1.0, -gap) * lo.mantissa,
                             hi.exponent)

    def __sub__(self, other):
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex(other)
        return self + (-other)

    def abs(self) -> "ScaledComplex":
        """Scaled magnitude (real, nonnegative)."""
        return ScaledComplex(abs(self.mantissa), self.exponent)

    def log2_abs(self) -> float:
        """log2 of the modulus; -inf for zero."""
        if self.is_zero:
            return -math.inf
        return self.exponent + math.log2(abs(self.mantissa))

    def to_complex(self) -> complex:
        """Collapse to a plain complex; saturates on exponent overflow."""
        if self.is_zero:
            return 0j
        if self.exponent > 1020:
            m = self.mantissa / abs(self.mantissa)
            return complex(math.inf * m.real if m.real else 0.0,
                           math.inf * m.imag if m.imag else 0.0)
        if self.exponent < -1070:
            return 0j
        scale = math.ldexp(1.0, self.exponent)
        return self.mantissa * scale

    def to_float(self) -> float:
        """Real part of `to_complex`, for real-valued magnitudes."""
        return self.to_complex().real

    def __repr__(self):
        return f"ScaledComplex({self.mantissa!r}, 2**{self.exponent})"

    def isclose(self, other, rel_tol=1e-12) -> bool:
        if not isinstance(other, ScaledComplex):
            other = ScaledComplex(other)
        diff = self - other
        if diff.is_zero:
            return True
        ref = max(self.log2_abs(), other.log2_abs())
        if ref == -math.inf:
            return False
        return diff.log2_abs() - ref <= math.log2(rel_tol)


def scaled_polar(log2_modulus: float) -> ScaledComplex:
    """Positive real scaled value with the given log2 modulus."""
    e = math.floor(log2_modulus)
    return ScaledComplex(complex(2.0 ** (log2_modulus - e)), e)
