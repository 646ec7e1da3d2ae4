"""Exact scalars of the form (a + b*sqrt2) + i*(c + d*sqrt2) with rational a, b, c, d.

This ring contains every matrix entry produced by products of H, X, Z, c-Z and
SWAP gates, together with the normalisations 1/sqrt(2**k).  Arithmetic is exact
and equality is decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SQRT2 = math.sqrt(2.0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class RingScalar:
    """An element of Q(i)[sqrt2], stored as four exact rational components."""

    __slots__ = ("ra", "rb", "ia", "ib")

    def __init__(self, ra=0, rb=0, ia=0, ib=0):
        self.ra = _as_fraction(ra)
        self.rb = _as_fraction(rb)
        self.ia = _as_fraction(ia)
        self.ib = _as_fraction(ib)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def coerce(value) -> "RingScalar":
        if isinstance(value, RingScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return RingScalar(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into RingScalar")

    @staticmethod
    def i() -> "RingScalar":
        return RingScalar(0, 0, 1, 0)

    @staticmethod
    def sqrt2() -> "RingScalar":
        return RingScalar(0, 1, 0, 0)

    @staticmethod
    def inv_sqrt2_pow(m: int) -> "RingScalar":
        """Exact 2**(-m/2) for m >= 0 (the 1/sqrt(2**m) normalisation)."""
        if m < 0:
            raise ValueError("m must be non-negative")
        half, odd = divmod(m, 2)
        if odd:
            # 2**(-(2h+1)/2) = sqrt2 / 2**(h+1)
            return RingScalar(0, Fraction(1, 2 ** (half + 1)))
        return RingScalar(Fraction(1, 2 ** half))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.ra or self.rb or self.ia or self.ib)

    def is_rational(self) -> bool:
        return not (self.rb or self.ia or self.ib)

    def as_fraction(self):
        """The value as a Fraction if it is plain rational, else None."""
        return self.ra if self.is_rational() else None

    def conjugate(self) -> "RingScalar":
        """Complex conjugate (sqrt2 is fixed)."""
        return RingScalar(self.ra, self.rb, -self.ia, -self.ib)

    def abs2(self) -> "RingScalar":
        """|z|^2 = z * conj(z); always real, i.e. of the form A + B*sqrt2."""
        return self * self.conjugate()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = RingScalar.coerce(other)
        return RingScalar(self.ra + o.ra, self.rb + o.rb, self.ia + o.ia, self.ib + o.ib)

    __radd__ = __add__

    def __sub__(self, other):
        o = RingScalar.coerce(other)
        return RingScalar(self.ra - o.ra, self.rb - o.rb, self.ia - o.ia, self.ib - o.ib)

    def __rsub__(self, other):
        return RingScalar.coerce(other) - self

    def __neg__(self):
        return RingScalar(-self.ra, -self.rb, -self.ia, -self.ib)

    def __mul__(self, other):
        try:
            o = RingScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.ra, self.rb, self.ia, self.ib
        e, f, g, h = o.ra, o.rb, o.ia, o.ib
        # (a+b s + i(c+d s)) (e+f s + i(g+h s)), with s^2 = 2
        return RingScalar(
            a * e + 2 * b * f - c * g - 2 * d * h,
            a * f + b * e - c * h - d * g,
            a * g + 2 * b * h + c * e + 2 * d * f,
            a * h + b * g + c * f + d * e,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RingScalar.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero RingScalar")
        # Clear the imaginary part, then the sqrt2 part: both steps multiply
        # top and bottom by a conjugate, ending with a rational denominator.
        num = self * o.conjugate()
        den = o * o.conjugate()  # A + B*sqrt2, real
        a_, b_ = den.ra, den.rb
        norm = a_ * a_ - 2 * b_ * b_  # rational and nonzero for den != 0
        num = num * RingScalar(a_, -b_)
        inv = Fraction(1) / norm
        return RingScalar(num.ra * inv, num.rb * inv, num.ia * inv, num.ib * inv)

    def __rtruediv__(self, other):
        return RingScalar.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = RingScalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RingScalar(other)
        if not isinstance(other, RingScalar):
            return NotImplemented
        return (self.ra, self.rb, self.ia, self.ib) == (other.ra, other.rb, other.ia, other.ib)

    def __hash__(self):
        if self.is_rational():
            return hash(self.ra)
        return hash((self.ra, self.rb, self.ia, self.ib))

    def __bool__(self):
        return not self.is_zero()

    # -- conversions -----------------------------------------------------------

    def __complex__(self):
        return complex(
            float(self.ra) + float(self.rb) * _SQRT2,
            float(self.ia) + float(self.ib) * _SQRT2,
        )

    def __repr__(self):
        return f"RingScalar({self.ra!r}, {self.rb!r}, {self.ia!r}, {self.ib!r})"

    def __str__(self):
        """Render as 'p/q + r/s*sqrt2 + i*(...)' with vanishing parts omitted."""
        def real_part(a: Fraction, b: Fraction) -> str:
            bits = []
            if a:
                bits.append(str(a))
            if b:
                bits.append(f"{b}*sqrt2" if b != 1 else "sqrt2")
            return " + ".join(bits) if bits else "0"

        re = real_part(self.ra, self.rb)
        if not (self.ia or self.ib):
            return re
        im = real_part(self.ia, self.ib)
        if self.ra or self.rb:
            return f"{re} + i*({im})"
        return f"i*({im})"


ZERO = RingScalar(0)
ONE = RingScalar(1)
I_UNIT = RingScalar.i()
INV_SQRT2 = RingScalar.inv_sqrt2_pow(1)
