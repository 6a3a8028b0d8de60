"""Exact arithmetic over the Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values (arbitrary
precision, canonical by construction).  :class:`GaussianRational` layers
the complex structure ``re + im*i`` on top of two Fractions and is the
coefficient field for every symbolic computation in this package.

Text forms: rationals print as ``p/q`` or ``p``; Gaussian rationals as
``p/q``, ``r/s*I`` or ``p/q+r/s*I`` and, for interchange, as JSON
objects ``{"re": "p/q", "im": "r/s"}``.  Parsing and printing round-trip
losslessly.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "parse_rational",
    "parse_gaussian",
]

Rational = Fraction

_RATIONAL_RE = _re.compile(r"[+-]?\d+(?:/\d+)?\Z")

# accepted forms: a | b*I | a+b*I | a-b*I plus the shorthands I, -I, a+I, a-I
_NUM = r"\d+(?:/\d+)?"
_REAL_ONLY_RE = _re.compile(rf"[+-]?{_NUM}\Z")
_IMAG_ONLY_RE = _re.compile(rf"(?P<sign>[+-]?)(?:(?P<mag>{_NUM})\*)?I\Z")
_REAL_IMAG_RE = _re.compile(
    rf"(?P<re>[+-]?{_NUM})(?P<sign>[+-])(?:(?P<mag>{_NUM})\*)?I\Z"
)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p``.  Float and exponent forms are rejected."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"malformed rational {text!r} (expected p/q or p)")
    return Fraction(s)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"exact component required, got {type(value).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number re + im*i with rational components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _fraction(self.re))
        object.__setattr__(self, "im", _fraction(self.im))

    # -- field operations -------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __bool__(self):
        return not self.is_zero

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    # -- conversions ---------------------------------------------------------

    def to_complex(self) -> complex:
        """Nearest double per component; raises on double overflow."""
        try:
            return complex(float(self.re), float(self.im))
        except OverflowError:
            raise OverflowError(f"{self} exceeds double range") from None

    __complex__ = to_complex

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
            raise ValueError(f"expected {{'re','im'}} object, got {obj!r}")
        return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = "I" if abs(self.im) == 1 else f"{abs(self.im)}*I"
        if self.re == 0:
            return imag if self.im > 0 else "-" + imag
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _signed_magnitude(sign: str, mag) -> Fraction:
    value = Fraction(mag) if mag is not None else Fraction(1)
    return -value if sign == "-" else value


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the text form produced by ``str(GaussianRational)``."""
    s = text.strip().replace(" ", "")
    m = _REAL_IMAG_RE.fullmatch(s)
    if m:
        return GaussianRational(
            Fraction(m.group("re")),
            _signed_magnitude(m.group("sign"), m.group("mag")),
        )
    if _REAL_ONLY_RE.fullmatch(s):
        return GaussianRational(Fraction(s))
    m = _IMAG_ONLY_RE.fullmatch(s)
    if m:
        return GaussianRational(
            Fraction(0), _signed_magnitude(m.group("sign"), m.group("mag"))
        )
    raise ValueError(f"malformed Gaussian rational {text!r}")
