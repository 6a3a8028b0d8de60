"""Inversive geometry of the Gauss plane.

Inversion in a circle maps Z to the point Z' on ray CZ with
|CZ|*|CZ'| = r^2; in the unit circle this is z -> 1/conj(z).  The
module also provides the conjugate-reciprocal and reciprocal transforms
of univariate polynomials, the self-inversive / self-reciprocal
predicates (exact arithmetic only), and the harmonic-conjugate test for
real pairs against the unit-circle diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gaussrat import GaussianRational, parse_gaussian

__all__ = [
    "InversionCircle",
    "UniPoly",
    "parse_unipoly",
    "invert_in_circle",
    "invert_unit",
    "conjugate_reciprocal",
    "reciprocal",
    "is_self_inversive",
    "is_self_reciprocal",
    "harmonic_conjugate_check",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class InversionCircle:
    center: complex = 0j
    radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")


UNIT_CIRCLE = InversionCircle(0j, 1.0)


class UniPoly:
    """Univariate polynomial, coefficients stored constant-term first.

    Two coefficient modes: exact (GaussianRational) and numeric
    (complex).  Trailing zero coefficients are trimmed so the leading
    coefficient is nonzero; the zero polynomial is an empty list.
    """

    __slots__ = ("_coefficients", "_exact")

    def __init__(self, coefficients: Iterable):
        coeffs = list(coefficients)
        exact = None
        out = []
        for c in coeffs:
            if isinstance(c, (GaussianRational, int, Fraction)):
                if exact is False:
                    raise TypeError("mixed exact and numeric coefficients")
                exact = True
                out.append(c if isinstance(c, GaussianRational) else GaussianRational(c))
            elif isinstance(c, (complex, float)):
                if exact is True:
                    raise TypeError("mixed exact and numeric coefficients")
                exact = False
                z = complex(c)
                if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                    raise ValueError("numeric coefficients must be finite")
                out.append(z)
            else:
                raise TypeError(f"unsupported coefficient type {type(c).__name__}")
        while out and not out[-1]:
            out.pop()
        object.__setattr__(self, "_coefficients", tuple(out))
        object.__setattr__(self, "_exact", bool(exact) if out else (exact is not False))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def is_exact(self) -> bool:
        return self._exact

    @property
    def leading_coefficient(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coefficients[-1]

    def to_floats(self) -> "UniPoly":
        """Numeric-mode copy (nearest double per component)."""
        if not self._exact:
            return self
        return UniPoly([c.to_complex() for c in self._coefficients])

    def to_text(self) -> str:
        """Comma-separated coefficient list, constant term first."""
        if not self._exact:
            raise ValueError("text form is defined for exact coefficients")
        if self.is_zero:
            return "0"
        return ", ".join(str(c) for c in self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._exact == other._exact and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self._exact, self._coefficients))

    def __repr__(self):
        mode = "exact" if self._exact else "numeric"
        return f"UniPoly({list(self._coefficients)!r}, {mode})"


def parse_unipoly(text: str) -> UniPoly:
    """Parse the comma-separated exact coefficient list."""
    body = text.strip()
    if body == "0":
        return UniPoly([])
    return UniPoly([parse_gaussian(chunk) for chunk in body.split(",")])


def invert_in_circle(z: complex, circle: InversionCircle) -> complex:
    """Inverse of z in the circle: z' = c + r^2 / conj(z - c)."""
    z = complex(z)
    d = z - circle.center
    if d == 0:
        raise ValueError("inversion undefined at center")
    return circle.center + (circle.radius * circle.radius) / d.conjugate()


def invert_unit(z: complex) -> complex:
    """Inverse of z in the unit circle: 1/conj(z) = z/|z|^2."""
    z = complex(z)
    if z == 0:
        raise ValueError("inversion undefined at center")
    return 1.0 / z.conjugate()


def _require_nonzero(f: UniPoly):
    if f.is_zero:
        raise ValueError("zero polynomial is not accepted")


def conjugate_reciprocal(f: UniPoly) -> UniPoly:
    """f*(z) = z^n * conj(f(1/conj(z))): reversed, conjugated coefficients."""
    _require_nonzero(f)
    return UniPoly([c.conjugate() for c in reversed(f.coefficients)])


def reciprocal(f: UniPoly) -> UniPoly:
    """f+(z) = z^n * f(1/z): reversed coefficients."""
    _require_nonzero(f)
    return UniPoly(list(reversed(f.coefficients)))


def _exact_predicate_input(f: UniPoly):
    _require_nonzero(f)
    if not f.is_exact:
        raise TypeError("predicate requires exact coefficients")
    if f.coefficients[0].is_zero:
        # a root at the origin has its inverse at infinity
        raise ValueError("constant term must be nonzero")
    return f.coefficients


def is_self_inversive(f: UniPoly) -> bool:
    """True iff c_i = conj(c_{n-i}) for all i (exact comparison)."""
    coeffs = _exact_predicate_input(f)
    n = len(coeffs) - 1
    return all(coeffs[i] == coeffs[n - i].conjugate() for i in range(n + 1))


def is_self_reciprocal(f: UniPoly) -> bool:
    """True iff c_i = c_{n-i} for all i (exact comparison)."""
    coeffs = _exact_predicate_input(f)
    n = len(coeffs) - 1
    return all(coeffs[i] == coeffs[n - i] for i in range(n + 1))


def harmonic_conjugate_check(z: float, z_prime: float, tol: float = DEFAULT_TOL) -> bool:
    """Directed-ratio test: Z'X/Z'Y = -ZX/ZY with X = -1, Y = 1.

    Uses the summed-ratio form |(z'+1)/(z'-1) + (z+1)/(z-1)| <= tol,
    which stays finite for arguments near the circle.
    """
    z = float(z)
    z_prime = float(z_prime)
    if z in (-1.0, 1.0) or z_prime in (-1.0, 1.0):
        raise ValueError("degenerate ratio: argument at an intersection point")
    value = (z_prime + 1.0) / (z_prime - 1.0) + (z + 1.0) / (z - 1.0)
    return abs(value) <= tol
