"""Multivariate polynomials over Q(i) in a fixed eight-variable ring.

The ring is C[CA, CB, CC, AL, CCA, CCB, CCC, CCAL]: four planar unit
directions and their formal conjugates, ordered by the lex chain
CA > CB > CC > AL > CCA > CCB > CCC > CCAL.  Monomials are dense
8-tuples of exponents, so lex comparison is native tuple comparison and
the variable order is immutable by construction.

Polynomials are immutable, stored as term lists strictly descending in
lex order with no zero coefficients, and print/parse through a small
canonical text grammar (e.g. ``CCAL^4 - 213/50*CCAL^3 + 1`` or
``(-14080/2017+2880/2017*I)*CCAL^3 + CCC``).
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .gaussrat import GaussianRational

__all__ = [
    "N_VARS",
    "VAR_NAMES",
    "MONO_ONE",
    "MultiPoly",
    "lex_compare",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_degree",
    "multi_divide",
    "normal_form",
    "s_polynomial",
    "parse_poly",
    "PolyParseError",
]

N_VARS = 8
VAR_NAMES = ("CA", "CB", "CC", "AL", "CCA", "CCB", "CCC", "CCAL")
# index of the formally conjugate variable (CA <-> CCA, AL <-> CCAL, ...)
BAR_PARTNER = (4, 5, 6, 7, 0, 1, 2, 3)

MONO_ONE = (0,) * N_VARS

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


# -- monomial helpers (monomials are plain 8-tuples of ints) ---------------

def lex_compare(m1, m2) -> int:
    """-1, 0 or 1 as m1 <, =, > m2 in the fixed lex chain."""
    if m1 == m2:
        return 0
    return 1 if m1 > m2 else -1


def mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1, m2) -> bool:
    """True iff m1 divides m2."""
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1, m2):
    """m1 / m2; requires divisibility."""
    q = tuple(a - b for a, b in zip(m1, m2))
    if any(e < 0 for e in q):
        raise ValueError(f"{m2} does not divide {m1}")
    return q


def mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


def mono_degree(m) -> int:
    return sum(m)


def _check_mono(m):
    if len(m) != N_VARS or any(not isinstance(e, int) or e < 0 for e in m):
        raise ValueError(f"bad monomial {m!r}")
    return tuple(m)


class MultiPoly:
    """Immutable multivariate polynomial with lex-sorted terms."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = _check_mono(mono)
            if not isinstance(coeff, GaussianRational):
                coeff = GaussianRational(coeff)
            c = acc.get(mono, _ZERO) + coeff
            if c.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = c
        object.__setattr__(
            self, "_terms", tuple(sorted(acc.items(), reverse=True))
        )

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "MultiPoly":
        return cls(((MONO_ONE, c),))

    @classmethod
    def variable(cls, index: int) -> "MultiPoly":
        if not 0 <= index < N_VARS:
            raise ValueError(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(N_VARS))
        return cls(((mono, _ONE),))

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self):
        """Term list, strictly descending in lex order."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self._terms[0]

    @property
    def leading_monomial(self):
        return self.leading_term[0]

    @property
    def leading_coefficient(self) -> GaussianRational:
        return self.leading_term[1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono_degree(m) for m, _ in self._terms)

    def support(self) -> frozenset:
        """Indices of the variables that actually occur."""
        used = set()
        for mono, _ in self._terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(i)
        return frozenset(used)

    def coefficient(self, mono) -> GaussianRational:
        mono = tuple(mono)
        for m, c in self._terms:
            if m == mono:
                return c
        return _ZERO

    # -- ring operations -----------------------------------------------------

    def _combine(self, other, negate: bool) -> "MultiPoly":
        acc = dict(self._terms)
        for mono, coeff in other._terms:
            c = acc.get(mono, _ZERO) + (-coeff if negate else coeff)
            if c.is_zero:
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return MultiPoly(acc)

    @staticmethod
    def _as_scalar(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            return self._combine(other, False)
        s = self._as_scalar(other)
        if s is None:
            return NotImplemented
        return self._combine(MultiPoly.constant(s), False)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            return self._combine(other, True)
        s = self._as_scalar(other)
        if s is None:
            return NotImplemented
        return self._combine(MultiPoly.constant(s), True)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return MultiPoly(tuple((m, -c) for m, c in self._terms))

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            acc: dict = {}
            for m1, c1 in self._terms:
                for m2, c2 in other._terms:
                    mono = mono_mul(m1, m2)
                    c = acc.get(mono, _ZERO) + c1 * c2
                    if c.is_zero:
                        acc.pop(mono, None)
                    else:
                        acc[mono] = c
            return MultiPoly(acc)
        s = self._as_scalar(other)
        if s is None:
            return NotImplemented
        if s.is_zero:
            return MultiPoly()
        return MultiPoly(tuple((m, c * s) for m, c in self._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(_ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_shift(self, mono, coeff: GaussianRational) -> "MultiPoly":
        """Multiply by the single term coeff * x^mono."""
        mono = tuple(mono)
        if coeff.is_zero:
            return MultiPoly()
        return MultiPoly(tuple((mono_mul(m, mono), c * coeff) for m, c in self._terms))

    def monic(self) -> "MultiPoly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lc = self.leading_coefficient
        if lc == _ONE:
            return self
        return MultiPoly(tuple((m, c / lc) for m, c in self._terms))

    def formal_conjugate(self) -> "MultiPoly":
        """Swap each variable with its barred partner, conjugating coefficients."""
        out = []
        for mono, coeff in self._terms:
            swapped = tuple(mono[BAR_PARTNER[i]] for i in range(N_VARS))
            out.append((swapped, coeff.conjugate()))
        return MultiPoly(out)

    def evaluate(self, point: Sequence[complex]) -> complex:
        """Numeric evaluation at an 8-vector of complex values."""
        total = 0j
        for mono, coeff in self._terms:
            v = complex(coeff)
            for i, e in enumerate(mono):
                if e:
                    v *= point[i] ** e
            total += v
        return total

    # -- equality / hashing ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- text form ----------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self._terms:
            sign, body = _term_text(mono, coeff)
            if not chunks:
                chunks.append(body if sign > 0 else "-" + body)
            else:
                chunks.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(chunks)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


def _mono_text(mono) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(VAR_NAMES[i])
        elif e > 1:
            parts.append(f"{VAR_NAMES[i]}^{e}")
    return "*".join(parts)


def _term_text(mono, coeff: GaussianRational):
    """(sign, body) where the sign is rendered by the term separator."""
    mono_s = _mono_text(mono)
    if coeff.im == 0:
        q = coeff.re
        sign = 1 if q > 0 else -1
        a = abs(q)
        if not mono_s:
            return sign, str(a)
        if a == 1:
            return sign, mono_s
        return sign, f"{a}*{mono_s}"
    if coeff.re == 0:
        b = coeff.im
        sign = 1 if b > 0 else -1
        imag = "I" if abs(b) == 1 else f"{abs(b)}*I"
        return sign, imag if not mono_s else f"{imag}*{mono_s}"
    body = f"({coeff})"
    return 1, body if not mono_s else f"{body}*{mono_s}"


# -- division algorithm and S-polynomials -----------------------------------

def _add_inplace(acc: dict, mono, coeff: GaussianRational):
    c = acc.get(mono, _ZERO) + coeff
    if c.is_zero:
        acc.pop(mono, None)
    else:
        acc[mono] = c


def multi_divide(f: MultiPoly, divisors: Sequence[MultiPoly]):
    """Divide f by an ordered list of divisors.

    Returns (quotients, remainder) with f == sum(q_i * g_i) + r exactly
    and no term of r divisible by any divisor's leading monomial.  Ties
    go to the first divisor in list order.
    """
    if not divisors:
        raise ValueError("empty divisor list")
    lts = []
    for d in divisors:
        if d.is_zero:
            raise ZeroDivisionError("zero polynomial among divisors")
        lts.append(d.leading_term)

    work = dict(f.terms)
    quotients = [dict() for _ in divisors]
    remainder: dict = {}
    while work:
        mono = max(work)
        coeff = work[mono]
        for i, (lm, lc) in enumerate(lts):
            if mono_divides(lm, mono):
                qm = mono_div(mono, lm)
                qc = coeff / lc
                _add_inplace(quotients[i], qm, qc)
                for dm, dc in divisors[i].terms:
                    _add_inplace(work, mono_mul(qm, dm), -(qc * dc))
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return [MultiPoly(q) for q in quotients], MultiPoly(remainder)


def normal_form(f: MultiPoly, divisors: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of multi_divide without quotient bookkeeping."""
    lts = []
    for d in divisors:
        if d.is_zero:
            raise ZeroDivisionError("zero polynomial among divisors")
        lts.append(d.leading_term)

    work = dict(f.terms)
    remainder: dict = {}
    while work:
        mono = max(work)
        coeff = work[mono]
        for i, (lm, lc) in enumerate(lts):
            if mono_divides(lm, mono):
                qm = mono_div(mono, lm)
                qc = coeff / lc
                for dm, dc in divisors[i].terms:
                    _add_inplace(work, mono_mul(qm, dm), -(qc * dc))
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return MultiPoly(remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """S(f, g) = (lcm/LT(f)) * f - (lcm/LT(g)) * g."""
    fm, fc = f.leading_term
    gm, gc = g.leading_term
    lcm = mono_lcm(fm, gm)
    return f.term_shift(mono_div(lcm, fm), _ONE / fc) - g.term_shift(
        mono_div(lcm, gm), _ONE / gc
    )


# -- canonical text parser ----------------------------------------------------

class PolyParseError(ValueError):
    pass


_TOKEN_RE = _re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>CCAL|CCA|CCB|CCC|CA|CB|CC|AL|I)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        pos = m.end()
        if m.group("int"):
            tokens.append(("int", int(m.group("int"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r}")

    def parse(self) -> MultiPoly:
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise PolyParseError("trailing input after polynomial")
        return poly

    def expr(self) -> MultiPoly:
        poly = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                poly = poly + rhs if val == "+" else poly - rhs
            else:
                return poly

    def term(self) -> MultiPoly:
        poly = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    poly = poly * rhs
                else:
                    if rhs.is_zero:
                        raise PolyParseError("division by zero")
                    if rhs.terms[0][0] != MONO_ONE or len(rhs.terms) != 1:
                        raise PolyParseError("division by a non-constant")
                    poly = poly * (GaussianRational(1) / rhs.terms[0][1])
            else:
                return poly

    def unary(self) -> MultiPoly:
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return inner if val == "+" else -inner
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp = self.take()
            if kind != "int":
                raise PolyParseError("exponent must be an integer")
            return base ** exp
        return base

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "int":
            return MultiPoly.constant(GaussianRational(val))
        if kind == "name":
            if val == "I":
                return MultiPoly.constant(GaussianRational(0, 1))
            return MultiPoly.variable(VAR_NAMES.index(val))
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolyParseError("expected a number, variable or parenthesis")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical polynomial text form."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    return _Parser(tokens).parse()
