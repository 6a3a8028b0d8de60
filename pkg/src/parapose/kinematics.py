"""Forward-position pipeline for the planar 3RPR parallel manipulator.

Given the base geometry and the three prismatic strokes, the position
constraints are assembled as eight polynomials over Q(i) (two loop
closures, their formal conjugates, and four unit-modulus circle
conditions).  The reduced lex Groebner basis triangularises the system:
its level-7 elimination ideal holds a single univariate eliminant whose
roots seed a back-substitution through the shape-position basis.
Solutions are classified as physical postures when every direction
variable is exactly paired with its conjugate on the unit circle.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .gaussrat import GaussianRational
from .groebner import GroebnerBasis, buchberger, elimination_basis
from .inversive import UniPoly, is_self_reciprocal
from .multipoly import MultiPoly, N_VARS, VAR_NAMES
from .rootfind import find_roots

__all__ = [
    "ManipulatorProblem",
    "SolutionTuple",
    "PostureAngles",
    "SolutionReport",
    "ShapePositionError",
    "build_ideal",
    "back_substitute",
    "filter_physical",
    "to_angles",
    "residual_max",
    "solve_posture",
]

# (direction, formal conjugate) variable index pairs: a, b, c, alpha
_VAR_PAIRS = ((0, 4), (1, 5), (2, 6), (3, 7))

DEFAULT_PHYSICAL_TOL = 1e-6


class ShapePositionError(RuntimeError):
    """The basis does not triangularise the requested extension."""


def _positive_rational(value, name: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{name}: exact rational required, got float")
    q = Fraction(value)
    if q <= 0:
        raise ValueError(f"{name}: lengths must be positive")
    return q


def _gaussian(value, name: str) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"{name}: exact Gaussian rational required")


@dataclass(frozen=True)
class ManipulatorProblem:
    """Geometry constants and connector strokes, all exact.

    The platform triangle has sides l_ab, l_ac meeting at vertex A with
    interior direction cis_beta (must be exactly unit-modulus in Q(i));
    the base anchors B and C sit at d_ab and d_ac in the Gauss plane.
    The strokes s_a, s_b, s_c are the active prismatic joint lengths.
    """

    l_ab: Fraction
    l_ac: Fraction
    d_ab: GaussianRational
    d_ac: GaussianRational
    cis_beta: GaussianRational
    s_a: Fraction
    s_b: Fraction
    s_c: Fraction

    def __post_init__(self):
        for name in ("l_ab", "l_ac", "s_a", "s_b", "s_c"):
            object.__setattr__(self, name, _positive_rational(getattr(self, name), name))
        for name in ("d_ab", "d_ac", "cis_beta"):
            object.__setattr__(self, name, _gaussian(getattr(self, name), name))
        if self.cis_beta.norm_sq() != 1:
            raise ValueError("cis_beta: must be exactly unit-modulus")
        if self.d_ab.is_zero:
            raise ValueError("d_ab: base anchor must be nonzero")
        if self.d_ac.is_zero:
            raise ValueError("d_ac: base anchor must be nonzero")
        if self.d_ab == self.d_ac:
            raise ValueError("d_ac: base anchors must be distinct")


@dataclass(frozen=True)
class SolutionTuple:
    """A variety point in the 8 chain-ordered coordinates."""

    coords: tuple
    physical: bool = False
    residual_max: float = math.nan


@dataclass(frozen=True)
class PostureAngles:
    """Connector and platform angles in degrees, each in (-180, 180]."""

    theta_a: float
    theta_b: float
    theta_c: float
    alpha: float

    def __post_init__(self):
        for name in ("theta_a", "theta_b", "theta_c", "alpha"):
            v = getattr(self, name)
            if not (math.isfinite(v) and -180.0 < v <= 180.0):
                raise ValueError(f"{name}: angle {v!r} outside (-180, 180]")

    def as_tuple(self):
        return (self.theta_a, self.theta_b, self.theta_c, self.alpha)


@dataclass
class SolutionReport:
    """Everything the pipeline produced for one problem."""

    problem: ManipulatorProblem
    basis: GroebnerBasis
    eliminant: UniPoly
    eliminant_self_reciprocal: bool
    solutions: tuple
    postures: tuple
    empty_variety: bool = False
    diagnostics: dict = field(default_factory=dict)
    timings_ms: dict = field(default_factory=dict)


def build_ideal(problem: ManipulatorProblem) -> list:
    """The eight position polynomials f1..f8 with constants substituted."""
    ca, cb, cc, al = (MultiPoly.variable(i) for i in range(4))
    cca, ccb, ccc, ccal = (MultiPoly.variable(i) for i in range(4, 8))

    s_a = GaussianRational(problem.s_a)
    s_b = GaussianRational(problem.s_b)
    s_c = GaussianRational(problem.s_c)
    l_ab = GaussianRational(problem.l_ab)
    l_ac = GaussianRational(problem.l_ac)

    f1 = s_a * ca + l_ab * al - s_b * cb - MultiPoly.constant(problem.d_ab)
    f2 = (
        s_a * ca
        + (l_ac * problem.cis_beta) * al
        - s_c * cc
        - MultiPoly.constant(problem.d_ac)
    )
    f3 = f1.formal_conjugate()
    f4 = f2.formal_conjugate()
    f5 = ca * cca - 1
    f6 = cb * ccb - 1
    f7 = cc * ccc - 1
    f8 = al * ccal - 1
    return [f1, f2, f3, f4, f5, f6, f7, f8]


def _unit_mono(index: int):
    return tuple(1 if i == index else 0 for i in range(N_VARS))


def back_substitute(basis, root: complex) -> SolutionTuple:
    """Extend one eliminant root to all 8 coordinates in chain order.

    Requires the basis in shape position: for each variable above the
    last one, exactly one element linear in that variable with every
    other monomial supported on strictly lower chain positions.
    """
    elements = list(basis.elements if isinstance(basis, GroebnerBasis) else basis)
    coords = [None] * N_VARS
    coords[N_VARS - 1] = complex(root)

    for v in range(N_VARS - 2, -1, -1):
        unit = _unit_mono(v)
        matches = [g for g in elements if not g.is_zero and g.leading_monomial == unit]
        if len(matches) != 1:
            raise ShapePositionError(
                f"triangular extension unavailable: variable {VAR_NAMES[v]} "
                f"has {len(matches)} linear basis elements"
            )
        g = matches[0]
        total = 0j
        for mono, coeff in g.terms[1:]:
            if any(mono[i] for i in range(v + 1)):
                raise ShapePositionError(
                    f"triangular extension unavailable: variable {VAR_NAMES[v]} "
                    f"element mixes higher variables"
                )
            value = complex(coeff)
            for i in range(v + 1, N_VARS):
                if mono[i]:
                    value *= coords[i] ** mono[i]
            total += value
        coords[v] = -total

    return SolutionTuple(coords=tuple(coords))


def _is_physical(coords, tol: float) -> bool:
    for u_idx, bar_idx in _VAR_PAIRS:
        u = coords[u_idx]
        if abs(coords[bar_idx] - u.conjugate()) > tol:
            return False
        if abs(abs(u) - 1.0) > tol:
            return False
    return True


def filter_physical(tuples: Iterable[SolutionTuple], tol: float = DEFAULT_PHYSICAL_TOL):
    """Mark tuples physical/discarded; nothing is dropped."""
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    return [replace(t, physical=_is_physical(t.coords, tol)) for t in tuples]


def to_angles(t: SolutionTuple) -> PostureAngles:
    """Angles (degrees) of cis_a, cis_b, cis_c, cis_alpha for a physical tuple."""
    if not t.physical:
        raise ValueError("posture angles are defined for physical tuples only")
    values = []
    for idx in range(4):
        z = t.coords[idx]
        deg = math.degrees(math.atan2(z.imag, z.real))
        if deg <= -180.0:
            deg += 360.0
        values.append(deg)
    return PostureAngles(*values)


def residual_max(t: SolutionTuple, ideal: Sequence[MultiPoly]) -> float:
    """Largest |f_i| over the ideal generators at the tuple's coordinates."""
    return max(abs(f.evaluate(t.coords)) for f in ideal)


def _eliminant_unipoly(p: MultiPoly) -> UniPoly:
    """Exact univariate view of a polynomial supported on the last variable."""
    var = N_VARS - 1
    if any(i != var for i in p.support()):
        raise ShapePositionError("eliminant is not univariate in the last variable")
    coeffs = [GaussianRational(0)] * (max(m[var] for m, _ in p.terms) + 1)
    for mono, c in p.terms:
        coeffs[mono[var]] = c
    return UniPoly(coeffs)


def solve_posture(
    problem: ManipulatorProblem,
    *,
    tol_root: float = 1e-12,
    tol_physical: float = DEFAULT_PHYSICAL_TOL,
    max_iter: int = 200,
    pair_limit: int = 100_000,
) -> SolutionReport:
    """Run the full pipeline: ideal, basis, eliminant, roots, postures."""
    timings: dict = {}
    t0 = time.monotonic()
    ideal = build_ideal(problem)
    t1 = time.monotonic()
    timings["build_ideal"] = (t1 - t0) * 1e3

    basis = buchberger(ideal, pair_limit=pair_limit)
    t2 = time.monotonic()
    timings["groebner"] = (t2 - t1) * 1e3

    view = elimination_basis(basis, N_VARS - 1)
    if len(view.elements) != 1:
        raise ShapePositionError(
            f"expected one univariate eliminant at level {N_VARS - 1}, "
            f"found {len(view.elements)}"
        )
    eliminant = _eliminant_unipoly(view.elements[0])

    try:
        self_reciprocal = is_self_reciprocal(eliminant)
    except ValueError:
        self_reciprocal = False

    diagnostics = {
        "basis_size": len(basis.elements),
        "pairs_considered": basis.stats.pairs_considered if basis.stats else 0,
        "pairs_reduced": basis.stats.pairs_reduced if basis.stats else 0,
        "zero_reductions": basis.stats.zero_reductions if basis.stats else 0,
        "eliminant_degree": eliminant.degree,
    }

    if eliminant.degree == 0:
        timings["total"] = (time.monotonic() - t0) * 1e3
        diagnostics["root_iterations"] = 0
        diagnostics["physical_count"] = 0
        return SolutionReport(
            problem=problem,
            basis=basis,
            eliminant=eliminant,
            eliminant_self_reciprocal=self_reciprocal,
            solutions=(),
            postures=(),
            empty_variety=True,
            diagnostics=diagnostics,
            timings_ms=timings,
        )

    roots = find_roots(eliminant, tol=tol_root, max_iter=max_iter)
    t3 = time.monotonic()
    timings["rootfind"] = (t3 - t2) * 1e3

    tuples = [back_substitute(basis, r) for r in roots.roots]
    tuples = filter_physical(tuples, tol_physical)
    tuples = [replace(t, residual_max=residual_max(t, ideal)) for t in tuples]
    postures = tuple(to_angles(t) for t in tuples if t.physical)
    timings["back_substitute"] = (time.monotonic() - t3) * 1e3
    timings["total"] = (time.monotonic() - t0) * 1e3

    diagnostics["root_iterations"] = roots.iterations
    diagnostics["physical_count"] = sum(1 for t in tuples if t.physical)

    return SolutionReport(
        problem=problem,
        basis=basis,
        eliminant=eliminant,
        eliminant_self_reciprocal=self_reciprocal,
        solutions=tuple(tuples),
        postures=postures,
        diagnostics=diagnostics,
        timings_ms=timings,
    )
