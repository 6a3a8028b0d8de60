import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from golden import BASIS_EXAMPLE1, BASIS_EXAMPLE2

from parapose.gaussrat import GaussianRational
from parapose.groebner import buchberger
from parapose.kinematics import ManipulatorProblem, build_ideal
from parapose.multipoly import parse_poly

REPO_ROOT = Path(__file__).resolve().parents[1]
PROBLEMS_DIR = REPO_ROOT / "problems"

RIGHT_TRIANGLE_GEOMETRY = dict(
    l_ab=Fraction(3),
    l_ac=Fraction(4),
    d_ab=GaussianRational(6),
    d_ac=GaussianRational(0, 8),
    cis_beta=GaussianRational(0, 1),
)


def make_problem(s_a, s_b, s_c) -> ManipulatorProblem:
    return ManipulatorProblem(
        **RIGHT_TRIANGLE_GEOMETRY,
        s_a=Fraction(s_a),
        s_b=Fraction(s_b),
        s_c=Fraction(s_c),
    )


@pytest.fixture(scope="session")
def problem1():
    return make_problem(2, Fraction(7, 2), Fraction(5, 2))


@pytest.fixture(scope="session")
def problem2():
    return make_problem(Fraction(7, 2), 6, Fraction(15, 2))


@pytest.fixture(scope="session")
def ideal1(problem1):
    return build_ideal(problem1)


@pytest.fixture(scope="session")
def ideal2(problem2):
    return build_ideal(problem2)


@pytest.fixture(scope="session")
def basis1(ideal1):
    return buchberger(ideal1)


@pytest.fixture(scope="session")
def basis2(ideal2):
    return buchberger(ideal2)


@pytest.fixture(scope="session")
def golden_basis1():
    return [parse_poly(text) for text in BASIS_EXAMPLE1]


@pytest.fixture(scope="session")
def golden_basis2():
    return [parse_poly(text) for text in BASIS_EXAMPLE2]
