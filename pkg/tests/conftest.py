"""
Pytest configuration for the cubic surface analyzer tests.
"""

import os
from collections.abc import Generator

import pytest

from cubicbrauer.arith.finite_field import FiniteField
from cubicbrauer.brauer.analyzer import BrauerAnalyzer, ConePipeline
from cubicbrauer.config import CubicBrauerConfig
from cubicbrauer.curve.plane_cubic import PlaneCubic
from cubicbrauer.parsing import parse_cubic_form

ENV_VARIABLES = (
    "CUBICBRAUER_PRECISION",
    "CUBICBRAUER_UNRAMIFIED_PRECISION",
    "CUBICBRAUER_SEED",
    "CUBICBRAUER_FORMAT",
    "CUBICBRAUER_LOG_LEVEL",
)

FERMAT_CONE = "x^3 + y^3 + z^3 + 5*w^3"


@pytest.fixture(autouse=True)
def clean_config() -> Generator[None, None, None]:
    """
    Run every test against the default configuration.

    Strips the CUBICBRAUER_* variables for the duration of the test and
    restores them afterward.
    """
    saved = {key: os.environ.pop(key) for key in ENV_VARIABLES if key in os.environ}
    CubicBrauerConfig.initialize()

    yield

    for key in ENV_VARIABLES:
        os.environ.pop(key, None)
    os.environ.update(saved)
    CubicBrauerConfig.initialize()


@pytest.fixture
def fermat_curve_mod5() -> PlaneCubic:
    """The Fermat cubic x^3 + y^3 + z^3 over F_5."""
    fp = FiniteField.of(5)
    return PlaneCubic(parse_cubic_form("x^3 + y^3 + z^3", nvars=3).map_coefficients(fp.coerce, fp))


@pytest.fixture
def fermat_curve_mod7() -> PlaneCubic:
    """The Fermat cubic x^3 + y^3 + z^3 over F_7."""
    fp = FiniteField.of(7)
    return PlaneCubic(parse_cubic_form("x^3 + y^3 + z^3", nvars=3).map_coefficients(fp.coerce, fp))


@pytest.fixture(scope="session")
def fermat_pipeline() -> ConePipeline:
    """
    The lines-to-cohomology pipeline for x^3 + y^3 + z^3 + 5w^3 at p = 5.

    Session scoped: lifting the 27 lines is the slowest step of the suite.
    """
    CubicBrauerConfig.initialize()
    analyzer = BrauerAnalyzer()
    form = parse_cubic_form(FERMAT_CONE)
    model, reduction = analyzer.classify(form, 5)
    nf = analyzer.reduce_cone(analyzer.prepare_cone(model, reduction))
    return analyzer.run_cone_pipeline(nf)
