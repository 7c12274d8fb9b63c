import math

import pytest
from scipy.integrate import quad

from sdpfeas.hazards import HazardFamily, HazardModel, hazard_at


def quadrature_cumulative_hazard(model: HazardModel, t: float) -> float:
    """Adaptive-quadrature oracle for the cumulative hazard, independent of
    the closed forms under test.

    Families with an integrable singularity at 0 (nld, weibull with m < 0)
    are integrated after the substitution x = u**2, which removes the
    singularity: dx = 2u du, so z(u**2) * 2u is bounded near 0.
    """
    if t == 0:
        return 0.0
    singular = model.family is HazardFamily.NONLINEAR_DECREASING or (
        model.family is HazardFamily.WEIBULL and model.m < 0
    )
    if singular:
        value, _ = quad(lambda u: hazard_at(model, u * u) * 2 * u, 0.0, math.sqrt(t), limit=200)
    else:
        value, _ = quad(lambda x: hazard_at(model, x), 0.0, t, limit=200)
    return value


@pytest.fixture
def desk_outcome():
    from sdpfeas import SdpOutcome

    return SdpOutcome(l=100, p=0.05)
