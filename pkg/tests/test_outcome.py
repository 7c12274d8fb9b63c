import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdpfeas import (
    DomainError,
    InvalidInputError,
    ParseError,
    SdpOutcome,
    WeibullInjection,
    WrongVariantError,
    exact_expected_reliability_x,
    expected_hazard_x,
    expected_hazard_y,
    expected_reliability_bound_x,
    expected_reliability_bound_y,
    outcome_from_descriptor,
)
from sdpfeas.oracle import sample_binomial


def injected(l, p, K_hat, m_hat):
    return SdpOutcome(l=l, p=p, injection=WeibullInjection(K_hat=K_hat, m_hat=m_hat))


class TestExpectedHazard:
    def test_x_is_lp(self):
        assert expected_hazard_x(SdpOutcome(l=100, p=0.05)) == pytest.approx(5.0)
        assert expected_hazard_x(SdpOutcome(l=1, p=0.5)) == 0.5
        assert expected_hazard_x(SdpOutcome(l=20, p=0.15)) == pytest.approx(3.0)

    def test_x_rejects_injected_outcome(self):
        with pytest.raises(WrongVariantError):
            expected_hazard_x(injected(10, 0.5, 1.0, 0.0))

    def test_y_unit_injection_reduces_to_lp(self):
        assert expected_hazard_y(injected(100, 0.05, 1.0, 0.0), 9.0) == pytest.approx(5.0)

    def test_y_scales_by_power_law(self):
        assert expected_hazard_y(injected(10, 0.5, 2.0, 1.0), 3.0) == pytest.approx(30.0)

    def test_y_negative_exponent(self):
        # 10 * 0.5 * 2 * 4**-0.5 = 5, by direct power evaluation
        assert expected_hazard_y(injected(10, 0.5, 2.0, -0.5), 4.0) == pytest.approx(5.0, rel=1e-12)

    def test_y_rejects_plain_outcome(self):
        with pytest.raises(WrongVariantError):
            expected_hazard_y(SdpOutcome(l=10, p=0.5), 1.0)

    def test_y_singular_time(self):
        with pytest.raises(DomainError):
            expected_hazard_y(injected(10, 0.5, 2.0, -0.5), 0.0)

    @given(
        l=st.integers(1, 5000),
        p=st.floats(0.001, 0.999),
        t=st.floats(0.01, 100.0),
    )
    def test_reduction_identity(self, l, p, t):
        plain = expected_hazard_x(SdpOutcome(l=l, p=p))
        unit = expected_hazard_y(injected(l, p, 1.0, 0.0), t)
        assert unit == pytest.approx(plain, rel=1e-12)


class TestExpectedReliabilityBound:
    def test_frozen_value(self):
        # exponent 5*(e^-1 - 1) = -3.1606027941427883, checked independently
        value = expected_reliability_bound_x(SdpOutcome(l=100, p=0.05), 1.0)
        assert value == pytest.approx(math.exp(-3.1606027941427883), rel=1e-12)
        assert value == pytest.approx(0.042400174798661226, rel=1e-12)

    def test_small_time_limit(self):
        value = expected_reliability_bound_x(SdpOutcome(l=100, p=0.05), 1e-12)
        assert value == pytest.approx(1.0, abs=1e-9)

    def test_large_time_limit(self):
        value = expected_reliability_bound_x(SdpOutcome(l=100, p=0.05), 1e6)
        assert value == pytest.approx(math.exp(-5.0), rel=1e-9)

    def test_nonpositive_time_rejected(self):
        with pytest.raises(DomainError):
            expected_reliability_bound_x(SdpOutcome(l=100, p=0.05), 0.0)

    @given(
        l=st.integers(1, 2000),
        p=st.floats(0.001, 0.999),
        t1=st.floats(0.01, 20.0),
        t2=st.floats(0.01, 20.0),
    )
    def test_decreasing_in_time(self, l, p, t1, t2):
        lo, hi = sorted((t1, t2))
        o = SdpOutcome(l=l, p=p)
        assert expected_reliability_bound_x(o, hi) <= expected_reliability_bound_x(o, lo)

    def test_strictly_decreasing_at_resolvable_separation(self):
        o = SdpOutcome(l=100, p=0.05)
        values = [expected_reliability_bound_x(o, t) for t in (0.5, 1.0, 2.0, 4.0)]
        assert all(b < a for a, b in zip(values, values[1:]))

    @given(l=st.integers(1, 2000), p=st.floats(0.001, 0.999), t=st.floats(0.01, 20.0))
    def test_exact_product_sits_below_bound(self, l, p, t):
        # compare logs so the deep tail, where both values underflow to
        # 0.0, still discriminates
        log_exact = l * math.log1p(p * math.expm1(-t))
        log_bound = l * p * math.expm1(-t)
        assert log_exact <= log_bound

    def test_exact_product_strictly_below_bound_at_desk_point(self):
        o = SdpOutcome(l=100, p=0.05)
        assert exact_expected_reliability_x(o, 1.0) < expected_reliability_bound_x(o, 1.0)

    def test_y_unit_injection_matches_x(self):
        o_y = injected(10, 0.5, 1.0, 0.0)
        o_x = SdpOutcome(l=10, p=0.5)
        for t in (0.1, 1.0, 3.0):
            assert expected_reliability_bound_y(o_y, t, corrected=True) == pytest.approx(
                expected_reliability_bound_x(o_x, t), rel=1e-12
            )

    def test_published_sign_mode_exceeds_one(self):
        # the as-published inner exponent is positive, so the "expected
        # reliability" blows past 1: exp(5*(e - 1)) ~ 5385.2
        value = expected_reliability_bound_y(injected(10, 0.5, 1.0, 0.0), 1.0, corrected=False)
        assert value == pytest.approx(math.exp(5.0 * (math.e - 1.0)), rel=1e-12)
        assert value > 1.0

    def test_corrected_sign_mode_is_probability(self):
        value = expected_reliability_bound_y(injected(10, 0.5, 1.0, 0.0), 1.0, corrected=True)
        assert value == pytest.approx(math.exp(5.0 * (math.exp(-1.0) - 1.0)), rel=1e-12)
        assert 0.0 < value < 1.0


class TestEmpirical:
    def test_sample_mean_near_lp(self):
        l, p, trials = 100, 0.05, 200_000
        rng = np.random.Generator(np.random.Philox(key=7))
        samples = sample_binomial(rng, l, p, trials)
        tolerance = 4.0 * math.sqrt(l * p * (1 - p) / trials)
        assert abs(samples.mean() - l * p) <= tolerance

    def test_empirical_reliability_below_bound(self):
        l, p, t, trials = 100, 0.05, 1.0, 200_000
        o = SdpOutcome(l=l, p=p)
        rng = np.random.Generator(np.random.Philox(key=11))
        samples = sample_binomial(rng, l, p, trials)
        values = np.exp(-samples * t)
        stderr = values.std(ddof=1) / math.sqrt(trials)
        assert values.mean() <= expected_reliability_bound_x(o, t) + 3.0 * stderr


class TestDescriptor:
    def test_inline_p(self):
        o = outcome_from_descriptor({"l": 100, "p": 0.05})
        assert (o.l, o.p_value) == (100, 0.05)

    def test_p_from_confusion(self):
        o = outcome_from_descriptor({"l": 20, "confusion": {"tp": 5, "fn": 3, "fp": 2, "tn": 17}})
        assert o.p_value == pytest.approx(0.15)
        assert o.p.fraction == "3/20"

    def test_injection_block(self):
        o = outcome_from_descriptor(
            {"l": 10, "p": 0.5, "injection": {"K_hat": 2.0, "m_hat": 1.0}, "n": 25}
        )
        assert o.injection == WeibullInjection(2.0, 1.0)
        assert o.n == 25

    def test_p_and_confusion_together_rejected(self):
        with pytest.raises(ParseError):
            outcome_from_descriptor({"l": 10, "p": 0.5, "confusion": {"tp": 0, "fn": 1, "fp": 0, "tn": 1}})

    def test_unknown_field_rejected(self):
        with pytest.raises(ParseError):
            outcome_from_descriptor({"l": 10, "p": 0.5, "extra": 1})

    def test_l_below_one_rejected(self):
        with pytest.raises(InvalidInputError):
            outcome_from_descriptor({"l": 0, "p": 0.5})

    def test_boundary_p_rejected(self):
        with pytest.raises(InvalidInputError):
            outcome_from_descriptor({"l": 10, "p": 1.0})
