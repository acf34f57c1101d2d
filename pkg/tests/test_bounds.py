#  Copyright 2026 toeplitz-norm contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

import itertools
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import integrate

from toeplitz_norm.errors import BoundInputError
from toeplitz_norm.entries import DistributionSpec
from toeplitz_norm.ensembles import build_matrix
from toeplitz_norm.linalg import dense_spectral_norm
from toeplitz_norm.bounds import (
    CLASSICAL_B,
    BoundConstants,
    concentration_tail_bound,
    covering_number_bound,
    dudley_bound,
    dudley_tail_bound,
    fejer_norm_inequalities,
    fejer_weights,
    gaussian_tail_moment,
    greedy_cover,
    hoeffding_tail_bound,
    kt_lower_bound,
    limsup_threshold,
    lipschitz_norm_bound,
    mean_growth_regime,
    weak_limsup_threshold,
)


# -----------------------------------------------------------------------------
# constants
# -----------------------------------------------------------------------------


def test_constants_default_to_one():
    consts = BoundConstants()
    assert set(consts.model_dump().values()) == {1.0}


def test_constants_must_be_positive():
    with pytest.raises(ValidationError):
        BoundConstants(K_dudley=0.0)
    with pytest.raises(ValidationError):
        BoundConstants(c_tail=1.0, gamma=2.0)


def test_constants_for_rademacher():
    consts = BoundConstants.for_entries([DistributionSpec(kind="rademacher")])
    assert consts.b_subg == CLASSICAL_B
    assert consts.A_conc == 1.0
    assert consts.B_abs == 1.0


def test_constants_for_uniform():
    consts = BoundConstants.for_entries([DistributionSpec(kind="uniform_symmetric")])
    assert consts.b_subg == 1.0
    assert consts.A_conc == pytest.approx(math.sqrt(3))
    assert consts.B_abs == pytest.approx(math.sqrt(3) / 2)


# -----------------------------------------------------------------------------
# covering numbers
# -----------------------------------------------------------------------------


def test_covering_examples():
    assert covering_number_bound(4, 5.0) == 1.0
    assert covering_number_bound(1, 1.0) == 4.0
    assert covering_number_bound(16, 1.0) == 256.0


@pytest.mark.parametrize("eps", [0.0, -1.0])
def test_covering_rejects_nonpositive_eps(eps):
    with pytest.raises(BoundInputError):
        covering_number_bound(4, eps)


@pytest.mark.parametrize("n, eps", [(16, 1.0), (16, 2.0), (8, 0.5), (32, 4.0), (4, 5.0)])
def test_greedy_cover_below_bound(n, eps):
    assert 1 <= greedy_cover(n, eps) <= covering_number_bound(n, eps)


# -----------------------------------------------------------------------------
# Dudley integral
# -----------------------------------------------------------------------------


def test_dudley_closed_form_n2():
    expected = 2.0 * (math.sqrt(2 * math.log(4)) + math.sqrt(2 * math.pi))
    assert dudley_bound(2).closed_form == pytest.approx(expected)
    assert dudley_bound(2).closed_form == pytest.approx(8.343, abs=1e-3)


@pytest.mark.parametrize("n", [1, 2, 10, 100, 10**4])
def test_dudley_integral_below_closed_form(n):
    bound = dudley_bound(n)
    assert bound.integral_value <= bound.closed_form * (1 + 1e-8)


@pytest.mark.parametrize("n", [2, 10, 100])
def test_dudley_integral_matches_direct_quadrature(n):
    top = 2 * math.sqrt(n)
    direct, _ = integrate.quad(
        lambda eps: math.sqrt(math.log(4 * n**1.5 / eps)), 0, top, limit=200
    )
    assert dudley_bound(n).integral_value == pytest.approx(direct, rel=1e-6)


def test_dudley_scales_with_K():
    base = dudley_bound(50)
    scaled = dudley_bound(50, BoundConstants(K_dudley=3.0))
    assert scaled.integral_value == pytest.approx(3 * base.integral_value)
    assert scaled.closed_form == pytest.approx(3 * base.closed_form)


def test_dudley_integral_asymptotics():
    n = 10**6
    ratio = dudley_bound(n).integral_value / math.sqrt(n * math.log(n))
    assert abs(ratio - 2.0) <= 0.25 * 2.0


@pytest.mark.parametrize("n", [10**2, 10**3, 10**4, 10**5, 10**6])
def test_dudley_rate_band(n):
    # the ratio decreases towards 2K; it is below 2.2K from n = 10^4 on
    ratio = dudley_bound(n).integral_value / math.sqrt(n * math.log(n))
    assert 1.5 <= ratio <= 2.4
    if n >= 10**4:
        assert ratio <= 2.2


# -----------------------------------------------------------------------------
# Gaussian tail moment
# -----------------------------------------------------------------------------


def test_gaussian_tail_moment_at_one():
    bound, exact = gaussian_tail_moment(1.0)
    assert bound == pytest.approx((1 + math.sqrt(2 * math.pi)) * math.exp(-0.5))
    assert bound == pytest.approx(2.127, abs=1e-3)
    # e^{-1/2} + sqrt(2 pi) Q(1)
    assert exact == pytest.approx(1.00422, abs=1e-5)


@pytest.mark.parametrize("s", np.linspace(0.1, 10, 25))
def test_gaussian_tail_moment_estimate_holds(s):
    bound, exact = gaussian_tail_moment(float(s))
    assert 0 < exact <= bound


def test_gaussian_tail_moment_tightens():
    ratios = [np.divide(*gaussian_tail_moment(s)) for s in (1.0, 2.0, 5.0, 13.0)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[2] < 1.5
    assert ratios[3] < 1.2


def test_gaussian_tail_moment_rejects_nonpositive():
    with pytest.raises(BoundInputError):
        gaussian_tail_moment(0.0)


# -----------------------------------------------------------------------------
# tail inequalities
# -----------------------------------------------------------------------------


def test_hoeffding_examples():
    assert hoeffding_tail_bound([1, 1], 2.0, 0.5) == pytest.approx(2 * math.exp(-1))
    assert hoeffding_tail_bound([1], 1e-9, 0.5) == 1.0
    assert hoeffding_tail_bound([3, 4], 5.0, 0.5) == 1.0


def test_hoeffding_rejects_zero_vector():
    with pytest.raises(BoundInputError):
        hoeffding_tail_bound([0, 0], 1.0, 0.5)


@pytest.mark.parametrize("n", [2, 5, 9, 16])
def test_hoeffding_dominates_enumerated_rademacher(n):
    a = np.linspace(1.0, 2.0, n)
    signs = np.array(list(itertools.product([-1.0, 1.0], repeat=n)))
    sums = np.abs(signs @ a)
    for t in np.linspace(0.5, 3.0, 6) * math.sqrt(a @ a):
        assert np.mean(sums >= t) <= hoeffding_tail_bound(a, t, CLASSICAL_B)


def test_hoeffding_dominates_sampled_rademacher():
    n, reps = 64, 10**4
    a = np.ones(n)
    sums = np.abs(np.random.default_rng(1).choice([-1.0, 1.0], size=(reps, n)) @ a)
    for t in (8.0, 16.0, 24.0):
        p_hat = np.mean(sums >= t)
        slack = 3 * math.sqrt(max(p_hat * (1 - p_hat), 1e-12) / reps)
        assert p_hat <= hoeffding_tail_bound(a, t, CLASSICAL_B) + slack


def test_concentration_examples():
    assert concentration_tail_bound("bounded", 1.0, 1, math.sqrt(32)) == pytest.approx(math.exp(-1))
    assert concentration_tail_bound("lsi", 1.0, 1, 2.0) == pytest.approx(math.exp(-1))


def test_concentration_rejects_bad_input():
    with pytest.raises(BoundInputError):
        concentration_tail_bound("bounded", 0.0, 4, 1.0)
    with pytest.raises(BoundInputError):
        concentration_tail_bound("moment", 1.0, 4, 1.0)


def test_dudley_tail():
    assert dudley_tail_bound(3.0, 3.0, 1.0) == pytest.approx(2 * math.exp(-1))
    assert dudley_tail_bound(3.0, 1e-6, 1.0) == 1.0
    values = [dudley_tail_bound(2.0, t, 1.0) for t in np.linspace(0.1, 10, 50)]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_lipschitz_norm_bound(values):
    rng = np.random.default_rng(3)
    for n in (1, 5, 30):
        xs = rng.standard_normal(n)
        T = build_matrix("sym_toeplitz", values(*xs), n)
        assert dense_spectral_norm(T).value <= lipschitz_norm_bound(xs) + 1e-12


def test_limsup_threshold_probability():
    for n in (10, 100, 1000):
        level, prob = limsup_threshold(n, c1=1.0, A=1.0)
        assert level == pytest.approx(9.0 * math.sqrt(n * math.log(n)))
        assert prob == pytest.approx(1.0 / n**2)

        level, prob = limsup_threshold(n, c1=1.0, A=1.0, hypothesis="lsi")
        assert prob == pytest.approx(1.0 / n**2)


def test_weak_limsup_threshold():
    n = 1000
    level, prob = weak_limsup_threshold(n, c=1.0, c1=1.0)
    expected = 2 * math.sqrt(n * math.log(n)) + math.sqrt(2 * n) * math.log(n)
    assert level == pytest.approx(expected)
    assert prob == pytest.approx(4.0 / n**2)


def test_mean_growth_regime():
    assert mean_growth_regime(10**6 * 1.0, 10**6) == "mean_dominated"
    assert mean_growth_regime(1.0, 10**4) == "fluctuation_dominated"
    assert mean_growth_regime(2048.0, 2048) == "intermediate"


# -----------------------------------------------------------------------------
# Fejer weights and the Kashin-Tzafriri bound
# -----------------------------------------------------------------------------


def test_fejer_weights_small():
    np.testing.assert_allclose(fejer_weights(2), [1.0, math.sqrt(2) / 2])
    np.testing.assert_allclose(fejer_weights(1), [1.0])

    a = fejer_weights(2)
    assert np.linalg.norm(a) == pytest.approx(math.sqrt(1.5))
    assert np.linalg.norm(a, 4) == pytest.approx(1.25**0.25)


def test_fejer_norm_inequalities_exact():
    for n in range(1, 10**4 + 1):
        assert fejer_norm_inequalities(n) == (True, True), n


@pytest.mark.parametrize("n", [1, 2, 7, 100, 1000])
def test_fejer_norm_inequalities_agree_with_floats(n):
    a = fejer_weights(n)
    assert np.linalg.norm(a) > math.sqrt(n) / 2
    assert np.linalg.norm(a, 4) < 2 * n**0.25


def test_kt_examples():
    assert kt_lower_bound([0, 3.0, 0], 1.0) == 0.0
    assert kt_lower_bound(fejer_weights(2), 1.0) == pytest.approx(0.4695, abs=1e-3)

    n = 256
    assert kt_lower_bound(np.ones(n), 1.0) == pytest.approx(
        math.sqrt(n) * math.sqrt(math.log(n)) / 2
    )


def test_kt_rejects_zero():
    with pytest.raises(BoundInputError):
        kt_lower_bound(np.zeros(3), 1.0)


def test_kt_fejer_rate():
    ns = [10**3, 10**4, 10**5, 10**6]
    ratios = [kt_lower_bound(fejer_weights(n), 1.0) / math.sqrt(n * math.log(n)) for n in ns]
    assert all(0.2 <= r <= 0.8 for r in ratios)
    assert all(a < b for a, b in zip(ratios, ratios[1:]))

    for n in (300, 10**4):
        floor = (math.sqrt(n) / 2) * math.sqrt(math.log(n**0.25 / 4))
        assert kt_lower_bound(fejer_weights(n), 1.0) >= floor
