import math

import numpy as np
import pytest

from hawksteer.qstate import TwoQubitXState, bloch_coefficients, embed_dense
from hawksteer.selfcheck import random_xstates
from hawksteer.steering_entropy import (
    A_TO_B,
    B_TO_A,
    BlochXCoefficients,
    entropy_sum_closed_form,
    entropy_sum_from_oracle,
    entropy_sum_oracle,
    oracle_affine_calibration,
    steerability_entropy,
)

BELL = TwoQubitXState(0.5, 0.0, 0.0, 0.5, c14=0.5, c23=0.0)
MIXED = TwoQubitXState(0.25, 0.25, 0.25, 0.25, c14=0.0, c23=0.0)


def hawking_ab_state(x: float) -> TwoQubitXState:
    """The Alice-Bob reduction at omega/T = x, built from first principles."""
    c_sq = 1.0 / (math.exp(-x) + 1.0)
    return TwoQubitXState(c_sq / 2, (1 - c_sq) / 2, 0.0, 0.5,
                          c14=math.sqrt(c_sq) / 2, c23=0.0)


class TestClosedForm:
    def test_bell_gives_six(self):
        b = bloch_coefficients(BELL)
        assert entropy_sum_closed_form(b, A_TO_B) == pytest.approx(6.0, abs=1e-12)
        assert entropy_sum_closed_form(b, B_TO_A) == pytest.approx(6.0, abs=1e-12)

    def test_maximally_mixed_vs_oracle(self):
        # The closed form gives 0 here while the raw conditional-entropy sum
        # is 3 bits; the two are reconciled by the calibrated affine map.
        b = bloch_coefficients(MIXED)
        d = embed_dense(MIXED)
        assert entropy_sum_closed_form(b, A_TO_B) == pytest.approx(0.0, abs=1e-12)
        assert entropy_sum_oracle(d, A_TO_B) == pytest.approx(3.0, abs=1e-12)
        assert entropy_sum_from_oracle(d, A_TO_B) == pytest.approx(0.0, abs=1e-10)

    def test_hawking_state_matches_oracle(self):
        s = hawking_ab_state(1.0)
        for direction in (A_TO_B, B_TO_A):
            closed = entropy_sum_closed_form(bloch_coefficients(s), direction)
            mapped = entropy_sum_from_oracle(embed_dense(s), direction)
            assert closed == pytest.approx(mapped, abs=1e-10)

    def test_result_bounded_by_six(self):
        for s in random_xstates(100):
            v = entropy_sum_closed_form(bloch_coefficients(s), A_TO_B)
            assert v <= 6.0 + 1e-12

    def test_out_of_range_coefficient(self):
        bad = BlochXCoefficients(c1=1.5, c2=0.0, c3=0.0, p=0.0, q=0.0)
        with pytest.raises(ValueError, match="coefficient out of range"):
            entropy_sum_closed_form(bad, A_TO_B)

    def test_unknown_direction(self):
        with pytest.raises(ValueError, match="direction"):
            entropy_sum_closed_form(bloch_coefficients(BELL), "sideways")


class TestOracle:
    def test_bell_measures_zero_conditional_entropy(self):
        # Perfectly correlated outcomes on every axis.
        assert entropy_sum_oracle(embed_dense(BELL)) == pytest.approx(0.0, abs=1e-12)

    def test_product_state_saturates_bound(self):
        s = TwoQubitXState(1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        assert entropy_sum_oracle(embed_dense(s)) == pytest.approx(2.0, abs=1e-12)

    def test_calibration_is_affine_minus_two(self):
        slope, intercept = oracle_affine_calibration()
        assert slope == pytest.approx(-2.0, abs=1e-12)
        assert intercept == pytest.approx(6.0, abs=1e-12)

    def test_rejects_wrong_dim(self):
        from hawksteer.qstate import DenseState
        with pytest.raises(ValueError):
            entropy_sum_oracle(DenseState(np.eye(2) / 2))


class TestSteerability:
    def test_bell_normalized_to_one(self):
        rep = steerability_entropy(BELL)
        assert rep.s_ab == 1.0
        assert rep.s_ba == 1.0
        assert rep.delta == 0.0

    def test_high_temperature_asymptote(self):
        # C^2 = S^2 = 1/2 limit of the Alice-Bob reduction.
        c = 1.0 / math.sqrt(2.0)
        s = TwoQubitXState(0.25, 0.25, 0.0, 0.5, c14=c / 2, c23=0.0)
        rep = steerability_entropy(s)
        # Frozen from a 30-digit evaluation of the same expressions.
        assert rep.s_ab == pytest.approx(0.149123963307143899, abs=1e-12)
        assert rep.s_ba == pytest.approx(0.054763025536710331, abs=1e-12)
        assert rep.delta == pytest.approx(0.0944, abs=5e-4)

    def test_separable_diagonal_states_unsteerable(self):
        for pops in ((1.0, 0.0, 0.0, 0.0), (0.25, 0.25, 0.25, 0.25),
                     (0.4, 0.1, 0.3, 0.2)):
            rep = steerability_entropy(TwoQubitXState(*pops, 0.0, 0.0))
            assert rep.s_ab == 0.0
            assert rep.s_ba == 0.0

    def test_never_negative(self):
        for s in random_xstates(200):
            rep = steerability_entropy(s)
            assert rep.s_ab >= 0.0
            assert rep.s_ba >= 0.0
            assert rep.delta >= 0.0

    def test_coherence_sign_flip_invariance(self):
        # Phase flip on one qubit negates both coherences; steering is blind to it.
        for s in random_xstates(100):
            flipped = TwoQubitXState(*s.populations, c14=-s.c14, c23=-s.c23)
            a, b = steerability_entropy(s), steerability_entropy(flipped)
            assert a.s_ab == pytest.approx(b.s_ab, abs=1e-12)
            assert a.s_ba == pytest.approx(b.s_ba, abs=1e-12)

    def test_swap_symmetry(self):
        # Exchanging the qubits maps (p, q) -> (q, p) and i_ab <-> i_ba exactly.
        for s in random_xstates(100):
            a = steerability_entropy(s)
            b = steerability_entropy(s.swapped())
            assert a.i_ab == b.i_ba
            assert a.i_ba == b.i_ab
