import logging
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from spchain.utils.exceptions import (
    DimensionError,
    EmptyInput,
    NonFiniteValue,
    NonIncreasingInput,
    NonIncreasingPair,
    NonPositiveGap,
    NonPositiveQ,
    SingularMatrix,
)
from spchain.utils.magnitude import (
    GapVector,
    as_line_coordinates,
    chain_weights_closed_form,
    edge_weight,
    edge_weights,
    gap_vector,
    similarity_from_distances,
    similarity_matrix,
    sp_exact,
    sp_gap_formula,
)
from spchain.utils.tests.factories import GapVectorFactory, log_uniform

gap = st.floats(min_value=1e-3, max_value=1e2)
kernel = st.floats(min_value=1e-2, max_value=10.0)


def factory_k() -> int:
    return int(round(log_uniform(2.0, 10.0)))


def chain_from(g: GapVector) -> np.ndarray:
    return np.concatenate(([0.0], np.cumsum(g.gaps)))


class TestLineCoordinates:
    def test_read_only(self):
        t = as_line_coordinates([0, 1, 2])
        assert t.dtype == np.float64
        with pytest.raises(ValueError):
            t[0] = 5.0

    @pytest.mark.parametrize(
        "t, error",
        [
            ([], EmptyInput),
            ([0.0, math.nan], NonFiniteValue),
            ([0.0, math.inf], NonFiniteValue),
            ([0.0, 1.0, 1.0], NonIncreasingInput),
            ([2.0, 1.0], NonIncreasingInput),
        ],
    )
    def test_rejects(self, t, error):
        with pytest.raises(error):
            as_line_coordinates(t)

    @pytest.mark.parametrize("q", [0.0, -1.0, math.inf, math.nan])
    def test_bad_q(self, q):
        with pytest.raises(NonPositiveQ):
            gap_vector([0.0, 1.0], q)

    def test_bad_gaps(self):
        with pytest.raises(NonPositiveGap):
            GapVector(gaps=[1.0, 0.0])


class TestSimilarityMatrix:
    def test_two_points(self):
        z = similarity_matrix([0.0, 3.0], 0.5)
        expected = math.exp(-1.5)
        assert_array_equal(z, [[1.0, expected], [expected, 1.0]])

    def test_multiplicative_chain(self):
        z = similarity_matrix([0.0, 1.0, 2.0], 1.0)
        assert z[0, 2] == pytest.approx(math.exp(-2.0), abs=1e-15)
        assert z[0, 2] == pytest.approx(z[0, 1] * z[1, 2], abs=1e-15)

    def test_single_point(self):
        assert_array_equal(similarity_matrix([4.2], 1.0), [[1.0]])

    def test_symmetric_unit_diagonal(self):
        t = np.cumsum(np.linspace(0.1, 2.0, 7))
        z = similarity_matrix(t, 1.3)
        assert_array_equal(z, z.T)
        assert_array_equal(np.diag(z), np.ones(7))

    def test_from_distances_matches_line(self):
        t = np.array([0.0, 0.5, 2.0, 2.25])
        d = np.abs(np.subtract.outer(t, t))
        assert_array_equal(similarity_from_distances(d, 2.0), similarity_matrix(t, 2.0))


class TestSpExact:
    def test_two_points(self):
        d = 1.7
        value, weights = sp_exact(similarity_matrix([0.0, d], 1.0))
        assert value == pytest.approx(2.0 / (1.0 + math.exp(-d)), abs=1e-14)
        assert len(weights) == 2

    def test_one_by_one(self):
        value, _ = sp_exact([[1.0]])
        assert value == 1.0

    def test_symmetric_line(self):
        value, _ = sp_exact(similarity_matrix([-5.0, 0.0, 5.0], 1.0))
        assert value == pytest.approx(1.0 + 2.0 * math.tanh(2.5), abs=1e-12)
        assert value == pytest.approx(2.973228, abs=1e-6)

    def test_singular(self, caplog, monkeypatch):
        monkeypatch.setattr(logging.getLogger("spchain"), "propagate", True)
        caplog.set_level(logging.DEBUG, logger="spchain.utils.magnitude")
        with pytest.raises(SingularMatrix) as excinfo:
            sp_exact(np.ones((2, 2)))
        assert excinfo.value.exit_code == 5
        assert excinfo.value.pivot < 1e-12
        assert "rejecting 2 x 2 similarity matrix" in caplog.text

    def test_not_square(self):
        with pytest.raises(DimensionError):
            sp_exact(np.ones((2, 3)))


class TestGapFormula:
    def test_worked_gaps(self):
        assert sp_gap_formula(GapVector(gaps=[5.0, 5.0], q=1.0)) == pytest.approx(2.973228, abs=1e-6)

    def test_empty_gaps(self):
        g = GapVector(gaps=[], q=1.0)
        assert g.k == 1
        assert sp_gap_formula(g) == 1.0

    def test_half_gaps(self):
        value = sp_gap_formula(GapVector(gaps=[0.5, 0.5], q=1.0))
        assert value == pytest.approx(1.0 + 2.0 * math.tanh(0.25), abs=1e-15)

    def test_oracle_equivalence(self):
        worst = 0.0
        for _ in range(500):
            g = GapVectorFactory(k=factory_k())
            value, _ = sp_exact(similarity_matrix(chain_from(g), g.q))
            worst = max(worst, abs(sp_gap_formula(g) - value))
        assert worst <= 1e-9

    def test_closed_form_weights(self):
        for _ in range(500):
            g = GapVectorFactory(k=factory_k())
            _, solved = sp_exact(similarity_matrix(chain_from(g), g.q))
            assert_allclose(chain_weights_closed_form(g).w, solved.w, rtol=0, atol=1e-10)

    def test_weights_two_points(self):
        g = GapVector(gaps=[1.0], q=1.0)
        expected = 1.0 / (1.0 + math.exp(-1.0))
        assert_allclose(chain_weights_closed_form(g).w, [expected, expected], atol=1e-15)

    def test_weights_single_point(self):
        assert_array_equal(chain_weights_closed_form(GapVector(gaps=[], q=1.0)).w, [1.0])

    def test_saturation(self):
        g = GapVector(gaps=[1e3, 2e3], q=5.0)
        assert sp_gap_formula(g) == 3.0
        assert_array_equal(chain_weights_closed_form(g).w, [1.0, 1.0, 1.0])

    def test_limits(self):
        t = [0.0, 1.0, 2.0, 3.0]
        assert sp_gap_formula(gap_vector(t, 1e-6)) == pytest.approx(1.0, abs=1e-3)
        assert sp_gap_formula(gap_vector(t, 1e3)) == pytest.approx(4.0, abs=1e-3)

    @given(st.lists(gap, min_size=1, max_size=9), kernel)
    def test_range(self, gaps, q):
        value = sp_gap_formula(GapVector(gaps=gaps, q=q))
        assert 1.0 < value <= len(gaps) + 1

    @given(st.lists(gap, min_size=1, max_size=9), kernel, st.floats(min_value=-1e3, max_value=1e3))
    def test_translation(self, gaps, q, shift):
        t = np.concatenate(([0.0], np.cumsum(gaps)))
        shifted = t + shift
        # shift can merge two close points in floating point
        if np.all(np.diff(shifted) > 0):
            base, _ = sp_exact(similarity_matrix(t, q))
            moved, _ = sp_exact(similarity_matrix(shifted, q))
            assert moved == pytest.approx(base, abs=1e-10)

    @given(
        st.lists(st.integers(min_value=1, max_value=800), min_size=1, max_size=9),
        kernel,
        st.integers(min_value=-1000, max_value=1000),
    )
    def test_translation_exact(self, steps, q, shift):
        # eighths and integer shifts keep every coordinate and gap exact
        t = np.concatenate(([0.0], np.cumsum(steps))) / 8.0
        moved = gap_vector(t + shift, q)
        assert_array_equal(moved.gaps, gap_vector(t, q).gaps)
        assert sp_gap_formula(moved) == sp_gap_formula(gap_vector(t, q))

    @given(st.lists(gap, min_size=1, max_size=9), kernel, st.sampled_from([0.5, 2.0, 4.0]))
    def test_scale_kernel_duality(self, gaps, q, c):
        scaled = sp_gap_formula(GapVector(gaps=np.asarray(gaps) * c, q=q))
        assert scaled == sp_gap_formula(GapVector(gaps=gaps, q=q * c))

    @given(
        st.lists(st.floats(min_value=1e-3, max_value=2.0), min_size=1, max_size=9),
        kernel,
        st.data(),
    )
    def test_gap_monotonicity(self, gaps, q, data):
        r = data.draw(st.integers(min_value=0, max_value=len(gaps) - 1))
        wider = list(gaps)
        wider[r] += 0.5
        assert sp_gap_formula(GapVector(gaps=wider, q=q)) > sp_gap_formula(GapVector(gaps=gaps, q=q))


class TestEdgeWeight:
    def test_value(self):
        assert edge_weight(0.0, 5.0, 1.0) == pytest.approx(0.986614, abs=1e-6)
        value, _ = sp_exact(similarity_matrix([0.0, 5.0], 1.0))
        assert 1.0 + edge_weight(0.0, 5.0, 1.0) == pytest.approx(value, abs=1e-12)

    def test_translation(self):
        assert edge_weight(3.0, 4.5, 0.7) == edge_weight(0.0, 1.5, 0.7)

    @given(st.floats(min_value=1e-3, max_value=10.0), st.floats(min_value=1e-3, max_value=10.0))
    def test_increasing(self, x, extra):
        assert edge_weight(0.0, x + extra, 1.0) >= edge_weight(0.0, x, 1.0)

    def test_order(self):
        with pytest.raises(NonIncreasingPair):
            edge_weight(1.0, 1.0, 1.0)

    def test_matches_vector_form(self):
        gaps = np.array([0.5, 2.0, 7.25])
        assert_array_equal(
            edge_weights(gaps, 0.8), [edge_weight(0.0, g, 0.8) for g in gaps]
        )
        assert sp_gap_formula(GapVector(gaps=gaps, q=0.8)) == 1.0 + edge_weights(gaps, 0.8).sum()
