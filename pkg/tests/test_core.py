"""Core matrix primitives: adjoint, products, norms, Hermitian eigen."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from absval import (
    DimensionMismatch,
    Seed,
    HermitianEigen,
    NotSelfAdjoint,
    TolerancePolicy,
    adjoint,
    as_matrix,
    frobenius,
    gen_self_adjoint,
    gen_unitary,
    hermitian_eigen,
    matrix_from_literal,
    matrix_to_literal,
    multiply,
    operator_norm,
)

EPS = np.finfo(float).eps


def cm(rows):
    return as_matrix(rows)


class TestAdjoint:
    def test_identity_self_adjoint(self):
        eye = np.eye(2, dtype=complex)
        np.testing.assert_array_equal(adjoint(eye), eye)

    def test_real_transpose(self):
        np.testing.assert_array_equal(adjoint(cm([[0, 1], [2, 0]])), cm([[0, 2], [1, 0]]))

    def test_scalar_conjugation(self):
        np.testing.assert_array_equal(adjoint(cm([[1j]])), cm([[-1j]]))

    def test_involution_is_exact(self):
        rng = np.random.default_rng(5)
        for n in (1, 2, 5, 9):
            a = as_matrix(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
            assert adjoint(adjoint(a)).tobytes() == a.tobytes()


# Entries are kept moderate so the error bound below is meaningful, not
# because the operations care.
_entry = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(min_value=1, max_value=6), data=st.data())
def test_adjoint_anti_multiplicative(n, data):
    flat = data.draw(st.lists(st.tuples(_entry, _entry), min_size=2 * n * n, max_size=2 * n * n))
    z = np.array([complex(re, im) for re, im in flat])
    a, b = as_matrix(z[: n * n].reshape(n, n)), as_matrix(z[n * n :].reshape(n, n))
    bound = 8 * n * EPS * frobenius(a) * frobenius(b)
    assert frobenius(adjoint(multiply(a, b)) - multiply(adjoint(b), adjoint(a))) <= bound


class TestMultiply:
    def test_nilpotent_pair_commutes(self):
        a, b = cm([[1, 1], [0, 1]]), cm([[0, 1], [0, 0]])
        np.testing.assert_array_equal(multiply(a, b), cm([[0, 1], [0, 0]]))
        np.testing.assert_array_equal(multiply(b, a), cm([[0, 1], [0, 0]]))

    def test_self_adjoint_product(self):
        a, b = cm([[0, 1], [2, 0]]), cm([[0, 2], [1, 0]])
        np.testing.assert_array_equal(multiply(a, b), cm([[1, 0], [0, 4]]))

    def test_identity_neutral(self):
        rng = np.random.default_rng(2)
        a = as_matrix(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        np.testing.assert_allclose(multiply(a, np.eye(3)), a)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            multiply(np.eye(2, dtype=complex), np.eye(3, dtype=complex))


class TestOperatorNorm:
    def test_diagonal(self):
        assert operator_norm(cm([[2, 0], [0, -1]])) == pytest.approx(2.0, abs=1e-12)

    def test_nilpotent_block(self):
        # a* a = diag(0, 1), so the singular values are {0, 1}
        assert operator_norm(cm([[0, 1], [0, 0]])) == pytest.approx(1.0, abs=1e-12)

    def test_zero(self):
        assert operator_norm(np.zeros((3, 3), dtype=complex)) == 0.0

    def test_unitaries_have_norm_one(self):
        for seed in range(25):
            u = gen_unitary(4, seed)
            assert abs(operator_norm(u) - 1.0) <= 1e-10


class TestHermitianEigen:
    def test_already_diagonal(self):
        eig = hermitian_eigen(cm([[3, 0], [0, 1]]))
        np.testing.assert_allclose(eig.eigenvalues, [1.0, 3.0], atol=1e-14)
        np.testing.assert_allclose(np.abs(eig.eigenvectors), [[0, 1], [1, 0]], atol=1e-14)

    def test_two_by_two_closed_form(self):
        # characteristic polynomial x^2 - 3x + 1, roots (3 +- sqrt 5)/2
        eig = hermitian_eigen(cm([[1, 1], [1, 2]]))
        expected = [(3 - np.sqrt(5)) / 2, (3 + np.sqrt(5)) / 2]
        np.testing.assert_allclose(eig.eigenvalues, expected, atol=1e-14)

    def test_rank_one_plus_trace(self):
        # rank-1 matrix with trace 4: spectrum {0, 4}
        eig = hermitian_eigen(cm([[2, -2], [-2, 2]]))
        np.testing.assert_allclose(eig.eigenvalues, [0.0, 4.0], atol=1e-14)

    def test_rejects_asymmetry(self):
        with pytest.raises(NotSelfAdjoint):
            hermitian_eigen(cm([[0, 1], [0, 0]]))

    def test_ascending_and_deterministic(self):
        h = gen_self_adjoint(6, 11)
        first, second = hermitian_eigen(h), hermitian_eigen(h)
        assert np.all(np.diff(first.eigenvalues) >= 0)
        assert first.eigenvalues.tobytes() == second.eigenvalues.tobytes()
        assert first.eigenvectors.tobytes() == second.eigenvectors.tobytes()

    def test_residual_bounds_across_sizes(self):
        # unitarity within 64 n eps sqrt(n), reconstruction within 64 n eps ||h||
        for n in range(2, 17):
            for trial in range(500):
                h = gen_self_adjoint(n, Seed(11, f"eig:{n}", trial))
                eig = hermitian_eigen(h)
                u = eig.eigenvectors
                assert frobenius(u @ u.conj().T - np.eye(n)) <= 64 * n * EPS * np.sqrt(n)
                assert frobenius(eig.reconstruct() - h) <= 64 * n * EPS * frobenius(h)

    def test_reconstruct_helper(self):
        h = gen_self_adjoint(4, 3)
        assert isinstance(hermitian_eigen(h), HermitianEigen)
        np.testing.assert_allclose(hermitian_eigen(h).reconstruct(), h, atol=1e-13)


class TestValidationAndLiterals:
    def test_as_matrix_rejects_non_square(self):
        with pytest.raises(DimensionMismatch):
            as_matrix(np.zeros((2, 3)))

    def test_as_matrix_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            as_matrix([[np.nan, 0], [0, 1]])
        with pytest.raises(ValueError):
            as_matrix([[np.inf, 0], [0, 1]])

    def test_literal_round_trip(self):
        a = cm([[1 + 2j, -0.5], [3j, 4]])
        again = matrix_from_literal(matrix_to_literal(a))
        assert again.tobytes() == a.tobytes()

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=1, max_value=5), data=st.data())
    def test_literal_round_trip_property(self, n, data):
        flat = data.draw(st.lists(st.tuples(_entry, _entry), min_size=n * n, max_size=n * n))
        a = as_matrix(np.array([complex(re, im) for re, im in flat]).reshape(n, n))
        assert matrix_from_literal(matrix_to_literal(a)).tobytes() == a.tobytes()

    def test_literal_shape_check(self):
        with pytest.raises(ValueError):
            matrix_from_literal({"dim": 2, "entries": [[1, 0]]})
        with pytest.raises(ValueError):
            matrix_from_literal({"entries": []})

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            TolerancePolicy(rel=0.0)
        with pytest.raises(ValueError):
            TolerancePolicy(abs=-1.0)
