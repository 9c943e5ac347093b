import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautrings.linalg import QMatrix, random_matrix, subspace_equal


class TestConstruction:
    def test_from_rows_and_getitem(self):
        a = QMatrix.from_rows([[1, 2], [3, 4]])
        assert a[0, 1] == 2 and a[1, 0] == 3

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            QMatrix.from_rows([[1], [1, 2]])

    def test_out_of_range(self):
        a = QMatrix.zeros(2, 2)
        with pytest.raises(IndexError):
            a[2, 0]

    def test_fraction_entries(self):
        a = QMatrix.from_rows([[Fraction(1, 3)]])
        assert a.scale(3) == QMatrix.identity(1)


class TestRank:
    def test_identity(self):
        assert QMatrix.identity(3).rank() == 3

    def test_zero(self):
        assert QMatrix.zeros(2, 5).rank() == 0

    def test_proportional_rows(self):
        assert QMatrix.from_rows([[1, 2], [2, 4]]).rank() == 1

    def test_fractional_rows(self):
        a = QMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)],
                               [Fraction(3, 2), 1]])
        assert a.rank() == 1


class TestKernel:
    def test_identity_kernel_empty(self):
        assert QMatrix.identity(4).kernel_basis().cols == 0

    def test_zero_kernel_full(self):
        assert QMatrix.zeros(2, 3).kernel_basis().cols == 3

    def test_sum_zero_line(self):
        k = QMatrix.from_rows([[1, 1]]).kernel_basis()
        assert k.cols == 1
        assert k[0, 0] == -k[1, 0] != 0

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 12345), st.integers(1, 40), st.integers(1, 40))
    def test_rank_nullity_and_annihilation(self, seed, rows, cols):
        rng = random.Random(seed)
        a = random_matrix(rows, cols, rng)
        k = a.kernel_basis()
        assert a.rank() + k.cols == cols
        assert (a @ k).is_zero()


class TestSubspaceEqual:
    def test_reflexive(self):
        b = QMatrix.from_rows([[1, 0], [1, 1]])
        assert subspace_equal(b, b)

    def test_scaling(self):
        b = QMatrix.from_rows([[1], [2]])
        assert subspace_equal(b, b.scale(Fraction(-7, 3)))

    def test_distinct_lines(self):
        e1 = QMatrix.from_rows([[1], [0]])
        e2 = QMatrix.from_rows([[0], [1]])
        assert not subspace_equal(e1, e2)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError):
            subspace_equal(QMatrix.zeros(2, 1), QMatrix.zeros(3, 1))

    def test_same_span_different_bases(self):
        b1 = QMatrix.from_rows([[1, 0], [0, 1], [1, 1]])
        b2 = QMatrix.from_rows([[1, 1], [1, -1], [2, 0]])
        assert subspace_equal(b1, b2)


class TestExactness:
    def test_no_rounding(self):
        assert Fraction(1, 3) * 3 == 1
        a = QMatrix.from_rows([[Fraction(1, 3)]])
        assert (a @ QMatrix.from_rows([[3]]))[0, 0] == 1

    def test_matmul_shape_check(self):
        with pytest.raises(ValueError):
            QMatrix.zeros(2, 3) @ QMatrix.zeros(2, 3)

    def test_hstack_transpose(self):
        a = QMatrix.from_rows([[1, 2]])
        b = QMatrix.from_rows([[3]])
        assert a.hstack(b).to_lists() == [[1, 2, 3]]
        assert a.transpose().to_lists() == [[1], [2]]
