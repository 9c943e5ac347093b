import math

import pytest

from tautrings.invariants import (
    TensorSpaceSpec,
    gl_invariant_basis,
    sigma_matrix,
    sl_invariant_basis,
    verify_fundamental_theorems,
)
from tautrings.linalg import subspace_equal
from tautrings.partitions import Partition, schur_product_expand


class TestTensorSpaceSpec:
    def test_dim(self):
        assert TensorSpaceSpec(2, 1, 3).dim == 27

    def test_rejects_bad(self):
        with pytest.raises(ValueError):
            TensorSpaceSpec(-1, 0, 2)
        with pytest.raises(ValueError):
            TensorSpaceSpec(1, 1, 0)

    def test_guard(self):
        with pytest.raises(ValueError):
            TensorSpaceSpec(10, 10, 4).check_guard()


class TestGLInvariants:
    def test_mixed_vanishing(self):
        assert gl_invariant_basis(TensorSpaceSpec(1, 2, 3)).cols == 0

    def test_m2_g2(self):
        assert gl_invariant_basis(TensorSpaceSpec(2, 2, 2)).cols == 2

    def test_m2_g1(self):
        assert gl_invariant_basis(TensorSpaceSpec(2, 2, 1)).cols == 1

    def test_identity_tensor_annihilated(self):
        # T^{1,1} invariants = the identity tensor line
        basis = gl_invariant_basis(TensorSpaceSpec(1, 1, 3))
        assert basis.cols == 1
        col = basis.column(0)
        diag = {i * 3 + i for i in range(3)}
        assert set(col) == diag
        assert len({col[i] for i in diag}) == 1

    def test_schur_multiplicity_crosscheck(self):
        # dim T^{k,k}-invariants = sum of squared multiplicities of each
        # S_lambda inside the k-th tensor power, heights <= g
        for g in (1, 2, 3):
            for k in (1, 2, 3):
                mults = {Partition([1]): 1}
                for _ in range(k - 1):
                    new = {}
                    for lam, c in mults.items():
                        for kappa, c2 in schur_product_expand(
                                lam, Partition([1])).items():
                            new[kappa] = new.get(kappa, 0) + c * c2
                    mults = new
                want = sum(c * c for lam, c in mults.items()
                           if lam.height <= g)
                got = gl_invariant_basis(TensorSpaceSpec(k, k, g)).cols
                assert got == want


class TestSLInvariants:
    def test_divisibility_vanishing(self):
        assert sl_invariant_basis(TensorSpaceSpec(1, 0, 2)).cols == 0

    def test_determinant_line(self):
        basis = sl_invariant_basis(TensorSpaceSpec(2, 0, 2))
        assert basis.cols == 1
        col = basis.column(0)
        # the line a1(x)a2 - a2(x)a1
        assert set(col) == {1, 2}
        assert col[1] == -col[2]

    def test_equals_gl_when_balanced(self):
        for g in (1, 2, 3):
            for k in (0, 1, 2):
                spec = TensorSpaceSpec(k, k, g)
                assert subspace_equal(gl_invariant_basis(spec),
                                      sl_invariant_basis(spec))

    def test_contains_gl(self):
        spec = TensorSpaceSpec(3, 0, 3)
        assert sl_invariant_basis(spec).cols == 1  # determinant line
        assert gl_invariant_basis(spec).cols == 0


class TestSigma:
    def test_single_column_identity(self):
        s = sigma_matrix(1, 3)
        assert s.cols == 1
        assert s.column(0) == {0: 1, 4: 1, 8: 1}

    def test_rank_2_2(self):
        assert sigma_matrix(2, 2).rank() == 2

    def test_rank_2_1(self):
        assert sigma_matrix(2, 1).rank() == 1

    def test_guard(self):
        with pytest.raises(ValueError):
            sigma_matrix(7, 1)

    def test_columns_inside_invariants(self):
        spec = TensorSpaceSpec(3, 3, 2)
        inv = gl_invariant_basis(spec)
        sig = sigma_matrix(3, 2)
        assert subspace_equal(sig, inv)


class TestFundamentalTheorems:
    def test_2_2(self):
        rep = verify_fundamental_theorems(2, 2)
        assert (rep.rank, rep.surjective, rep.injective) == (2, True, True)

    def test_3_2(self):
        rep = verify_fundamental_theorems(3, 2)
        assert rep.surjective and not rep.injective
        assert rep.rank < math.factorial(3)

    def test_1_1(self):
        rep = verify_fundamental_theorems(1, 1)
        assert (rep.rank, rep.surjective, rep.injective) == (1, True, True)
