import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautrings.graded import (
    BigradedDGA,
    DgaError,
    GeneratorSet,
    apply_derivation,
    elem_add,
    elem_mul,
    fgca_dims,
    koszul_cohomology_dims,
    mono_elem,
    monomial_basis,
    quotient_dims,
)
from tautrings.linalg import QMatrix, random_matrix


def single(gens, name):
    mono = [0] * len(gens)
    mono[gens.index[name]] = 1
    return tuple(mono)


class TestGeneratorSet:
    def test_parity_from_total_degree(self):
        g = GeneratorSet([("x", 3), ("e", (2, 0))])
        assert g[g.index["x"]].odd
        assert not g[g.index["e"]].odd

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSet([("x", 1), ("x", 2)])

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSet([("x", (0, 0))])


class TestMonomialBasis:
    def test_odd_square_vanishes(self):
        g = GeneratorSet([("x", 3)])
        assert monomial_basis(g, 6) == []

    def test_even_powers(self):
        g = GeneratorSet([("e", 2)])
        assert monomial_basis(g, 6) == [(3,)]

    def test_two_odds(self):
        g = GeneratorSet([("x", 1), ("y", 1)])
        assert monomial_basis(g, 2) == [(1, 1)]

    def test_bidegree_filter(self):
        g = GeneratorSet([("a", (2, 0)), ("b", (0, 2))])
        assert g.monomials_bidegree(2, 2) == [(1, 1)]
        assert g.monomials_bidegree(4, 0) == [(2, 0)]


class TestFgcaDims:
    def test_exterior(self):
        g = GeneratorSet([("x", 3)])
        assert fgca_dims(g, 6) == [1, 0, 0, 1, 0, 0, 0]

    def test_polynomial(self):
        g = GeneratorSet([("e", 2)])
        assert fgca_dims(g, 5) == [1, 0, 1, 0, 1, 0]

    def test_two_lines(self):
        g = GeneratorSet([("x", 1), ("y", 1)])
        assert fgca_dims(g, 3) == [1, 2, 1, 0]

    def test_matches_enumeration(self):
        g = GeneratorSet([("x", 1), ("y", 3), ("e", 2), ("f", 4)])
        dims = fgca_dims(g, 9)
        for d in range(10):
            assert dims[d] == len(monomial_basis(g, d))


class TestProducts:
    def test_koszul_sign(self):
        g = GeneratorSet([("x", 1), ("y", 1)])
        x, y = single(g, "x"), single(g, "y")
        xy = elem_mul(g, mono_elem(x), mono_elem(y))
        yx = elem_mul(g, mono_elem(y), mono_elem(x))
        assert elem_add(xy, yx) == {}

    def test_odd_square_zero(self):
        g = GeneratorSet([("x", 1)])
        x = mono_elem(single(g, "x"))
        assert elem_mul(g, x, x) == {}

    def test_even_commutes(self):
        g = GeneratorSet([("e", 2), ("x", 1)])
        e, x = mono_elem(single(g, "e")), mono_elem(single(g, "x"))
        assert elem_mul(g, e, x) == elem_mul(g, x, e)

    @settings(max_examples=100)
    @given(st.data())
    def test_sign_rule_for_derivations(self, data):
        # d(ab) = da b + (-1)^{|a|} a db for all monomial pairs to degree 8
        gens = GeneratorSet([("x", (0, 1)), ("y", (0, 1)), ("u", (0, 3)),
                             ("e", (2, 0)), ("f", (2, 2))])
        # degree-(+1) derivation: d(x) = e, d(u) = e^2
        dvals = {gens.index["x"]: mono_elem(single(gens, "e")),
                 gens.index["u"]: elem_mul(gens,
                                           mono_elem(single(gens, "e")),
                                           mono_elem(single(gens, "e")))}
        deg_a = data.draw(st.integers(0, 4))
        deg_b = data.draw(st.integers(0, 4))
        basis_a = gens.monomials_total(deg_a)
        basis_b = gens.monomials_total(deg_b)
        if not basis_a or not basis_b:
            return
        a = data.draw(st.sampled_from(basis_a))
        b = data.draw(st.sampled_from(basis_b))
        prod = elem_mul(gens, mono_elem(a), mono_elem(b))
        d_prod = {}
        for m, c in prod.items():
            d_prod = elem_add(d_prod, apply_derivation(gens, dvals, m), c)
        da_b = elem_mul(gens, apply_derivation(gens, dvals, a), mono_elem(b))
        sign = Fraction(-1 if gens.mono_total(a) % 2 else 1)
        a_db = elem_mul(gens, mono_elem(a), apply_derivation(gens, dvals, b))
        rhs = elem_add(da_b, a_db, sign)
        assert d_prod == rhs


class TestQuotientDims:
    def test_kill_generator(self):
        g = GeneratorSet([("x", 3), ("y", 5)])
        rel = mono_elem(single(g, "x"))
        assert quotient_dims(g, [rel], 8) == [1, 0, 0, 0, 0, 1, 0, 0, 0]

    def test_empty_ideal(self):
        g = GeneratorSet([("x", 1), ("e", 2)])
        assert quotient_dims(g, [], 6) == fgca_dims(g, 6)

    def test_truncated_polynomial(self):
        g = GeneratorSet([("e", 2)])
        rel = {(2,): Fraction(1)}
        assert quotient_dims(g, [rel], 8) == [1, 0, 1, 0, 0, 0, 0, 0, 0]

    def test_inhomogeneous_rejected(self):
        g = GeneratorSet([("x", 1), ("e", 2)])
        rel = elem_add(mono_elem(single(g, "x")), mono_elem(single(g, "e")))
        with pytest.raises(ValueError):
            quotient_dims(g, [rel], 4)

    def test_nonmonomial_relation(self):
        # S(a, b)/(a - b) has one generator left
        g = GeneratorSet([("a", 2), ("b", 2)])
        rel = elem_add(mono_elem(single(g, "a")),
                       mono_elem(single(g, "b")), Fraction(-1))
        assert quotient_dims(g, [rel], 6) == [1, 0, 1, 0, 1, 0, 1]

    def test_monotone_under_more_relations(self):
        g = GeneratorSet([("x", 1), ("y", 1), ("e", 2)])
        rels = [mono_elem(single(g, "x")),
                {(0, 0, 1): Fraction(1)},
                elem_mul(g, mono_elem(single(g, "y")),
                         mono_elem(single(g, "e")))]
        prev = fgca_dims(g, 6)
        for i in range(len(rels) + 1):
            cur = quotient_dims(g, rels[:i], 6)
            assert all(c <= p for c, p in zip(cur, prev))
            prev = cur


class TestKoszul:
    def test_acyclic_identity(self):
        assert koszul_cohomology_dims(QMatrix.identity(1), 5) == [1, 0, 0, 0, 0, 0]

    def test_zero_map(self):
        got = koszul_cohomology_dims(QMatrix.zeros(1, 1), 6)
        expected = fgca_dims(GeneratorSet([("y", 1), ("x", 2)]), 6)
        assert got == expected

    def test_surjective_with_kernel(self):
        got = koszul_cohomology_dims(QMatrix.from_rows([[1, 1]]), 5)
        assert got == [1, 1, 0, 0, 0, 0]

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_maps_match_kernel_cokernel_model(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(0, 5), rng.randint(0, 5)
        F = random_matrix(rows, cols, rng, lo=-3, hi=3)
        rank = F.rank()
        expected = fgca_dims(GeneratorSet(
            [(f"k{i}", 1) for i in range(cols - rank)]
            + [(f"c{i}", 2) for i in range(rows - rank)]), 8)
        assert koszul_cohomology_dims(F, 8) == expected


class TestBigradedDGA:
    def test_zero_differential_gives_algebra(self):
        gens = GeneratorSet([("a", (0, 1)), ("b", (2, 0))])
        dga = BigradedDGA(gens, {})
        table = dga.cohomology(4)
        for (p, q), h in table.items():
            assert h == len(gens.monomials_bidegree(p, q))

    def test_wrong_bidegree_rejected(self):
        gens = GeneratorSet([("a", (0, 1)), ("b", (4, 0))])
        with pytest.raises(ValueError):
            BigradedDGA(gens, {"a": mono_elem(single(gens, "b"))})

    def test_koszul_pair_embeds(self):
        # single Koszul pair at bidegrees (0,1) -> (2,0)
        gens = GeneratorSet([("y", (0, 1)), ("x", (2, 0))])
        dga = BigradedDGA(gens, {"y": mono_elem(single(gens, "x"))})
        table = dga.cohomology(6)
        regraded = [0] * 7
        for (p, q), h in table.items():
            if p + q <= 6:
                regraded[p + q] += h
        assert regraded == koszul_cohomology_dims(QMatrix.identity(1), 6)

    def test_d_squared_witness_names_monomial(self):
        gens = GeneratorSet([("y", (0, 2)), ("x", (2, 1)), ("z", (4, 0))])
        dga = BigradedDGA(gens, {
            "y": mono_elem(single(gens, "x")),
            "x": mono_elem(single(gens, "z"))})
        with pytest.raises(DgaError, match="y"):
            dga.check_d_squared(4)
