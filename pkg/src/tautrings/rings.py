"""Cohomology ring presentations: the Thom-spectrum ring, the
diffeomorphism-group ring via three independent presentations, and the
block-diffeomorphism / tangential stages.

All answers are exterior algebras in the computed range; presentations
are stored as generators-plus-relations and evaluated degreewise by the
exact quotient engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import GeneratorSet, fgca_dims, mono_elem, quotient_dims
from .model import (
    OracleMismatch,
    borel_generators,
    k_pair_generators,
    k_single_generators,
    minimal_M,
)


@dataclass(frozen=True)
class RingPresentation:
    """Free graded-commutative generators, named relations, and dims."""

    generators: tuple[tuple[str, int], ...]
    relations: tuple[str, ...]
    dims: tuple[int, ...]


def _multisets_in_degree(lo: int, hi: int, shift: int, maxdeg: int):
    """Weakly increasing tuples c with entries in [lo, hi] and
    0 < 4*sum(c) - shift <= maxdeg."""
    out = []

    def rec(start, acc, total):
        if acc and 0 < 4 * total - shift <= maxdeg:
            out.append(tuple(acc))
        for m in range(start, hi + 1):
            if 4 * (total + m) - shift > maxdeg:
                break
            acc.append(m)
            rec(m, acc, total + m)
            acc.pop()

    rec(lo, [], 0)
    return out


def _mu_name(c: tuple[int, ...]) -> str:
    return "mu_" + "_".join(str(m) for m in c)


def _kappa_name(c: tuple[int, ...]) -> str:
    return "kappa_" + "_".join(str(m) for m in c)


def mt_generators(n: int, maxdeg: int) -> list[tuple[tuple[int, ...], int]]:
    """Exterior generators mu_c: weakly increasing multisets c of L-class
    indices in [ceil((n+1)/4), n], degree 4*sum(c) - (2n+1) in (0, maxdeg]."""
    mlo = -((-(n + 1)) // 4)
    shift = 2 * n + 1
    return [(c, 4 * sum(c) - shift)
            for c in _multisets_in_degree(mlo, n, shift, maxdeg)]


def mt_cohomology(n: int, maxdeg: int) -> RingPresentation:
    """The free exterior algebra on the mu_c generators, by degree."""
    if n < 2:
        raise ValueError(f"requires n >= 2 (got n={n})")
    if maxdeg < 1:
        raise ValueError("requires maxdeg >= 1")
    gens = tuple((_mu_name(c), d) for c, d in mt_generators(n, maxdeg))
    dims = fgca_dims(GeneratorSet(gens), maxdeg)
    return RingPresentation(generators=gens, relations=(), dims=tuple(dims))


def _single_gen_relations(gens: GeneratorSet, names: list[str]) -> list[dict]:
    rels = []
    for name in names:
        mono = [0] * len(gens)
        mono[gens.index[name]] = 1
        rels.append(mono_elem(tuple(mono)))
    return rels


def _diff_presentation_a(n: int, maxdeg: int) -> tuple[RingPresentation, list[int]]:
    """Quotient of the Thom-spectrum ring by (all mu_{L_m}) + (degree 1)."""
    mt = mt_cohomology(n, maxdeg)
    gens = GeneratorSet(mt.generators)
    killed = []
    for c, d in mt_generators(n, maxdeg):
        if len(c) == 1 or d == 1:
            killed.append(_mu_name(c))
    dims = quotient_dims(gens, _single_gen_relations(gens, killed), maxdeg)
    pres = RingPresentation(generators=mt.generators,
                            relations=tuple(killed), dims=tuple(dims))
    return pres, dims


def _diff_presentation_b(n: int, maxdeg: int) -> tuple[RingPresentation, list[int]]:
    """Quotient of the desuspended-characteristic-class algebra.

    Generators kappa_c for L-monomials c of degree 4*sum(c) > 2n+1,
    placed in degree 4*sum(c) - (2n+1) and truncated at maxdeg.
    Relations: every kappa_{L_m}; every kappa_c containing an index with
    4m <= n; every degree-1 pair kappa_{L_{m0}L_{m1}}, 4(m0+m1) = 2n+2.
    """
    shift = 2 * n + 1
    cs = _multisets_in_degree(1, (shift + maxdeg) // 4, shift, maxdeg)
    gens_list = tuple((_kappa_name(c), 4 * sum(c) - shift) for c in cs)
    gens = GeneratorSet(gens_list)
    killed = []
    for c in cs:
        if (len(c) == 1
                or any(4 * m <= n for m in c)
                or (len(c) == 2 and 4 * sum(c) == 2 * n + 2)):
            killed.append(_kappa_name(c))
    dims = quotient_dims(gens, _single_gen_relations(gens, killed), maxdeg)
    pres = RingPresentation(generators=gens_list,
                            relations=tuple(killed), dims=tuple(dims))
    return pres, dims


def _diff_presentation_c(n: int, maxdeg: int,
                         min_pair_degree: int = 2) -> tuple[RingPresentation, list[int]]:
    """Exterior algebra on the pair generators of K."""
    M = minimal_M(max(n, 5)) + maxdeg  # comfortably beyond any pair in range
    pairs = [(name, d) for name, d in
             k_pair_generators(n, M, min_pair_degree=min_pair_degree)
             if d <= maxdeg]
    dims = fgca_dims(GeneratorSet(pairs), maxdeg)
    pres = RingPresentation(generators=tuple(pairs), relations=(),
                            dims=tuple(dims))
    return pres, dims


@dataclass(frozen=True)
class DiffCohomology:
    n: int
    maxdeg: int
    dims: tuple[int, ...]
    presentation_a: RingPresentation
    presentation_b: RingPresentation
    presentation_c: RingPresentation

    @property
    def basis(self) -> tuple[tuple[str, int], ...]:
        return self.presentation_c.generators


def diff_cohomology(n: int, maxdeg: int, g: int | None = None,
                    min_pair_degree: int = 2) -> DiffCohomology:
    """Ring of the diffeomorphism classifying space, three ways.

    The three presentations (Thom-spectrum quotient, desuspended-algebra
    quotient, exterior algebra on pair generators) must agree degreewise;
    a mismatch raises OracleMismatch naming the degree.
    """
    if n < 4:
        raise ValueError(f"requires n >= 4 (got n={n})")
    if maxdeg < 1 or maxdeg > n - 3:
        raise ValueError(
            f"requires 1 <= maxdeg <= n-3 (got maxdeg={maxdeg}, n={n})")
    if g is not None and 2 * maxdeg > g - 4:
        raise ValueError(
            f"requires maxdeg <= (g-4)/2 (got maxdeg={maxdeg}, g={g})")
    pa, da = _diff_presentation_a(n, maxdeg)
    pb, db = _diff_presentation_b(n, maxdeg)
    pc, dc = _diff_presentation_c(n, maxdeg, min_pair_degree=min_pair_degree)
    for d in range(maxdeg + 1):
        if not (da[d] == db[d] == dc[d]):
            raise OracleMismatch(
                f"presentations disagree in degree {d} for n={n}: "
                f"a={da[d]}, b={db[d]}, c={dc[d]}")
    return DiffCohomology(n=n, maxdeg=maxdeg, dims=tuple(da),
                          presentation_a=pa, presentation_b=pb,
                          presentation_c=pc)


@dataclass(frozen=True)
class BlockDiffCohomology:
    n: int
    maxdeg: int
    tangential: bool
    generators: tuple[tuple[str, int], ...]
    dims: tuple[int, ...]


def blockdiff_cohomology(n: int, maxdeg: int | None = None,
                         tangential: bool = False,
                         min_pair_degree: int = 2) -> BlockDiffCohomology:
    """Exterior algebra on K-pairs plus the stable degree-(4k+1)
    generators; with tangential=True the single generators k_m are kept
    as well and the range extends by one degree."""
    if n < 5:
        raise ValueError(f"requires n >= 5 (got n={n})")
    bound = n - 3 if tangential else n - 4
    if maxdeg is None:
        maxdeg = bound
    if maxdeg < 1 or maxdeg > bound:
        raise ValueError(
            f"requires 1 <= maxdeg <= {'n-3' if tangential else 'n-4'} "
            f"(got maxdeg={maxdeg}, n={n})")
    M = minimal_M(n) + maxdeg
    gens = [(name, d) for name, d in
            k_pair_generators(n, M, min_pair_degree=min_pair_degree)
            if d <= maxdeg]
    if tangential:
        gens += [(name, d) for name, d in k_single_generators(n, M)
                 if d <= maxdeg]
    gens += borel_generators(maxdeg)
    gens.sort(key=lambda t: (t[1], t[0]))
    dims = fgca_dims(GeneratorSet(gens), maxdeg)
    return BlockDiffCohomology(n=n, maxdeg=maxdeg, tangential=tangential,
                               generators=tuple(gens), dims=tuple(dims))
