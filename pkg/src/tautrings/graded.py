"""Free graded-commutative algebras, ideal quotients, Koszul complexes and
bigraded differential graded algebras.

Generators carry a bidegree (p, q); singly graded algebras use (0, d).  A
generator is exterior iff its total degree is odd, polynomial otherwise.
Monomials are exponent tuples over the (fixed, name-sorted) generator
list; elements are dicts monomial -> Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import rank_of_int_rows


@dataclass(frozen=True)
class Generator:
    name: str
    p: int
    q: int

    @property
    def total(self) -> int:
        return self.p + self.q

    @property
    def odd(self) -> bool:
        return self.total % 2 == 1


class GeneratorSet:
    """An ordered set of generators; order is (total degree, name)."""

    def __init__(self, gens):
        """gens: iterable of (name, degree) or (name, (p, q))."""
        parsed = []
        for item in gens:
            name, deg = item
            if isinstance(deg, tuple):
                p, q = deg
            else:
                p, q = 0, deg
            if p < 0 or q < 0 or p + q < 1:
                raise ValueError(f"bad degree for generator {name}: {(p, q)}")
            parsed.append(Generator(str(name), p, q))
        parsed.sort(key=lambda g: (g.total, g.name))
        names = [g.name for g in parsed]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.gens: tuple[Generator, ...] = tuple(parsed)
        self.index = {g.name: i for i, g in enumerate(parsed)}

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i: int) -> Generator:
        return self.gens[i]

    def unit(self) -> tuple[int, ...]:
        return (0,) * len(self.gens)

    def mono_bidegree(self, mono) -> tuple[int, int]:
        p = sum(e * g.p for e, g in zip(mono, self.gens))
        q = sum(e * g.q for e, g in zip(mono, self.gens))
        return p, q

    def mono_total(self, mono) -> int:
        return sum(e * g.total for e, g in zip(mono, self.gens))

    def mono_str(self, mono) -> str:
        parts = []
        for e, g in zip(mono, self.gens):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def monomials_total(self, degree: int) -> list[tuple[int, ...]]:
        """All monomials of the given total degree, lexicographic order."""
        out = []

        def rec(i, remaining, acc):
            if remaining == 0:
                out.append(tuple(acc) + (0,) * (len(self.gens) - i))
                return
            if i == len(self.gens):
                return
            g = self.gens[i]
            cap = 1 if g.odd else remaining // g.total
            for e in range(cap, -1, -1):
                if e * g.total <= remaining:
                    rec(i + 1, remaining - e * g.total, acc + [e])

        rec(0, degree, [])
        out.sort(reverse=True)
        return out

    def monomials_bidegree(self, p: int, q: int) -> list[tuple[int, ...]]:
        return [m for m in self.monomials_total(p + q)
                if self.mono_bidegree(m) == (p, q)]


def mono_mul(gens: GeneratorSet, m1, m2):
    """Product of two canonical monomials: (sign, monomial) or None if zero."""
    sign = 1
    # odd letters of m2 must move left past the odd letters of m1 with
    # larger generator index
    odd1 = [i for i, e in enumerate(m1) if e and gens[i].odd]
    for j, e in enumerate(m2):
        if not e or not gens[j].odd:
            continue
        if m1[j]:
            return None
        crossings = sum(1 for i in odd1 if i > j)
        if crossings % 2:
            sign = -sign
    return sign, tuple(a + b for a, b in zip(m1, m2))


def elem_mul(gens: GeneratorSet, e1: dict, e2: dict) -> dict:
    out: dict = {}
    for m1, c1 in e1.items():
        for m2, c2 in e2.items():
            r = mono_mul(gens, m1, m2)
            if r is None:
                continue
            sign, m = r
            v = out.get(m, Fraction(0)) + sign * c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def elem_add(e1: dict, e2: dict, c=Fraction(1)) -> dict:
    out = dict(e1)
    for m, v in e2.items():
        nv = out.get(m, Fraction(0)) + c * v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def mono_elem(mono) -> dict:
    return {mono: Fraction(1)}


def apply_derivation(gens: GeneratorSet, dvals: dict[int, dict], mono) -> dict:
    """Extend generator values to a derivation with the Koszul sign rule.

    dvals maps generator index -> element; absent indices have derivative
    zero.  d(xy) = dx y + (-1)^{|x|} x dy on total degree.
    """
    out: dict = {}
    prefix_parity = 0
    for i, e in enumerate(mono):
        if e and i in dvals and dvals[i]:
            prefix = mono[:i] + (0,) * (len(mono) - i)
            rest = (0,) * i + (e - 1,) + mono[i + 1:]
            sign = -1 if prefix_parity % 2 else 1
            term = elem_mul(gens, mono_elem(prefix),
                            elem_mul(gens, dvals[i], mono_elem(rest)))
            out = elem_add(out, term, Fraction(sign * e))
        if e:
            prefix_parity += e * gens[i].total
    return out


def substitute_generator(gens: GeneratorSet, mono, i: int, j: int):
    """Replace one occurrence of generator i by generator j (same parity),
    as an ungraded derivation slot move.  Returns (coeff, monomial) or None.

    Used for Lie-algebra actions: no Koszul signs, but moving an odd letter
    to its canonical slot picks up the wedge reordering sign.
    """
    if mono[i] == 0:
        return None
    if i == j:
        lst = list(mono)
        return mono[i], tuple(lst)
    gi, gj = gens[i], gens[j]
    if gi.odd != gj.odd:
        raise ValueError("parity mismatch in substitution")
    if gi.odd and mono[j]:
        return None
    lst = list(mono)
    lst[i] -= 1
    lst[j] += 1
    coeff = mono[i]
    if gi.odd:
        lo, hi = (i, j) if i < j else (j, i)
        between = sum(mono[k] for k in range(lo + 1, hi) if gens[k].odd)
        if between % 2:
            coeff = -coeff
    return coeff, tuple(lst)


def fgca_dims(gens: GeneratorSet, maxdeg: int) -> list[int]:
    """Hilbert series coefficients of the free graded-commutative algebra."""
    series = [0] * (maxdeg + 1)
    series[0] = 1
    for g in gens:
        d = g.total
        if g.odd:
            new = series[:]
            for k in range(maxdeg + 1 - d):
                new[k + d] += series[k]
            series = new
        else:
            # multiply by 1/(1 - t^d)
            for k in range(d, maxdeg + 1):
                series[k] += series[k - d]
    return series


def monomial_basis(gens: GeneratorSet, degree: int) -> list[tuple[int, ...]]:
    return gens.monomials_total(degree)


def _homogeneous_degree(gens: GeneratorSet, elem: dict) -> int:
    degs = {gens.mono_total(m) for m in elem}
    if len(degs) != 1:
        raise ValueError(f"relation is not homogeneous: degrees {sorted(degs)}")
    return degs.pop()


def quotient_dims(gens: GeneratorSet, relations: list[dict], maxdeg: int) -> list[int]:
    """Dimensions of F(gens)/(relations) in degrees 0..maxdeg.

    Relations must be homogeneous elements.  The ideal is spanned
    degreewise by products relation * monomial; the span's rank is exact.
    Pure-generator relations short-circuit to a Hilbert-series count.
    """
    rel_degs = [_homogeneous_degree(gens, r) for r in relations if r]
    rels = [r for r in relations if r]

    killed = set()
    simple = True
    for r in rels:
        if len(r) == 1:
            (mono,) = r
            if sum(mono) == 1:
                killed.add(mono.index(1))
                continue
        simple = False
        break
    if simple:
        remaining = GeneratorSet(
            [(g.name, (g.p, g.q)) for i, g in enumerate(gens.gens) if i not in killed])
        return fgca_dims(remaining, maxdeg)

    free = fgca_dims(gens, maxdeg)
    out = [free[0]]
    for d in range(1, maxdeg + 1):
        basis = gens.monomials_total(d)
        idx = {m: i for i, m in enumerate(basis)}
        rows = []
        for r, dr in zip(rels, rel_degs):
            if dr > d:
                continue
            for mm in gens.monomials_total(d - dr):
                prod = elem_mul(gens, r, mono_elem(mm))
                if prod:
                    denlcm = 1
                    for v in prod.values():
                        denlcm = denlcm * v.denominator
                    rows.append({idx[m]: int(v * denlcm) for m, v in prod.items()})
        rank = rank_of_int_rows(rows) if rows else 0
        out.append(len(basis) - rank)
    return out


class DgaError(ValueError):
    """Raised when a claimed differential fails to square to zero."""


class BigradedDGA:
    """Finitely generated bigraded GCA with a derivation differential of
    bidegree (2, -1)."""

    def __init__(self, gens: GeneratorSet, differential: dict[str, dict]):
        """differential maps generator name -> element (exponent-tuple dict)."""
        self.gens = gens
        self.dvals: dict[int, dict] = {}
        for name, val in differential.items():
            i = gens.index[name]
            if val:
                gp, gq = gens[i].p, gens[i].q
                for m in val:
                    mp, mq = gens.mono_bidegree(m)
                    if (mp, mq) != (gp + 2, gq - 1):
                        raise ValueError(
                            f"differential of {name} not of bidegree (2,-1)")
                self.dvals[i] = val

    def d(self, elem: dict) -> dict:
        out: dict = {}
        for m, c in elem.items():
            out = elem_add(out, apply_derivation(self.gens, self.dvals, m), c)
        return out

    def check_d_squared(self, maxtotal: int):
        """Verify d^2 = 0 on every monomial of total degree <= maxtotal."""
        for d in range(maxtotal + 1):
            for m in self.gens.monomials_total(d):
                dd = self.d(self.d(mono_elem(m)))
                if dd:
                    raise DgaError(
                        f"d^2 != 0 on monomial {self.gens.mono_str(m)}")

    def _cell_rank(self, p: int, q: int) -> int:
        """Rank of d restricted to bidegree (p, q)."""
        basis = self.gens.monomials_bidegree(p, q)
        if not basis:
            return 0
        rows_by_target: dict = {}
        for j, m in enumerate(basis):
            img = self.d(mono_elem(m))
            for tm, c in img.items():
                rows_by_target.setdefault(tm, {})[j] = c
        rows = []
        for d in rows_by_target.values():
            denlcm = 1
            for v in d.values():
                denlcm *= v.denominator
            rows.append({j: int(v * denlcm) for j, v in d.items()})
        return rank_of_int_rows(rows)

    def cohomology(self, maxtotal: int, check: bool = True) -> dict[tuple[int, int], int]:
        """dim H^{p,q} for all bidegrees with p + q <= maxtotal."""
        if check:
            self.check_d_squared(maxtotal)
        ranks: dict[tuple[int, int], int] = {}
        dims: dict[tuple[int, int], int] = {}
        out: dict[tuple[int, int], int] = {}
        for total in range(maxtotal + 1):
            for p in range(0, total + 1):
                q = total - p
                basis = self.gens.monomials_bidegree(p, q)
                dims[(p, q)] = len(basis)
                ranks[(p, q)] = self._cell_rank(p, q) if basis else 0
        for (p, q), dim in dims.items():
            incoming = ranks.get((p - 2, q + 1), 0)
            out[(p, q)] = dim - ranks[(p, q)] - incoming
        return out


def koszul_cohomology_dims(F, maxdeg: int) -> list[int]:
    """Cohomology dimensions of the Koszul complex of a linear map.

    F is a QMatrix X x Y (a map from Y to X); the exterior generators sit
    in degree 1, the polynomial generators in degree 2.  Returns dims of
    H^0..H^maxdeg.
    """
    ny, nx = F.cols, F.rows
    gens = GeneratorSet(
        [(f"y{i:03d}", (0, 1)) for i in range(ny)]
        + [(f"x{j:03d}", (2, 0)) for j in range(nx)])
    diff: dict[str, dict] = {}
    for i in range(ny):
        val: dict = {}
        for j in range(nx):
            c = F[j, i]
            if c:
                mono = [0] * len(gens)
                mono[gens.index[f"x{j:03d}"]] = 1
                val[tuple(mono)] = c
        if val:
            diff[f"y{i:03d}"] = val
    dga = BigradedDGA(gens, diff)
    table = dga.cohomology(maxdeg)
    dims = [0] * (maxdeg + 1)
    for (p, q), h in table.items():
        if p + q <= maxdeg:
            dims[p + q] += h
    return dims
