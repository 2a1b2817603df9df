"""Projective points, homogeneous polynomials and graded ideals over Q.

Polynomials are dicts mapping exponent tuples to rational coefficients.  All
degreewise questions (Hilbert functions, graded pieces of ideals, colon ideals)
are answered by ranks and kernels of explicit matrices whose columns are the
degree-k monomials in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, prod
from typing import Iterable, Mapping, Sequence

from ..errors import DomainError
from .linalg import echelon, nullspace, rank

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]


@lru_cache(maxsize=None)
def monomials(num_vars: int, k: int) -> tuple[Monomial, ...]:
    """Degree-k exponent vectors in num_vars variables, in a fixed order."""
    if k < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(num_vars), k):
        exps = [0] * num_vars
        for j in combo:
            exps[j] += 1
        out.append(tuple(exps))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(num_vars: int, k: int) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomials(num_vars, k))}


def poly_degree(p: Mapping[Monomial, Fraction]) -> int:
    degrees = {sum(mono) for mono in p}
    if len(degrees) != 1:
        raise DomainError(f"polynomial is zero or not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def poly_from_vector(num_vars: int, k: int, vec: Sequence[int | Fraction]) -> Poly:
    return {mono: Fraction(c) for mono, c in zip(monomials(num_vars, k), vec) if c}


def poly_to_vector(p: Mapping[Monomial, Fraction], num_vars: int, k: int) -> list[Fraction]:
    index = monomial_index(num_vars, k)
    vec = [Fraction(0)] * len(index)
    for mono, c in p.items():
        vec[index[mono]] += c
    return vec


def multiply_by_monomial(p: Mapping[Monomial, Fraction], mono: Monomial) -> Poly:
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in p.items()}


def poly_mul(p: Mapping[Monomial, Fraction], q: Mapping[Monomial, Fraction]) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c}


def evaluate(p: Mapping[Monomial, Fraction], coords: Sequence[Fraction]) -> Fraction:
    return sum((c * prod(x**e for x, e in zip(coords, mono)) for mono, c in p.items()), Fraction(0))


def parse_rational(text: str | int | Fraction) -> Fraction:
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, coords: Iterable[int | str | Fraction]) -> ProjectivePoint:
        values = [Fraction(c) for c in coords]
        lead = next((x for x in values if x != 0), None)
        if lead is None:
            raise DomainError("the zero vector is not a projective point")
        return cls(tuple(x / lead for x in values))

    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.coords]


@dataclass(frozen=True)
class PointSet:
    ambient_dim: int
    points: tuple[ProjectivePoint, ...]

    def __post_init__(self) -> None:
        for p in self.points:
            if p.ambient_dim != self.ambient_dim:
                raise DomainError(f"point {p.to_json()} is not in P^{self.ambient_dim}")
        if len(set(self.points)) != len(self.points):
            raise DomainError("points must be pairwise distinct")

    @classmethod
    def of(cls, ambient_dim: int, points: Iterable[ProjectivePoint | Sequence]) -> PointSet:
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint.of(p) for p in points)
        return cls(ambient_dim, pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def num_vars(self) -> int:
        return self.ambient_dim + 1

    def evaluation_rows(self, k: int) -> list[list[Fraction]]:
        """One row per point: the values of the degree-k monomials."""
        monos = monomials(self.num_vars, k)
        return [[prod(x**e for x, e in zip(p.coords, mono)) for mono in monos] for p in self.points]

    def ideal_piece(self, k: int) -> list[list[int]]:
        """Integer coefficient vectors spanning (I_Z)_k."""
        if k < 0:
            return []
        return nullspace(self.evaluation_rows(k), len(monomials(self.num_vars, k)))

    def ideal(self) -> GradedIdeal:
        """Generators of I_Z, collected up to one past the degree where h_Z stabilizes."""
        top = 0
        while hilbert_function(self, top) < len(self):
            top += 1
        gens: list[Poly] = []
        ideal = GradedIdeal(self.num_vars, ())
        for k in range(1, top + 2):
            have = ideal.piece(k)
            basis_rank = len(have)
            for vec in self.ideal_piece(k):
                if rank(have + [vec], len(vec)) > basis_rank:
                    have = have + [vec]
                    basis_rank += 1
                    gens.append(poly_from_vector(self.num_vars, k, vec))
            ideal = GradedIdeal(self.num_vars, tuple(gens))
        return ideal


def hilbert_function(points: PointSet, k: int) -> int:
    """Number of conditions the points impose on degree-k forms."""
    if k < 0 or not len(points):
        return 0
    return rank(points.evaluation_rows(k), len(monomials(points.num_vars, k)))


@dataclass(frozen=True)
class GradedIdeal:
    num_vars: int
    generators: tuple[Poly, ...]
    _pieces: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        for g in self.generators:
            poly_degree(g)

    @classmethod
    def of(cls, num_vars: int, generators: Iterable[Mapping[Monomial, int | Fraction]]) -> GradedIdeal:
        gens = []
        for g in generators:
            clean = {tuple(m): Fraction(c) for m, c in g.items() if c}
            if not clean:
                raise DomainError("zero generator")
            gens.append(clean)
        return cls(num_vars, tuple(gens))

    def __add__(self, other: GradedIdeal) -> GradedIdeal:
        if self.num_vars != other.num_vars:
            raise DomainError("ideals live in different rings")
        return GradedIdeal(self.num_vars, self.generators + other.generators)

    @property
    def degrees(self) -> list[int]:
        return [poly_degree(g) for g in self.generators]

    def spanning_rows(self, k: int) -> list[list[Fraction]]:
        rows = []
        for g, dg in zip(self.generators, self.degrees):
            for mono in monomials(self.num_vars, k - dg):
                rows.append(poly_to_vector(multiply_by_monomial(g, mono), self.num_vars, k))
        return rows

    def piece(self, k: int) -> list[list[int]]:
        """Echelon basis (integer rows) of I_k; cached per degree."""
        if k not in self._pieces:
            ncols = len(monomials(self.num_vars, k))
            self._pieces[k] = echelon(self.spanning_rows(k), ncols)[0] if ncols else []
        return self._pieces[k]

    def conditions(self, k: int) -> list[list[int]]:
        """Rows of a matrix whose kernel is exactly I_k."""
        if ("ann", k) not in self._pieces:
            self._pieces[("ann", k)] = nullspace(self.piece(k), len(monomials(self.num_vars, k)))
        return self._pieces[("ann", k)]

    def contains(self, p: Mapping[Monomial, Fraction]) -> bool:
        k = poly_degree(p)
        vec = poly_to_vector(p, self.num_vars, k)
        return all(sum(c * x for c, x in zip(row, vec)) == 0 for row in self.conditions(k))


def ideal_graded_dimension(ideal: GradedIdeal, k: int) -> int:
    if k < 0:
        return 0
    return len(ideal.piece(k))


def colon_conditions(iz: GradedIdeal, iz1: GradedIdeal, k: int) -> list[list[int]]:
    """Linear conditions on the coefficients of f in R_k expressing f * I_Z1 ⊆ I_Z."""
    nv = iz.num_vars
    monos = monomials(nv, k)
    rows: list[list[int]] = []
    for g, dg in zip(iz1.generators, iz1.degrees):
        target = k + dg
        ann = iz.conditions(target)
        if not ann:
            continue
        # column j of M_g is the coefficient vector of monos[j] * g
        products = [poly_to_vector(multiply_by_monomial(g, mono), nv, target) for mono in monos]
        for cond in ann:
            rows.append([sum(c * x for c, x in zip(cond, col) if x) for col in products])
    return rows


def colon_graded_dimension(iz: GradedIdeal, iz1: GradedIdeal, k: int) -> int:
    """dim_k (I_Z : I_Z1)."""
    if k < 0:
        return 0
    ncols = comb(k + iz.num_vars - 1, iz.num_vars - 1)
    return ncols - rank(colon_conditions(iz, iz1, k), ncols)


def colon_graded_basis(iz: GradedIdeal, iz1: GradedIdeal, k: int) -> list[Poly]:
    ncols = comb(k + iz.num_vars - 1, iz.num_vars - 1)
    return [poly_from_vector(iz.num_vars, k, v) for v in nullspace(colon_conditions(iz, iz1, k), ncols)]
