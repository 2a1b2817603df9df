"""Desk-scale complete intersections on surfaces in P^3 and P^4.

Two construction modes:

* ``POINT_SPLIT``: on the smooth quadric xw - yz, unions of lines from both
  rulings meet in 2*a1*a2 rational points; any subset Z1 is geometrically
  linked to its complement.
* ``IDEAL_COLON``: rational points Z1 on the surface, two random forms through
  them; Z2 is never written down and is only reached through I_Z : I_Z1.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from ..errors import DomainError, InfeasibleConstructionError, NongenericError
from .algebra import (
    GradedIdeal,
    Poly,
    PointSet,
    ProjectivePoint,
    evaluate,
    ideal_graded_dimension,
    monomials,
    poly_from_vector,
    poly_mul,
)
from .linalg import rank

DEFAULT_SEED = 20240607
MAX_RETRIES = 25
COEFF_RANGE = 9


class Surface(str, enum.Enum):
    QUADRIC = "quadric"
    CONE = "cone"
    CUBIC_SCROLL = "cubic-scroll"

    @property
    def num_vars(self) -> int:
        return 5 if self is Surface.CUBIC_SCROLL else 4

    @property
    def degree(self) -> int:
        return 3 if self is Surface.CUBIC_SCROLL else 2

    @property
    def ch(self) -> int:
        """Canonical characteristic of a surface scroll."""
        return 2


class Mode(str, enum.Enum):
    POINT_SPLIT = "POINT_SPLIT"
    IDEAL_COLON = "IDEAL_COLON"


def _mono(*exps: int) -> tuple[int, ...]:
    return tuple(exps)


def surface_ideal(surface: Surface) -> GradedIdeal:
    one = Fraction(1)
    if surface is Surface.QUADRIC:
        # xw - yz
        return GradedIdeal(4, ({_mono(1, 0, 0, 1): one, _mono(0, 1, 1, 0): -one},))
    if surface is Surface.CONE:
        # xz - y^2, vertex (0:0:0:1)
        return GradedIdeal(4, ({_mono(1, 0, 1, 0): one, _mono(0, 2, 0, 0): -one},))
    # 2x2 minors of [[x0, x1, x3], [x1, x2, x4]]
    return GradedIdeal(
        5,
        (
            {_mono(1, 0, 1, 0, 0): one, _mono(0, 2, 0, 0, 0): -one},
            {_mono(1, 0, 0, 0, 1): one, _mono(0, 1, 0, 1, 0): -one},
            {_mono(0, 1, 0, 0, 1): one, _mono(0, 0, 1, 1, 0): -one},
        ),
    )


def surface_point(surface: Surface, s: int | Fraction, t: int | Fraction, u: int | Fraction) -> ProjectivePoint:
    """Rational parametrization; (s:t) picks the ruling, u moves along it."""
    if surface is Surface.QUADRIC:
        # Segre image of ((s:t), (1:u))
        return ProjectivePoint.of([s, s * u, t, t * u])
    if surface is Surface.CONE:
        return ProjectivePoint.of([s * s, s * t, t * t, u])
    return ProjectivePoint.of([s * s, s * t, t * t, s * u, t * u])


def on_surface(surface: Surface, point: ProjectivePoint) -> bool:
    return all(evaluate(g, point.coords) == 0 for g in surface_ideal(surface).generators)


def is_vertex(surface: Surface, point: ProjectivePoint) -> bool:
    return surface is Surface.CONE and point.coords[:3] == (0, 0, 0)


def twist_conic_points(count: int) -> list[ProjectivePoint]:
    """Points on the conic x3 = x4 = 0 of the cubic scroll, a curve of class H - R."""
    return [ProjectivePoint.of([1, j, j * j, 0, 0]) for j in range(count)]


def ruling_plane(lam: Fraction, mu: Fraction) -> Poly:
    """Tangent plane to the quadric containing the lines z = λx, w = λy and y = μx, w = μz."""
    one = Fraction(1)
    return {
        _mono(1, 0, 0, 0): lam * mu,
        _mono(0, 1, 0, 0): -lam,
        _mono(0, 0, 1, 0): -mu,
        _mono(0, 0, 0, 1): one,
    }


def product(forms: Sequence[Poly]) -> Poly:
    out: Poly = {(0, 0, 0, 0): Fraction(1)}
    for f in forms:
        out = poly_mul(out, f)
    return out


@dataclass
class LinkageInstance:
    surface: Surface
    ci_degrees: tuple[int, int]
    mode: Mode
    seed: int | None
    z1: PointSet
    ideal_w: GradedIdeal
    forms: tuple[Poly, Poly]
    z: PointSet | None = None  # POINT_SPLIT only
    z2: PointSet | None = None  # POINT_SPLIT only
    split: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def c(self) -> int:
        return sum(self.ci_degrees)

    @property
    def ch_w(self) -> int:
        return self.surface.ch

    @property
    def ideal_z(self) -> GradedIdeal:
        if "iz" not in self._cache:
            self._cache["iz"] = self.ideal_w + GradedIdeal(self.ideal_w.num_vars, self.forms)
        return self._cache["iz"]

    @property
    def ideal_z1(self) -> GradedIdeal:
        if "iz1" not in self._cache:
            self._cache["iz1"] = self.z1.ideal()
        return self._cache["iz1"]

    @property
    def degree(self) -> int:
        return self.surface.degree * self.ci_degrees[0] * self.ci_degrees[1]

    def to_dict(self) -> dict:
        out = {
            "surface": self.surface.value,
            "degrees": list(self.ci_degrees),
            "mode": self.mode.value,
            "seed": self.seed,
            "split": self.split,
            "z1": [p.to_json() for p in self.z1.points],
            "forms": [_poly_to_json(f) for f in self.forms],
        }
        if self.z is not None:
            out["z"] = [p.to_json() for p in self.z.points]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> LinkageInstance:
        surface = Surface(data["surface"])
        nv = surface.num_vars
        z1 = PointSet.of(nv - 1, data["z1"])
        z = PointSet.of(nv - 1, data["z"]) if data.get("z") is not None else None
        z2 = None
        if z is not None:
            z2 = PointSet(nv - 1, tuple(p for p in z.points if p not in set(z1.points)))
        forms = tuple(_poly_from_json(f) for f in data["forms"])
        return cls(
            surface=surface,
            ci_degrees=tuple(data["degrees"]),
            mode=Mode(data["mode"]),
            seed=data.get("seed"),
            z1=z1,
            ideal_w=surface_ideal(surface),
            forms=forms,
            z=z,
            z2=z2,
            split=data.get("split", ""),
        )


def _poly_to_json(p: Poly) -> list:
    return [[list(m), str(c)] for m, c in sorted(p.items())]


def _poly_from_json(data: list) -> Poly:
    return {tuple(m): Fraction(c) for m, c in data}


def build_quadric_ruled_ci(
    a1: int,
    a2: int,
    params_a: Sequence[Fraction | int],
    params_b: Sequence[Fraction | int],
    z1_indices: Sequence[int],
) -> LinkageInstance:
    """Lines λ = const (family A) and μ = const (family B) on xw = yz.

    The first a1 parameters of each family give C1, the next a2 give C2; the
    points of Z are the crossings of C1's lines with C2's lines of the other
    family, listed A-of-C1 first.
    """
    if a1 < 1 or a2 < 1:
        raise DomainError(f"c.i. degrees must be positive, got ({a1}, {a2})")
    lam = [Fraction(x) for x in params_a]
    mu = [Fraction(x) for x in params_b]
    for name, fam in (("A", lam), ("B", mu)):
        if len(fam) != a1 + a2:
            raise DomainError(f"family {name} needs {a1 + a2} parameters, got {len(fam)}")
        if len(set(fam)) != len(fam):
            raise DomainError(f"duplicate ruling parameter in family {name}")

    def crossing(l: Fraction, m: Fraction) -> ProjectivePoint:
        return ProjectivePoint.of([1, m, l, l * m])

    pts = [crossing(l, m) for l in lam[:a1] for m in mu[a1:]]
    pts += [crossing(l, m) for l in lam[a1:] for m in mu[:a1]]
    z = PointSet(3, tuple(pts))
    chosen = sorted(set(z1_indices))
    if any(not 0 <= j < len(pts) for j in chosen):
        raise DomainError(f"split indices must lie in [0, {len(pts)})")
    z1 = PointSet(3, tuple(pts[j] for j in chosen))
    z2 = PointSet(3, tuple(p for j, p in enumerate(pts) if j not in set(chosen)))
    f1 = product([ruling_plane(lam[j], mu[j]) for j in range(a1)])
    f2 = product([ruling_plane(lam[a1 + j], mu[a1 + j]) for j in range(a2)])
    return LinkageInstance(
        surface=Surface.QUADRIC,
        ci_degrees=(a1, a2),
        mode=Mode.POINT_SPLIT,
        seed=None,
        z1=z1,
        ideal_w=surface_ideal(Surface.QUADRIC),
        forms=(f1, f2),
        z=z,
        z2=z2,
        split=f"{len(z1)}/{len(z2)}",
    )


def random_quadric_split(a1: int, a2: int, z1_size: int | None, seed: int) -> LinkageInstance:
    """Random ruling parameters and a random subset of the crossings."""
    rng = random.Random(seed)
    pool = [Fraction(p, q) for p in range(-12, 13) for q in (1, 2, 3)]
    pool = sorted(set(pool))
    params_a = rng.sample(pool, a1 + a2)
    params_b = rng.sample(pool, a1 + a2)
    total = 2 * a1 * a2
    size = rng.randint(0, total) if z1_size is None else z1_size
    if not 0 <= size <= total:
        raise DomainError(f"split size {size} must lie in [0, {total}]")
    chosen = rng.sample(range(total), size)
    inst = build_quadric_ruled_ci(a1, a2, params_a, params_b, chosen)
    inst.seed = seed
    return inst


def random_surface_points(surface: Surface, count: int, rng: random.Random) -> list[ProjectivePoint]:
    """Rational points on distinct rulings, away from the cone vertex and the twist conic.

    Three points on one ruling line would force every quadric through them to
    contain the line, so each ruling is used at most once.
    """
    pts: list[ProjectivePoint] = []
    rulings = set()
    while len(pts) < count:
        s, t, u = (rng.randint(-6, 6) for _ in range(3))
        if (s, t) == (0, 0) or u == 0:
            continue
        ruling = Fraction(t, s) if s else None
        if ruling in rulings:
            continue
        rulings.add(ruling)
        pts.append(surface_point(surface, s, t, u))
    return pts


def _forms_through(z1: PointSet, ideal_w: GradedIdeal, degree: int) -> list[list[int]]:
    nv = z1.num_vars
    ncols = len(monomials(nv, degree))
    basis = z1.ideal_piece(degree) if len(z1) else [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    w_dim = ideal_graded_dimension(ideal_w, degree)
    if rank(ideal_w.piece(degree) + basis, ncols) <= w_dim:
        raise InfeasibleConstructionError(
            f"every form of degree {degree} through the {len(z1)} points contains the surface"
        )
    return basis


def build_random_ci_through_points(
    surface: Surface, a1: int, a2: int, z1: PointSet | Sequence, seed: int = DEFAULT_SEED
) -> LinkageInstance:
    if a1 < 1 or a2 < 1:
        raise DomainError(f"c.i. degrees must be positive, got ({a1}, {a2})")
    nv = surface.num_vars
    if not isinstance(z1, PointSet):
        z1 = PointSet.of(nv - 1, z1)
    if z1.ambient_dim != nv - 1:
        raise DomainError(f"{surface.value} lives in P^{nv - 1}")
    for p in z1.points:
        if not on_surface(surface, p):
            raise DomainError(f"point {p.to_json()} is not on the {surface.value}")
        if is_vertex(surface, p):
            raise DomainError("Z1 must avoid the vertex of the cone")
    ideal_w = surface_ideal(surface)
    if len(z1) > surface.degree * a1 * a2:
        raise InfeasibleConstructionError(f"|Z1| = {len(z1)} exceeds deg Z = {surface.degree * a1 * a2}")
    bases = [_forms_through(z1, ideal_w, a) for a in (a1, a2)]

    rng = random.Random(seed)
    target = surface.degree * a1 * a2
    c = a1 + a2
    for _ in range(MAX_RETRIES):
        forms = []
        for a, basis in zip((a1, a2), bases):
            coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in basis]
            vec = [sum(cf * row[j] for cf, row in zip(coeffs, basis)) for j in range(len(basis[0]))]
            forms.append(poly_from_vector(nv, a, vec))
        if not all(forms):
            continue
        inst = LinkageInstance(
            surface=surface,
            ci_degrees=(a1, a2),
            mode=Mode.IDEAL_COLON,
            seed=seed,
            z1=z1,
            ideal_w=ideal_w,
            forms=(forms[0], forms[1]),
            split=f"{len(z1)}/{target - len(z1)}",
        )
        # an aCM c.i. of type (a1, a2) has h_Z = deg Z from degree c - 1 on
        if all(quotient_hilbert(inst.ideal_z, t) == target for t in (c - 1, c)):
            return inst
    raise NongenericError(f"no generic c.i. through Z1 after {MAX_RETRIES} attempts (seed {seed})")


def quotient_hilbert(ideal: GradedIdeal, t: int) -> int:
    """dim (R / I)_t."""
    return comb(t + ideal.num_vars - 1, ideal.num_vars - 1) - ideal_graded_dimension(ideal, t)


def random_cone_instance(a1: int, a2: int, z1_size: int, seed: int, surface: Surface = Surface.CONE) -> LinkageInstance:
    rng = random.Random(seed)
    pts = random_surface_points(surface, z1_size, rng)
    inst = build_random_ci_through_points(surface, a1, a2, PointSet(surface.num_vars - 1, tuple(pts)), rng.getrandbits(63))
    inst.seed = seed
    return inst

