"""Rational normal scrolls: class groups, the resolution lattice, transforms.

A scroll S(a_1, ..., a_r) in P^n has dimension r and degree f = Σ a_i with
n = f + r - 1.  Its canonical resolution has Picard lattice Z[H~] + Z[R~] with
H~^r = f, H~^(r-1) R~ = 1 and R~^2 = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import prod
from typing import Sequence, Union

from .errors import DomainError, InvariantViolationError, ScrollShapeError, VariantMismatchError


@dataclass(frozen=True)
class Scroll:
    n: int
    a: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def f(self) -> int:
        return sum(self.a)

    @property
    def zeros(self) -> int:
        return sum(1 for x in self.a if x == 0)

    @property
    def smooth(self) -> bool:
        return self.zeros == 0

    @property
    def vertex_dim(self) -> int | None:
        """Dimension of the vertex, or None for a smooth scroll."""
        return None if self.smooth else self.zeros - 1

    @property
    def vertex_codim(self) -> int | None:
        return None if self.smooth else self.r - self.zeros + 1

    @property
    def cyclic_class_group(self) -> bool:
        return self.vertex_codim == 2

    def normalize(self, cls: DivisorClass) -> DivisorClass:
        """Rewrite a class in the form matching this scroll (H ~ fR on codim-2 vertices)."""
        if self.cyclic_class_group and isinstance(cls, FreeClass):
            return ConeClass(cls.a * self.f + cls.b)
        if not self.cyclic_class_group and isinstance(cls, ConeClass):
            raise VariantMismatchError("a CONE class only makes sense when the vertex has codimension 2")
        return cls

    def describe(self) -> dict:
        return {
            "n": self.n,
            "a": list(self.a),
            "r": self.r,
            "f": self.f,
            "smooth": self.smooth,
            "vertex_dim": self.vertex_dim,
            "vertex_codim": self.vertex_codim,
        }


def make_scroll(n: int, a: Sequence[int]) -> Scroll:
    entries = tuple(sorted(int(x) for x in a))
    if not entries:
        raise DomainError("a scroll needs at least one a_i")
    if entries[0] < 0:
        raise DomainError(f"a_i must be nonnegative, got {list(a)}")
    if entries[-1] < 1:
        raise ScrollShapeError("degenerate scroll: every a_i is zero")
    f, r = sum(entries), len(entries)
    if n != f + r - 1:
        raise DomainError(f"S{entries} has degree {f} and dimension {r}, so it lives in P^{f + r - 1}, not P^{n}")
    return Scroll(n, entries)


def balanced_threefold(n: int) -> Scroll:
    """The most balanced rational normal 3-fold in P^n (degree n - 2)."""
    f = n - 2
    if f < 1:
        raise DomainError(f"no rational normal 3-fold spans P^{n}")
    q, rem = divmod(f, 3)
    return make_scroll(n, [q] * (3 - rem) + [q + 1] * rem)


@dataclass(frozen=True)
class FreeClass:
    """a*H + b*R in a rank-2 class group."""

    a: int
    b: int


@dataclass(frozen=True)
class ConeClass:
    """d*R in the cyclic class group of a scroll whose vertex has codimension 2."""

    d: int


DivisorClass = Union[FreeClass, ConeClass]


class ClassGroupKind(str, enum.Enum):
    FREE = "FREE"
    CYCLIC = "CYCLIC"


@dataclass(frozen=True)
class ClassGroup:
    kind: ClassGroupKind
    generators: tuple[str, ...]
    relation: str | None = None

    @property
    def rank(self) -> int:
        return len(self.generators)


def class_group(scroll: Scroll) -> ClassGroup:
    if scroll.cyclic_class_group:
        return ClassGroup(ClassGroupKind.CYCLIC, ("R",), f"H = {scroll.f}R")
    return ClassGroup(ClassGroupKind.FREE, ("H", "R"))


@dataclass(frozen=True)
class ResolutionClass:
    """alpha*H~ + beta*R~ on the canonical resolution."""

    alpha: int
    beta: int

    def __add__(self, other: ResolutionClass) -> ResolutionClass:
        return ResolutionClass(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: ResolutionClass) -> ResolutionClass:
        return ResolutionClass(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> ResolutionClass:
        return ResolutionClass(-self.alpha, -self.beta)

    def __mul__(self, k: int) -> ResolutionClass:
        return ResolutionClass(k * self.alpha, k * self.beta)

    __rmul__ = __mul__


H_TILDE = ResolutionClass(1, 0)
R_TILDE = ResolutionClass(0, 1)


def intersection_number(scroll: Scroll, classes: Sequence[ResolutionClass]) -> int:
    if len(classes) != scroll.r:
        raise DomainError(f"need exactly r={scroll.r} classes, got {len(classes)}")
    alphas = [c.alpha for c in classes]
    total = scroll.f * prod(alphas)
    # terms with two or more R~ factors vanish
    for j, cls in enumerate(classes):
        total += cls.beta * prod(alphas[:j] + alphas[j + 1 :])
    return total


def canonical_class(scroll: Scroll) -> DivisorClass:
    return scroll.normalize(FreeClass(-scroll.r, scroll.f - 2))


def canonical_characteristic(scroll: Scroll) -> int:
    return scroll.r


def divisor_degree(scroll: Scroll, cls: DivisorClass) -> int:
    if isinstance(cls, ConeClass):
        if not scroll.cyclic_class_group:
            raise VariantMismatchError("CONE class on a scroll with rank-2 class group")
        return cls.d
    if scroll.cyclic_class_group:
        raise VariantMismatchError("FREE class on a scroll whose class group is cyclic; normalize first")
    return cls.a * scroll.f + cls.b


def _require_codim2(scroll: Scroll) -> None:
    if not scroll.cyclic_class_group:
        raise VariantMismatchError(
            f"integral total transforms need a codimension-2 vertex; S{scroll.a} has codim {scroll.vertex_codim}"
        )


def integral_total_transform(scroll: Scroll, d: int) -> ResolutionClass:
    """Class of D* for an effective D ~ dR."""
    _require_codim2(scroll)
    if d < 0:
        raise DomainError(f"effective divisor needs d >= 0, got {d}")
    k, h = divmod(d - 1, scroll.f)
    return ResolutionClass(k + 1, -(scroll.f - h - 1))


def _require_line_vertex(scroll: Scroll) -> None:
    if scroll.r != 3 or scroll.vertex_codim != 2:
        raise ScrollShapeError(f"need a 3-fold whose vertex is a line, got S{scroll.a}")


def proper_transform_line_vertex(scroll: Scroll, c: int, a: int) -> ResolutionClass:
    """Proper transform of a divisor ~ cH passing a times through the vertex line."""
    _require_line_vertex(scroll)
    if not 0 <= a <= c:
        raise DomainError(f"need 0 <= a <= c, got c={c}, a={a}")
    return ResolutionClass(c - a, scroll.f * a)


@dataclass(frozen=True)
class VertexDivisor:
    """Either a divisor ~ cH through the vertex line a times, or a ruling plane R."""

    c: int = 0
    a: int = 0
    ruling: bool = False

    def total(self, scroll: Scroll) -> ResolutionClass:
        if self.ruling:
            return integral_total_transform(scroll, 1)
        return integral_total_transform(scroll, self.c * scroll.f)

    def proper(self, scroll: Scroll) -> ResolutionClass:
        if self.ruling:
            return R_TILDE
        return proper_transform_line_vertex(scroll, self.c, self.a)


def vertex_multiplicity(scroll: Scroll, first: VertexDivisor, second: VertexDivisor) -> int:
    """Multiplicity of the vertex line in first ∩ second, via D1*.D2*.H~ - D1~.D2~.H~."""
    _require_line_vertex(scroll)
    if first.ruling and second.ruling:
        raise ScrollShapeError("two ruling planes: no vertex multiplicity is defined")
    if first.ruling:
        first, second = second, first
    lattice = intersection_number(scroll, [first.total(scroll), second.total(scroll), H_TILDE]) - intersection_number(
        scroll, [first.proper(scroll), second.proper(scroll), H_TILDE]
    )
    expected = first.a if second.ruling else first.a * second.a * scroll.f
    if lattice != expected:
        raise InvariantViolationError(f"lattice value {lattice} disagrees with closed form {expected}")
    return lattice


def ci_curve_invariants(scroll: Scroll, a: int, b: int) -> tuple[int, int]:
    """(degree, arithmetic genus) of a complete intersection of type (a, b) on a 3-fold scroll."""
    if scroll.r != 3:
        raise ScrollShapeError(f"need a 3-fold scroll, got dimension {scroll.r}")
    if a < 1 or b < 1:
        raise DomainError(f"c.i. degrees must be positive, got ({a}, {b})")
    f = scroll.f
    twice = a * b * ((a + b - 3) * f + f - 2)
    assert twice % 2 == 0
    return a * b * f, 1 + twice // 2


def is_reflexive_pair(scroll: Scroll, a: int, b: int) -> bool:
    """Whether O_X(a, b) is reflexive."""
    if not scroll.cyclic_class_group:
        return True
    return b < scroll.f
