"""Brute-force check of h^0(I_{Z2/W} ⊗ ω_W(i+2)) = deg Z1 - h_{Z1}(c - 2 - i).

The left side never touches the Hilbert function of Z1: it is read off either
from explicit points of Z2 or from the colon ideal (I_Z : I_Z1).  The right
side goes through :func:`linkgenus.linkage.duality_rhs`.

On the quadric and the cone ω_W(i+2) = O_W(i).  On the cubic scroll
S(1, 2) ω_W(i+2) = O_W(iH + R) = O_W((i+1)H - Γ) for a conic Γ ~ H - R, so
sections are degree-(i+1) forms through Γ.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from ..errors import DomainError
from ..linkage import duality_rhs
from .algebra import PointSet, colon_conditions, hilbert_function, ideal_graded_dimension, monomials
from .instances import LinkageInstance, Mode, Surface, twist_conic_points
from .linalg import rank

TWIST_NOTES = {
    Surface.QUADRIC: "omega_W(i+2) = O_W(i)",
    Surface.CONE: "omega_W(i+2) = O_W(i) (f - 2 = 0)",
    Surface.CUBIC_SCROLL: "omega_W(i+2) = O_W(i+1) twisted down by a conic of class H - R",
}


@dataclass(frozen=True)
class DualityRow:
    i: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    instance: LinkageInstance
    rows: list[DualityRow]
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(row.equal for row in self.rows)

    def to_dict(self, include_instance: bool = True) -> dict:
        inst = self.instance
        out = {
            "surface": inst.surface.value,
            "degrees": list(inst.ci_degrees),
            "mode": inst.mode.value,
            "seed": inst.seed,
            "split": inst.split,
            "twist": TWIST_NOTES[inst.surface],
            "rows": [{"i": r.i, "lhs": r.lhs, "rhs": r.rhs, "equal": r.equal} for r in self.rows],
            "pass": self.passed,
        }
        if include_instance:
            out["instance"] = inst.to_dict()
        return out


def _residual_dimension(instance: LinkageInstance, k: int, through_conic: bool) -> int:
    """dim_k of the ideal of Z2 in the ambient ring (optionally also vanishing on the twist conic)."""
    nv = instance.ideal_w.num_vars
    ncols = len(monomials(nv, k))
    if k < 0:
        return 0
    conic_rows = []
    if through_conic:
        conic_rows = PointSet(nv - 1, tuple(twist_conic_points(2 * k + 1))).evaluation_rows(k)
    if instance.mode is Mode.POINT_SPLIT:
        assert instance.z2 is not None
        rows = instance.z2.evaluation_rows(k) + conic_rows
    else:
        rows = colon_conditions(instance.ideal_z, instance.ideal_z1, k) + conic_rows
    return ncols - rank(rows, ncols)


def duality_lhs(instance: LinkageInstance, i: int) -> int:
    if instance.surface is Surface.CUBIC_SCROLL:
        k = i + 1
        return _residual_dimension(instance, k, True) - ideal_graded_dimension(instance.ideal_w, k)
    return _residual_dimension(instance, i, False) - ideal_graded_dimension(instance.ideal_w, i)


def verify_duality(instance: LinkageInstance, i_range: Iterable[int]) -> VerificationReport:
    i_values = sorted(set(i_range))
    bound = min(instance.ci_degrees)
    bad = [i for i in i_values if i >= bound]
    if bad:
        raise DomainError(f"the duality needs i < min(a1, a2) = {bound}; got {bad}")
    if instance.surface is Surface.CUBIC_SCROLL and instance.mode is Mode.POINT_SPLIT:
        raise DomainError("the cubic scroll is only supported in IDEAL_COLON mode")
    start = time.perf_counter()
    z1 = instance.z1
    rows = []
    for i in i_values:
        lhs = duality_lhs(instance, i)
        rhs = duality_rhs(len(z1), lambda k: hilbert_function(z1, k), instance.c, instance.ch_w, i)
        rows.append(DualityRow(i, lhs, rhs))
    return VerificationReport(instance, rows, time.perf_counter() - start)

