"""Maximal-genus numerics for curves in P^n not lying on surfaces of degree < s.

Everything here is integer (or exact rational) arithmetic.  The division data
(m, ε, w, v, k, δ, e) is bundled in :class:`GenusParameters`; the extremal
first-difference Hilbert profile is :class:`DeltaHTable`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DegenerateDivisionError, DomainError, ProfileConsistencyError


class Branch(str, enum.Enum):
    LOW = "LOW"
    HIGH = "HIGH"


@dataclass(frozen=True)
class GenusParameters:
    d: int
    n: int
    s: int
    m: int
    eps: int
    w: int
    v: int
    branch: Branch
    k: int
    delta: int
    e: int

    @property
    def stable(self) -> bool:
        """True when the Δh profile sums to d (exactly the range m >= w)."""
        return self.m >= self.w

    @property
    def top(self) -> int:
        """Last degree where Δh may be nonzero."""
        return self.m + self.w + self.e

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "s": self.s,
            "m": self.m,
            "eps": self.eps,
            "w": self.w,
            "v": self.v,
            "branch": self.branch.value,
            "k": self.k,
            "delta": self.delta,
            "e": self.e,
        }


def compute_parameters(d: int, n: int, s: int) -> GenusParameters:
    if n < 3:
        raise DomainError(f"ambient dimension must be >= 3, got n={n}")
    if s < n - 1:
        raise DomainError(f"surface degree s={s} is below n-1={n - 1}")
    if d < s + 1:
        raise DomainError(f"degree d={d} must be at least s+1={s + 1}")

    m, eps = divmod(d - 1, s)
    w, v = divmod(s - 1, n - 2)
    if eps < w * (n - 1 - v):
        if w == 0:
            # unreachable while s >= n-1, kept as a guard
            raise DegenerateDivisionError(f"w=0 with eps={eps} > 0 in the LOW branch")
        k, delta = divmod(eps, w)
        return GenusParameters(d, n, s, m, eps, w, v, Branch.LOW, k, delta, 0)
    k, delta = divmod(eps + n - 2 - v, w + 1)
    return GenusParameters(d, n, s, m, eps, w, v, Branch.HIGH, k, delta, 1)


def delta_h(params: GenusParameters, r: int) -> int:
    p = params
    if r < 0:
        return 0
    if r <= p.w:
        return (p.n - 2) * r + 1
    if r <= p.m:
        return p.s
    if r <= p.m + p.delta:
        return p.s + p.k - (p.n - 2) * (r - p.m)
    if r <= p.top:
        return p.s + p.k - (p.n - 2) * (r - p.m) - 1
    return 0


@dataclass(frozen=True)
class DeltaHTable:
    params: GenusParameters
    values: tuple[int, ...]  # values[r] = Δh(r) for 0 <= r <= m+w+e

    def __call__(self, r: int) -> int:
        if 0 <= r < len(self.values):
            return self.values[r]
        return 0

    @property
    def total(self) -> int:
        return sum(self.values)

    def hilbert(self, r: int) -> int:
        """Partial sum h(r) = Σ_{j<=r} Δh(j)."""
        if r < 0:
            return 0
        return sum(self.values[: r + 1])

    def rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values))


def delta_h_table(params: GenusParameters) -> DeltaHTable:
    values = tuple(delta_h(params, r) for r in range(params.top + 1))
    table = DeltaHTable(params, values)
    if table.total != params.d:
        raise ProfileConsistencyError(
            f"Δh sums to {table.total}, expected d={params.d} "
            f"(m={params.m} < w={params.w}: outside the stable range)"
        )
    return table


def max_genus(params: GenusParameters) -> int:
    """G(d, n, s) as the genus of an ACM curve whose section has profile Δh."""
    table = delta_h_table(params)
    return sum((r - 1) * value for r, value in table.rows() if r >= 2)


@dataclass(frozen=True)
class ClosedFormGenus:
    value: Fraction
    discrepancy: bool

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1


def closed_form_genus(params: GenusParameters) -> ClosedFormGenus:
    """The printed closed form, evaluated verbatim.

    It is known to disagree with :func:`max_genus` on some inputs (and to be
    non-integral on others); the mismatch is reported, never corrected.
    """
    p = params
    half = Fraction(1, 2)
    if p.branch is Branch.LOW:
        rho = -half * p.delta * (p.w - p.delta)
    else:
        rho = half * p.eps - half * p.w * (p.n - 2 - p.v) - half * p.delta * (p.w - p.delta + 1)
    value = (
        1
        + half * p.d * (p.m + p.w - 2)
        - half * (p.m + 1) * (p.w - 3)
        + half * p.v * p.m * (p.w + 1)
        + rho
    )
    return ClosedFormGenus(value, value != max_genus(p))


def _castelnuovo_division(deg: int, ambient_dim: int) -> tuple[int, int]:
    if ambient_dim < 2 or deg < ambient_dim:
        raise DomainError(
            f"a nondegenerate curve of degree {deg} in P^{ambient_dim} needs deg >= ambient_dim >= 2"
        )
    return divmod(deg - 1, ambient_dim - 1)


def castelnuovo_genus(deg: int, ambient_dim: int) -> int:
    """Classical Castelnuovo bound for nondegenerate curves of degree deg in P^ambient_dim."""
    m0, eps0 = _castelnuovo_division(deg, ambient_dim)
    return math.comb(m0, 2) * (ambient_dim - 1) + m0 * eps0


def printed_castelnuovo_genus(deg: int, ambient_dim: int) -> int:
    """C(w, 2) + w*v, the variant without the (ambient_dim - 1) factor; audit only."""
    m0, eps0 = _castelnuovo_division(deg, ambient_dim)
    return math.comb(m0, 2) + m0 * eps0


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for integers x >= 0, k >= 1."""
    if x < 2 or k == 1:
        return x
    guess = 1 << -(-x.bit_length() // k)  # overestimate
    while True:
        nxt = ((k - 1) * guess + x // guess ** (k - 1)) // k
        if nxt >= guess:
            break
        guess = nxt
    while guess**k > x:
        guess -= 1
    while (guess + 1) ** k <= x:
        guess += 1
    return guess


def _bound_power(n: int, s: int) -> tuple[Fraction, int]:
    """Return (bound**L, L) with L the lcm of the root orders 1..n-2."""
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    if s < 1:
        raise DomainError(f"s must be positive, got {s}")
    roots = range(1, n - 1)  # n-1-i for i = 1..n-2
    big_l = reduce(math.lcm, roots, 1)
    fact = math.factorial(n - 1)
    power = Fraction(2 * s, n - 2) ** big_l
    for j in roots:
        power *= fact ** (big_l // j)
    return power, big_l


def exceeds_degree_bound(d: int, n: int, s: int) -> bool:
    """Exact test of d > (2s/(n-2)) * Π_{i=1}^{n-2} ((n-1)!)^(1/(n-1-i))."""
    power, big_l = _bound_power(n, s)
    return d > 0 and d**big_l > power


def min_admissible_degree(n: int, s: int) -> int:
    power, big_l = _bound_power(n, s)
    # d**L is an integer, so d**L > power  <=>  d**L > floor(power)
    return _iroot(power.numerator // power.denominator, big_l) + 1


def residual_h0_bound(params: GenusParameters, i: int) -> int:
    """Tail sum Σ_{r > m+w-i} Δh(r); the infinite sum stops at m+w+e."""
    if i > params.w or i > params.m:
        raise DomainError(f"i={i} must satisfy i <= w={params.w} and i <= m={params.m}")
    table = delta_h_table(params)
    start = params.m + params.w - i + 1
    return sum(table(r) for r in range(max(start, 0), params.top + 1))
