"""Point-mass systems on the line and their pair decompositions.

A system is a finite list of (position, positive mass) pairs.  The central
operation, :func:`decompose_pairs`, rewrites any system as a positively
weighted sum of two-point systems that all share the original barycenter.
The construction is the classical inductive argument made iterative: walk
two pointers outward from the innermost points on either side of the
barycenter, each step emitting the unique pair that exhausts at least one
side.  It produces the unique decomposition whose left positions are
non-increasing, right positions non-decreasing, and spans strictly
increasing.

Two refinements complete the toolkit: :func:`refine_pair` splits one
weighted pair across several prescribed sub-barycenters, and
:func:`transport` combines both constructions into a coupling matrix
between an outer and an inner system with equal barycenters.

All arithmetic is exact; float positions or masses are rejected at this
module's boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .rationals import rat


@dataclass(frozen=True)
class System1D:
    """Canonical 1D system: strictly increasing positions, positive masses."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, points: Iterable[tuple]):
        merged: dict[Fraction, Fraction] = {}
        for pos, mass in points:
            pos, mass = rat(pos), rat(mass)
            if mass <= 0:
                raise DomainError("nonpositive_mass", f"mass {mass} at position {pos}")
            merged[pos] = merged.get(pos, Fraction(0)) + mass
        if not merged:
            raise DomainError("empty_system", "a system needs at least one point mass")
        object.__setattr__(
            self, "points", tuple(sorted(merged.items()))
        )

    @property
    def positions(self) -> tuple[Fraction, ...]:
        return tuple(p for p, _ in self.points)

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(m for _, m in self.points)

    @property
    def total_mass(self) -> Fraction:
        return sum(self.masses, Fraction(0))

    def normalized(self) -> "System1D":
        t = self.total_mass
        return System1D((p, m / t) for p, m in self.points)


def barycenter(s: System1D) -> Fraction:
    """Mass-weighted mean position, exact."""
    return sum((m * p for p, m in s.points), Fraction(0)) / s.total_mass


@dataclass(frozen=True)
class PairComponent:
    """One two-point system: ``weight * (left_frac at left_pos, right_frac at right_pos)``."""

    weight: Fraction
    left_pos: Fraction
    left_frac: Fraction
    right_pos: Fraction
    right_frac: Fraction

    def __post_init__(self):
        if self.weight <= 0:
            raise DomainError("bad_component", "component weight must be positive")
        if self.left_frac <= 0 or self.right_frac <= 0:
            raise DomainError("bad_component", "pair fractions must be positive")
        if self.left_frac + self.right_frac != 1:
            raise DomainError("bad_component", "pair fractions must sum to 1")
        if not self.left_pos < self.right_pos:
            raise DomainError("bad_component", "left position must be below right position")

    @property
    def mean(self) -> Fraction:
        return self.left_frac * self.left_pos + self.right_frac * self.right_pos


@dataclass(frozen=True)
class Decomposition1D:
    """Pair decomposition of a source system.

    ``fixed_mass_at_c`` holds any source mass sitting exactly at the
    barycenter (such mass cannot join a strict pair); the components
    decompose the remainder.  Weights are pair masses divided by
    ``source_total_mass``, so ``fixed_mass_at_c + total * sum(weights)``
    reproduces the source mass.
    """

    barycenter: Fraction
    fixed_mass_at_c: Fraction
    components: tuple[PairComponent, ...]
    source_total_mass: Fraction

    def __post_init__(self):
        c = self.barycenter
        for comp in self.components:
            if comp.mean != c:
                raise DomainError("bad_component", f"pair mean {comp.mean} != barycenter {c}")
        spans = [comp.right_pos - comp.left_pos for comp in self.components]
        lefts = [comp.left_pos for comp in self.components]
        rights = [comp.right_pos for comp in self.components]
        if any(a < b for a, b in zip(lefts, lefts[1:])):
            raise DomainError("bad_decomposition", "left positions must be non-increasing")
        if any(a > b for a, b in zip(rights, rights[1:])):
            raise DomainError("bad_decomposition", "right positions must be non-decreasing")
        if any(a >= b for a, b in zip(spans, spans[1:])):
            raise DomainError("bad_decomposition", "pair spans must be strictly increasing")


def decompose_pairs(s: System1D) -> Decomposition1D:
    """Decompose a system into barycenter-preserving two-point components.

    Mass exactly at the barycenter is split off into ``fixed_mass_at_c``;
    the rest is consumed by the outward two-pointer walk.  Each emitted pair
    (a_i, a_j) carries fractions p : q = (a_j - c) : (c - a_i), which is the
    unique split putting its mean at c; its weight is the largest mass this
    pair can absorb without overdrawing either side.  When both sides
    exhaust together, both pointers advance, which is what keeps all
    fractions strictly positive and the spans strictly increasing.
    """
    c = barycenter(s)
    total = s.total_mass
    fixed = Fraction(0)
    left: list[list[Fraction]] = []   # [position, remaining mass], below c
    right: list[list[Fraction]] = []  # above c
    for pos, mass in s.points:
        if pos == c:
            fixed = mass
        elif pos < c:
            left.append([pos, mass])
        else:
            right.append([pos, mass])

    components: list[PairComponent] = []
    i = len(left) - 1  # innermost remaining left point
    j = 0              # innermost remaining right point
    while i >= 0 and j < len(right):
        a, rem_a = left[i]
        b, rem_b = right[j]
        p = (b - c) / (b - a)
        q = (c - a) / (b - a)
        mu = min(rem_a / p, rem_b / q)
        components.append(PairComponent(mu / total, a, p, b, q))
        left[i][1] = rem_a - mu * p
        right[j][1] = rem_b - mu * q
        if left[i][1] == 0:
            i -= 1
        if right[j][1] == 0:
            j += 1
    # mass balance guarantees both sides exhaust in the same step
    assert i < 0 and j >= len(right)
    return Decomposition1D(c, fixed, tuple(components), total)


def recompose(d: Decomposition1D) -> System1D:
    """Rebuild the source system of a decomposition, exactly."""
    points: list[tuple[Fraction, Fraction]] = []
    if d.fixed_mass_at_c > 0:
        points.append((d.barycenter, d.fixed_mass_at_c))
    for comp in d.components:
        mu = comp.weight * d.source_total_mass
        points.append((comp.left_pos, mu * comp.left_frac))
        points.append((comp.right_pos, mu * comp.right_frac))
    return System1D(points)


def refine_pair(
    a,
    b,
    p,
    q,
    targets: Sequence[tuple],
) -> list[tuple[Fraction, Fraction]]:
    """Split the pair (a: p, b: q) across sub-barycenters.

    Each target (c_i, w_i) asks for a sub-pair of weight w_i on {a, b} with
    mean c_i; the unique solution is p_i = w_i * theta_i, q_i = w_i *
    (1 - theta_i) where theta_i places c_i on the segment.  Requires the
    book-keeping identity sum(w_i * c_i) == p*a + q*b, checked exactly.
    """
    a, b, p, q = rat(a), rat(b), rat(p), rat(q)
    if not a < b:
        raise DomainError("bad_pair", f"need a < b, got {a}, {b}")
    if p <= 0 or q <= 0 or p + q != 1:
        raise DomainError("bad_pair", "p, q must be positive and sum to 1")
    cs = [rat(c) for c, _ in targets]
    ws = [rat(w) for _, w in targets]
    if any(w <= 0 for w in ws) or sum(ws, Fraction(0)) != 1:
        raise DomainError("bad_targets", "target weights must be positive and sum to 1")
    for c in cs:
        if not a < c < b:
            raise DomainError("target_out_of_range", f"target mean {c} outside ({a}, {b})")
    mean = p * a + q * b
    if sum((w * c for c, w in zip(cs, ws)), Fraction(0)) != mean:
        raise DomainError(
            "inconsistent_mean",
            f"sum of w_i*c_i must equal p*a + q*b = {mean}",
        )
    out = []
    for c, w in zip(cs, ws):
        theta = (b - c) / (b - a)
        out.append((w * theta, w * (1 - theta)))
    return out


def transport(outer: System1D, inner: System1D) -> list[list[Fraction]]:
    """Coupling matrix between nested systems with a common barycenter.

    Rows follow outer positions ascending, columns inner positions
    ascending.  Row sums reproduce the outer masses, column sums the inner
    masses, and each column's barycenter over the outer positions equals its
    inner position.  Requires both systems normalized to total mass 1, equal
    barycenters, and no outer position strictly inside the inner span.

    Construction: pair-decompose the outer system at the common barycenter,
    then split every pair across the inner positions it brackets.
    """
    if outer.total_mass != 1 or inner.total_mass != 1:
        raise DomainError("not_normalized", "both systems must have total mass 1")
    c = barycenter(outer)
    if c != barycenter(inner):
        raise DomainError(
            "barycenter_mismatch",
            f"outer barycenter {c} != inner barycenter {barycenter(inner)}",
        )
    in_pos = inner.positions
    lo, hi = in_pos[0], in_pos[-1]
    if any(lo < a < hi for a in outer.positions):
        raise DomainError("inner_not_nested", "an outer position lies strictly inside the inner span")

    row_of = {a: idx for idx, a in enumerate(outer.positions)}
    matrix = [[Fraction(0)] * len(in_pos) for _ in outer.positions]

    if len(in_pos) == 1:
        # single column at the common barycenter takes everything
        for idx, m in enumerate(outer.masses):
            matrix[idx][0] = m
        return matrix

    d = decompose_pairs(outer)
    if d.fixed_mass_at_c > 0:  # c strictly inside (lo, hi) here, so nesting already failed
        raise DomainError("inner_not_nested", "outer mass at the barycenter inside the inner span")
    for comp in d.components:
        a, b, mu = comp.left_pos, comp.right_pos, comp.weight
        for col, (bj, qj) in enumerate(inner.points):
            theta = (b - bj) / (b - a)  # in [0, 1]: a <= lo <= bj <= hi <= b
            matrix[row_of[a]][col] += mu * qj * theta
            matrix[row_of[b]][col] += mu * qj * (1 - theta)
    return matrix


def verify_sum_identity(
    d: Decomposition1D,
    fvals: Mapping[Fraction, object],
    gval_at_c,
) -> tuple:
    """Evaluate both sides of the pairwise regrouping identity.

    Left side: the source's normalized f-mixture plus g at the barycenter.
    Right side: the same quantity regrouped through the decomposition, one
    bracket per pair (plus the fixed-mass bracket).  The two sides agree
    exactly for exact f-values and to rounding for float values; this
    function just reports them.
    """
    src = recompose(d)
    c = d.barycenter
    total = d.source_total_mass
    try:
        lhs = sum(m * fvals[p] for p, m in src.points) / total + gval_at_c
        rhs = sum(
            comp.weight
            * (comp.left_frac * fvals[comp.left_pos] + comp.right_frac * fvals[comp.right_pos] + gval_at_c)
            for comp in d.components
        )
    except KeyError as exc:
        raise DomainError("missing_value", f"no f value at position {exc.args[0]}") from None
    if d.fixed_mass_at_c > 0:
        if c not in fvals:
            raise DomainError("missing_value", f"no f value at position {c}")
        rhs = rhs + (d.fixed_mass_at_c / total) * (fvals[c] + gval_at_c)
    return lhs, rhs
