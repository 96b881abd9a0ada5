"""Support reduction and peeling decomposition for point masses in R^n.

Any convex representation of a point in R^n can be rewritten with at most
n+1 nonzero weights: while the support is larger, the homogeneous
coordinate matrix of the support points has a null vector, and shifting the
weights along it until the first coordinate hits zero shrinks the support
without moving the represented point.  :func:`caratheodory_represent` does
exactly that.

:func:`decompose_nd` turns a whole system of k > n point masses into m
components of support at most n+1, all sharing the global barycenter:
repeatedly reduce the residual's support, then peel off the largest
multiple of the reduced representation that keeps the residual nonnegative
(the min-ratio rule), which zeroes at least one point per round.  The
component count always satisfies ceil(k/(n+1)) <= m <= k-n.

Systems built from exact rationals are processed exactly; anything else
runs in float mode with scaled-partial-pivoting rank decisions (pivot
threshold 1e-12 relative to the row scale, zero tests at 1e-10).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

FLOAT_ZERO_TOL = 1e-10
FLOAT_PIVOT_TOL = 1e-12


def _coerce_scalar(x, exact: bool):
    if exact:
        return x if isinstance(x, Fraction) else Fraction(x)
    return float(x)


def _all_exact(values: Iterable) -> bool:
    return all(isinstance(v, (Fraction, int)) and not isinstance(v, bool) for v in values)


@dataclass(frozen=True)
class SystemND:
    """Point masses in R^n; duplicate positions are kept (indices are identity)."""

    points: tuple[tuple[tuple, Fraction], ...]
    dim: int
    exact: bool

    def __init__(self, points: Sequence[tuple], dim: int | None = None):
        pts = list(points)
        if not pts:
            raise DomainError("empty_system", "a system needs at least one point mass")
        if dim is None:
            dim = len(pts[0][0])
        flat = [x for pos, _ in pts for x in pos] + [m for _, m in pts]
        exact = _all_exact(flat)
        coerced = []
        for pos, mass in pts:
            if len(pos) != dim:
                raise DomainError("dimension_mismatch", f"point {pos} is not {dim}-dimensional")
            mass = _coerce_scalar(mass, exact)
            if mass <= 0:
                raise DomainError("nonpositive_mass", f"mass {mass} must be positive")
            coerced.append((tuple(_coerce_scalar(x, exact) for x in pos), mass))
        object.__setattr__(self, "points", tuple(coerced))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "exact", exact)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def masses(self) -> tuple:
        return tuple(m for _, m in self.points)

    @property
    def positions(self) -> tuple:
        return tuple(p for p, _ in self.points)

    def normalized_masses(self) -> list:
        total = sum(self.masses)
        return [m / total for m in self.masses]


def barycenter_nd(s: SystemND) -> tuple:
    total = sum(s.masses)
    return tuple(
        sum(m * pos[d] for pos, m in s.points) / total for d in range(s.dim)
    )


@dataclass(frozen=True)
class ReductionND:
    """Decomposition into convex sub-representations of support <= dim+1.

    Each component is (weights, varpi): weights is a length-k convex vector
    over the source points whose barycenter equals the global one, varpi its
    share.  The varpi-mix of the weight vectors reproduces the normalized
    source masses.
    """

    components: tuple[tuple[tuple, object], ...]
    dim: int

    @property
    def size(self) -> int:
        return len(self.components)


def norms(v: Sequence) -> tuple[int, object]:
    """(L0, L1) of a vector: nonzero count and sum of absolute values."""
    l0 = sum(1 for x in v if x != 0)
    l1 = sum(abs(x) for x in v)
    return l0, l1


def _is_zero(x, exact: bool) -> bool:
    return x == 0 if exact else abs(x) <= FLOAT_ZERO_TOL


def _null_vector(columns: list[tuple], exact: bool) -> list:
    """One nonzero vector g with sum(g) = 0 and sum(g_s * a_s) = 0.

    ``columns`` are the support positions; the matrix has their homogeneous
    coordinates as columns, with more columns than rows, so a null vector
    always exists.  Gaussian elimination with (scaled) partial pivoting;
    back-substitution with the first free column set to 1.
    """
    k = len(columns)
    n = len(columns[0])
    rows = n + 1
    one = Fraction(1) if exact else 1.0
    mat = [[one] * k] + [[_c[d] * one for _c in columns] for d in range(n)]

    pivot_col: list[int] = []
    r = 0
    for col in range(k):
        if r >= rows:
            break
        best, best_val = -1, 0.0
        for rr in range(r, rows):
            if exact:
                if mat[rr][col] != 0:
                    best = rr
                    break
            else:
                scale = max(abs(x) for x in mat[rr]) or 1.0
                v = abs(mat[rr][col]) / scale
                if v > best_val:
                    best, best_val = rr, v
        if best < 0 or (not exact and best_val <= FLOAT_PIVOT_TOL):
            continue  # free column
        mat[r], mat[best] = mat[best], mat[r]
        piv = mat[r][col]
        mat[r] = [x / piv for x in mat[r]]
        for rr in range(rows):
            if rr != r and mat[rr][col] != 0:
                f = mat[rr][col]
                mat[rr] = [x - f * y for x, y in zip(mat[rr], mat[r])]
        pivot_col.append(col)
        r += 1

    free = next(c for c in range(k) if c not in pivot_col)
    g = [one * 0] * k
    g[free] = one
    for rr, pc in enumerate(pivot_col):
        g[pc] = -mat[rr][free]
    return g


def _reduce_support(positions: Sequence[tuple], weights: list, exact: bool, dim: int) -> list:
    """Shrink a convex representation to support <= dim+1, same barycenter.

    Of the two signed steps along each null vector, takes the one whose
    first-zeroed coordinate has the smaller index (a deterministic choice).
    """
    w = list(weights)
    while True:
        support = [s for s in range(len(w)) if not _is_zero(w[s], exact)]
        if len(support) <= dim + 1:
            for s in range(len(w)):
                if _is_zero(w[s], exact):
                    w[s] = w[s] * 0
            return w
        g_sub = _null_vector([positions[s] for s in support], exact)

        def step(direction):
            best_t, best_idx = None, None
            for s, gs in zip(support, direction):
                if gs > 0 and not _is_zero(gs, exact):
                    t = w[s] / gs
                    if best_t is None or t < best_t:
                        best_t, best_idx = t, s
            return best_t, best_idx

        t_pos, idx_pos = step(g_sub)
        t_neg, idx_neg = step([-x for x in g_sub])
        if idx_pos is not None and (idx_neg is None or idx_pos <= idx_neg):
            t, sign = t_pos, 1
        else:
            t, sign = t_neg, -1
        g = {s: sign * gs for s, gs in zip(support, g_sub)}
        for s in support:
            w[s] = w[s] - t * g[s]
            if _is_zero(w[s], exact):
                w[s] = w[s] * 0
            elif w[s] < 0:
                raise DomainError("numeric_failure", "negative weight after reduction step")


def caratheodory_represent(s: SystemND, target: Sequence | None = None, weights: Sequence | None = None) -> list:
    """Convex weights of support <= dim+1 over s's points reproducing ``target``.

    Defaults: target is the system barycenter and the starting representation
    is the normalized mass vector.  A custom starting representation may be
    supplied; it must already reproduce the target.
    """
    exact = s.exact
    if weights is None:
        w = s.normalized_masses()
    else:
        w = [_coerce_scalar(x, exact) for x in weights]
        if len(w) != s.size:
            raise DomainError("dimension_mismatch", "weights length must match point count")
        total = sum(w)
        if any(x < 0 for x in w) or not _is_zero(total - 1, exact):
            raise DomainError("bad_representation", "starting weights must be convex (nonnegative, sum 1)")
    if target is None:
        target = barycenter_nd(s)
    else:
        if len(target) != s.dim:
            raise DomainError("dimension_mismatch", f"target must have dimension {s.dim}")
        target = tuple(_coerce_scalar(x, exact) for x in target)
        for d in range(s.dim):
            resid = sum(ws * pos[d] for ws, (pos, _) in zip(w, s.points)) - target[d]
            if not (resid == 0 if exact else abs(resid) <= FLOAT_ZERO_TOL):
                raise DomainError("bad_representation", "starting weights do not reproduce the target")
    return _reduce_support(s.positions, w, exact, s.dim)


def decompose_nd(s: SystemND) -> ReductionND:
    """Min-ratio peeling decomposition of a system in R^n.

    Systems with at most dim+1 points reduce trivially to one component.
    """
    exact = s.exact
    k, n = s.size, s.dim
    zero = Fraction(0) if exact else 0.0
    residual = s.normalized_masses()
    remaining = Fraction(1) if exact else 1.0
    components: list[tuple[tuple, object]] = []
    while True:
        support = [i for i in range(k) if not _is_zero(residual[i], exact)]
        if not support:
            break
        if len(support) <= n + 1:
            components.append((tuple(x / remaining for x in residual), remaining))
            break
        lam = _reduce_support(s.positions, [x / remaining for x in residual], exact, n)
        t = min(residual[i] / lam[i] for i in range(k) if not _is_zero(lam[i], exact))
        components.append((tuple(lam), t))
        for i in range(k):
            residual[i] = residual[i] - t * lam[i]
            if _is_zero(residual[i], exact):
                residual[i] = zero
            elif residual[i] < 0:
                raise DomainError("numeric_failure", "negative residual during peeling")
        remaining = remaining - t
        if _is_zero(remaining, exact):
            break
    assert math.ceil(k / (n + 1)) <= len(components) <= max(k - n, 1)
    return ReductionND(tuple(components), n)
