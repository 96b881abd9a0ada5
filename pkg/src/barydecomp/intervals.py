"""Interval and interval-set algebra with exact endpoints.

Intervals carry independently open/closed finite endpoints (exact rationals)
or open infinite ones.  ``union`` normalizes any finite family into a
canonical disjoint ordered ``IntervalSet``; the ``test_*`` predicates decide
the classical sufficient conditions under which a union of intervals is
itself an interval (a shared common point, pairwise intersection, an
intersecting bridge interval, or chain connectivity), each of which the
canonical union then confirms with a single part.

Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError
from .rationals import RationalLike, rat

NEG_INF = float("-inf")
POS_INF = float("inf")

Endpoint = Union[Fraction, float]  # floats only ever hold +-inf


def _endpoint(value) -> Endpoint:
    if isinstance(value, float):
        if math.isinf(value):
            return value
        raise DomainError("not_rational", f"finite endpoints must be exact, got float {value!r}")
    if isinstance(value, str) and value.strip().lstrip("+-") == "inf":
        return NEG_INF if value.strip().startswith("-") else POS_INF
    return rat(value)


def _is_inf(x: Endpoint) -> bool:
    return isinstance(x, float) and math.isinf(x)


@dataclass(frozen=True)
class IntervalE:
    """A non-empty extended-real interval; use :meth:`empty` for the empty one."""

    lo: Endpoint
    hi: Endpoint
    lo_closed: bool = True
    hi_closed: bool = True
    is_empty: bool = False

    def __post_init__(self):
        if self.is_empty:
            object.__setattr__(self, "lo", Fraction(0))
            object.__setattr__(self, "hi", Fraction(0))
            object.__setattr__(self, "lo_closed", False)
            object.__setattr__(self, "hi_closed", False)
            return
        object.__setattr__(self, "lo", _endpoint(self.lo))
        object.__setattr__(self, "hi", _endpoint(self.hi))
        if _is_inf(self.lo) and self.lo_closed:
            raise DomainError("bad_interval", "-inf endpoint must be open")
        if _is_inf(self.hi) and self.hi_closed:
            raise DomainError("bad_interval", "+inf endpoint must be open")
        if self.lo > self.hi:
            raise DomainError("bad_interval", f"lo {self.lo} > hi {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise DomainError(
                "bad_interval",
                "degenerate interval needs both endpoints closed; use IntervalE.empty() for the empty set",
            )

    @classmethod
    def empty(cls) -> "IntervalE":
        return cls(Fraction(0), Fraction(0), False, False, is_empty=True)

    @classmethod
    def point(cls, x: RationalLike) -> "IntervalE":
        x = rat(x)
        return cls(x, x, True, True)

    @classmethod
    def closed(cls, lo, hi) -> "IntervalE":
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi) -> "IntervalE":
        return cls(lo, hi, False, False)

    def __contains__(self, x) -> bool:
        if self.is_empty:
            return False
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    @property
    def is_degenerate(self) -> bool:
        return not self.is_empty and self.lo == self.hi

    @property
    def length(self) -> Endpoint:
        if self.is_empty:
            return Fraction(0)
        if _is_inf(self.lo) or _is_inf(self.hi):
            return POS_INF
        return self.hi - self.lo

    def intersect(self, other: "IntervalE") -> "IntervalE":
        if self.is_empty or other.is_empty:
            return IntervalE.empty()
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
            return IntervalE.empty()
        return IntervalE(lo, hi, lo_closed, hi_closed)

    def intersects(self, other: "IntervalE") -> bool:
        return not self.intersect(other).is_empty

    def _merges_with(self, nxt: "IntervalE") -> bool:
        # assumes self.lo-key <= nxt.lo-key; merge on overlap or a closed touch
        if nxt.lo < self.hi:
            return True
        return nxt.lo == self.hi and (self.hi_closed or nxt.lo_closed)


def _lo_key(iv: IntervalE):
    # open lower endpoints sort after closed ones at the same location
    return (iv.lo, 0 if iv.lo_closed else 1)


@dataclass(frozen=True)
class IntervalSet:
    """Canonical union of pairwise disjoint, non-mergeable intervals."""

    parts: tuple[IntervalE, ...]

    def __contains__(self, x) -> bool:
        return any(x in p for p in self.parts)

    @property
    def is_single_interval(self) -> bool:
        return len(self.parts) == 1

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def length(self) -> Endpoint:
        total = Fraction(0)
        for p in self.parts:
            if _is_inf(p.length):
                return POS_INF
            total += p.length
        return total

    def intersect(self, iv: IntervalE) -> "IntervalSet":
        pieces = [p.intersect(iv) for p in self.parts]
        return IntervalSet(tuple(p for p in pieces if not p.is_empty))

    def covers(self, iv: IntervalE) -> bool:
        """Point-set containment of a single interval in this set."""
        if iv.is_empty:
            return True
        return self.intersect(iv) == IntervalSet((iv,))


def union(family: Iterable[IntervalE]) -> IntervalSet:
    """Canonical union of a finite family of intervals (sweep merge).

    Adjacent intervals merge only when at least one touching endpoint is
    closed, so the result is exact as a point set: (0,1) u [1,2] merges,
    (0,1) u (1,2) does not.
    """
    items = [iv for iv in family if not iv.is_empty]
    if not items:
        return IntervalSet(())
    items.sort(key=_lo_key)
    merged: list[IntervalE] = []
    cur = items[0]
    for nxt in items[1:]:
        if cur._merges_with(nxt):
            if nxt.hi > cur.hi:
                cur = IntervalE(cur.lo, nxt.hi, cur.lo_closed, nxt.hi_closed)
            elif nxt.hi == cur.hi and nxt.hi_closed and not cur.hi_closed:
                cur = IntervalE(cur.lo, cur.hi, cur.lo_closed, True)
        else:
            merged.append(cur)
            cur = nxt
    merged.append(cur)
    return IntervalSet(tuple(merged))


def test_common_point(family: Sequence[IntervalE], x) -> bool:
    """True iff ``x`` lies in every member of the family."""
    return all(x in iv for iv in family)


def test_pairwise(family: Sequence[IntervalE]) -> bool:
    """True iff every two members intersect."""
    n = len(family)
    return all(family[i].intersects(family[j]) for i in range(n) for j in range(i + 1, n))


def test_bridge(family: Sequence[IntervalE], j: IntervalE) -> bool:
    """True iff the bridge ``j`` meets every member.

    Requires j to be a subset of the family's union (the hypothesis under
    which "every member meets j" forces the union to be one interval).
    """
    if not union(family).covers(j):
        raise DomainError("bridge_not_subset", "bridge interval is not contained in the family union")
    return all(iv.intersects(j) for iv in family)


def test_connected(family: Sequence[IntervalE]) -> bool:
    """Chain connectivity of the pairwise-intersection graph (finite families)."""
    n = len(family)
    if n <= 1:
        return True
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        i = stack.pop()
        for k in range(n):
            if not seen[k] and family[i].intersects(family[k]):
                seen[k] = True
                stack.append(k)
    return all(seen)
