"""Upper reals: values known only through effort-indexed rational upper bounds.

An ``UpperReal`` denotes the infimum of its bound sequence.  Queries are
semi-decisions: ``less_than`` can answer Yes (definitive) or NotYet, and Yes
answers are monotone in effort.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction
from typing import Callable

from .numbers import INF, Bound, bmin, bmax, is_inf


class Query(enum.Enum):
    YES = "yes"
    NOT_YET = "not-yet"

    @property
    def is_yes(self) -> bool:
        return self is Query.YES

    @property
    def label(self) -> str:
        return "Yes" if self is Query.YES else "NotYet"


class UpperReal:
    """A point of the one-sided line of upper bounds.

    ``bound_fn`` maps effort (a natural number) to a rational-or-INF upper
    bound.  Monotonicity is enforced internally: the effective bound at
    effort e is the minimum of the raw bounds at efforts 0..e, so Yes
    answers can never be retracted at higher effort.
    """

    __slots__ = ("_fn", "_best", "_lock")

    def __init__(self, bound_fn: Callable[[int], Bound]):
        self._fn = bound_fn
        self._best: list[Bound] = []
        self._lock = threading.Lock()

    def bound(self, effort: int) -> Bound:
        if effort < 0:
            raise ValueError("effort must be >= 0")
        with self._lock:
            while len(self._best) <= effort:
                e = len(self._best)
                raw = self._fn(e)
                if e == 0:
                    self._best.append(raw)
                else:
                    self._best.append(bmin(self._best[-1], raw))
            return self._best[effort]

    def less_than(self, q: Fraction, effort: int) -> Query:
        """Semi-decide "value < q" for positive rational q."""
        if q <= 0:
            raise ValueError("threshold must be a positive rational")
        if self.bound(effort) < q:
            return Query.YES
        return Query.NOT_YET

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of_rational(q: Fraction) -> "UpperReal":
        if q < 0:
            raise ValueError("upper real of a negative rational")
        return UpperReal(lambda _e: q)

    @staticmethod
    def infinite() -> "UpperReal":
        return UpperReal(lambda _e: INF)

    # -- arithmetic (bound-wise, INF absorbing) ----------------------------

    def add(self, other: "UpperReal") -> "UpperReal":
        return UpperReal(lambda e: self.bound(e) + other.bound(e))

    def max_with(self, other: "UpperReal") -> "UpperReal":
        return UpperReal(lambda e: bmax(self.bound(e), other.bound(e)))

    def scale(self, c: Fraction) -> "UpperReal":
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return UpperReal(lambda e: INF if is_inf(self.bound(e)) else c * self.bound(e))

    def __repr__(self):
        return f"UpperReal(bound0={self.bound(0)!r})"
