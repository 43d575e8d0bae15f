"""Deterministic local hidden variable models for the GHZ observables.

Each model fixes a sign for ``X`` and ``Y`` on every qubit. The logical
inequality is affine in the response probabilities, so its minimum over
all (stochastic) models is reached at one of these 64 deterministic
assignments and enumerating them gives the classical bound.

Encoding: an integer ``0..63`` whose bits, from most significant down, are
``(v1x, v1y, v2x, v2y, v3x, v3y)``; a zero bit means ``+1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple

SIGN_NAMES = ("v1x", "v1y", "v2x", "v2y", "v3x", "v3y")


@dataclass(frozen=True)
class LhvAssignment:
    v: Tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.v) != 6 or any(x not in (1, -1) for x in self.v):
            raise ValueError(f"an assignment needs six +/-1 values, got {self.v}")

    @classmethod
    def from_code(cls, code: int) -> "LhvAssignment":
        if not 0 <= code < 64:
            raise ValueError(f"assignment code must be in 0..63, got {code}")
        return cls(tuple(-1 if (code >> (5 - k)) & 1 else 1 for k in range(6)))

    @property
    def code(self) -> int:
        return sum(1 << (5 - k) for k, x in enumerate(self.v) if x == -1)


def condition_products(a: LhvAssignment) -> Tuple[int, int, int, int]:
    v1x, v1y, v2x, v2y, v3x, v3y = a.v
    return (v1x * v2x * v3x, v1y * v2x * v3y, v1y * v2y * v3x, v1x * v2y * v3y)


def satisfied_conditions(a: LhvAssignment) -> int:
    """How many of ``XXX = +1, YXY = -1, YYX = -1, XYY = -1`` hold."""
    targets = (1, -1, -1, -1)
    return sum(p == t for p, t in zip(condition_products(a), targets))


@dataclass(frozen=True)
class LhvReport:
    max_satisfied: int
    histogram: Dict[int, int] = field(default_factory=dict)
    classical_min_inequality_value: int = 0

    def to_dict(self) -> dict:
        return {
            "max_satisfied": self.max_satisfied,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "classical_min_inequality_value": self.classical_min_inequality_value,
        }


def enumerate_all() -> LhvReport:
    counts = Counter(satisfied_conditions(LhvAssignment.from_code(c)) for c in range(64))
    best = max(counts)
    return LhvReport(best, dict(sorted(counts.items())), 3 - best)
