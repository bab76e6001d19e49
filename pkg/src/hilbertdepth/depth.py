"""Hilbert depth of a numerical function, with machine-checkable certificates.

For a candidate depth d the transform

    beta(d, k) = sum_{j = k0..k} (-1)^(k - j) C(d - j, k - j) h(j)

inverts to h (see ``reconstruct``), and d is feasible when every entry with
k0 <= k <= d is nonnegative.  The Hilbert depth is the largest feasible d;
it always lies in the window [k0, k0 + floor(h1/h0)] where h0, h1 are the
first two values of h, so the search scans that window exhaustively and
keeps the maximum.  No monotonicity of the feasible set is assumed;
``feasible_depths`` exposes the full set for inspection.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb

from .errors import OutOfRangeError
from .series import HilbertFunction

# Fault-injection hook for end-to-end tests of the violation path: when this
# environment variable is set (nonempty), every beta value with k == d > k0
# is negated, which makes the verification batteries report violations.
FLIP_BETA_ENV = "HILBERTDEPTH_FLIP_BETA"


@dataclass(frozen=True)
class BetaTable:
    """All beta values for one candidate depth d, from start_k up to d."""

    d: int
    start_k: int
    values: tuple[int, ...]

    def value(self, k: int) -> int:
        if not self.start_k <= k <= self.d:
            raise OutOfRangeError(
                f"k={k} outside table range [{self.start_k}, {self.d}]"
            )
        return self.values[k - self.start_k]

    def to_json_dict(self) -> dict:
        return {
            "d": str(self.d),
            "startK": str(self.start_k),
            "values": [str(v) for v in self.values],
        }


@dataclass(frozen=True)
class QDepthResult:
    """Computed depth plus the evidence: a nonnegative certificate table at
    the depth itself, the search bounds, and (when the depth is below the
    upper bound) one negative entry at depth + 1."""

    qdepth: int
    certificate: BetaTable
    lower_bound: int
    upper_bound: int
    refutation: tuple[int, int, int] | None  # (d, k, beta) with beta < 0

    def to_json_dict(self) -> dict:
        refut = None
        if self.refutation is not None:
            d, k, b = self.refutation
            refut = {"d": str(d), "k": str(k), "beta": str(b)}
        return {
            "qdepth": str(self.qdepth),
            "lowerBound": str(self.lower_bound),
            "upperBound": str(self.upper_bound),
            "certificate": self.certificate.to_json_dict(),
            "refutation": refut,
        }


def _flip_active() -> bool:
    return bool(os.environ.get(FLIP_BETA_ENV))


def _beta_value(evals: list[int], k0: int, d: int, k: int) -> int:
    """beta(d, k) from cached values evals[j - k0] = h(j)."""
    total = 0
    sign = 1
    for j in range(k, k0 - 1, -1):
        total += sign * comb(d - j, k - j) * evals[j - k0]
        sign = -sign
    if _flip_active() and k == d > k0:
        total = -total
    return total


def _window_evaluations(h: HilbertFunction, top: int) -> list[int]:
    k0 = h.k0
    return [h.evaluate(j) for j in range(k0, top + 1)]


def _first_violation(evals: list[int], k0: int, d: int) -> tuple[int, int] | None:
    """Smallest k with a negative beta at depth d, or None if d is feasible."""
    for k in range(k0, d + 1):
        b = _beta_value(evals, k0, d, k)
        if b < 0:
            return k, b
    return None


def beta(h: HilbertFunction, d: int, k: int) -> int:
    """Single transform entry; requires k0(h) <= k <= d."""
    k0 = h.k0
    if k < k0 or k > d:
        raise OutOfRangeError(f"k={k} outside [{k0}, {d}]")
    evals = _window_evaluations(h, k)
    return _beta_value(evals, k0, d, k)


def beta_table(h: HilbertFunction, d: int) -> BetaTable:
    """All entries beta(d, k) for k0(h) <= k <= d."""
    k0 = h.k0
    if d < k0:
        raise OutOfRangeError(f"d={d} is below k0={k0}")
    evals = _window_evaluations(h, d)
    values = tuple(_beta_value(evals, k0, d, k) for k in range(k0, d + 1))
    return BetaTable(d, k0, values)


def reconstruct(table: BetaTable, k: int) -> int:
    """Invert the transform: sum_j C(d - j, k - j) beta(d, j) recovers h(k)."""
    if not table.start_k <= k <= table.d:
        raise OutOfRangeError(
            f"k={k} outside table range [{table.start_k}, {table.d}]"
        )
    return sum(
        comb(table.d - j, k - j) * table.values[j - table.start_k]
        for j in range(table.start_k, k + 1)
    )


def bounds(h: HilbertFunction) -> tuple[int, int]:
    """Inclusive search window [k0, k0 + floor(h1/h0)] for the depth."""
    k0 = h.k0
    h0 = h.evaluate(k0)
    h1 = h.evaluate(k0 + 1)
    return k0, k0 + h1 // h0


def feasible_depths(h: HilbertFunction) -> list[int]:
    """Every d in the search window whose full beta row is nonnegative.

    Diagnostic view of the feasible set; ``qdepth`` returns its maximum.
    """
    low, high = bounds(h)
    evals = _window_evaluations(h, high)
    return [d for d in range(low, high + 1) if _first_violation(evals, low, d) is None]


def qdepth(h: HilbertFunction) -> QDepthResult:
    """Largest d whose beta row is nonnegative, with certificate.

    Every candidate in the window is tested; d = k0 is always feasible
    because beta(k0, k0) = h(k0) > 0, so the maximum exists.
    """
    low, high = bounds(h)
    evals = _window_evaluations(h, high)
    best = low
    for d in range(low, high + 1):
        if _first_violation(evals, low, d) is None:
            best = max(best, d)
    certificate = BetaTable(
        best, low, tuple(_beta_value(evals, low, best, k) for k in range(low, best + 1))
    )
    refutation = None
    if best < high:
        k, b = _first_violation(evals, low, best + 1)
        refutation = (best + 1, k, b)
    return QDepthResult(best, certificate, low, high, refutation)
