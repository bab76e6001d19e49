"""Quotients of nested squarefree monomial ideals, encoded as bitmasks.

A squarefree monomial in n variables is a subset of {1..n} stored as an
n-bit mask (bit i-1 set means x_i divides it; mask 0 is the constant
monomial 1).  An ideal is its set of minimal generator masks; membership is
a subset test against some generator.  The empty generator set is the zero
ideal, the single mask 0 generates the whole ring.

The degree-k count vector alpha of the monomials lying in the outer ideal
but not the inner one is the Hilbert function of a finite module, and the
depth computed directly from alpha (scanning d in [0, n]) agrees with the
depth of that function; ``check_qdepth_match`` exercises the equivalence.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .depth import BetaTable, QDepthResult, qdepth
from .errors import (
    GenerationFailedError,
    InvalidQuotientError,
    ParseError,
    TooManyVariablesError,
)
from .series import HilbertFunction, from_table

DEFAULT_VARIABLE_CAP = 20
HARD_VARIABLE_CAP = 28

_VARIABLE_RE = re.compile(r"x([0-9]+)")


def minimalize(masks: Iterable[int]) -> frozenset[int]:
    """Drop every mask that strictly contains another; order independent."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (bin(m).count("1"), m)):
        if not any(g & m == g for g in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SquarefreeIdeal:
    n: int
    generators: frozenset[int]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> SquarefreeIdeal:
        mask_list = list(masks)
        limit = 1 << n
        for m in mask_list:
            if not 0 <= m < limit:
                raise ValueError(f"mask {m} uses variables beyond x{n}")
        return cls(n, minimalize(mask_list))

    @classmethod
    def zero(cls, n: int) -> SquarefreeIdeal:
        return cls(n, frozenset())

    @classmethod
    def unit(cls, n: int) -> SquarefreeIdeal:
        return cls(n, frozenset({0}))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == frozenset({0})

    def contains(self, mask: int) -> bool:
        """Monomial membership: some generator divides the mask."""
        return any(g & mask == g for g in self.generators)


@dataclass(frozen=True)
class SquarefreeQuotient:
    """Nested pair lower subset-of upper with at least one squarefree
    monomial in upper but not lower."""

    n: int
    upper: SquarefreeIdeal
    lower: SquarefreeIdeal

    def __post_init__(self):
        if self.upper.n != self.n or self.lower.n != self.n:
            raise InvalidQuotientError("ideals live in different variable counts")
        if self.upper.is_zero:
            raise InvalidQuotientError("outer ideal is zero")
        for g in self.lower.generators:
            if not self.upper.contains(g):
                raise InvalidQuotientError(
                    f"inner generator {format_monomial(g)} is not in the outer ideal"
                )
        if all(self.lower.contains(g) for g in self.upper.generators):
            raise InvalidQuotientError("the two ideals are equal")


def _resolve_cap(n: int, max_vars: int | None) -> None:
    cap = DEFAULT_VARIABLE_CAP if max_vars is None else min(max_vars, HARD_VARIABLE_CAP)
    if n > cap:
        raise TooManyVariablesError(
            f"n={n} exceeds the enumeration cap {cap} (hard ceiling {HARD_VARIABLE_CAP})"
        )


def alpha_vector(q: SquarefreeQuotient, max_vars: int | None = None) -> list[int]:
    """Count, per degree, the squarefree monomials in upper minus lower.

    Full 2^n enumeration; entry k counts the masks of popcount k.
    """
    _resolve_cap(q.n, max_vars)
    alpha = [0] * (q.n + 1)
    for mask in range(1 << q.n):
        if q.upper.contains(mask) and not q.lower.contains(mask):
            alpha[bin(mask).count("1")] += 1
    return alpha


def m_module(q: SquarefreeQuotient, max_vars: int | None = None) -> HilbertFunction:
    """The finite Hilbert function whose table is the alpha vector."""
    alpha = alpha_vector(q, max_vars)
    return from_table({k: a for k, a in enumerate(alpha) if a})


def _beta_from_alpha(alpha: list[int], d: int, k: int) -> int:
    n = len(alpha) - 1
    return sum(
        (-1) ** (k - j) * comb(d - j, k - j) * alpha[j]
        for j in range(min(k, n) + 1)
    )


def qdepth_from_alpha(alpha: list[int]) -> QDepthResult:
    """Depth of a degree-count vector, scanning d in [0, n].

    Independent of the Hilbert-function route: the transform is summed from
    j = 0, so certificate tables start at k = 0 and may carry leading zeros.
    """
    n = len(alpha) - 1
    best = 0
    for d in range(n + 1):
        if all(_beta_from_alpha(alpha, d, k) >= 0 for k in range(d + 1)):
            best = d
    certificate = BetaTable(
        best, 0, tuple(_beta_from_alpha(alpha, best, k) for k in range(best + 1))
    )
    k0 = next(k for k, a in enumerate(alpha) if a)
    h1 = alpha[k0 + 1] if k0 + 1 <= n else 0
    low, high = k0, k0 + h1 // alpha[k0]
    refutation = None
    if best < high:
        for k in range(best + 2):
            b = _beta_from_alpha(alpha, best + 1, k)
            if b < 0:
                refutation = (best + 1, k, b)
                break
    return QDepthResult(best, certificate, low, high, refutation)


def qdepth_quotient(q: SquarefreeQuotient, max_vars: int | None = None) -> QDepthResult:
    """Depth of the quotient straight from its alpha vector."""
    return qdepth_from_alpha(alpha_vector(q, max_vars))


def check_qdepth_match(q: SquarefreeQuotient, max_vars: int | None = None) -> bool:
    """The alpha-vector depth against the depth of its Hilbert function."""
    return qdepth_quotient(q, max_vars).qdepth == qdepth(m_module(q, max_vars)).qdepth


def random_quotient(
    n: int, seed: int, gen_count_upper: int, gen_count_lower: int
) -> SquarefreeQuotient:
    """Deterministic-from-seed valid quotient.

    Samples nonconstant generator masks for the outer ideal, then forces
    each sampled inner generator into it by multiplying with an outer
    generator when needed.  Degenerate draws (equal ideals) are retried a
    bounded number of times.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    for _ in range(200):
        upper_masks = [rng.randrange(1, 1 << n) for _ in range(gen_count_upper)]
        if not upper_masks:
            break
        upper = SquarefreeIdeal.from_masks(n, upper_masks)
        ordered = sorted(upper.generators)
        lower_masks = []
        for _ in range(gen_count_lower):
            g = rng.randrange(1, 1 << n)
            if not upper.contains(g):
                g |= rng.choice(ordered)
            lower_masks.append(g)
        lower = SquarefreeIdeal.from_masks(n, lower_masks)
        if all(lower.contains(g) for g in upper.generators):
            continue
        return SquarefreeQuotient(n, upper, lower)
    raise GenerationFailedError(
        f"no valid quotient for n={n}, seed={seed}, "
        f"generators {gen_count_upper}/{gen_count_lower}"
    )


def parse_ideal(text: str, n: int) -> SquarefreeIdeal:
    """Parse "x1*x3, x2" style generator lists; "0" is the zero ideal and
    "1" the whole ring."""
    stripped = text.strip()
    if stripped == "0":
        return SquarefreeIdeal.zero(n)
    if stripped == "1":
        return SquarefreeIdeal.unit(n)
    if not stripped:
        raise ParseError("empty ideal description", 0, ("generator", '"0"', '"1"'))
    masks = []
    offset = 0
    for chunk in text.split(","):
        term = chunk.strip()
        term_pos = offset + chunk.index(term) if term else offset
        if not term:
            raise ParseError("empty generator", term_pos, ("monomial",))
        mask = 0
        var_pos = term_pos
        for factor in term.split("*"):
            name = factor.strip()
            match = _VARIABLE_RE.fullmatch(name)
            if not match:
                raise ParseError(f"bad variable {name!r}", var_pos, ("x<index>",))
            index = int(match.group(1))
            if not 1 <= index <= n:
                raise ParseError(
                    f"variable x{index} outside x1..x{n}", var_pos, ()
                )
            bit = 1 << (index - 1)
            if mask & bit:
                raise ParseError(
                    f"repeated variable x{index} (not squarefree)", var_pos, ()
                )
            mask |= bit
            var_pos += len(factor) + 1
        masks.append(mask)
        offset += len(chunk) + 1
    return SquarefreeIdeal.from_masks(n, masks)


def format_monomial(mask: int) -> str:
    if mask == 0:
        return "1"
    names = [f"x{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1]
    return "*".join(names)


def format_ideal(ideal: SquarefreeIdeal) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(m) for m in sorted(ideal.generators))
