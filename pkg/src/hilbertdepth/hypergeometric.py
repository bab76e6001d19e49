"""Terminating Gauss sums and the derivative-coefficient table, all exact.

``gauss_2f1(k, n)`` evaluates the Gauss series with parameters
(-k, n, -n) at argument -1.  The first parameter is a nonpositive integer,
so the series terminates after k + 1 terms and the value is an exact
rational; for k <= n the lower parameter never hits a pole.

``big_e(n, k)`` is the integer alternating sum

    sum_{j=0..k} (-1)^(k - j) C(k, j) (n)_j (n - k + 1)_(k - j)

which equals (-1)^k (n - k + 1)_k gauss_2f1(k, n) and is strictly positive
for 2 <= k <= n.

``coeff_table(n, kmax, jmax)`` holds c(k, j), the j-th derivative at 0 of
(1 - x)^(k - 1) / (1 - x^2)^n.  Row k = 1 comes from the even power series
of (1 - x^2)^(-n); later rows follow the recurrence
c(k, j) = c(k - 1, j) - j c(k - 1, j - 1).  The alternating signs of these
integers, (-1)^j c(k, j) > 0 for k >= 2, certify the positivity of big_e
through big_e(n, k) = (-1)^k c(k, k).

The check_* batteries verify these statements over exhaustive desk-scale
ranges and report violations instead of raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, factorial, pochhammer
from .depth import beta
from .errors import InvalidArityError, OutOfRangeError
from .report import VerificationReport, Violation
from .series import polynomial_ring


def gauss_2f1(k: int, n: int) -> Fraction:
    """Exact value of the terminating Gauss sum at (-k, n, -n; -1)."""
    if n < 1:
        raise OutOfRangeError(f"need n >= 1, got {n}")
    if not 0 <= k <= n:
        raise OutOfRangeError(f"need 0 <= k <= n, got k={k}, n={n}")
    total = Fraction(0)
    term = Fraction(1)
    for j in range(k + 1):
        total += term
        if j < k:
            # (-n + j) is the next lower-parameter factor; j < k <= n keeps
            # it strictly negative, never zero.
            assert -n + j != 0
            term *= Fraction((-k + j) * (n + j) * (-1), (-n + j) * (j + 1))
    return total


def big_e(n: int, k: int) -> int:
    """Alternating binomial sum of rising factorials; positive on its domain."""
    if not 2 <= k <= n:
        raise OutOfRangeError(f"need 2 <= k <= n, got k={k}, n={n}")
    total = 0
    for j in range(k + 1):
        total += (
            (-1) ** (k - j)
            * binomial(k, j)
            * pochhammer(n, j)
            * pochhammer(n - k + 1, k - j)
        )
    return total


@dataclass(frozen=True)
class CoeffTable:
    """Derivative values c(k, j) for 1 <= k <= kmax, 0 <= j <= jmax."""

    n: int
    kmax: int
    jmax: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, k: int, j: int) -> int:
        if not (1 <= k <= self.kmax and 0 <= j <= self.jmax):
            raise OutOfRangeError(f"(k={k}, j={j}) outside table")
        return self.rows[k - 1][j]


def coeff_table(n: int, kmax: int, jmax: int) -> CoeffTable:
    """Build the derivative table by recurrence from the even series row."""
    if n < 1 or kmax < 1 or jmax < 0:
        raise InvalidArityError(
            f"need n >= 1, kmax >= 1, jmax >= 0; got n={n}, kmax={kmax}, jmax={jmax}"
        )
    row1 = tuple(
        0 if j % 2 else binomial(n + j // 2 - 1, j // 2) * factorial(j)
        for j in range(jmax + 1)
    )
    rows = [row1]
    for _ in range(2, kmax + 1):
        prev = rows[-1]
        rows.append(
            tuple(
                prev[j] - j * prev[j - 1] if j else 1 for j in range(jmax + 1)
            )
        )
    return CoeffTable(n, kmax, jmax, tuple(rows))


def geometric_square_series(n: int, order: int) -> list[int]:
    """Coefficients of (1 - x^2)^(-n) up to x^order by repeated convolution.

    Independent of the binomial closed form; used as the ground truth for
    row 1 of the coefficient table.
    """
    base = [1 if i % 2 == 0 else 0 for i in range(order + 1)]
    result = [1] + [0] * order
    for _ in range(n):
        result = [
            sum(result[i] * base[d - i] for i in range(d + 1))
            for d in range(order + 1)
        ]
    return result


def check_sign_positivity(nmax: int) -> VerificationReport:
    """Signs of the terminating Gauss values, big_e, and the c-table.

    For every n up to nmax: the k = 0 and k = 1 Gauss values are exactly 1
    and 0; for 2 <= k <= n, (-1)^k gauss_2f1(k, n) > 0 and big_e(n, k) > 0;
    and (-1)^j c(k, j) > 0 throughout rows k >= 2 of the table.
    """
    start = time.perf_counter()
    violations: list[Violation] = []
    cases = 0
    for n in range(1, nmax + 1):
        cases += 1
        if gauss_2f1(0, n) != 1:
            violations.append(Violation(f"n={n} k=0", "1", str(gauss_2f1(0, n))))
        if n >= 1 and gauss_2f1(1, n) != 0:
            violations.append(Violation(f"n={n} k=1", "0", str(gauss_2f1(1, n))))
        if n < 2:
            continue
        table = coeff_table(n, n, n)
        for k in range(2, n + 1):
            cases += 1
            value = (-1) ** k * gauss_2f1(k, n)
            if value <= 0:
                violations.append(
                    Violation(f"n={n} k={k} gauss sign", "> 0", str(value))
                )
            e = big_e(n, k)
            if e <= 0:
                violations.append(Violation(f"n={n} k={k} big_e", "> 0", str(e)))
            for j in range(n + 1):
                signed = (-1) ** j * table.value(k, j)
                if signed <= 0:
                    violations.append(
                        Violation(f"n={n} k={k} j={j} c sign", "> 0", str(signed))
                    )
    return VerificationReport(
        "signs", cases, violations, time.perf_counter() - start
    )


def check_beta_identity(nmax: int) -> VerificationReport:
    """beta(n, k) of the n-variable ring against the closed Gauss form.

    Exact rational equality of beta(polynomial_ring(n), n, k) and
    (-1)^k C(n, k) gauss_2f1(k, n) for all 0 <= k <= n <= nmax.
    """
    start = time.perf_counter()
    violations: list[Violation] = []
    cases = 0
    for n in range(1, nmax + 1):
        ring = polynomial_ring(n)
        for k in range(n + 1):
            cases += 1
            lhs = Fraction(beta(ring, n, k))
            rhs = (-1) ** k * binomial(n, k) * gauss_2f1(k, n)
            if lhs != rhs:
                violations.append(Violation(f"n={n} k={k}", str(rhs), str(lhs)))
    return VerificationReport(
        "beta-identity", cases, violations, time.perf_counter() - start
    )


def check_derivative_link(nmax: int) -> VerificationReport:
    """big_e(n, k) against the table diagonal, and row 1 against the series.

    Checks big_e(n, k) == (-1)^k c(k, k) for 2 <= k <= n <= nmax, and that
    row 1 of each table matches j! times the convolution-built series of
    (1 - x^2)^(-n).
    """
    start = time.perf_counter()
    violations: list[Violation] = []
    cases = 0
    for n in range(2, nmax + 1):
        table = coeff_table(n, n, n)
        series = geometric_square_series(n, n)
        for j in range(n + 1):
            cases += 1
            expected = factorial(j) * series[j]
            if table.value(1, j) != expected:
                violations.append(
                    Violation(f"n={n} row1 j={j}", str(expected), str(table.value(1, j)))
                )
        for k in range(2, n + 1):
            cases += 1
            lhs = big_e(n, k)
            rhs = (-1) ** k * table.value(k, k)
            if lhs != rhs:
                violations.append(Violation(f"n={n} k={k}", str(rhs), str(lhs)))
    return VerificationReport(
        "e-link", cases, violations, time.perf_counter() - start
    )
