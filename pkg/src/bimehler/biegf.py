"""Truncated bivariate exponential generating functions.

A :class:`BiSeries` stores the *labelled* coefficients ``A[m][n]`` of

    f(t, s) = sum_{m <= max_m, n <= max_n} A[m][n] * t^m * s^n / (m! n!)

where ``t`` marks men and ``s`` marks women. Multiplication is the binomial
convolution of labelled structures, so products, powers, ``exp`` and the
geometric and logarithmic sums below all act on labelled counts directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, List, Sequence, Tuple

from .algebra import ONE, ZERO, Coeff, WeightPoly

__all__ = [
    "BiSeries",
    "BoundMismatchError",
    "ConstantTermError",
    "IntegralityError",
    "bs_zero",
    "bs_one",
    "bs_term",
    "bs_add",
    "bs_mul",
    "bs_exp",
    "bs_inv_one_minus",
    "bs_log_inv_one_minus",
    "bs_coeff",
    "bs_eq",
]


class BoundMismatchError(ValueError):
    pass


class ConstantTermError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """A result that must be an integer weight enumerator came out fractional."""


@lru_cache(maxsize=None)
def _binomial_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    # Pascal rows 0..n
    return tuple(tuple(comb(r, k) for k in range(r + 1)) for r in range(n + 1))


class BiSeries:
    """Dense table of labelled coefficients, truncated at ``t^max_m s^max_n``.

    Instances are immutable; all arithmetic returns new series. Two series can
    only be combined when their truncation bounds agree.
    """

    __slots__ = ("max_m", "max_n", "_rows")

    def __init__(self, max_m: int, max_n: int, rows: Sequence[Sequence[WeightPoly]] | None = None):
        if max_m < 0 or max_n < 0:
            raise ValueError("truncation bounds must be nonnegative")
        self.max_m = max_m
        self.max_n = max_n
        if rows is None:
            self._rows = tuple((ZERO,) * (max_n + 1) for _ in range(max_m + 1))
        else:
            if len(rows) != max_m + 1 or any(len(r) != max_n + 1 for r in rows):
                raise ValueError(f"coefficient table must be {max_m + 1}x{max_n + 1}")
            self._rows = tuple(tuple(r) for r in rows)

    @classmethod
    def from_function(cls, max_m: int, max_n: int, fn: Callable[[int, int], WeightPoly]) -> "BiSeries":
        return cls(max_m, max_n, [[fn(m, n) for n in range(max_n + 1)] for m in range(max_m + 1)])

    @classmethod
    def from_cells(cls, max_m: int, max_n: int, cells) -> "BiSeries":
        """Build from a mapping ``(m, n) -> WeightPoly``; cells beyond the bounds are dropped."""
        rows = [[ZERO] * (max_n + 1) for _ in range(max_m + 1)]
        for (m, n), p in dict(cells).items():
            if m <= max_m and n <= max_n:
                rows[m][n] = rows[m][n] + p
        return cls(max_m, max_n, rows)

    @property
    def bounds(self) -> Tuple[int, int]:
        return self.max_m, self.max_n

    def coeff(self, m: int, n: int) -> WeightPoly:
        if not (0 <= m <= self.max_m and 0 <= n <= self.max_n):
            raise IndexError(f"cell ({m}, {n}) outside bounds ({self.max_m}, {self.max_n})")
        return self._rows[m][n]

    def ordinary_coeff(self, m: int, n: int) -> WeightPoly:
        """Coefficient of ``t^m s^n`` in the power series itself, i.e. ``A[m][n] / (m! n!)``."""
        return self.coeff(m, n).scale(Fraction(1, factorial(m) * factorial(n)))

    def cells(self) -> Iterator[Tuple[int, int, WeightPoly]]:
        for m, row in enumerate(self._rows):
            for n, p in enumerate(row):
                yield m, n, p

    def nonzero_cells(self) -> Iterator[Tuple[int, int, WeightPoly]]:
        return ((m, n, p) for m, n, p in self.cells() if p)

    def is_zero(self) -> bool:
        return not any(p for _, _, p in self.cells())

    def is_integral(self) -> bool:
        return all(p.is_integral() for _, _, p in self.cells())

    def truncate(self, max_m: int, max_n: int) -> "BiSeries":
        if max_m > self.max_m or max_n > self.max_n:
            raise BoundMismatchError("can only truncate to smaller bounds")
        return BiSeries(max_m, max_n, [row[: max_n + 1] for row in self._rows[: max_m + 1]])

    def map(self, fn: Callable[[WeightPoly], WeightPoly]) -> "BiSeries":
        return BiSeries(self.max_m, self.max_n, [[fn(p) for p in row] for row in self._rows])

    def _check(self, other: "BiSeries") -> None:
        if not isinstance(other, BiSeries):
            raise TypeError(f"expected BiSeries, got {type(other).__name__}")
        if self.bounds != other.bounds:
            raise BoundMismatchError(f"bounds differ: {self.bounds} vs {other.bounds}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.bounds == other.bounds and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.bounds, self._rows))

    def __repr__(self) -> str:
        inner = ", ".join(f"({m},{n}): {p}" for m, n, p in self.nonzero_cells())
        return f"BiSeries[{self.max_m}x{self.max_n}]{{{inner}}}"

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        return BiSeries(
            self.max_m,
            self.max_n,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)],
        )

    def __neg__(self) -> "BiSeries":
        return self.map(lambda p: -p)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def scale(self, c: Coeff) -> "BiSeries":
        return self.map(lambda p: p.scale(c))

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        """Labelled product: choose which men and women go to each factor."""
        self._check(other)
        M, N = self.max_m, self.max_n
        binom = _binomial_rows(max(M, N))
        a_cells = [(k, j, p) for k, j, p in self.nonzero_cells()]
        b_cells = [(k, j, p) for k, j, p in other.nonzero_cells()]
        out: List[List[WeightPoly]] = [[ZERO] * (N + 1) for _ in range(M + 1)]
        for k, j, pa in a_cells:
            for k2, j2, pb in b_cells:
                m, n = k + k2, j + j2
                if m > M or n > N:
                    continue
                w = binom[m][k] * binom[n][j]
                out[m][n] = out[m][n] + (pa * pb).scale(w)
        return BiSeries(M, N, out)

    def __pow__(self, k: int) -> "BiSeries":
        if k < 0:
            raise ValueError("negative power")
        result = bs_one(self.max_m, self.max_n)
        for _ in range(k):
            result = result * self
        return result

    def constant_term(self) -> WeightPoly:
        return self._rows[0][0]


def bs_zero(max_m: int, max_n: int) -> BiSeries:
    return BiSeries(max_m, max_n)


def bs_one(max_m: int, max_n: int) -> BiSeries:
    return bs_term(0, 0, ONE, max_m, max_n)


def bs_term(m: int, n: int, weight: WeightPoly, max_m: int, max_n: int) -> BiSeries:
    """Series whose only labelled coefficient is ``A[m][n] = weight`` (dropped if out of range)."""
    return BiSeries.from_cells(max_m, max_n, {(m, n): weight})


def bs_add(f: BiSeries, g: BiSeries) -> BiSeries:
    return f + g


def bs_mul(f: BiSeries, g: BiSeries) -> BiSeries:
    return f * g


def bs_coeff(f: BiSeries, m: int, n: int) -> WeightPoly:
    return f.coeff(m, n)


def bs_eq(f: BiSeries, g: BiSeries) -> bool:
    f._check(g)
    return f == g


def _require_no_constant(f: BiSeries, what: str) -> None:
    if f.constant_term():
        raise ConstantTermError(f"{what} needs a series with zero constant term, got {f.constant_term()}")


def _power_terms(u: BiSeries) -> Iterator[Tuple[int, BiSeries]]:
    """Yield ``(k, u^k)`` for ``k >= 1`` until the powers vanish under truncation.

    Since ``u`` has no constant term, ``u^k`` has total degree at least ``k``,
    so at most ``max_m + max_n`` powers are nonzero.
    """
    power = u
    for k in range(1, u.max_m + u.max_n + 1):
        if power.is_zero():
            return
        yield k, power
        power = power * u


def bs_exp(f: BiSeries) -> BiSeries:
    """``sum_k f^k / k!``: the labelled count of unordered collections of ``f``-structures."""
    _require_no_constant(f, "exp")
    result = bs_one(f.max_m, f.max_n)
    term = result
    for k in range(1, f.max_m + f.max_n + 1):
        term = (term * f).scale(Fraction(1, k))
        if term.is_zero():
            break
        result = result + term
    return result


def bs_inv_one_minus(u: BiSeries) -> BiSeries:
    """Truncated geometric series ``1 + u + u^2 + ... = (1 - u)^-1``."""
    _require_no_constant(u, "1/(1 - u)")
    result = bs_one(u.max_m, u.max_n)
    for _, power in _power_terms(u):
        result = result + power
    return result


def bs_log_inv_one_minus(u: BiSeries) -> BiSeries:
    """Truncated ``-log(1 - u) = sum_{k>=1} u^k / k`` (labelled count of cycles of ``u``-structures).

    Raises :class:`IntegralityError` if ``u`` is integral but the result is not.
    """
    _require_no_constant(u, "-log(1 - u)")
    result = bs_zero(u.max_m, u.max_n)
    for k, power in _power_terms(u):
        result = result + power.scale(Fraction(1, k))
    if u.is_integral() and not result.is_integral():
        bad = next((m, n, p) for m, n, p in result.cells() if not p.is_integral())
        raise IntegralityError(f"-log(1 - u) has non-integer coefficient {bad[2]} at {bad[:2]}")
    return result
