"""Straight Hermite polynomials ``H_{m,n}(x)`` and their two-weight products."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .algebra import X, WeightPoly
from .biegf import BiSeries, IntegralityError, bs_exp, bs_term

__all__ = ["hermite_poly", "hermite_biegf", "hermite_pair_poly", "hermite_generator"]


@lru_cache(maxsize=None)
def hermite_poly(m: int, n: int) -> WeightPoly:
    """Weight enumerator of partial matchings between ``m`` men and ``n`` women.

    ``sum_k C(m, k) C(n, k) k! x^k``: pick the ``k`` married men and women,
    then pair them up.
    """
    if m < 0 or n < 0:
        raise ValueError(f"sizes must be nonnegative, got ({m}, {n})")
    return WeightPoly({(k, 0): comb(m, k) * comb(n, k) * factorial(k) for k in range(min(m, n) + 1)})


def hermite_generator(max_m: int, max_n: int) -> BiSeries:
    """``t + s + x t s``: a lone man, a lone woman, or a married couple."""
    return (
        bs_term(1, 0, WeightPoly.constant(1), max_m, max_n)
        + bs_term(0, 1, WeightPoly.constant(1), max_m, max_n)
        + bs_term(1, 1, X, max_m, max_n)
    )


def hermite_biegf(max_m: int, max_n: int) -> BiSeries:
    """``exp(t + s + x t s)`` built with the series engine (not from the closed formula)."""
    series = bs_exp(hermite_generator(max_m, max_n))
    if not series.is_integral():
        raise IntegralityError("Hermite generating function produced a fractional coefficient")
    return series


@lru_cache(maxsize=None)
def hermite_pair_poly(m: int, n: int) -> WeightPoly:
    """``H_{m,n}(x) * H_{m,n}(y)``: marriages and affairs chosen independently."""
    h = hermite_poly(m, n)
    return h * h.swap_xy()

