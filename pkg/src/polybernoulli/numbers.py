"""Stirling numbers and poly-Bernoulli numbers in closed form.

The n-th poly-Bernoulli number with integer upper index k is the normalized
coefficient ``n! [t^n]`` of ``Li_k(1 - e^{-t}) / (1 - e^{-t})``.  Here the
values come from the finite closed form over Stirling numbers of the second
kind, which works uniformly for every integer k; the series constructors in
:mod:`polybernoulli.series` serve as the independent cross-check.

Sign conventions.  The k = 1 column of ``poly_bernoulli`` expands
``t e^t / (e^t - 1)`` and therefore has value +1/2 at n = 1, while
``classical_bernoulli`` follows the ``t / (e^t - 1)`` convention with -1/2
at n = 1.  Even indices agree, odd indices from 3 on vanish, and nothing in
this package converts silently between the two: pick the function you mean.

A :class:`PolyBernoulliCache` owns the Stirling triangle and the memoized
values.  Rows grow lazily up to a configurable cap (default 64) so runaway
requests fail loudly instead of eating memory; inserts are idempotent, so
sharing the default cache across threads is safe.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact import MultiPoly, X

__all__ = [
    "PolyBernoulliCache",
    "DEFAULT_CACHE",
    "stirling2",
    "stirling2_explicit",
    "poly_bernoulli",
    "poly_bernoulli_negative",
    "poly_bernoulli_poly",
    "classical_bernoulli",
]

_F0 = Fraction(0)


class PolyBernoulliCache:
    """Lazily grown Stirling triangle plus memoized poly-Bernoulli values."""

    def __init__(self, n_cap: int = 64):
        if not isinstance(n_cap, int) or n_cap < 0:
            raise ValueError(f"n_cap must be a non-negative integer, got {n_cap!r}")
        self._n_cap = n_cap
        self._rows: list[list[int]] = [[1]]
        self._pb: dict[tuple[int, int], Fraction] = {}

    @property
    def n_cap(self) -> int:
        return self._n_cap

    def _ensure_rows(self, n: int) -> None:
        if n > self._n_cap:
            raise ValueError(
                f"n={n} exceeds the cache cap {self._n_cap}; "
                "construct PolyBernoulliCache(n_cap=...) for larger tables"
            )
        while len(self._rows) <= n:
            prev = self._rows[-1]
            r = len(self._rows)
            row = [0] * (r + 1)
            for m in range(1, r + 1):
                above = prev[m] if m < len(prev) else 0
                row[m] = m * above + prev[m - 1]
            self._rows.append(row)

    def stirling2(self, n: int, m: int) -> int:
        """Stirling number of the second kind (set partitions of n into m blocks)."""
        if n < 0 or m < 0:
            raise ValueError("Stirling indices must be non-negative")
        if m > n:
            return 0
        self._ensure_rows(n)
        return self._rows[n][m]

    def poly_bernoulli(self, n: int, k: int) -> Fraction:
        """Poly-Bernoulli number, any integer upper index k.

        Closed form: ``(-1)^n * sum_{m=1}^{n+1} (-1)^(m-1) (m-1)! S(n, m-1) / m^k``.
        """
        if n < 0:
            raise ValueError("the lower index must be non-negative")
        key = (n, k)
        cached = self._pb.get(key)
        if cached is not None:
            return cached
        self._ensure_rows(n)
        total = _F0
        for m in range(1, n + 2):
            s = self.stirling2(n, m - 1)
            if not s:
                continue
            term = Fraction((-1) ** (m - 1) * factorial(m - 1) * s) / Fraction(m) ** k
            total += term
        value = total if n % 2 == 0 else -total
        self._pb[key] = value
        return value


DEFAULT_CACHE = PolyBernoulliCache()


def _cache(cache: PolyBernoulliCache | None) -> PolyBernoulliCache:
    return DEFAULT_CACHE if cache is None else cache


def stirling2(n: int, m: int, cache: PolyBernoulliCache | None = None) -> int:
    return _cache(cache).stirling2(n, m)


def stirling2_explicit(n: int, m: int) -> int:
    """Same number by the alternating binomial sum (a cross-check, not cached).

    ``S(n, m) = (-1)^m / m! * sum_{l=0}^{m} (-1)^l C(m, l) l^n`` with the
    ``0^0 = 1`` convention at l = n = 0.
    """
    if n < 0 or m < 0:
        raise ValueError("Stirling indices must be non-negative")
    acc = 0
    for l in range(m + 1):
        acc += (-1) ** l * comb(m, l) * l**n
    value = Fraction((-1) ** m * acc, factorial(m))
    if value.denominator != 1:
        raise ArithmeticError("alternating sum did not produce an integer")
    return value.numerator


def poly_bernoulli(n: int, k: int, cache: PolyBernoulliCache | None = None) -> Fraction:
    return _cache(cache).poly_bernoulli(n, k)


def poly_bernoulli_negative(
    n: int, k: int, cache: PolyBernoulliCache | None = None
) -> int:
    """Poly-Bernoulli number with upper index -k, for k >= 0, as an integer.

    Uses the symmetric double-Stirling form
    ``sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1)``, which makes both the positivity
    and the (n, k) duality plain, and which counts the n x k lonesum 0/1
    matrices.  Must agree with ``poly_bernoulli(n, -k)``.
    """
    if n < 0 or k < 0:
        raise ValueError("both indices must be non-negative here")
    c = _cache(cache)
    total = 0
    for j in range(min(n, k) + 1):
        total += factorial(j) ** 2 * c.stirling2(n + 1, j + 1) * c.stirling2(k + 1, j + 1)
    return total


def poly_bernoulli_poly(
    n: int, k: int, cache: PolyBernoulliCache | None = None
) -> MultiPoly:
    """The degree-n poly-Bernoulli polynomial in X.

    Binomial convolution of the numbers with powers of X, i.e. the normalized
    ``t^n`` coefficient of the number series times ``e^{X t}``; at X = 0 it
    reduces to ``poly_bernoulli(n, k)``.
    """
    if n < 0:
        raise ValueError("the lower index must be non-negative")
    c = _cache(cache)
    acc = MultiPoly.constant(0)
    for j in range(n + 1):
        acc = acc + comb(n, j) * c.poly_bernoulli(j, k) * X ** (n - j)
    return acc


def classical_bernoulli(n: int, cache: PolyBernoulliCache | None = None) -> Fraction:
    """Bernoulli number in the B_1 = -1/2 convention (series ``t / (e^t - 1)``).

    Equal to ``(-1)^n poly_bernoulli(n, 1)``: the sign flip moves between the
    two standard conventions, and only n = 1 actually changes.
    """
    value = poly_bernoulli(n, 1, cache)
    return value if n % 2 == 0 else -value
