"""Truncated formal power series over exact integers.

A TruncatedSeries holds the coefficients c_0..c_D of a power series
mod z^(D+1).  Products of the shape prod_{n=1}^{D} (1 - z^n)^{e(n)} can be
expanded along two independent routes:

* expand_direct  -- multiply out each factor's binomial expansion; the
  slow, obviously-correct oracle.
* expand_recursive -- the log-derivative recursion
      n r(n) = - sum_{k=1}^{n} r(n-k) g(k),   g(k) = sum_{d|k} d e(d),
  which costs O(D^2) integer operations after an O(D log D) divisor sweep.

Both paths stay in exact integer arithmetic throughout; the recursion's
division by n is exact whenever the exponents are integers, and a nonzero
remainder is an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact integer coefficients c_0..c_D of a series mod z^(D+1)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("TruncatedSeries needs at least the constant term")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedSeries":
        """The constant series 1 truncated at the given degree."""
        if degree_bound < 0:
            raise ValueError(f"degree_bound must be >= 0, got {degree_bound}")
        return cls((1,) + (0,) * degree_bound)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings (they may exceed 64 bits)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: list[str]) -> "TruncatedSeries":
        return cls(tuple(int(c) for c in coeffs))


@dataclass(frozen=True)
class ExponentSpec:
    """Integer exponents e(1)..e(D) of the product prod (1 - z^n)^e(n).

    Any integers are allowed, including zero and negative.  When
    necklace_base is set, the spec claims e(n) = N(base, n); the recursive
    expander then asserts the divisor sums g(k) collapse to base**k, which
    is the Mobius-inversion identity for necklace counts.
    """

    exponents: tuple[int, ...]
    necklace_base: int | None = field(default=None)

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise ValueError("ExponentSpec needs at least e(1)")

    @property
    def degree_bound(self) -> int:
        return len(self.exponents)

    def exponent(self, n: int) -> int:
        """e(n) for 1 <= n <= degree_bound."""
        if not 1 <= n <= self.degree_bound:
            raise ValueError(f"n={n} outside spec range 1..{self.degree_bound}")
        return self.exponents[n - 1]


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Exact Cauchy product truncated at the shared degree bound."""
    if x.degree_bound != y.degree_bound:
        raise ValueError(
            f"degree bounds differ: {x.degree_bound} vs {y.degree_bound}"
        )
    D = x.degree_bound
    a, b = x.coeffs, y.coeffs
    out = [0] * (D + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(D + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(tuple(out))


def binomial_factor(n: int, e: int, degree_bound: int) -> TruncatedSeries:
    """(1 - z^n)^e mod z^(D+1) with exact integer coefficients.

    e >= 0 uses the binomial theorem; e < 0 uses the negative-binomial
    series (1-u)^(-m) = sum C(m-1+j, j) u^j, so coefficients stay integral.
    """
    D = degree_bound
    if not 1 <= n <= D:
        raise ValueError(f"factor degree n={n} must satisfy 1 <= n <= D={D}")
    out = [0] * (D + 1)
    out[0] = 1
    for j in range(1, D // n + 1):
        if e >= 0:
            c = comb(e, j) * (-1 if j % 2 else 1)
        else:
            c = comb(-e + j - 1, j)
        out[n * j] = c
    return TruncatedSeries(tuple(out))


def expand_direct(spec: ExponentSpec) -> TruncatedSeries:
    """Expand prod_{n<=D} (1 - z^n)^e(n) by literal polynomial multiplication.

    This is the independent oracle for expand_recursive: the two share no
    arithmetic beyond series construction.
    """
    D = spec.degree_bound
    result = TruncatedSeries.one(D)
    for n in range(1, D + 1):
        e = spec.exponents[n - 1]
        if e == 0:
            continue
        result = series_mul(result, binomial_factor(n, e, D))
    return result


def expand_recursive(spec: ExponentSpec) -> TruncatedSeries:
    """Expand prod_{n<=D} (1 - z^n)^e(n) via the log-derivative recursion.

    r(0) = 1 and n r(n) = - sum_{k=1}^{n} r(n-k) g(k) with
    g(k) = sum_{d|k} d e(d).  g is precomputed with a divisor sweep.  The
    division by n is exact for integer exponents; a remainder means a bug.

    For specs flagged with necklace_base = a, each g(k) is asserted to
    equal a**k before the convolution runs.
    """
    D = spec.degree_bound
    e = spec.exponents
    g = [0] * (D + 1)
    for d in range(1, D + 1):
        ed = e[d - 1]
        if ed == 0:
            continue
        de = d * ed
        for k in range(d, D + 1, d):
            g[k] += de
    if spec.necklace_base is not None:
        a = spec.necklace_base
        power = 1
        for k in range(1, D + 1):
            power *= a
            if g[k] != power:
                raise AssertionError(
                    f"necklace spec for base {a} has g({k}) = {g[k]}, "
                    f"expected {a}**{k} = {power}"
                )
    r = [0] * (D + 1)
    r[0] = 1
    for n in range(1, D + 1):
        total = 0
        for k in range(1, n + 1):
            rk = r[n - k]
            if rk:
                total += rk * g[k]
        coeff, rem = divmod(-total, n)
        if rem:
            raise AssertionError(
                f"recursion coefficient sum {total} not divisible by n={n}; "
                "this is an internal consistency failure"
            )
        r[n] = coeff
    return TruncatedSeries(tuple(r))


def eval_complex(s: TruncatedSeries, z: complex) -> complex:
    """Horner evaluation sum c_j z^j in double-precision complex arithmetic.

    Approximate by nature: coefficients are converted to floating point.
    """
    z = complex(z)
    acc = 0j
    for c in reversed(s.coeffs):
        acc = acc * z + c
    return acc
