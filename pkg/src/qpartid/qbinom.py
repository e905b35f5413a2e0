"""Gaussian (q-binomial) polynomials and exact binomial helpers.

gaussian(m, p) is the q-binomial bracket [m+p choose m]: the generating
polynomial, in q, of partitions fitting inside an m-by-p box.  It is built
division-free by the Pascal-type recurrence

    bracket(a, b) = bracket(a-1, b-1) + q**b * bracket(a-1, b)

with bracket(a, 0) = 1, memoized on (a, b).  The product definition
(bracket times prod(1-q^j) equals prod(1-q^{p+j})) is checked in the test
suite as an invariant rather than used for construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigpoly import IntPoly, ONE, ZERO, poly_add, poly_mul, poly_shift, poly_substitute_power

_bracket_memo: dict[tuple[int, int], IntPoly] = {}


def _bracket(top: int, bottom: int) -> IntPoly:
    """[top choose bottom]_q; zero when bottom < 0 or bottom > top."""
    if bottom < 0 or bottom > top:
        return ZERO
    if bottom == 0 or bottom == top:
        return ONE
    key = (top, bottom)
    cached = _bracket_memo.get(key)
    if cached is not None:
        return cached
    val = poly_add(
        _bracket(top - 1, bottom - 1),
        poly_shift(_bracket(top - 1, bottom), bottom),
    )
    _bracket_memo[key] = val
    return val


def gaussian(m: int, p: int) -> IntPoly:
    """The Gaussian polynomial bracket(m+p, m): degree m*p, coefficients > 0."""
    if m < 0 or p < 0:
        raise ValueError(f"gaussian requires m, p >= 0, got ({m}, {p})")
    return _bracket(m + p, m)


@dataclass(frozen=True)
class GaussKey:
    """A q-binomial bracket(top, bottom) read in base q**base.

    Out-of-range keys (bottom < 0, bottom > top, top < 0) denote the zero
    polynomial, so summations can be written with unconditional terms.
    """

    top: int
    bottom: int
    base: int = 1

    def __post_init__(self):
        if self.base < 1:
            raise ValueError(f"base must be >= 1, got {self.base}")


def gaussian_general(key: GaussKey) -> IntPoly:
    """bracket(top, bottom) in base q**base; zero polynomial when out of range."""
    if key.bottom < 0 or key.top < 0 or key.bottom > key.top:
        return ZERO
    poly = _bracket(key.top, key.bottom)
    return poly_substitute_power(poly, key.base)


def bracket_base(top: int, bottom: int, base: int = 1) -> IntPoly:
    """Shorthand for gaussian_general(GaussKey(top, bottom, base))."""
    if base < 1:
        raise ValueError(f"base must be >= 1, got {base}")
    if bottom < 0 or top < 0 or bottom > top:
        return ZERO
    return poly_substitute_power(_bracket(top, bottom), base)


def binom2(k: int) -> int:
    """k choose 2 = k*(k-1)/2 for k >= 0."""
    if k < 0:
        raise ValueError(f"binom2 requires k >= 0, got {k}")
    return k * (k - 1) // 2


def binom(n: int, k: int) -> int:
    """Exact integer binomial C(n, k), multiplicative and factorial-free.

    Zero when k < 0 or k > n.  Independent of the polynomial layer so it can
    serve as an oracle for q=1 evaluations.
    """
    if k < 0 or k > n or n < 0:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def gaussian_symmetry_check(m: int, p: int) -> bool:
    """True iff gaussian(m, p) and gaussian(p, m) agree as polynomials."""
    if m < 0 or p < 0:
        raise ValueError(f"requires m, p >= 0, got ({m}, {p})")
    return gaussian(m, p) == gaussian(p, m)


def gaussian_product_form_check(m: int, p: int) -> bool:
    """Division-free restatement of the product definition.

    Checks gaussian(m, p) * prod_{j=1..m}(1 - q^j) == prod_{j=1..m}(1 - q^{p+j}).
    """
    lhs = gaussian(m, p)
    rhs = ONE
    for j in range(1, m + 1):
        lhs = poly_mul(lhs, IntPoly([1] + [0] * (j - 1) + [-1]))
        rhs = poly_mul(rhs, IntPoly([1] + [0] * (p + j - 1) + [-1]))
    return lhs == rhs
