"""Exact dense polynomial arithmetic in q, and a bivariate truncated series in q and z.

Coefficients are Python ints throughout, so every operation is exact at any
size.  IntPoly values are immutable and canonical (no trailing zeros); the
zero polynomial is the empty coefficient sequence and its degree is None.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class IntPoly:
    """Dense univariate polynomial over arbitrary-precision integers.

    coeffs[i] is the coefficient of q**i.  Instances are immutable; the
    constructor strips trailing zeros so equal polynomials compare equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self):
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return poly_add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self) -> "IntPoly":
        return poly_scale(self, -1)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul(self, other)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = IntPoly()
ONE = IntPoly((1,))


def monomial(coeff: int, exp: int) -> IntPoly:
    """coeff * q**exp."""
    if coeff == 0:
        return ZERO
    return IntPoly([0] * exp + [coeff])


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return IntPoly(out)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact schoolbook convolution product."""
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return ZERO
    out = [0] * (len(ca) + len(cb) - 1)
    for i, ai in enumerate(ca):
        if ai:
            for j, bj in enumerate(cb):
                out[i + j] += ai * bj
    return IntPoly(out)


def poly_scale(a: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return IntPoly(x * c for x in a.coeffs)


def poly_shift(a: IntPoly, e: int) -> IntPoly:
    """Multiply by q**e (e >= 0)."""
    if e < 0:
        raise ValueError(f"shift exponent must be >= 0, got {e}")
    if not a.coeffs or e == 0:
        return a
    return IntPoly((0,) * e + a.coeffs)


def poly_substitute_power(a: IntPoly, c: int) -> IntPoly:
    """Return a(q**c): exponent dilation by a factor c >= 1."""
    if c < 1:
        raise ValueError(f"substitution power must be >= 1, got {c}")
    if c == 1 or not a.coeffs:
        return a
    out = [0] * ((len(a.coeffs) - 1) * c + 1)
    for i, ai in enumerate(a.coeffs):
        out[i * c] = ai
    return IntPoly(out)


def coeff_at(a: IntPoly, n: int) -> int:
    """Coefficient of q**n; zero beyond the degree."""
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    return a.coeffs[n] if n < len(a.coeffs) else 0


def poly_eval_int(a: IntPoly, x: int) -> int:
    """Exact integer evaluation by Horner's rule."""
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def poly_truncate(a: IntPoly, order: int) -> IntPoly:
    """Drop all terms of degree > order."""
    if len(a.coeffs) <= order + 1:
        return a
    return IntPoly(a.coeffs[: order + 1])


def format_poly(a: IntPoly) -> str:
    """Render as e.g. '1 + q + 2q^2 + q^3 + q^4'; the zero polynomial is '0'."""
    if not a.coeffs:
        return "0"
    parts = []
    for e, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class TruncSeries:
    """Bivariate series: truncated in q at q_order, with explicit rows per z power.

    rows[i] is the coefficient of z**i, an IntPoly of degree <= q_order.
    z_degree is structural (len(rows) - 1); multiplication adds z-degrees and
    truncates in q only, so rows of a product are reliable up to the smallest
    z bound its factors were built with.
    """

    __slots__ = ("q_order", "rows")

    def __init__(self, q_order: int, rows: Sequence[IntPoly]):
        if q_order < 0:
            raise ValueError("q_order must be >= 0")
        if not rows:
            rows = [ZERO]
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(
            self, "rows", tuple(poly_truncate(r, q_order) for r in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def z_degree(self) -> int:
        return len(self.rows) - 1

    def coeff(self, n: int, m: int) -> int:
        """Coefficient of q**n z**m (zero beyond the stored z rows)."""
        if m < 0 or m > self.z_degree:
            return 0
        return coeff_at(self.rows[m], n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.q_order == other.q_order
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.q_order, self.rows))

    def __repr__(self) -> str:
        return f"TruncSeries(q_order={self.q_order}, rows={[list(r.coeffs) for r in self.rows]})"


def series_one(q_order: int) -> TruncSeries:
    return TruncSeries(q_order, [ONE])


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product of two series with equal q_order; z-degrees add."""
    if a.q_order != b.q_order:
        raise ValueError(
            f"q_order mismatch: {a.q_order} != {b.q_order}"
        )
    order = a.q_order
    out_rows = [ZERO] * (a.z_degree + b.z_degree + 1)
    for i, ra in enumerate(a.rows):
        if ra.is_zero():
            continue
        for j, rb in enumerate(b.rows):
            if rb.is_zero():
                continue
            out_rows[i + j] = poly_add(
                out_rows[i + j], poly_truncate(poly_mul(ra, rb), order)
            )
    return TruncSeries(order, out_rows)


def series_geom_factor(
    j: int, sign: int, z_step: int, q_order: int, z_degree: int
) -> TruncSeries:
    """One factor of a partition generating-function product.

    sign=+1: the polynomial factor 1 + z**z_step * q**(j*z_step).
    sign=-1: the truncated expansion of 1/(1 - z**z_step * q**(j*z_step)),
    i.e. sum over t >= 0 of z**(t*z_step) q**(j*t*z_step), with z rows kept
    up to z_degree and q truncated at q_order.
    """
    if j < 1:
        raise ValueError(f"factor index j must be >= 1, got {j}")
    if z_step < 1:
        raise ValueError(f"z_step must be >= 1, got {z_step}")
    if sign == 1:
        rows = [ZERO] * (z_step + 1)
        rows[0] = ONE
        rows[z_step] = monomial(1, j * z_step) if j * z_step <= q_order else ZERO
        return TruncSeries(q_order, rows)
    if sign == -1:
        rows = [ZERO] * (z_degree + 1)
        t = 0
        while t * z_step <= z_degree:
            e = j * t * z_step
            rows[t * z_step] = monomial(1, e) if e <= q_order else ZERO
            t += 1
        return TruncSeries(q_order, rows)
    raise ValueError(f"sign must be +1 or -1, got {sign}")
