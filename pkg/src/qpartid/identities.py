"""Every verified identity, encoded as an executable exact check.

Each identity lives in a registry entry carrying its parameter names and a
default verification grid.  Checks build both sides independently — the
polynomial ones with exact q-binomial brackets, the counting ones with the
memoized partition counts, the q=1 combinatorial ones with big-integer
binomials that never touch the polynomial layer — and compare exactly.

Sixth-root-of-unity weights stay float-free: cos(j*pi/3) is a half-integer,
so cosine-weighted identities are verified doubled with the integer table
twice_cos; sin(j*pi/3) = (sqrt(3)/2) * s(j) with integer s(j), so the
vanishing sums are verified through s(j) alone.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .bigpoly import (
    IntPoly,
    ONE,
    ZERO,
    poly_add,
    poly_eval_int,
    poly_mul,
    poly_scale,
    poly_shift,
)
from .partitions import (
    check_pnmp_correspondence,
    check_qnmp_correspondence,
    count_P,
    count_P_most,
    count_P_nm,
    count_P_of,
    count_P_star,
    count_Q,
    count_Q_most,
    count_Q_nm,
    count_Q_of,
    count_Q_star,
)
from .bigpoly import series_geom_factor, series_mul, series_one
from .qbinom import binom, binom2, bracket_base

# ---------------------------------------------------------------------------
# Exact sixth-root-of-unity weight tables (period 6 in the angle index j)
# ---------------------------------------------------------------------------

_TWICE_COS = (2, 1, -1, -2, -1, 1)
_TWICE_SIN = (0, 1, 1, 0, -1, -1)


def twice_cos(j: int) -> int:
    """2*cos(j*pi/3) as an exact integer; even and 6-periodic in j."""
    return _TWICE_COS[j % 6]


def twice_sin_over_sqrt3(j: int) -> int:
    """2*sin(j*pi/3)/sqrt(3) as an exact integer; odd and 6-periodic in j."""
    return _TWICE_SIN[j % 6]


# ---------------------------------------------------------------------------
# Cases, results, descriptors
# ---------------------------------------------------------------------------

KIND_Q_POLYNOMIAL = "q_polynomial"
KIND_COUNT_INTEGER = "count_integer"
KIND_COMBINATORIAL = "combinatorial_q1"


@dataclass(frozen=True)
class IdentityCase:
    """One identity instance: registry id plus bound parameter values."""

    id: str
    values: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.values)

    def value_tuple(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.values)


@dataclass
class CaseResult:
    """Verdict for one case, with digests for compact reporting."""

    case: IdentityCase
    passed: bool
    lhs_hash: str
    rhs_hash: str
    first_mismatch: Optional[object] = None


@dataclass
class IdentityDescriptor:
    """Registry entry: an executable check plus its default grid.

    core marks the ten labeled single- and double-sum q-binomial results
    (result1..result6, resdbl1..resdbl4).
    """

    id: str
    kind: str
    params: tuple[str, ...]
    default_grid: dict[str, list[int]]
    check: Callable[..., CaseResult]
    core: bool = False


@dataclass(frozen=True)
class FSequence:
    """A finite sequence F(0), F(1), ... of polynomial values."""

    values: tuple[IntPoly, ...]

    def __len__(self) -> int:
        return len(self.values)


def make_case(identity_id: str, params: dict[str, int], order: Sequence[str]) -> IdentityCase:
    return IdentityCase(identity_id, tuple((name, params[name]) for name in order))


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode("ascii")).hexdigest()


def _hash_poly(p: IntPoly) -> str:
    return _sha(",".join(str(c) for c in p.coeffs))


def _hash_ints(values: Sequence[int]) -> str:
    return _sha(",".join(str(v) for v in values))


def _poly_first_mismatch(lhs: IntPoly, rhs: IntPoly) -> Optional[int]:
    top = max(len(lhs.coeffs), len(rhs.coeffs))
    for e in range(top):
        a = lhs.coeffs[e] if e < len(lhs.coeffs) else 0
        b = rhs.coeffs[e] if e < len(rhs.coeffs) else 0
        if a != b:
            return e
    return None


def _finish_poly(case: IdentityCase, lhs: IntPoly, rhs: IntPoly, tamper: bool) -> CaseResult:
    if tamper:
        rhs = poly_add(rhs, ONE)
    mismatch = _poly_first_mismatch(lhs, rhs)
    return CaseResult(
        case=case,
        passed=mismatch is None,
        lhs_hash=_hash_poly(lhs),
        rhs_hash=_hash_poly(rhs),
        first_mismatch=mismatch,
    )


def _finish_pairs(
    case: IdentityCase, pairs: Sequence[tuple[int, int]], tamper: bool
) -> CaseResult:
    pairs = list(pairs)
    if tamper and pairs:
        l0, r0 = pairs[0]
        pairs[0] = (l0, r0 + 1)
    mismatch = next(((l, r) for l, r in pairs if l != r), None)
    return CaseResult(
        case=case,
        passed=mismatch is None,
        lhs_hash=_hash_ints([l for l, _ in pairs]),
        rhs_hash=_hash_ints([r for _, r in pairs]),
        first_mismatch=mismatch,
    )


# ---------------------------------------------------------------------------
# q-polynomial identities
# ---------------------------------------------------------------------------

_Q_PARAM_DOMAIN_MSG = "q-identity parameters must satisfy n, m >= 0 (and p >= 0, a >= 0, b, c >= 1)"


def _require_q_domain(params: dict[str, int], resdbl: bool) -> None:
    ok = params["n"] >= 0 and params["m"] >= 0
    if resdbl:
        ok = ok and params["p"] >= 0 and params["a"] >= 0 and params["b"] >= 1 and params["c"] >= 1
    if not ok:
        raise ValueError(f"{_Q_PARAM_DOMAIN_MSG}: got {params}")


def _sides_delta(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + n - k, m), bracket_base(m + 1, k)), binom2(k)
        )
        lhs = poly_add(lhs, term if k % 2 == 0 else poly_scale(term, -1))
    return lhs, (ONE if n == 0 else ZERO)


def _sides_result1(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n // 2 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + 1, n - 2 * k), bracket_base(m + k, m, 2)),
            binom2(n - 2 * k),
        )
        lhs = poly_add(lhs, term)
    return lhs, bracket_base(m + n, m)


def _sides_result2(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n // 2 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + n - 2 * k, m), bracket_base(m + 1, k, 2)),
            2 * binom2(k),
        )
        lhs = poly_add(lhs, term if k % 2 == 0 else poly_scale(term, -1))
    return lhs, poly_shift(bracket_base(m + 1, n), binom2(n))


def _sides_result3(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    # verified doubled so the cosine weights are exact integers
    lhs = ZERO
    for k in range(n // 3 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + 1, n - 3 * k), bracket_base(m + k, m, 3)),
            binom2(n - 3 * k),
        )
        lhs = poly_add(lhs, poly_scale(term, 2 if k % 2 == 0 else -2))
    rhs = ZERO
    for k in range(n + 1):
        w = twice_cos(2 * k - n)
        if w:
            term = poly_mul(bracket_base(m + n - k, m), bracket_base(m + k, m))
            rhs = poly_add(rhs, poly_scale(term, w))
    return lhs, rhs


def _sides_result4(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n // 3 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + n - 3 * k, m), bracket_base(m + 1, k, 3)),
            3 * binom2(k),
        )
        lhs = poly_add(lhs, poly_scale(term, 2 if k % 2 == 0 else -2))
    rhs = ZERO
    for k in range(n + 1):
        w = twice_cos(2 * k - n)
        if w:
            term = poly_shift(
                poly_mul(bracket_base(m + 1, n - k), bracket_base(m + 1, k)),
                binom2(n - k) + binom2(k),
            )
            rhs = poly_add(rhs, poly_scale(term, w))
    return lhs, rhs


def _sides_result5(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n // 4 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + 1, n - 4 * k), bracket_base(m + k, m, 4)),
            binom2(n - 4 * k),
        )
        lhs = poly_add(lhs, term)
    rhs = ZERO
    for k in range(n // 2 + 1):
        term = poly_mul(bracket_base(m + n - 2 * k, m), bracket_base(m + k, m, 2))
        rhs = poly_add(rhs, term if k % 2 == 0 else poly_scale(term, -1))
    return lhs, rhs


def _sides_result6(n: int, m: int) -> tuple[IntPoly, IntPoly]:
    lhs = ZERO
    for k in range(n // 4 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + n - 4 * k, m), bracket_base(m + 1, k, 4)),
            4 * binom2(k),
        )
        lhs = poly_add(lhs, term if k % 2 == 0 else poly_scale(term, -1))
    rhs = ZERO
    for k in range(n // 2 + 1):
        term = poly_shift(
            poly_mul(bracket_base(m + 1, n - 2 * k), bracket_base(m + 1, k, 2)),
            binom2(n - 2 * k) + 2 * binom2(k),
        )
        rhs = poly_add(rhs, term)
    return lhs, rhs


_SIMPLE_Q_SIDES = {
    "delta": _sides_delta,
    "result1": _sides_result1,
    "result2": _sides_result2,
    "result3": _sides_result3,
    "result4": _sides_result4,
    "result5": _sides_result5,
    "result6": _sides_result6,
}


def _make_simple_q_check(identity_id: str):
    sides = _SIMPLE_Q_SIDES[identity_id]

    def check(params, tamper=False):
        _require_q_domain(params, resdbl=False)
        lhs, rhs = sides(params["n"], params["m"])
        return _finish_poly(make_case(identity_id, params, ("n", "m")), lhs, rhs, tamper)

    return check


# --- the four triangle double sums ----------------------------------------
#
# Summand caches: the (k, l) bracket pair depends only on (m, b, k, l) and the
# remaining factor only on (p, c, a, s) with s = n-k-l, so both are shared
# across the whole verification grid.

_PB_MEMO: dict[tuple[int, int, int, int], IntPoly] = {}
_A_MEMO: dict[tuple[bool, int, int, int, int], IntPoly] = {}

RESDBL_IDS = ("resdbl1", "resdbl2", "resdbl3", "resdbl4")
TRANSFORM_NAMES = ("swap_kl", "replace_l")


def _pb_factor(m: int, b: int, k: int, l: int) -> IntPoly:
    key = (m, b, k, l)
    val = _PB_MEMO.get(key)
    if val is None:
        val = poly_shift(
            poly_mul(bracket_base(m + 1, k, b), bracket_base(m + l, m, b)),
            b * binom2(k),
        )
        _PB_MEMO[key] = val
    return val


def _a_factor(shifted_top: bool, p: int, c: int, a: int, s: int) -> IntPoly:
    # shifted_top selects bracket(p+s, p) (resdbl1/2) versus bracket(p, s) (resdbl3/4)
    key = (shifted_top, p, c, a, s)
    val = _A_MEMO.get(key)
    if val is None:
        base = bracket_base(p + s, p, c) if shifted_top else bracket_base(p, s, c)
        val = poly_shift(base, a * binom2(s))
        _A_MEMO[key] = val
    return val


def _resdbl_summand(
    variant: str, n: int, m: int, p: int, a: int, b: int, c: int, k: int, l: int
) -> IntPoly:
    s = n - k - l
    if s < 0:
        return ZERO
    shifted_top = variant in ("resdbl1", "resdbl2")
    sign_index = k if variant in ("resdbl1", "resdbl3") else l
    term = poly_mul(_a_factor(shifted_top, p, c, a, s), _pb_factor(m, b, k, l))
    return term if sign_index % 2 == 0 else poly_scale(term, -1)


def _index_map(transforms: Sequence[str], n: int):
    """Compose index substitutions; summand_transformed(k,l) = summand(map(k,l)).

    Substituting into an already-transformed expression rewrites its inputs,
    so the maps compose with the last-listed substitution applied first.
    """

    def apply(k: int, l: int) -> tuple[int, int]:
        for t in reversed(transforms):
            if t == "swap_kl":
                k, l = l, k
            elif t == "replace_l":
                l = n - k - l
            else:
                raise ValueError(f"unknown transform {t!r}")
        return k, l

    return apply


def resdbl_lhs(
    variant: str,
    n: int,
    m: int,
    p: int,
    a: int,
    b: int,
    c: int,
    transforms: Sequence[str] = (),
) -> IntPoly:
    """Triangle double sum for one resdbl identity, with optional index substitutions."""
    if variant not in RESDBL_IDS:
        raise ValueError(f"unknown resdbl variant {variant!r}")
    for t in transforms:
        if t not in TRANSFORM_NAMES:
            raise ValueError(f"unknown transform {t!r}")
    remap = _index_map(transforms, n)
    total = ZERO
    for k in range(n + 1):
        for l in range(n - k + 1):
            kk, ll = remap(k, l)
            total = poly_add(total, _resdbl_summand(variant, n, m, p, a, b, c, kk, ll))
    return total


def _resdbl_rhs(variant: str, n: int, p: int, a: int, c: int) -> IntPoly:
    shifted_top = variant in ("resdbl1", "resdbl2")
    base = bracket_base(p + n, p, c) if shifted_top else bracket_base(p, n, c)
    return poly_shift(base, a * binom2(n))


def _make_resdbl_check(variant: str):
    def check(params, tamper=False):
        _require_q_domain(params, resdbl=True)
        n, m, p = params["n"], params["m"], params["p"]
        a, b, c = params["a"], params["b"], params["c"]
        lhs = resdbl_lhs(variant, n, m, p, a, b, c)
        rhs = _resdbl_rhs(variant, n, p, a, c)
        case = make_case(variant, params, ("n", "m", "p", "a", "b", "c"))
        return _finish_poly(case, lhs, rhs, tamper)

    return check


# --- even/odd linear combinations of the double sums -----------------------


def _bound_p(binding: Union[int, str], m: int) -> int:
    if binding == "m":
        return m
    if binding == "m+1":
        return m + 1
    return int(binding)


def parity_sum_sides(
    base_id: str,
    transforms: Sequence[str],
    bindings: dict[str, Union[int, str]],
    parity: str,
    n: int,
    m: int,
) -> tuple[IntPoly, IntPoly]:
    """Both sides of a parity-restricted linear combination of a double sum.

    The two source identities differ only in carrying (-1)^k versus (-1)^l,
    so their half-sum keeps the even-k+l terms (with the base right side) and
    their half-difference keeps the odd-k+l terms (with right side zero).
    bindings fixes a, b, c and sets p to m or m+1 (strings "m" / "m+1").
    """
    if base_id not in RESDBL_IDS:
        raise ValueError(f"base identity must be one of {RESDBL_IDS}, got {base_id!r}")
    for t in transforms:
        if t not in TRANSFORM_NAMES:
            raise ValueError(f"unknown transform {t!r}")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == "even" else 1
    p = _bound_p(bindings["p"], m)
    a, b, c = int(bindings["a"]), int(bindings["b"]), int(bindings["c"])
    remap = _index_map(tuple(transforms), n)
    lhs = ZERO
    for k in range(n + 1):
        for l in range(n - k + 1):
            if (k + l) % 2 != want:
                continue
            kk, ll = remap(k, l)
            lhs = poly_add(lhs, _resdbl_summand(base_id, n, m, p, a, b, c, kk, ll))
    rhs = _resdbl_rhs(base_id, n, p, a, c) if parity == "even" else ZERO
    return lhs, rhs


def derive_even_sum_corollary(
    base_id: str,
    transforms: Sequence[str],
    bindings: dict[str, Union[int, str]],
    parity: str = "even",
    derived_id: Optional[str] = None,
) -> IdentityDescriptor:
    """Build a registry descriptor for a parity-restricted double-sum identity."""
    # validate eagerly so a bad recipe fails at derivation time
    parity_sum_sides(base_id, transforms, bindings, parity, 0, 0)
    name = derived_id or f"{base_id}_{parity}_sum"
    transforms = tuple(transforms)

    def check(params, tamper=False):
        _require_q_domain(params, resdbl=False)
        lhs, rhs = parity_sum_sides(
            base_id, transforms, bindings, parity, params["n"], params["m"]
        )
        return _finish_poly(make_case(name, params, ("n", "m")), lhs, rhs, tamper)

    return IdentityDescriptor(
        id=name,
        kind=KIND_Q_POLYNOMIAL,
        params=("n", "m"),
        default_grid={"n": list(range(9)), "m": list(range(9))},
        check=check,
    )


_COROLLARY_2_4_RECIPE = dict(
    base_id="resdbl2",
    transforms=("swap_kl", "replace_l"),
    bindings={"a": 0, "b": 1, "c": 1, "p": "m"},
)
_COROLLARY_3_4_RECIPE = dict(
    base_id="resdbl3",
    transforms=("replace_l",),
    bindings={"a": 1, "b": 1, "c": 1, "p": "m+1"},
)


def _make_corollary_check(recipe: dict, name: str):
    # one case covers both the even combination and the zero-sided odd one
    even = derive_even_sum_corollary(parity="even", derived_id=name, **recipe)
    odd = derive_even_sum_corollary(parity="odd", derived_id=name, **recipe)

    def check(params, tamper=False):
        even_result = even.check(params, tamper=tamper)
        odd_result = odd.check(params)
        if not even_result.passed:
            return even_result
        if not odd_result.passed:
            return odd_result
        return CaseResult(
            case=even_result.case,
            passed=True,
            lhs_hash=_sha(even_result.lhs_hash + odd_result.lhs_hash),
            rhs_hash=_sha(even_result.rhs_hash + odd_result.rhs_hash),
        )

    return check


def q_identity_sides(identity_id: str, params: dict[str, int]) -> tuple[IntPoly, IntPoly]:
    """Both sides of a q-polynomial identity as exact polynomials.

    Covers the single-sum identities, the four double sums, and the two
    parity corollaries (even combination); cosine-weighted identities come
    back in their doubled form.
    """
    if identity_id in _SIMPLE_Q_SIDES:
        return _SIMPLE_Q_SIDES[identity_id](params["n"], params["m"])
    if identity_id in RESDBL_IDS:
        n, m, p = params["n"], params["m"], params["p"]
        a, b, c = params["a"], params["b"], params["c"]
        return (
            resdbl_lhs(identity_id, n, m, p, a, b, c),
            _resdbl_rhs(identity_id, n, p, a, c),
        )
    if identity_id == "corollary_2_4":
        recipe = _COROLLARY_2_4_RECIPE
    elif identity_id == "corollary_3_4":
        recipe = _COROLLARY_3_4_RECIPE
    else:
        raise KeyError(f"no polynomial sides for {identity_id!r}")
    return parity_sum_sides(
        recipe["base_id"],
        recipe["transforms"],
        recipe["bindings"],
        "even",
        params["n"],
        params["m"],
    )


# --- the triangle theorem with an arbitrary coefficient sequence -----------


def check_F_theorem(
    F: Union[FSequence, Sequence[IntPoly]],
    n: int,
    m: int,
    sign_on: str,
    base: int = 1,
) -> CaseResult:
    """Verify the triangle sum against F(0).

    Sums (+-1)^(k or l) * F(k+l) * q^(base*C(k,2)) * bracket(m+1,k) *
    bracket(m+l,m) over k >= 0, l >= 0, k+l <= n, with the brackets read in
    base q**base, and checks the total equals F(0).  Every diagonal k+l = c
    cancels except the origin.
    """
    values = F.values if isinstance(F, FSequence) else tuple(F)
    if len(values) < n + 1:
        raise ValueError(f"F must provide at least n+1 = {n + 1} values, got {len(values)}")
    if sign_on not in ("k", "l"):
        raise ValueError(f"sign_on must be 'k' or 'l', got {sign_on!r}")
    if n < 0 or m < 0:
        raise ValueError(_Q_PARAM_DOMAIN_MSG)
    lhs = ZERO
    for k in range(n + 1):
        for l in range(n - k + 1):
            sign_index = k if sign_on == "k" else l
            term = poly_mul(values[k + l], _pb_factor(m, base, k, l))
            lhs = poly_add(lhs, term if sign_index % 2 == 0 else poly_scale(term, -1))
    rhs = values[0]
    case = IdentityCase("f_theorem", (("n", n), ("m", m)))
    return _finish_poly(case, lhs, rhs, tamper=False)


_F_RANDOM_SEED = 74521


def standard_f_sequences(n: int, m: int) -> list[tuple[str, FSequence]]:
    """The stock coefficient sequences exercised by the registry check."""
    delta_f = FSequence((ONE,) + (ZERO,) * n)
    power_f = FSequence(tuple(poly_shift(ONE, j) for j in range(n + 1)))
    rng = random.Random(_F_RANDOM_SEED + 1009 * n + m)
    random_f = FSequence(
        tuple(IntPoly([rng.randint(-3, 3) for _ in range(4)]) for _ in range(n + 1))
    )
    return [("delta", delta_f), ("power", power_f), ("random", random_f)]


def _check_f_theorem(params, tamper=False):
    n, m = params["n"], params["m"]
    case = make_case("f_theorem", params, ("n", "m"))
    lhs_digest, rhs_digest = [], []
    for sign_on in ("k", "l"):
        for _, seq in standard_f_sequences(n, m):
            sub = check_F_theorem(seq, n, m, sign_on)
            if not sub.passed:
                return CaseResult(
                    case=case,
                    passed=False,
                    lhs_hash=sub.lhs_hash,
                    rhs_hash=sub.rhs_hash,
                    first_mismatch=sub.first_mismatch,
                )
            lhs_digest.append(sub.lhs_hash)
            rhs_digest.append(sub.rhs_hash)
    result = CaseResult(
        case=case,
        passed=True,
        lhs_hash=_sha(",".join(lhs_digest)),
        rhs_hash=_sha(",".join(rhs_digest)),
    )
    if tamper:
        result.passed = False
        result.first_mismatch = 0
        result.rhs_hash = _sha(result.rhs_hash)
    return result


# ---------------------------------------------------------------------------
# Counting identities
# ---------------------------------------------------------------------------


def _pairs_theorem1(n, m, p):
    rhs = sum(
        count_Q(n - 2 * k, m - 2 * l, p) * count_P(k, l, p)
        for k in range(n // 2 + 1)
        for l in range(m // 2 + 1)
    )
    return [(count_P(n, m, p), rhs)]


def _pairs_theorem2(n, m, p):
    rhs = sum(
        count_Q_star(n - 2 * k, m - 2 * l, p) * count_P(k, l, p)
        for k in range(n // 2 + 1)
        for l in range(m // 2 + 1)
    )
    return [(count_P(n + m, m, p + 1), rhs)]


def _pairs_theorem3(n, m, p):
    rhs = 0
    for k in range(n // 2 + 1):
        for l in range(m // 2 + 1):
            term = count_P(n - 2 * k, m - 2 * l, p) * count_Q(k, l, p)
            rhs += term if l % 2 == 0 else -term
    return [(count_Q(n, m, p), rhs)]


def _pairs_qstar_relation(n, m, p):
    rhs = 0
    for k in range(n // 2 + 1):
        for l in range(m // 2 + 1):
            term = count_P(n + m - 2 * (k + l), m - 2 * l, p + 1) * count_Q(k, l, p)
            rhs += term if l % 2 == 0 else -term
    return [(count_Q_star(n, m, p), rhs)]


def _pairs_theorem6(n, m, p):
    lhs = 0
    for k in range(n // 3 + 1):
        for l in range(m // 3 + 1):
            term = count_Q(n - 3 * k, m - 3 * l, p) * count_P(k, l, p)
            lhs += term if l % 2 == 0 else -term
    rhs = sum(
        twice_cos(2 * l - m) * count_P(n - k, m - l, p) * count_P(k, l, p)
        for k in range(n + 1)
        for l in range(m + 1)
    )
    return [(2 * lhs, rhs)]


def _pairs_theorem7(n, m, p):
    lhs = 0
    for k in range(n // 3 + 1):
        for l in range(m // 3 + 1):
            term = count_P(n - 3 * k, m - 3 * l, p) * count_Q(k, l, p)
            lhs += term if l % 2 == 0 else -term
    rhs = sum(
        twice_cos(2 * l - m) * count_Q(n - k, m - l, p) * count_Q(k, l, p)
        for k in range(n + 1)
        for l in range(m + 1)
    )
    return [(2 * lhs, rhs)]


def _pairs_theorem8(n, m, p):
    lhs = sum(
        count_Q(n - 4 * k, m - 4 * l, p) * count_P(k, l, p)
        for k in range(n // 4 + 1)
        for l in range(m // 4 + 1)
    )
    rhs = 0
    for k in range(n // 2 + 1):
        for l in range(m // 2 + 1):
            term = count_P(n - 2 * k, m - 2 * l, p) * count_P(k, l, p)
            rhs += term if l % 2 == 0 else -term
    return [(lhs, rhs)]


def _pairs_theorem9(n, m, p):
    lhs = 0
    for k in range(n // 4 + 1):
        for l in range(m // 4 + 1):
            term = count_P(n - 4 * k, m - 4 * l, p) * count_Q(k, l, p)
            lhs += term if l % 2 == 0 else -term
    rhs = sum(
        count_Q(n - 2 * k, m - 2 * l, p) * count_Q(k, l, p)
        for k in range(n // 2 + 1)
        for l in range(m // 2 + 1)
    )
    return [(lhs, rhs)]


def _pairs_theorem_simple(n, m, p):
    lhs = 0
    for k in range(n + 1):
        for l in range(m + 1):
            term = count_P(n - k, m - l, p) * count_Q(k, l, p)
            lhs += term if l % 2 == 0 else -term
    rhs = 1 if (n == 0 and m == 0) else 0
    return [(lhs, rhs)]


def _pairs_sine_vanishing_6(n, m, p):
    lhs = sum(
        twice_sin_over_sqrt3(m - 2 * l) * count_P(n - k, m - l, p) * count_P(k, l, p)
        for k in range(n + 1)
        for l in range(m + 1)
    )
    return [(lhs, 0)]


def _pairs_sine_vanishing_7(n, m, p):
    lhs = sum(
        twice_sin_over_sqrt3(m - 2 * l) * count_Q(n - k, m - l, p) * count_Q(k, l, p)
        for k in range(n + 1)
        for l in range(m + 1)
    )
    return [(lhs, 0)]


def _pairs_pmost_chain(n, p):
    most = count_P_most(n, p)
    exact_sum = sum(count_P(n, k, p) for k in range(n + 1))
    convolution = sum(
        count_Q_most(n - 2 * k, p) * count_P_nm(p + k, p) for k in range(n // 2 + 1)
    )
    return [
        (most, exact_sum),
        (most, count_P_star(n, n, p)),
        (most, count_P(2 * n, n, p + 1)),
        (most, count_P_nm(n + p, p)),
        (count_P_nm(n + p, p), convolution),
    ]


def _pairs_pn_from_q(n):
    rhs = sum(count_Q_of(n - 2 * k) * count_P_of(k) for k in range(n // 2 + 1))
    return [(count_P_of(n), rhs)]


def _pairs_qn_double_sum(n):
    # l runs to floor(n/2) as stated, although Q(k,l) vanishes for l > k
    rhs = 0
    for k in range(n // 2 + 1):
        for l in range(n // 2 + 1):
            term = count_P_of(n - 2 * k) * count_Q_nm(k, l)
            rhs += term if l % 2 == 0 else -term
    return [(count_Q_of(n), rhs)]


def _pairs_pnmp_correspondence(n, m, p):
    return [(count_P_star(n, m, p), count_P(n + m, m, p + 1))]


def _pairs_qnmp_correspondence(n, m, p):
    return [(count_Q(n, m, p), count_P(n - m * (m - 1) // 2, m, p - m + 1))]


_COUNT_PAIR_FUNCS = {
    "theorem1": (_pairs_theorem1, ("n", "m", "p")),
    "theorem2": (_pairs_theorem2, ("n", "m", "p")),
    "theorem3": (_pairs_theorem3, ("n", "m", "p")),
    "theorem6": (_pairs_theorem6, ("n", "m", "p")),
    "theorem7": (_pairs_theorem7, ("n", "m", "p")),
    "theorem8": (_pairs_theorem8, ("n", "m", "p")),
    "theorem9": (_pairs_theorem9, ("n", "m", "p")),
    "theorem_simple": (_pairs_theorem_simple, ("n", "m", "p")),
    "qstar_relation": (_pairs_qstar_relation, ("n", "m", "p")),
    "sine_vanishing_6": (_pairs_sine_vanishing_6, ("n", "m", "p")),
    "sine_vanishing_7": (_pairs_sine_vanishing_7, ("n", "m", "p")),
    "pmost_chain": (_pairs_pmost_chain, ("n", "p")),
    "pn_from_q": (_pairs_pn_from_q, ("n",)),
    "qn_double_sum": (_pairs_qn_double_sum, ("n",)),
    "pnmp_correspondence": (_pairs_pnmp_correspondence, ("n", "m", "p")),
    "qnmp_correspondence": (_pairs_qnmp_correspondence, ("n", "m", "p")),
}


def _make_count_check(identity_id: str):
    pair_func, order = _COUNT_PAIR_FUNCS[identity_id]

    def check(params, tamper=False):
        args = [params[name] for name in order]
        case = make_case(identity_id, params, order)
        return _finish_pairs(case, pair_func(*args), tamper)

    return check


# --- generating functions ---------------------------------------------------

GENFUN_Q_ORDER = 30
GENFUN_Z_DEGREE = 8


def check_genfun(p: int, q_order: int = GENFUN_Q_ORDER, z_degree: int = GENFUN_Z_DEGREE,
                 tamper: bool = False) -> CaseResult:
    """Expand both bounded-part products and compare every q^n z^m coefficient.

    The reciprocal product must reproduce count_P(n, m, p) and the plain
    product count_Q(n, m, p), for all n <= q_order, m <= z_degree.
    """
    if p < 0 or q_order < 0 or z_degree < 0:
        raise ValueError("p, q_order and z_degree must all be >= 0")
    p_series = series_one(q_order)
    q_series = series_one(q_order)
    for j in range(1, p + 1):
        p_series = series_mul(p_series, series_geom_factor(j, -1, 1, q_order, z_degree))
        q_series = series_mul(q_series, series_geom_factor(j, 1, 1, q_order, z_degree))
    pairs = []
    for mm in range(z_degree + 1):
        for nn in range(q_order + 1):
            pairs.append((p_series.coeff(nn, mm), count_P(nn, mm, p)))
            pairs.append((q_series.coeff(nn, mm), count_Q(nn, mm, p)))
    case = IdentityCase("genfun", (("p", p),))
    return _finish_pairs(case, pairs, tamper)


def _check_genfun_registry(params, tamper=False):
    return check_genfun(params["p"], tamper=tamper)


# ---------------------------------------------------------------------------
# Combinatorial identities at q = 1 (independent big-integer binomials)
# ---------------------------------------------------------------------------


def _comb01(n, m):
    lhs = sum(
        (-1) ** k * binom(m + k, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    return lhs, (1 if n == 0 else 0)


def _comb02(n, m):
    lhs = sum(binom(m + 1, 2 * k) * binom(m + n - k, m) for k in range(n + 1))
    return lhs, binom(m + 2 * n, m)


def _comb03(n, m):
    lhs = sum(binom(m + 1, 2 * k + 1) * binom(m + n - k, m) for k in range(n + 1))
    return lhs, binom(m + 2 * n + 1, m)


def _comb04(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 2 * k, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    return lhs, (-1) ** n * binom(m + 1, 2 * n)


def _comb05(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 2 * k + 1, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    return lhs, (-1) ** n * binom(m + 1, 2 * n + 1)


def _comb06(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 1, 3 * k) * binom(m + n - k, m) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k) * binom(m + 3 * n - k, m) * binom(m + k, m)
        for k in range(3 * n + 1)
    )
    return lhs, rhs


def _comb07(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 1, 3 * k + 1) * binom(m + n - k, m) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k - 1) * binom(m + 3 * n - k + 1, m) * binom(m + k, m)
        for k in range(3 * n + 2)
    )
    return lhs, rhs


def _comb08(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 1, 3 * k + 2) * binom(m + n - k, m) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k - 2) * binom(m + 3 * n - k + 2, m) * binom(m + k, m)
        for k in range(3 * n + 3)
    )
    return lhs, rhs


def _comb09(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 3 * k, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k) * binom(m + 1, 3 * n - k) * binom(m + 1, k)
        for k in range(3 * n + 1)
    )
    return lhs, rhs


def _comb10(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 3 * k + 1, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k - 1) * binom(m + 1, 3 * n - k + 1) * binom(m + 1, k)
        for k in range(3 * n + 2)
    )
    return lhs, rhs


def _comb11(n, m):
    lhs = 2 * sum(
        (-1) ** k * binom(m + 3 * k + 2, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = sum(
        twice_cos(2 * k - 2) * binom(m + 1, 3 * n - k + 2) * binom(m + 1, k)
        for k in range(3 * n + 3)
    )
    return lhs, rhs


def _comb12(n, m):
    lhs = sum(binom(m + 1, 4 * k) * binom(m + n - k, m) for k in range(n + 1))
    rhs = sum(
        (-1) ** k * binom(m + 2 * k, m) * binom(m + 2 * n - k, m)
        for k in range(2 * n + 1)
    )
    return lhs, rhs


def _comb13(n, m):
    lhs = sum(binom(m + 1, 4 * k + 1) * binom(m + n - k, m) for k in range(n + 1))
    rhs = sum(
        (-1) ** k * binom(m + 2 * k + 1, m) * binom(m + 2 * n - k, m)
        for k in range(2 * n + 1)
    )
    return lhs, rhs


def _comb14(n, m):
    lhs = sum(binom(m + 1, 4 * k + 2) * binom(m + n - k, m) for k in range(n + 1))
    rhs = sum(
        (-1) ** (k + 1) * binom(m + 2 * k, m) * binom(m + 2 * n - k + 1, m)
        for k in range(2 * n + 2)
    )
    return lhs, rhs


def _comb15(n, m):
    lhs = sum(binom(m + 1, 4 * k + 3) * binom(m + n - k, m) for k in range(n + 1))
    rhs = sum(
        (-1) ** (k + 1) * binom(m + 2 * k + 1, m) * binom(m + 2 * n - k + 1, m)
        for k in range(2 * n + 2)
    )
    return lhs, rhs


def _comb16(n, m, p):
    lhs = sum(
        (-1) ** k * binom(p + n - k - l, p) * binom(m + 1, k) * binom(m + l, m)
        for k in range(n + 1)
        for l in range(n - k + 1)
    )
    return lhs, binom(p + n, p)


def _comb17(n, m, p):
    lhs = sum(
        (-1) ** l * binom(p + n - k - l, p) * binom(m + 1, k) * binom(m + l, m)
        for k in range(n + 1)
        for l in range(n - k + 1)
    )
    return lhs, binom(p + n, p)


def _comb18(n, m, p):
    lhs = sum(
        (-1) ** k * binom(p, n - k - l) * binom(m + 1, k) * binom(m + l, m)
        for k in range(n + 1)
        for l in range(n - k + 1)
    )
    return lhs, binom(p, n)


def _comb19(n, m, p):
    lhs = sum(
        (-1) ** l * binom(p, n - k - l) * binom(m + 1, k) * binom(m + l, m)
        for k in range(n + 1)
        for l in range(n - k + 1)
    )
    return lhs, binom(p, n)


def _comb20(n, m):
    lhs = sum(
        (-1) ** k * binom(m + k, m) * binom(m + l, m) * binom(m + 1, n - k - l)
        for k in range(n + 1)
        for l in range(n - k + 1)
        if (k + l) % 2 == 0
    )
    return lhs, binom(m + n, m)


def _comb21(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 1, k) * binom(m + 1, l) * binom(m + n - k - l, m)
        for k in range(n + 1)
        for l in range(n - k + 1)
        if (k + l) % 2 == 0
    )
    return lhs, binom(m + 1, n)


def _comb22(n, m):
    lhs = sum(
        (-1) ** k * binom(m + k, m) * binom(m + l, m) * binom(m + 1, n - k - l)
        for k in range(n + 1)
        for l in range(n - k + 1)
        if (k + l) % 2 == 1
    )
    return lhs, 0


def _comb23(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 4 * k, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = (-1) ** n * sum(
        binom(m + 1, 2 * k) * binom(m + 1, 2 * n - k) for k in range(2 * n + 1)
    )
    return lhs, rhs


def _comb24(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 4 * k + 1, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = (-1) ** n * sum(
        binom(m + 1, 2 * k + 1) * binom(m + 1, 2 * n - k) for k in range(2 * n + 1)
    )
    return lhs, rhs


def _comb25(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 4 * k + 2, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = (-1) ** n * sum(
        binom(m + 1, 2 * k) * binom(m + 1, 2 * n - k + 1) for k in range(2 * n + 2)
    )
    return lhs, rhs


def _comb26(n, m):
    lhs = sum(
        (-1) ** k * binom(m + 4 * k + 3, m) * binom(m + 1, n - k) for k in range(n + 1)
    )
    rhs = (-1) ** n * sum(
        binom(m + 1, 2 * k + 1) * binom(m + 1, 2 * n - k + 1) for k in range(2 * n + 2)
    )
    return lhs, rhs


_COMB_FUNCS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "comb01": (_comb01, ("n", "m")),
    "comb02": (_comb02, ("n", "m")),
    "comb03": (_comb03, ("n", "m")),
    "comb04": (_comb04, ("n", "m")),
    "comb05": (_comb05, ("n", "m")),
    "comb06": (_comb06, ("n", "m")),
    "comb07": (_comb07, ("n", "m")),
    "comb08": (_comb08, ("n", "m")),
    "comb09": (_comb09, ("n", "m")),
    "comb10": (_comb10, ("n", "m")),
    "comb11": (_comb11, ("n", "m")),
    "comb12": (_comb12, ("n", "m")),
    "comb13": (_comb13, ("n", "m")),
    "comb14": (_comb14, ("n", "m")),
    "comb15": (_comb15, ("n", "m")),
    "comb16": (_comb16, ("n", "m", "p")),
    "comb17": (_comb17, ("n", "m", "p")),
    "comb18": (_comb18, ("n", "m", "p")),
    "comb19": (_comb19, ("n", "m", "p")),
    "comb20": (_comb20, ("n", "m")),
    "comb21": (_comb21, ("n", "m")),
    "comb22": (_comb22, ("n", "m")),
    "comb23": (_comb23, ("n", "m")),
    "comb24": (_comb24, ("n", "m")),
    "comb25": (_comb25, ("n", "m")),
    "comb26": (_comb26, ("n", "m")),
}


def _make_comb_check(identity_id: str):
    func, order = _COMB_FUNCS[identity_id]

    def check(params, tamper=False):
        args = [params[name] for name in order]
        lhs, rhs = func(*args)
        case = make_case(identity_id, params, order)
        return _finish_pairs(case, [(lhs, rhs)], tamper)

    return check


# ---------------------------------------------------------------------------
# Public per-kind entry points (dispatch on the case id)
# ---------------------------------------------------------------------------


def check_q_identity(case: IdentityCase) -> CaseResult:
    """Check one q-polynomial identity instance exactly."""
    desc = get_descriptor(case.id)
    if desc.kind != KIND_Q_POLYNOMIAL:
        raise ValueError(f"{case.id!r} is not a q-polynomial identity")
    return desc.check(case.as_dict())


def check_count_identity(case: IdentityCase) -> CaseResult:
    """Check one integer counting identity instance exactly."""
    desc = get_descriptor(case.id)
    if desc.kind != KIND_COUNT_INTEGER:
        raise ValueError(f"{case.id!r} is not a counting identity")
    return desc.check(case.as_dict())


def check_sine_vanishing(case: IdentityCase) -> CaseResult:
    if case.id not in ("sine_vanishing_6", "sine_vanishing_7"):
        raise ValueError(f"{case.id!r} is not a sine-vanishing identity")
    return get_descriptor(case.id).check(case.as_dict())


def check_combinatorial(case: IdentityCase) -> CaseResult:
    """Check one q=1 combinatorial identity with big-integer binomials."""
    desc = get_descriptor(case.id)
    if desc.kind != KIND_COMBINATORIAL:
        raise ValueError(f"{case.id!r} is not a combinatorial identity")
    return desc.check(case.as_dict())


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


def _rng(hi: int) -> list[int]:
    return list(range(hi + 1))


def _build_registry() -> list[IdentityDescriptor]:
    entries: list[IdentityDescriptor] = []

    def add(identity_id, kind, params, grid, check, core=False):
        entries.append(
            IdentityDescriptor(
                id=identity_id,
                kind=kind,
                params=tuple(params),
                default_grid=grid,
                check=check,
                core=core,
            )
        )

    nm10 = {"n": _rng(10), "m": _rng(10)}
    add("delta", KIND_Q_POLYNOMIAL, ("n", "m"), dict(nm10), _make_simple_q_check("delta"))
    for identity_id in ("result1", "result2", "result3", "result4", "result5", "result6"):
        add(
            identity_id,
            KIND_Q_POLYNOMIAL,
            ("n", "m"),
            dict(nm10),
            _make_simple_q_check(identity_id),
            core=True,
        )

    resdbl_grid = {
        "n": _rng(6),
        "m": _rng(6),
        "p": _rng(6),
        "a": [0, 1, 2],
        "b": [1, 2],
        "c": [1, 2],
    }
    for identity_id in RESDBL_IDS:
        add(
            identity_id,
            KIND_Q_POLYNOMIAL,
            ("n", "m", "p", "a", "b", "c"),
            dict(resdbl_grid),
            _make_resdbl_check(identity_id),
            core=True,
        )

    nm8 = {"n": _rng(8), "m": _rng(8)}
    add(
        "corollary_2_4",
        KIND_Q_POLYNOMIAL,
        ("n", "m"),
        dict(nm8),
        _make_corollary_check(_COROLLARY_2_4_RECIPE, "corollary_2_4"),
    )
    add(
        "corollary_3_4",
        KIND_Q_POLYNOMIAL,
        ("n", "m"),
        dict(nm8),
        _make_corollary_check(_COROLLARY_3_4_RECIPE, "corollary_3_4"),
    )
    add("f_theorem", KIND_Q_POLYNOMIAL, ("n", "m"), dict(nm8), _check_f_theorem)

    nmp = {"n": _rng(12), "m": _rng(12), "p": _rng(8)}
    for identity_id in (
        "theorem1",
        "theorem2",
        "theorem3",
        "theorem6",
        "theorem7",
        "theorem8",
        "theorem9",
        "theorem_simple",
        "qstar_relation",
        "sine_vanishing_6",
        "sine_vanishing_7",
    ):
        add(identity_id, KIND_COUNT_INTEGER, ("n", "m", "p"), dict(nmp), _make_count_check(identity_id))

    add(
        "pmost_chain",
        KIND_COUNT_INTEGER,
        ("n", "p"),
        {"n": _rng(15), "p": _rng(15)},
        _make_count_check("pmost_chain"),
    )
    add("pn_from_q", KIND_COUNT_INTEGER, ("n",), {"n": _rng(40)}, _make_count_check("pn_from_q"))
    add(
        "qn_double_sum",
        KIND_COUNT_INTEGER,
        ("n",),
        {"n": _rng(40)},
        _make_count_check("qn_double_sum"),
    )
    corr_grid = {"n": _rng(15), "m": _rng(15), "p": _rng(15)}
    add(
        "pnmp_correspondence",
        KIND_COUNT_INTEGER,
        ("n", "m", "p"),
        dict(corr_grid),
        _make_count_check("pnmp_correspondence"),
    )
    add(
        "qnmp_correspondence",
        KIND_COUNT_INTEGER,
        ("n", "m", "p"),
        dict(corr_grid),
        _make_count_check("qnmp_correspondence"),
    )
    add("genfun", KIND_COUNT_INTEGER, ("p",), {"p": _rng(6)}, _check_genfun_registry)

    comb_nm = {"n": _rng(20), "m": _rng(20)}
    comb_nmp = {"n": _rng(20), "m": _rng(20), "p": _rng(12)}
    for identity_id, (_, order) in _COMB_FUNCS.items():
        grid = dict(comb_nmp) if "p" in order else dict(comb_nm)
        add(identity_id, KIND_COMBINATORIAL, order, grid, _make_comb_check(identity_id))

    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids)), "registry ids must be unique"
    return entries


_REGISTRY: Optional[list[IdentityDescriptor]] = None
_REGISTRY_BY_ID: dict[str, IdentityDescriptor] = {}


def registry() -> list[IdentityDescriptor]:
    """All identity descriptors, in declaration order."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
        _REGISTRY_BY_ID.update({e.id: e for e in _REGISTRY})
    return _REGISTRY


def get_descriptor(identity_id: str) -> IdentityDescriptor:
    registry()
    try:
        return _REGISTRY_BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None


def iter_cases(desc: IdentityDescriptor, grid: Optional[dict[str, list[int]]] = None):
    """Yield parameter dicts over the grid in deterministic nested order."""
    grid = grid or desc.default_grid
    axes = [grid[name] for name in desc.params]

    def rec(i: int, acc: dict[str, int]):
        if i == len(desc.params):
            yield dict(acc)
            return
        for v in axes[i]:
            acc[desc.params[i]] = v
            yield from rec(i + 1, acc)

    yield from rec(0, {})


def evaluate_case(identity_id: str, params: dict[str, int], tamper: bool = False) -> CaseResult:
    return get_descriptor(identity_id).check(params, tamper=tamper)


def run_identity(
    identity_id: str,
    grid: Optional[dict[str, list[int]]] = None,
    tamper_first: bool = False,
) -> list[CaseResult]:
    """Evaluate one identity over a grid; module-level so worker pools can import it."""
    desc = get_descriptor(identity_id)
    results = []
    first = True
    for params in iter_cases(desc, grid):
        results.append(desc.check(params, tamper=tamper_first and first))
        first = False
    return results
