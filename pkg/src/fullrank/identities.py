"""Runnable checks for the rank / full-rank identities, inequalities and the
small-modulus injection.

Every check returns a :class:`VerificationReport`.  Rational prefactors are
cleared by multiplying through, so all comparisons are exact integer series
comparisons with zero tolerance.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import durfee
from .genfun import R2, R2_expand_sides, f_mod, partial_fraction_sides
from .partitions import (
    G_series,
    Partition,
    enumerate_partitions,
    g_mod,
    rank,
    rank_counts_enumeration,
    rank_genfun_durfee,
)
from .ring import one_minus_w_identity
from .series import TruncatedSeries, bilateral_lambert, first_discrepancy, pentagonal, pochhammer


class PreconditionError(ValueError):
    """A verifier was called outside the parameter range its statement covers."""


PASS = "pass"
FAIL = "fail"


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    order: int
    status: str
    first_discrepancy: dict | None = None
    runtime_ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == FAIL and self.first_discrepancy is None:
            raise ValueError("a failing report must carry its first discrepancy")

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "id": self.identity_id,
            "params": self.params,
            "order": self.order,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(", ", ": "))


def _window_status(n0: int) -> str:
    return f"pass-with-window({n0})"


class _Checker:
    """Accumulates labelled comparisons and keeps the first failure."""

    def __init__(self, identity_id: str, params: dict, order: int):
        self.identity_id = identity_id
        self.params = params
        self.order = order
        self.failure: dict | None = None
        self.details: dict = {}
        self.start = time.perf_counter()

    def fail(self, label: str, n, lhs, rhs):
        if self.failure is None:
            self.failure = {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
            self.details["failed_check"] = label

    def series_equal(self, label: str, lhs: TruncatedSeries, rhs: TruncatedSeries):
        hit = first_discrepancy(lhs, rhs)
        if hit is not None:
            n, a, b = hit
            self.fail(label, n, a, b)
        return hit is None

    def truth(self, label: str, ok: bool, n=None, lhs="", rhs=""):
        if not ok:
            self.fail(label, n, lhs, rhs)
        return ok

    def report(self, status: str | None = None) -> VerificationReport:
        if status is None or self.failure is not None:
            status = PASS if self.failure is None else FAIL
        return VerificationReport(
            self.identity_id,
            self.params,
            self.order,
            status,
            self.failure,
            (time.perf_counter() - self.start) * 1000.0,
            self.details,
        )


def _require(cond: bool, msg: str):
    if not cond:
        raise PreconditionError(msg)


def _inverse_of_two(t: int) -> int:
    return (t + 1) // 2


def _g_weighted(t: int, terms: Iterable[tuple[int, int, int]], order: int) -> TruncatedSeries:
    """``sum weight * g_t(a, b)`` over ``(weight, a, b)``."""
    total = TruncatedSeries.zero(order)
    for weight, a, b in terms:
        if weight:
            total = total + g_mod(t, a, b, order) * weight
    return total


# -- adjacent full-rank differences in terms of rank differences -------------


def verify_prop_3_1(t: int, r: int, order: int) -> VerificationReport:
    """t f_t(r, r+1) = sum_m (t-1-m) g_t(a_m, 2^-1 a_m) + 3 [3|t] f_3(r, r+1), a_m = r-1-3m."""
    _require(t % 2 == 1, f"t must be odd, got {t}")
    _require(0 <= r < t, f"r must lie in [0, {t})")
    chk = _Checker("prop3.1", {"t": t, "r": r}, order)
    inv2 = _inverse_of_two(t)
    lhs = f_mod(t, r, r + 1, order) * t
    rhs = _g_weighted(t, ((t - 1 - m, r - 1 - 3 * m, inv2 * (r - 1 - 3 * m)) for m in range(t)), order)
    if t % 3 == 0:
        f3 = f_mod(3, r, r + 1, order)
        chk.details["f3_is_zero"] = f3.is_zero()
        rhs = rhs + f3 * 3
    chk.series_equal("t*f_t(r,r+1)", lhs, rhs)
    return chk.report()


def _check_one_mod_three(t: int, r: int, lower: int):
    _require(t % 2 == 1, f"t must be odd, got {t}")
    _require(lower <= r <= 3 * t + 1, f"r must lie in [{lower}, {3 * t + 1}]")
    _require(r % 3 == 1, f"r must be 1 mod 3, got {r}")


def verify_prop_3_2(t: int, r: int, order: int) -> VerificationReport:
    """f_t(r, r+1) = sum_{m=1}^{(r-1)/3} g_t(3m, 2^-1 3m) for odd t, r = 1 mod 3."""
    _check_one_mod_three(t, r, 1)
    chk = _Checker("prop3.2", {"t": t, "r": r}, order)
    inv2 = _inverse_of_two(t)
    lhs = f_mod(t, r, r + 1, order)
    rhs = _g_weighted(t, ((1, 3 * m, inv2 * 3 * m) for m in range(1, (r - 1) // 3 + 1)), order)
    chk.series_equal("f_t(r,r+1)", lhs, rhs)
    return chk.report()


def verify_cor_3_3(t: int, order: int) -> VerificationReport:
    _require(t % 2 == 1 and t >= 3, f"t must be odd and >= 3, got {t}")
    chk = _Checker("cor3.3", {"t": t}, order)
    half = (t - 3) // 2
    chk.series_equal("f_t(4,5)", f_mod(t, 4, 5, order), g_mod(t, 3, half, order))
    chk.series_equal("f_t(7,8)", f_mod(t, 7, 8, order), g_mod(t, 6, half, order))
    return chk.report()


def verify_lemma_3_4(t: int, r: int, order: int) -> VerificationReport:
    _check_one_mod_three(t, r, 2)
    chk = _Checker("lemma3.4", {"t": t, "r": r}, order)
    half = (t - 3) // 2
    upper = math.ceil((r - 1) / 6) - 1
    rhs = _g_weighted(t, ((1, r - 1 - 3 * m, half - 3 * m) for m in range(upper + 1)), order)
    chk.series_equal("f_t(r,r+1)", f_mod(t, r, r + 1, order), rhs)
    return chk.report()


# -- NF_2(1, t; n) against NF_2(2, t; n) ----------------------------------------


def verify_prop_4_1(t: int, order: int) -> VerificationReport:
    """2 f_t(1, 2) = -g_t(t/2) for even t, and g_t(t/2) has even coefficients."""
    _require(t % 2 == 0 and t >= 2, f"t must be even, got {t}")
    chk = _Checker("prop4.1", {"t": t}, order)
    g_half = g_mod(t, t // 2, None, order)
    chk.series_equal("2*f_t(1,2)", f_mod(t, 1, 2, order) * 2, -g_half)
    for n, c in enumerate(g_half.data.tolist()):
        if not chk.truth("g_t(t/2) even", c % 2 == 0, n, c, "even"):
            break
    return chk.report()


def verify_thm_1_3_1(t: int, order: int) -> VerificationReport:
    _require(t % 2 == 1, f"t must be odd, got {t}")
    chk = _Checker("thm1.3.1", {"t": t}, order)
    chk.series_equal("f_t(1,2)", f_mod(t, 1, 2, order), TruncatedSeries.zero(order))
    return chk.report()


def equality_set_even(t: int, order: int) -> list[int]:
    """The sizes n <= order with NF_2(1, t; n) = NF_2(2, t; n) claimed for even t."""
    return [n for n in list(range(t // 2 + 1)) + [t // 2 + 2] if n <= order]


def verify_thm_1_3_2(t: int, order: int) -> VerificationReport:
    _require(t % 2 == 0 and t >= 2, f"t must be even, got {t}")
    chk = _Checker("thm1.3.2", {"t": t}, order)
    diff = f_mod(t, 1, 2, order).data.tolist()
    for n, c in enumerate(diff):
        if not chk.truth("f_t(1,2) <= 0", c <= 0, n, c, "<= 0"):
            break
    zeros = [n for n, c in enumerate(diff) if c == 0]
    expected = equality_set_even(t, order)
    chk.details["zeros"] = zeros
    if zeros != expected:
        n = min(set(zeros) ^ set(expected))
        chk.fail("equality set", n, "zero" if n in zeros else diff[n], "zero" if n in expected else "nonzero")
    sub = verify_prop_4_1(t, order)
    if not sub.passed:
        chk.fail("prop4.1: " + sub.details.get("failed_check", ""), **sub.first_discrepancy)
    return chk.report()


def verify_thm_1_3_3(order: int, enumeration_order: int = 25) -> VerificationReport:
    """NF_2(1; n) = NF_2(2; n) for exact full rank.

    Sizes up to ``enumeration_order`` are checked by walking every symbol.  The
    remaining sizes up to ``order`` use the series at an odd modulus larger than
    twice the largest possible |full rank| + 1, where classes 1 and 2 contain
    only the exact full ranks 1 and 2.
    """
    enum_to = min(order, enumeration_order)
    t_big = 2 * order + 3
    chk = _Checker("thm1.3.3", {"enumeration_order": enum_to, "series_modulus": t_big}, order)
    dist = durfee.full_rank_distribution(enum_to)
    one, two = durfee.nf2_exact(1, enum_to, dist), durfee.nf2_exact(2, enum_to, dist)
    for n in range(enum_to + 1):
        if not chk.truth("enumeration NF2(1;n)=NF2(2;n)", one[n] == two[n], n, one[n], two[n]):
            break
    if order > enum_to:
        F = R2(t_big, order)
        chk.series_equal("series NF2(1;n)=NF2(2;n)", F.component(1), F.component(2))
    return chk.report()


def rank_half_witness(t: int, n: int) -> Partition | None:
    """A partition of n with rank exactly t/2, following the two explicit families."""
    h = t // 2
    if n < h + 1 or n == h + 2:
        return None
    k = n - h
    if k % 2 == 1:
        m = (k + 1) // 2
        return Partition((m + h,) + (1,) * (m - 1))
    m = k // 2
    return Partition((m + h, 2) + (1,) * (m - 2))


def verify_rank_t2_witnesses(t: int, n_max: int) -> VerificationReport:
    _require(t % 2 == 0 and t >= 2, f"t must be even, got {t}")
    chk = _Checker("rank-t2-witnesses", {"t": t}, n_max)
    h = t // 2
    for n in range(h + 1, n_max + 1):
        if n == h + 2:
            continue
        p = rank_half_witness(t, n)
        if not chk.truth("witness", p is not None and p.n == n and rank(p) == h, n, p, f"rank {h}"):
            break
    if h + 2 <= n_max:
        bad = [p for p in enumerate_partitions(h + 2) if abs(rank(p)) == h]
        chk.truth("no rank +-t/2 at t/2+2", not bad, h + 2, bad[:1], "none")
    return chk.report()


# -- t = 5 and t = 7 class identities -------------------------------------------


def _class_source_order(t: int, order: int) -> int:
    # class series of order `order` need sizes up to t*order + t - 1
    return t * order + t - 1


def _f_cls(t: int, r: int, s: int, d: int, order: int) -> TruncatedSeries:
    size = _class_source_order(t, order)
    return f_mod(t, r, s, size).arithmetic_subsequence(d, t).truncate(order)


def progression_product(order: int, num_step: int, den_starts: tuple[int, ...]) -> TruncatedSeries:
    """``(q^step; q^step)_inf / prod (q^a; q^step)_inf``."""
    out = TruncatedSeries.one(order).mul_euler(num_step, num_step)
    for a in den_starts:
        out = out.div_euler(a, num_step)
    return out


def thm_5_1_lambert(order: int) -> TruncatedSeries:
    """q/(q^5;q^5)_inf sum_n (-1)^n q^(15n(n+1)/2) / (1 - q^(5n+1))."""
    lam = bilateral_lambert(lambda n: 15 * n * (n + 1) // 2, lambda n: 5 * n + 1,
                            lambda n: -1 if n % 2 else 1, order)
    return lam.shift(1).div_euler(5, 5)


def thm_5_2_lambert(order: int) -> TruncatedSeries:
    """-q^2/(q^7;q^7)_inf sum_n (-1)^n q^(21n(n+1)/2) / (1 - q^(7n+3))."""
    lam = bilateral_lambert(lambda n: 21 * n * (n + 1) // 2, lambda n: 7 * n + 3,
                            lambda n: -1 if n % 2 else 1, order)
    return -lam.shift(2).div_euler(7, 7)


def verify_thm_5_1(part: int, order: int) -> VerificationReport:
    """``order`` is the order of the class series f_{5,d}(0, s; q)."""
    _require(part in (1, 2, 3), f"part must be 1, 2 or 3, got {part}")
    chk = _Checker(f"thm5.1.{part}", {"part": part}, order)
    size = _class_source_order(5, order)
    if part == 1:
        zero = TruncatedSeries.zero(order)
        for s in range(1, 5):
            for d in (1, 4):
                chk.series_equal(f"f_5,{d}(0,{s})", _f_cls(5, 0, s, d, order), zero)
        for r in range(1, 5):
            for s in range(1, 5):
                chk.series_equal(f"f_5({r},{s})", f_mod(5, r, s, size), TruncatedSeries.zero(size))
        g12 = g_mod(5, 1, 2, size)
        for s in range(1, 5):
            chk.series_equal(f"f_5(0,{s}) = g_5(1,2)", f_mod(5, 0, s, size), g12)
    elif part == 2:
        prod = progression_product(order, 5, (2, 3))
        chk.truth("product constant term", prod[0] == 1, 0, prod[0], 1)
        for s in range(1, 5):
            chk.series_equal(f"f_5,2(0,{s})", _f_cls(5, 0, s, 2, order), prod)
    else:
        rhs = thm_5_1_lambert(order)
        for s in range(1, 5):
            chk.series_equal(f"f_5,0(0,{s})", _f_cls(5, 0, s, 0, order), rhs)
    return chk.report()


def verify_thm_5_2(part: int, order: int) -> VerificationReport:
    """``order`` is the order of the class series f_{7,d}(r, s; q)."""
    _require(part in (1, 2, 3, 4), f"part must be 1..4, got {part}")
    chk = _Checker(f"thm5.2.{part}", {"part": part}, order)
    size = _class_source_order(7, order)
    if part == 1:
        zero = TruncatedSeries.zero(order)
        for r in range(4):
            for s in range(r + 1, 4):
                for d in (1, 5):
                    chk.series_equal(f"f_7,{d}({r},{s})", _f_cls(7, r, s, d, order), zero)
        chk.series_equal("f_7,0(1,3)", _f_cls(7, 1, 3, 0, order), zero)
        chk.series_equal("f_7(0,1) = g_7(1,2)", f_mod(7, 0, 1, size), g_mod(7, 1, 2, size))
        chk.series_equal("f_7(2,3) = g_7(2,3)", f_mod(7, 2, 3, size), g_mod(7, 2, 3, size))
    elif part == 2:
        chk.series_equal("f_7,2(1,3)", _f_cls(7, 1, 3, 2, order), thm_5_2_lambert(order))
    elif part == 3:
        prod = progression_product(order, 7, (2, 5))
        chk.truth("product constant term", prod[0] == 1, 0, prod[0], 1)
        chk.series_equal("f_7,3(1,3)", _f_cls(7, 1, 3, 3, order), prod)
        chk.series_equal("-f_7,3(0,1)", -_f_cls(7, 0, 1, 3, order), prod)
    else:
        prod = progression_product(order, 7, (3, 4))
        chk.truth("product constant term", prod[0] == 1, 0, prod[0], 1)
        chk.series_equal("f_7,4(0,1)", _f_cls(7, 0, 1, 4, order), prod)
        chk.series_equal("-f_7,4(1,3)", -_f_cls(7, 1, 3, 4, order), prod)
    return chk.report()


# -- t = 4 and the rank 2 mod 4 map ---------------------------------------------


def _at_root(R: TruncatedSeries, j: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Real and imaginary parts of a t=4 group ring series at w = i^j."""
    comps = R.components()
    re = TruncatedSeries.zero(R.order)
    im = TruncatedSeries.zero(R.order)
    for a, c in enumerate(comps):
        k = (a * j) % 4
        if k == 0:
            re = re + c
        elif k == 1:
            im = im + c
        elif k == 2:
            re = re - c
        else:
            im = im - c
    return re, im


def _re_i_power(k: int) -> int:
    return (1, 0, -1, 0)[k % 4]


def verify_f4_decomposition(order: int) -> VerificationReport:
    """16 f_4(r, s) = 2c R(i) + (-2c + (-1)^s - (-1)^r) R(-1) + ((-1)^r - (-1)^s) R(1),
    c = i^r + i^-r - i^s - i^-s, together with the g_4 expansions of R(1), R(-1),
    R(i) and the two consequences for f_4(0, 2) and f_4(0, 1)."""
    chk = _Checker("f4", {}, order)
    R = rank_genfun_durfee(4, order)
    R1, R1_im = _at_root(R, 0)
    Rm1, Rm1_im = _at_root(R, 2)
    Ri, Ri_im = _at_root(R, 1)
    zero = TruncatedSeries.zero(order)
    chk.series_equal("Im R(i) = 0", Ri_im, zero)
    g = lambda a, b=None: g_mod(4, a, b, order)
    chk.series_equal("R(1) = g4(0)+2g4(1)+g4(2)", R1, g(0) + g(1) * 2 + g(2))
    chk.series_equal("R(-1) = g4(0,1)+g4(2,1)", Rm1, g(0, 1) + g(2, 1))
    chk.series_equal("R(i) = g4(0,2)", Ri, g(0, 2))
    for r in range(4):
        for s in range(4):
            c = 2 * _re_i_power(r) - 2 * _re_i_power(s)
            sr, ss = (-1) ** r, (-1) ** s
            rhs = Ri * (2 * c) + Rm1 * (-2 * c + ss - sr) + R1 * (sr - ss)
            chk.series_equal(f"16 f4({r},{s})", f_mod(4, r, s, order) * 16, rhs)
    chk.series_equal("f4(0,2) = g4(1,2)", f_mod(4, 0, 2, order), g(1, 2))
    g2_1 = g_mod(2, 1, None, order)
    chk.series_equal("2 g4(1) = g2(1)", g(1) * 2, g2_1)
    f01 = f_mod(4, 0, 1, order) * 2
    chk.series_equal("2 f4(0,1) = 2g4(1) - g4(2)", f01, g(1) * 2 - g(2))
    chk.series_equal("2 f4(0,1) = g2(1) - g4(2)", f01, g2_1 - g(2))
    coeffs = g(1, 2).data.tolist()
    for n in range(2, order + 1):
        ok = coeffs[n] > 0 if n % 2 == 0 else coeffs[n] < 0
        if not chk.truth("sign of g4(1,2)", ok, n, coeffs[n], ">0" if n % 2 == 0 else "<0"):
            break
    return chk.report()


def verify_refined_andrews_lewis(n_max: int) -> VerificationReport:
    """N(1,4;2n-1) < N(2,4;2n-1) < 2 N(1,4;2n-1) for 5 <= n <= n_max, and
    N(1,2;m) > N(2,4;m) for odd 13 <= m <= 2 n_max - 1."""
    _require(n_max >= 5, "n_max must be at least 5")
    size = 2 * n_max - 1
    chk = _Checker("andrews-lewis-refined", {"n_max": n_max}, size)
    R4 = rank_genfun_durfee(4, size)
    N1, N2 = R4.component(1).data.tolist(), R4.component(2).data.tolist()
    below = []
    for n in range(1, n_max + 1):
        m = 2 * n - 1
        holds = N1[m] < N2[m] < 2 * N1[m]
        if n < 5:
            if not holds:
                below.append(n)
        elif not chk.truth("N(1,4)<N(2,4)<2N(1,4)", holds, m, (N1[m], N2[m]), "strict window"):
            break
    chk.details["violations_below_5"] = below
    chk.truth("threshold is sharp", bool(below) and max(below) == 4, 7, below, "violation at n=4")
    N12 = rank_genfun_durfee(2, size).component(1).data.tolist()
    for m in range(13, size + 1, 2):
        if not chk.truth("N(1,2;m) > N(2,4;m)", N12[m] > N2[m], m, N12[m], N2[m]):
            break
    return chk.report()


class InjectionError(ValueError):
    pass


def injection_case(p: Partition) -> int:
    """Which of the four rules applies; the second part of a one-part partition is 0."""
    l1 = p.parts[0]
    l2 = p.parts[1] if len(p.parts) > 1 else 0
    matches = []
    if l1 >= l2 + 2 and (l1, l2) != (3, 1):
        matches.append(1)
    if (l1, l2) == (3, 1):
        matches.append(2)
    if l1 < l2 + 2 and l2 != 1:
        matches.append(3)
    if l1 < l2 + 2 and l2 == 1:
        matches.append(4)
    if len(matches) != 1:
        raise RuntimeError(f"{p}: rules {matches} apply, expected exactly one")
    return matches[0]


def _remove_ones(parts: list[int], k: int, p: Partition) -> list[int]:
    if parts.count(1) < k:
        raise RuntimeError(f"{p}: rule needs {k} further parts of size 1")
    for _ in range(k):
        parts.remove(1)
    return parts


def injection_map(p: Partition) -> Partition:
    """Map a partition of odd n >= 13 with rank = 2 mod 4 to one with odd rank.

    (1) l1 >= l2 + 2, (l1, l2) != (3, 1): l1 -> l1 - 2 and add a part 2.
    (2) (l1, l2) = (3, 1): l1 -> 4, l2 -> 4, drop four further 1s.
    (3) l1 < l2 + 2, l2 != 1: l2 -> l2 - 1 and add a part 1.
    (4) l1 < l2 + 2, l2 = 1: l1 -> l1 + 6, l2 -> 4, drop nine further 1s.
    """
    n = p.n
    if n % 2 == 0 or n < 13 or rank(p) % 4 != 2:
        raise InjectionError(f"{p} is outside the domain (odd n >= 13, rank = 2 mod 4)")
    case = injection_case(p)
    parts = list(p.parts)
    if case == 1:
        parts[0] -= 2
        parts.append(2)
    elif case == 2:
        rest = _remove_ones(parts[2:], 4, p)
        parts = [4, 4] + rest
    elif case == 3:
        parts[1] -= 1
        parts.append(1)
    else:
        rest = _remove_ones(parts[2:], 9, p)
        parts = [parts[0] + 6, 4] + rest
    image = Partition.from_parts(parts)
    if image.n != n:
        raise RuntimeError(f"{p}: rule {case} changed the size")
    return image


def injection_domain(n: int) -> Iterable[Partition]:
    return (p for p in enumerate_partitions(n) if rank(p) % 4 == 2)


def non_image_witness(n: int) -> Partition:
    """(n-3, 3) or (n-4, 4), whichever has odd rank; neither has a part 1 or 2."""
    for k in (3, 4):
        p = Partition((n - k, k))
        if rank(p) % 2 == 1:
            return p
    raise RuntimeError(f"no witness for n={n}")


def injection_survey(n: int) -> dict:
    """Exhaustive facts about the map on partitions of n."""
    images: dict[Partition, Partition] = {}
    cases_of: dict[Partition, set[int]] = {}
    collisions = []
    rank_classes: dict[int, set[int]] = {}
    odd = True
    for p in injection_domain(n):
        case = injection_case(p)
        img = injection_map(p)
        odd = odd and rank(img) % 2 == 1
        rank_classes.setdefault(case, set()).add(rank(img) % 4)
        cases_of.setdefault(img, set()).add(case)
        if img in images:
            collisions.append((images[img], p, img))
        else:
            images[img] = p
    witness = non_image_witness(n)
    return {
        "domain_size": len(images) + len(collisions),
        "odd_rank_images": odd,
        "collisions": collisions,
        "rank_classes_by_case": {k: sorted(v) for k, v in sorted(rank_classes.items())},
        "cases_disjoint": all(len(c) == 1 for c in cases_of.values()),
        "witness": witness,
        "witness_outside_image": witness not in images
        and all(x > 2 for x in witness.parts),
    }


def verify_injection(n_max: int, n_min: int = 13) -> VerificationReport:
    chk = _Checker("injection", {"n_min": n_min}, n_max)
    collisions = {}
    for n in range(n_min | 1, n_max + 1, 2):
        info = injection_survey(n)
        chk.truth("odd rank image", info["odd_rank_images"], n, "even rank image", "odd")
        chk.truth("images of different rules disjoint", info["cases_disjoint"], n, "overlap", "disjoint")
        chk.truth("non-image witness", info["witness_outside_image"], n, info["witness"], "not in image")
        if info["collisions"]:
            a, b, img = info["collisions"][0]
            collisions[n] = len(info["collisions"])
            chk.fail("injective", n, f"{a} -> {img}", f"{b} -> {img}")
    chk.details["collisions_per_n"] = collisions
    return chk.report()


# -- inequality scans -----------------------------------------------------------


POSITIVE = "all-positive-from"
NEGATIVE = "all-negative-from"
ZERO = "identically-zero"
MIXED = "mixed"


@dataclass(frozen=True)
class ClassPattern:
    d: int | None
    pattern: str
    n0: int | None
    zeros: tuple[int, ...]
    values: tuple[tuple[int, int], ...] = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {"d": self.d, "pattern": self.pattern, "n0": self.n0}
        if self.pattern != ZERO:
            out["zeros"] = list(self.zeros)
        return out


@dataclass(frozen=True)
class InequalityScan:
    t: int
    r: int
    s: int
    window: tuple[int, int]
    by_class: bool
    classes: tuple[ClassPattern, ...]

    def __getitem__(self, d: int | None) -> ClassPattern:
        for c in self.classes:
            if c.d == d:
                return c
        raise KeyError(d)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "r": self.r,
            "s": self.s,
            "window": list(self.window),
            "by_class": self.by_class,
            "classes": [c.to_dict() for c in self.classes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


def _classify(d, values: list[tuple[int, int]]) -> ClassPattern:
    zeros = tuple(n for n, v in values if v == 0)
    if not values or len(zeros) == len(values):
        return ClassPattern(d, ZERO, values[0][0] if values else None, zeros, tuple(values))
    last = values[-1][1]
    if last == 0:
        return ClassPattern(d, MIXED, None, zeros, tuple(values))
    sign = 1 if last > 0 else -1
    i = len(values) - 1
    while i > 0 and values[i - 1][1] * sign > 0:
        i -= 1
    return ClassPattern(d, POSITIVE if sign > 0 else NEGATIVE, values[i][0], zeros, tuple(values))


def scan_inequality(t: int, r: int, s: int, n_lo: int, n_hi: int, by_class: bool = False) -> InequalityScan:
    """Sign of NF_2(r, t; n) - NF_2(s, t; n) over n_lo <= n <= n_hi.

    Per class, ``n0`` is the smallest size from which every size of the class
    in the window has the sign of the last value.
    """
    if not 0 <= n_lo <= n_hi:
        raise ValueError(f"bad window [{n_lo}, {n_hi}]")
    diff = f_mod(t, r, s, n_hi).data.tolist()
    if by_class:
        classes = tuple(
            _classify(d, [(n, diff[n]) for n in range(n_lo, n_hi + 1) if n % t == d]) for d in range(t)
        )
    else:
        classes = (_classify(None, [(n, diff[n]) for n in range(n_lo, n_hi + 1)]),)
    return InequalityScan(t, r, s, (n_lo, n_hi), by_class, classes)


@dataclass(frozen=True)
class SignClaim:
    """NF_2(r, t; m k + d) <rel> NF_2(s, t; m k + d) for class indices k.

    ``ks`` is either an explicit tuple of indices or ``(start, None)`` meaning
    every k >= start.
    """

    source: str
    t: int
    r: int
    s: int
    m: int
    d: int
    rel: str
    ks: tuple

    def indices(self, max_size: int) -> list[int]:
        top = (max_size - self.d) // self.m
        if len(self.ks) == 2 and self.ks[1] is None:
            return list(range(self.ks[0], top + 1))
        return [k for k in self.ks if k <= top]

    def holds(self, diff: int) -> bool:
        return {">": diff > 0, "<": diff < 0, "=": diff == 0, ">=": diff >= 0}[self.rel]

    def describe(self) -> str:
        ks = f"k>={self.ks[0]}" if self.ks[1:] == (None,) else f"k in {set(self.ks)}"
        return f"NF2({self.r},{self.t};{self.m}k+{self.d}) {self.rel} NF2({self.s},{self.t};{self.m}k+{self.d}), {ks}"


def _claims() -> dict[str, list[SignClaim]]:
    c = SignClaim
    small4 = [
        c("t=2 (0,1)", 2, 0, 1, 1, 0, ">=", (0, None)),
        c("t=2 (0,1)", 2, 0, 1, 1, 0, ">", (2,)),
        c("t=2 (0,1)", 2, 0, 1, 1, 0, ">", (4, None)),
        c("t=2 (0,1)", 2, 0, 1, 1, 0, "=", (0, 1, 3)),
        c("t=4 (1,2)", 4, 1, 2, 1, 0, "<", (3,)),
        c("t=4 (1,2)", 4, 1, 2, 1, 0, "<", (5, None)),
        c("t=4 (1,2)", 4, 1, 2, 1, 0, "=", (0, 1, 2, 4)),
    ]
    t4_classes = [
        c("t=4 even sizes", 4, 0, 1, 2, 0, ">", (1, None)),
        c("t=4 even sizes", 4, 0, 2, 2, 0, ">", (1, None)),
        c("t=4 (0,1) odd sizes", 4, 0, 1, 2, 1, ">", (4, None)),
        c("t=4 (0,1) odd sizes", 4, 0, 1, 2, 1, "=", (0, 2)),
        c("t=4 (0,1) odd sizes", 4, 0, 1, 2, 1, "<", (1, 3)),
        c("t=4 (0,2) odd sizes", 4, 0, 2, 2, 1, "<", (1, None)),
        c("t=4 (0,2) odd sizes", 4, 0, 2, 2, 1, "=", (0,)),
    ]
    t5_t7 = []
    for s in range(1, 5):
        t5_t7 += [
            c("t=5 5n+2", 5, 0, s, 5, 2, ">=", (0, None)),
            c("t=5 5n+2", 5, 0, s, 5, 2, ">", (6, None)),
            c("t=5 5n", 5, 0, s, 5, 0, ">", (1, None)),
            c("t=5 5n+3", 5, 0, s, 5, 3, "<", (0, None)),
        ]
    t5_t7 += [
        c("t=7 (0,1)", 7, 0, 1, 7, 0, ">", (20, None)),
        c("t=7 (0,1)", 7, 1, 3, 7, 0, "=", (20, None)),
        c("t=7 (0,1)", 7, 0, 1, 7, 2, ">", (0, None)),
        c("t=7 (0,1)", 7, 0, 1, 7, 3, "<", (8, None)),
        c("t=7 (0,1)", 7, 0, 1, 7, 4, ">", (8, None)),
        c("t=7 (0,1)", 7, 0, 1, 7, 6, "<", (5, None)),
        c("t=7 (0,3)", 7, 0, 3, 7, 2, ">", (0, None)),
        c("t=7 (0,3)", 7, 0, 3, 7, 6, "<", (2, None)),
        c("t=7 (1,3)", 7, 1, 3, 7, 2, "<", (8, None)),
        c("t=7 (1,3)", 7, 1, 3, 7, 3, ">", (8, None)),
        c("t=7 (1,3)", 7, 1, 3, 7, 4, "<", (8, None)),
        c("t=7 (1,3)", 7, 1, 3, 7, 6, ">", (0, None)),
    ]
    return {"signs-t4": small4 + t4_classes, "signs-t5-t7": t5_t7}


SIGN_CLAIMS = _claims()


def check_sign_claim(claim: SignClaim, max_size: int) -> tuple[bool, int | None, int | None]:
    """``(holds, first failing size, difference there)`` within sizes <= max_size."""
    diff = f_mod(claim.t, claim.r, claim.s, max_size).data.tolist()
    for k in claim.indices(max_size):
        n = claim.m * k + claim.d
        if not claim.holds(diff[n]):
            return False, n, diff[n]
    return True, None, None


def _verify_claims(identity_id: str, max_size: int) -> VerificationReport:
    chk = _Checker(identity_id, {}, max_size)
    failed = []
    for claim in SIGN_CLAIMS[identity_id]:
        ok, n, v = check_sign_claim(claim, max_size)
        if not ok:
            failed.append(claim.describe())
            chk.fail(claim.describe(), n, v, f"{claim.rel} 0")
    chk.details["failed_claims"] = failed
    return chk.report()


def verify_signs_t4(max_size: int) -> VerificationReport:
    return _verify_claims("signs-t4", max_size)


def verify_signs_t5_t7(max_size: int) -> VerificationReport:
    return _verify_claims("signs-t5-t7", max_size)


def verify_tail_positivity(t: int, max_size: int) -> VerificationReport:
    """Every admissible (r, s) scans as eventually positive; status records the largest n0."""
    _require(t > 7 and math.gcd(t, 6) == 1, f"t must exceed 7 and be coprime to 6, got {t}")
    chk = _Checker("tail-positivity", {"t": t}, max_size)
    n0s = {}
    for r in range(0, (t - 1) // 2 + 1):
        for s in range(r + 1, (t - 1) // 2 + 1):
            if (r, s) == (1, 2):
                continue
            pat = scan_inequality(t, r, s, 0, max_size)[None]
            n0s[f"{r},{s}"] = pat.n0
            chk.truth(f"({r},{s}) tail-positive", pat.pattern == POSITIVE, max_size, pat.pattern, POSITIVE)
    chk.details["n0"] = n0s
    return chk.report(_window_status(max(n0s.values())) if n0s else None)


# -- structural identities ---------------------------------------------------------


def verify_r2_equivalence(t: int, order: int) -> VerificationReport:
    from .genfun import R2_double_sum, R2_lambert

    chk = _Checker("r2-equiv", {"t": t}, order)
    chk.series_equal("double sum = Lambert form", R2_double_sum(t, order), R2_lambert(t, order))
    return chk.report()


def verify_r2_expand(t: int, order: int) -> VerificationReport:
    chk = _Checker("r2-expand", {"t": t}, order)
    chk.series_equal("(x-x^2)(1-x^-3) R2 = R(x)-R(x^2)", *R2_expand_sides(t, order))
    return chk.report()


def verify_partial_fraction(t: int, order: int) -> VerificationReport:
    chk = _Checker("partial-fraction", {"t": t}, order)
    chk.series_equal("(x-y+1/x-1/y) R2 = G(x)-G(y)", *partial_fraction_sides(t, order))
    return chk.report()


def verify_r_equals_one_plus_g(t: int, order: int) -> VerificationReport:
    chk = _Checker("r-equals-1-plus-g", {"t": t}, order)
    chk.series_equal("R = 1 + G", rank_genfun_durfee(t, order), 1 + G_series(t, order))
    return chk.report()


def verify_pentagonal(order: int) -> VerificationReport:
    chk = _Checker("pentagonal", {}, order)
    chk.series_equal("(q)_inf", pochhammer(1, 1, None, 1, order), pentagonal(order))
    return chk.report()


def verify_zetainv(t: int) -> VerificationReport:
    chk = _Checker("zetainv", {"t": t}, 0)
    product, expected = one_minus_w_identity(t)
    chk.truth("(1-w) sum (t-1-m) w^m = t - sum w^m", product == expected, 0, product, expected)
    return chk.report()


def verify_nf2_oracle(t: int, order: int, dist=None) -> VerificationReport:
    """Enumerated NF_2(r, t; n) against both series forms."""
    from .genfun import R2_double_sum, R2_lambert
    from .partitions import Provenance, RankTable

    chk = _Checker("nf2-oracle", {"t": t}, order)
    table = durfee.full_rank_counts_enumeration(t, order, dist)
    for name, build in (("double-sum", R2_double_sum), ("lambert", R2_lambert)):
        other = RankTable.from_series(build(t, order), Provenance.ENUMERATION)
        for r in range(t):
            for n in range(order + 1):
                if table.counts[r][n] != other.counts[r][n]:
                    chk.fail(f"{name} r={r}", n, table.counts[r][n], other.counts[r][n])
                    break
    return chk.report()


def verify_rank_oracle(t: int, order: int) -> VerificationReport:
    chk = _Checker("rank-oracle", {"t": t}, order)
    table = rank_counts_enumeration(t, order)
    for label, s in (("durfee sum", rank_genfun_durfee(t, order)), ("1 + G", 1 + G_series(t, order))):
        for r in range(t):
            chk.series_equal(f"{label} r={r}", s.component(r), TruncatedSeries.from_coefficients(table.counts[r]))
    return chk.report()


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """A registry entry: ``run(order, t=None, r=None)`` returns reports.

    With ``t`` (and ``r``) left unset the check runs over its default
    parameter set.
    """

    identity_id: str
    description: str
    run: Callable[..., list[VerificationReport]]


ODD_TS = (3, 5, 7, 9, 11, 13, 15)
EVEN_TS = (2, 4, 6, 8, 10, 12)


def _over_t(verifier, ts, parity=None):
    def run(order, t=None, r=None):
        if t is not None and parity is not None and t % 2 != parity:
            raise PreconditionError(f"t must be {'odd' if parity else 'even'}, got {t}")
        return [verifier(x, order) for x in ((t,) if t is not None else ts)]

    return run


def _over_t_r(verifier, ts, residues):
    def run(order, t=None, r=None):
        if t is not None and t % 2 == 0:
            raise PreconditionError(f"t must be odd, got {t}")
        out = []
        for x in (t,) if t is not None else ts:
            for y in (r,) if r is not None else residues(x):
                out.append(verifier(x, y, order))
        return out

    return run


def _one_mod_three(lower):
    return lambda t: [r for r in range(lower, 3 * t + 2) if r % 3 == 1]


def _fixed(verifier, *args, scale=lambda order: order):
    return lambda order, t=None, r=None: [verifier(*args, scale(order))]


def _class_order(order: int) -> int:
    return max(1, order)


REGISTRY: dict[str, Check] = {}


def _register(identity_id: str, description: str, run):
    REGISTRY[identity_id] = Check(identity_id, description, run)


_register("zetainv", "(1-w) sum (t-1-m) w^m = t - sum w^m",
          lambda order, t=None, r=None: [verify_zetainv(x) for x in ((t,) if t else range(2, 16))])
_register("pentagonal", "(q)_inf by Euler's pentagonal theorem", _fixed(verify_pentagonal))
_register("rank-oracle", "rank tables: enumeration = Durfee sum = 1 + G",
          _over_t(verify_rank_oracle, tuple(range(1, 13))))
_register("r-equals-1-plus-g", "R(w) = 1 + G(w)", _over_t(verify_r_equals_one_plus_g, tuple(range(2, 13))))
_register("nf2-oracle", "full-rank tables: enumeration = both series forms",
          _over_t(lambda t, order: verify_nf2_oracle(t, min(order, 16)), tuple(range(2, 11))))
_register("r2-equiv", "double-sum and Lambert forms of R_2 agree",
          _over_t(verify_r2_equivalence, tuple(range(2, 11))))
_register("r2-expand", "(x-x^2)(1-x^-3) R_2(x,x^2) = R(x) - R(x^2)", _over_t(verify_r2_expand, (3, 5, 9)))
_register("partial-fraction", "(x-y+1/x-1/y) R_2(x,y) = G(x) - G(y)",
          _over_t(verify_partial_fraction, (2, 4, 6)))
_register("prop3.1", "t f_t(r,r+1) as a weighted sum of rank differences",
          _over_t_r(verify_prop_3_1, (5, 7, 9, 11, 13, 15), range))
_register("prop3.2", "f_t(r,r+1) for r = 1 mod 3", _over_t_r(verify_prop_3_2, (5, 7, 9, 11), _one_mod_three(1)))
_register("cor3.3", "f_t(4,5) and f_t(7,8)", _over_t(verify_cor_3_3, ODD_TS[1:], parity=1))
_register("lemma3.4", "f_t(r,r+1) via g_t(r-1-3m, (t-3)/2-3m)",
          _over_t_r(verify_lemma_3_4, (5, 7, 9, 11), _one_mod_three(2)))
_register("prop4.1", "2 f_t(1,2) = -g_t(t/2), even coefficients", _over_t(verify_prop_4_1, EVEN_TS, parity=0))
_register("rank-t2-witnesses", "partitions of rank t/2 for even t",
          _over_t(verify_rank_t2_witnesses, EVEN_TS, parity=0))
_register("thm1.3.1", "NF_2(1,t;n) = NF_2(2,t;n) for odd t", _over_t(verify_thm_1_3_1, ODD_TS, parity=1))
_register("thm1.3.2", "NF_2(1,t;n) <= NF_2(2,t;n) for even t, equality set",
          _over_t(verify_thm_1_3_2, EVEN_TS, parity=0))
_register("thm1.3.3", "NF_2(1;n) = NF_2(2;n)", _fixed(verify_thm_1_3_3))
for _part in (1, 2, 3):
    _register(f"thm5.1.{_part}", f"t = 5 identities, part {_part}",
              _fixed(verify_thm_5_1, _part, scale=_class_order))
for _part in (1, 2, 3, 4):
    _register(f"thm5.2.{_part}", f"t = 7 identities, part {_part}",
              _fixed(verify_thm_5_2, _part, scale=_class_order))
_register("f4", "t = 4 decomposition through R(1), R(-1), R(i)", _fixed(verify_f4_decomposition))
_register("andrews-lewis-refined", "N(1,4;2n-1) < N(2,4;2n-1) < 2N(1,4;2n-1) and N(1,2) > N(2,4)",
          _fixed(verify_refined_andrews_lewis, scale=lambda order: max(5, (order + 1) // 2)))
_register("injection", "rank 2 mod 4 to odd rank map for odd n >= 13",
          _fixed(verify_injection, scale=lambda order: min(max(order, 13), 41)))
_register("signs-t4", "sign patterns for t = 2 and t = 4", _fixed(verify_signs_t4, scale=lambda order: 3 * order))
_register("signs-t5-t7", "sign patterns for t = 5 and t = 7", _fixed(verify_signs_t5_t7, scale=lambda order: 3 * order))
_register("tail-positivity", "eventual positivity for t > 7 coprime to 6",
          lambda order, t=None, r=None: [verify_tail_positivity(x, 3 * order) for x in ((t,) if t else (11, 13))])


def run_check(identity_id: str, order: int, t: int | None = None, r: int | None = None) -> list[VerificationReport]:
    try:
        check = REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None
    return check.run(order, t=t, r=r)


def run_all(order: int, threads: int = 1, ids: Iterable[str] | None = None) -> list[VerificationReport]:
    """Run every registered check; reports come back in registry order whatever ``threads`` is."""
    from concurrent.futures import ThreadPoolExecutor

    ids = list(REGISTRY) if ids is None else list(ids)
    if threads <= 1:
        batches = [run_check(i, order) for i in ids]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(lambda i: run_check(i, order), ids))
    return [report for batch in batches for report in batch]


def reports_to_jsonl(reports: Iterable[VerificationReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)
