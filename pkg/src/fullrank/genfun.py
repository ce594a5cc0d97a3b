"""Full-rank generating functions R_2(x, x^2; q) and their differences.

x is realised as the generator w of Z[w]/(w^t - 1).  Component r of the
coefficient of q^n in R_2(w, w^2; q) is NF_2(r, t; n), so every f-series below
is a component read; no root-of-unity averaging and no division by t.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from ._cache import series_cache
from .partitions import G_series, rank_genfun_durfee
from .ring import GroupRingElement
from .series import TruncatedSeries

METHODS = ("double-sum", "lambert")


def _w(t: int, a: int) -> GroupRingElement:
    return GroupRingElement.monomial(t, a)


@series_cache("R2-double-sum")
def R2_double_sum(t: int, order: int) -> TruncatedSeries:
    """sum_{m1>0, m2>=0} q^((m1+m2)^2+m1) / ((x1 q)_m1 (q/x1)_m1 (x2 q^m1)_(m2+1) (q^m1/x2)_(m2+1)).

    Both sums are evaluated by nested division (Horner's scheme), so each
    denominator factor is divided out once rather than once per term.
    """
    if t < 1:
        raise ValueError("t must be positive")
    x1, x1_inv, x2, x2_inv = _w(t, 1), _w(t, -1), _w(t, 2), _w(t, -2)

    def exponent(m1, m2):
        return (m1 + m2) ** 2 + m1

    def inner(m1: int) -> TruncatedSeries:
        top = 0
        while exponent(m1, top + 1) <= order:
            top += 1
        acc = TruncatedSeries.monomial(order, exponent(m1, top), 1, t)
        for m2 in range(top, -1, -1):
            acc = acc.div_factor(x2, m1 + m2).div_factor(x2_inv, m1 + m2)
            if m2:
                acc = acc + TruncatedSeries.monomial(order, exponent(m1, m2 - 1), 1, t)
        return acc

    top1 = 0
    while exponent(top1 + 1, 0) <= order:
        top1 += 1
    if top1 == 0:
        return TruncatedSeries.zero(order, t)
    acc = inner(top1)
    for m1 in range(top1, 0, -1):
        acc = acc.div_factor(x1, m1).div_factor(x1_inv, m1)
        if m1 > 1:
            acc = acc + inner(m1 - 1)
    return acc


@series_cache("R2-lambert")
def R2_lambert(t: int, order: int) -> TruncatedSeries:
    """1/(q)_inf sum_{n>=1} (-1)^(n-1) (1+q^n)(1-q^n)^2 q^(n(3n+1)/2) / prod_{i=1,2} (1-x_i q^n)(1-q^n/x_i)."""
    if t < 1:
        raise ValueError("t must be positive")
    xs = [_w(t, 1), _w(t, -1), _w(t, 2), _w(t, -2)]
    total = TruncatedSeries.zero(order, t)
    n = 1
    while n * (3 * n + 1) // 2 <= order:
        sign = 1 if n % 2 else -1
        term = TruncatedSeries.monomial(order, n * (3 * n + 1) // 2, sign, t)
        term = term.mul_factor(-1, n).mul_factor(1, n).mul_factor(1, n)
        for x in xs:
            term = term.div_factor(x, n)
        total = total + term
        n += 1
    return total.div_euler()


def R2(t: int, order: int, method: str = "double-sum") -> TruncatedSeries:
    if method == "double-sum":
        return R2_double_sum(t, order)
    if method == "lambert":
        return R2_lambert(t, order)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass(frozen=True)
class FSeriesRequest:
    t: int
    r: int
    s: int
    order: int
    d: int | None = None
    method: str = "double-sum"

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be positive")
        for x in (self.r, self.s) + (() if self.d is None else (self.d,)):
            if not 0 <= x < self.t:
                raise ValueError(f"residue {x} outside [0, {self.t})")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    def series(self) -> TruncatedSeries:
        if self.d is None:
            return f_diff(self.t, self.r, self.s, self.order, self.method)
        return f_class(self.t, self.r, self.s, self.d, self.order, self.method)


def _check_residues(t: int, *rs: int):
    for r in rs:
        if not 0 <= r < t:
            raise ValueError(f"residue {r} outside [0, {t})")


def f_series(t: int, r: int, order: int, method: str = "double-sum") -> TruncatedSeries:
    """``sum_n NF_2(r, t; n) q^n``."""
    _check_residues(t, r)
    return R2(t, order, method).component(r)


def f_diff(t: int, r: int, s: int, order: int, method: str = "double-sum") -> TruncatedSeries:
    """``sum_n (NF_2(r, t; n) - NF_2(s, t; n)) q^n``."""
    _check_residues(t, r, s)
    F = R2(t, order, method)
    return F.component(r) - F.component(s)


def f_class(t: int, r: int, s: int, d: int, order: int, method: str = "double-sum") -> TruncatedSeries:
    """``sum_n (NF_2(r, t; tn+d) - NF_2(s, t; tn+d)) q^n`` from sizes up to ``order``."""
    _check_residues(t, r, s, d)
    return f_diff(t, r, s, order, method).arithmetic_subsequence(d, t)


def f_mod(t: int, a: int, b: int, order: int) -> TruncatedSeries:
    """f_diff with residues reduced mod t."""
    F = R2(t, order)
    return F.component(a % t) - F.component(b % t)


def R2_expand_sides(t: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``((x - x^2)(1 - x^-3) R_2(x, x^2), R(x) - R(x^2))`` at x = w."""
    w = lambda a: _w(t, a)
    factor = (w(1) - w(2)) * (GroupRingElement.one(t) - w(-3))
    lhs = R2(t, order) * factor
    R = rank_genfun_durfee(t, order)
    rhs = R - R.substitute_power(2)
    return lhs, rhs


def partial_fraction_sides(t: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``((x - y + 1/x - 1/y) R_2(x, y), G(x) - G(y))`` at x = w, y = w^2."""
    w = lambda a: _w(t, a)
    factor = w(1) - w(2) + w(-1) - w(-2)
    lhs = R2(t, order) * factor
    G = G_series(t, order)
    rhs = G - G.substitute_power(2)
    return lhs, rhs


def fg_table_csv(rows) -> str:
    """CSV with header ``t,r,s,d,n,value``; ``rows`` yields (t, r, s, d, series)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "r", "s", "d", "n", "value"])
    for t, r, s, d, series in rows:
        for n, v in enumerate(series.data.tolist()):
            writer.writerow([t, r, s, "" if d is None else d, n, str(v)])
    return buf.getvalue()
