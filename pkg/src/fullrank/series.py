"""Truncated power series in q with exact coefficients.

Coefficients live either in the integers (``modulus is None``) or in the group
ring Z[w]/(w^t - 1) (``modulus == t``).  Storage is a numpy object array of
Python ints: shape ``(N + 1,)`` for integer series and ``(N + 1, t)`` for group
ring series, row ``n`` holding the coefficient of ``q**n``.

Every series is immutable.  Binary operations truncate to the smaller order.
"""

from __future__ import annotations

import json
import math
from typing import Callable, Iterable

import numpy as np

from .ring import GroupRingElement, ModulusMismatchError


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class NotInvertibleError(ZeroDivisionError):
    """The constant term is not a unit of the coefficient ring."""


class PoleError(ZeroDivisionError):
    """A Lambert-series term has a vanishing q-exponent in its denominator."""


class DivergenceError(ValueError):
    """An infinite product whose factors never leave the truncation window."""


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _as_components(c, modulus: int | None):
    """Normalise a ring scalar to an int (integer ring) or a component tuple."""
    if modulus is None:
        if isinstance(c, GroupRingElement):
            raise RingMismatchError("group ring scalar applied to an integer series")
        return int(c)
    if isinstance(c, GroupRingElement):
        if c.t != modulus:
            raise ModulusMismatchError(f"moduli differ: {c.t} != {modulus}")
        return c.components
    comps = [0] * modulus
    comps[0] = int(c)
    return tuple(comps)


def _scale_rows(rows: np.ndarray, c, modulus: int | None) -> np.ndarray:
    """Multiply each coefficient row by the ring scalar ``c`` (already normalised)."""
    if modulus is None:
        return rows * c
    out = None
    for a, x in enumerate(c):
        if not x:
            continue
        term = np.roll(rows, a, axis=-1)
        if x != 1:
            term = term * x
        out = term if out is None else out + term
    if out is None:
        return np.zeros(rows.shape, dtype=object)
    return out


class TruncatedSeries:
    """Power series ``sum_{n <= N} c_n q^n`` over Z or Z[w]/(w^t - 1)."""

    __slots__ = ("data", "modulus")

    def __init__(self, data: np.ndarray, modulus: int | None = None):
        data = np.asarray(data, dtype=object)
        expected_ndim = 1 if modulus is None else 2
        if data.ndim != expected_ndim or len(data) == 0:
            raise ValueError(f"bad coefficient array shape {data.shape} for modulus {modulus}")
        if modulus is not None and data.shape[1] != modulus:
            raise ValueError(f"row width {data.shape[1]} does not match modulus {modulus}")
        if data.flags.writeable:
            data = data.copy()
        self.data = _frozen(data)
        self.modulus = modulus

    # -- construction -----------------------------------------------------

    @staticmethod
    def _shape(order: int, modulus: int | None):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        return (order + 1,) if modulus is None else (order + 1, modulus)

    @classmethod
    def zero(cls, order: int, modulus: int | None = None) -> TruncatedSeries:
        return cls(np.zeros(cls._shape(order, modulus), dtype=object), modulus)

    @classmethod
    def monomial(cls, order: int, k: int = 0, coeff=1, modulus: int | None = None) -> TruncatedSeries:
        """``coeff * q**k`` truncated at ``order``."""
        data = np.zeros(cls._shape(order, modulus), dtype=object)
        if 0 <= k <= order:
            c = _as_components(coeff, modulus)
            data[k] = c if modulus is None else np.array(c, dtype=object)
        elif k < 0:
            raise ValueError("negative q-exponent")
        return cls(data, modulus)

    @classmethod
    def one(cls, order: int, modulus: int | None = None) -> TruncatedSeries:
        return cls.monomial(order, 0, 1, modulus)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, modulus: int | None = None) -> TruncatedSeries:
        rows = []
        for c in coeffs:
            if modulus is None:
                rows.append(int(c))
            elif isinstance(c, GroupRingElement):
                rows.append(list(_as_components(c, modulus)))
            elif isinstance(c, int):
                rows.append(list(_as_components(c, modulus)))
            else:
                row = [int(x) for x in c]
                if len(row) != modulus:
                    raise ValueError("group ring row of wrong length")
                rows.append(row)
        data = np.empty(cls._shape(len(rows) - 1, modulus), dtype=object)
        for i, row in enumerate(rows):
            data[i] = row
        return cls(data, modulus)

    @classmethod
    def from_sparse(cls, order: int, terms: dict[int, int], modulus: int | None = None) -> TruncatedSeries:
        data = np.zeros(cls._shape(order, modulus), dtype=object)
        for k, c in terms.items():
            if 0 <= k <= order:
                data[k] = data[k] + np.array(_as_components(c, modulus), dtype=object) if modulus else data[k] + c
        return cls(data, modulus)

    # -- basic accessors --------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.data) - 1

    @property
    def ring(self) -> str:
        return "int" if self.modulus is None else f"group({self.modulus})"

    def __len__(self):
        return len(self.data)

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        if self.modulus is None:
            return self.data[n]
        return GroupRingElement(tuple(self.data[n]))

    def coefficients(self) -> list:
        return [self[n] for n in range(len(self.data))]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.data[:8].tolist())
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries(ring={self.ring}, order={self.order}, [{shown}{more}])"

    def _check_ring(self, other: TruncatedSeries):
        if self.modulus != other.modulus:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _new(self, data: np.ndarray) -> TruncatedSeries:
        return TruncatedSeries(data, self.modulus)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return self._new(self.data[: order + 1].copy())

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.monomial(self.order, 0, other, self.modulus)
        self._check_ring(other)
        n = min(len(self.data), len(other.data))
        return self._new(self.data[:n] + other.data[:n])

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.data)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncatedSeries:
        return self._new(_scale_rows(self.data, _as_components(c, self.modulus), self.modulus))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        if isinstance(other, (int, GroupRingElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GroupRingElement)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not bool(np.any(self.data != 0))

    # -- q-structure ------------------------------------------------------

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``q**k`` (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("negative shift")
        data = np.zeros(self.data.shape, dtype=object)
        if k <= self.order:
            data[k:] = self.data[: len(self.data) - k]
        return self._new(data)

    def mul_factor(self, c, k: int) -> TruncatedSeries:
        """Multiply by ``1 - c q**k``."""
        if k < 0:
            raise ValueError("negative q-exponent")
        c = _as_components(c, self.modulus)
        data = self.data.copy()
        if k == 0:
            return self._new(data - _scale_rows(self.data, c, self.modulus))
        if k <= self.order:
            data[k:] = data[k:] - _scale_rows(self.data[: len(data) - k], c, self.modulus)
        return self._new(data)

    def div_factor(self, c, k: int) -> TruncatedSeries:
        """Divide by ``1 - c q**k`` for k >= 1 (always a unit: constant term 1)."""
        if k < 1:
            raise NotInvertibleError("1 - c q^0 is not treated as a unit; use invert()")
        c = _as_components(c, self.modulus)
        data = self.data.copy()
        size = len(data)
        for start in range(k, size, k):
            stop = min(start + k, size)
            data[start:stop] = data[start:stop] + _scale_rows(
                data[start - k : stop - k], c, self.modulus
            )
        return self._new(data)

    def mul_euler(self, start: int = 1, step: int = 1) -> TruncatedSeries:
        """Multiply by ``(q^start; q^step)_inf``."""
        return _apply_progression(self, start, step, divide=False)

    def div_euler(self, start: int = 1, step: int = 1) -> TruncatedSeries:
        """Divide by ``(q^start; q^step)_inf``."""
        return _apply_progression(self, start, step, divide=True)

    def invert(self) -> TruncatedSeries:
        return invert(self)

    # -- coefficient ring maps --------------------------------------------

    def component(self, r: int) -> TruncatedSeries:
        """Integer series of the ``w**r`` components."""
        if self.modulus is None:
            raise RingMismatchError("component read needs a group ring series")
        return TruncatedSeries(self.data[:, r % self.modulus].copy(), None)

    def components(self) -> list[TruncatedSeries]:
        return [self.component(r) for r in range(self.modulus)]

    def conjugate(self) -> TruncatedSeries:
        """Apply w -> w^-1 to every coefficient."""
        if self.modulus is None:
            return self
        t = self.modulus
        idx = [(-a) % t for a in range(t)]
        return self._new(self.data[:, idx].copy())

    def substitute_power(self, k: int) -> TruncatedSeries:
        """Apply w -> w^k to every coefficient."""
        if self.modulus is None:
            return self
        t = self.modulus
        data = np.zeros(self.data.shape, dtype=object)
        for a in range(t):
            data[:, (k * a) % t] += self.data[:, a]
        return self._new(data)

    def specialize(self, j: int = 1) -> TruncatedSeries:
        """Integer series from w -> 1 when j == 0 (sum of components)."""
        if j != 0:
            raise ValueError("only the w = 1 specialization stays in Z; use reduce_modulus")
        return TruncatedSeries(self.data.sum(axis=1), None)

    def reduce_modulus(self, t2: int) -> TruncatedSeries:
        """Image under Z[w]/(w^t - 1) -> Z[w]/(w^t2 - 1), t2 dividing t."""
        if self.modulus is None or self.modulus % t2:
            raise ValueError(f"cannot reduce modulus {self.modulus} to {t2}")
        data = np.zeros((len(self.data), t2), dtype=object)
        for a in range(self.modulus):
            data[:, a % t2] += self.data[:, a]
        return TruncatedSeries(data, t2)

    def arithmetic_subsequence(self, d: int, t: int) -> TruncatedSeries:
        """Coefficients of ``q^(t n + d)`` reindexed to ``q^n``."""
        if not 0 <= d < t:
            raise ValueError(f"class {d} outside [0, {t})")
        if d > self.order:
            raise ValueError(f"class {d} exceeds order {self.order}")
        return self._new(self.data[d::t].copy())

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        if self.modulus is None:
            coeffs = [str(c) for c in self.data.tolist()]
            ring = "int"
        else:
            coeffs = [[str(c) for c in row] for row in self.data.tolist()]
            ring = {"group": self.modulus}
        return {"ring": ring, "order": self.order, "coeffs": coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, payload: dict) -> TruncatedSeries:
        ring = payload["ring"]
        modulus = None if ring == "int" else int(ring["group"])
        coeffs = payload["coeffs"]
        if len(coeffs) != int(payload["order"]) + 1:
            raise ValueError("coefficient count does not match order")
        if modulus is None:
            return cls.from_coefficients((int(c) for c in coeffs), None)
        return cls.from_coefficients(([int(x) for x in row] for row in coeffs), modulus)

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls.from_dict(json.loads(text))


def _apply_progression(s: TruncatedSeries, start: int, step: int, divide: bool) -> TruncatedSeries:
    if step < 1:
        raise DivergenceError("infinite product needs a positive step")
    if start < 1:
        raise NotInvertibleError("(1 - q^0) factor")
    out = s
    for k in range(start, s.order + 1, step):
        out = out.div_factor(1, k) if divide else out.mul_factor(1, k)
    return out


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    a._check_ring(b)
    size = min(len(a.data), len(b.data))
    out = np.zeros((size,) + a.data.shape[1:], dtype=object)
    modulus = a.modulus
    # loop over the sparser operand
    if np.count_nonzero(a.data[:size] != 0) > np.count_nonzero(b.data[:size] != 0):
        a, b = b, a
    for i in range(size):
        row = a.data[i]
        if modulus is None:
            if row == 0:
                continue
            c = row
        else:
            if not np.any(row != 0):
                continue
            c = tuple(row)
        out[i:] += _scale_rows(b.data[: size - i], c, modulus)
    return TruncatedSeries(out, modulus)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a unit ±w^k."""
    modulus = a.modulus
    size = len(a.data)
    if modulus is None:
        c0 = a.data[0]
        if c0 not in (1, -1):
            raise NotInvertibleError(f"constant term {c0} is not a unit of Z")
        inv0 = c0
    else:
        unit = GroupRingElement(tuple(a.data[0])).unit_exponent()
        if unit is None:
            raise NotInvertibleError(f"constant term {tuple(a.data[0])} is not of the form ±w^k")
        sign, k = unit
        inv0 = GroupRingElement.monomial(modulus, -k, sign).components
    out = np.zeros(a.data.shape, dtype=object)
    out[0] = inv0 if modulus is None else np.array(inv0, dtype=object)
    nz = [i for i in range(1, size) if np.any(a.data[i] != 0)]
    neg_inv0 = -inv0 if modulus is None else tuple(-x for x in inv0)
    for n in range(1, size):
        acc = np.zeros(a.data.shape[1:], dtype=object)
        for k in nz:
            if k > n:
                break
            if modulus is None:
                acc = acc + a.data[k] * out[n - k]
            else:
                acc = acc + _scale_rows(out[n - k], tuple(a.data[k]), modulus)
        out[n] = _scale_rows(acc, neg_inv0, modulus)
    return TruncatedSeries(out, modulus)


def pochhammer(u=1, start: int = 1, count: int | float | None = None, step: int = 1,
               order: int = 0, modulus: int | None = None) -> TruncatedSeries:
    """``prod_{i < count} (1 - u q^(start + i step))`` truncated at ``order``.

    ``count=None`` (or ``math.inf``) runs the product while the exponent stays
    within the truncation order.
    """
    infinite = count is None or count == math.inf
    if infinite and step == 0:
        raise DivergenceError("infinite product with step 0")
    if start < 0 or step < 0:
        raise ValueError("exponents must be non-negative")
    out = TruncatedSeries.one(order, modulus)
    i = 0
    while infinite or i < count:
        e = start + i * step
        if e > order:
            if infinite or step > 0:
                break
        out = out.mul_factor(u, e)
        i += 1
    return out


def pentagonal(order: int) -> TruncatedSeries:
    """``1 + sum_{n>=1} (-1)^n q^(n(3n-1)/2) (1 + q^n)``, i.e. (q)_inf by Euler."""
    data = np.zeros(order + 1, dtype=object)
    data[0] = 1
    n = 1
    while n * (3 * n - 1) // 2 <= order:
        sign = -1 if n % 2 else 1
        e = n * (3 * n - 1) // 2
        data[e] += sign
        if e + n <= order:
            data[e + n] += sign
        n += 1
    return TruncatedSeries(data)


def partition_numbers(order: int) -> TruncatedSeries:
    """``1/(q)_inf`` computed by dividing out each ``1 - q^k``."""
    return TruncatedSeries.one(order).div_euler()


def bilateral_lambert(
    quad_exp: Callable[[int], int],
    residue_exp: Callable[[int], int],
    sign: Callable[[int], int],
    order: int,
) -> TruncatedSeries:
    """``sum_{n in Z} sign(n) q^quad_exp(n) / (1 - q^residue_exp(n))``.

    A negative residue exponent ``-m`` is rewritten as
    ``1/(1 - q^-m) = -q^m/(1 - q^m)`` before expanding.  The sum over n walks
    outward from 0 in each direction and stops after two consecutive n whose
    quadratic exponent exceeds the order.
    """
    data = np.zeros(order + 1, dtype=object)

    def add_term(n: int):
        e = quad_exp(n)
        if e > order:
            return False
        m = residue_exp(n)
        if m == 0:
            raise PoleError(f"residue exponent vanishes at n={n}")
        s = sign(n)
        if m < 0:
            m = -m
            e += m
            s = -s
        if e < 0:
            raise ValueError(f"term n={n} starts at negative exponent {e}")
        if e <= order:
            data[e::m] += s
        return True

    add_term(0)
    for direction in (1, -1):
        misses = 0
        n = direction
        while misses < 2:
            misses = 0 if add_term(n) else misses + 1
            n += direction
    return TruncatedSeries(data)


def first_discrepancy(a: TruncatedSeries, b: TruncatedSeries):
    """First ``(n, a_n, b_n)`` where the series differ on their common range, else None."""
    a._check_ring(b)
    size = min(len(a.data), len(b.data))
    diff = a.data[:size] != b.data[:size]
    if diff.ndim == 2:
        diff = diff.any(axis=1)
    idx = np.flatnonzero(diff)
    if len(idx) == 0:
        return None
    n = int(idx[0])
    return n, a[n], b[n]
