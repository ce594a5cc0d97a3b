"""Partitions, Dyson's rank, and the rank generating function.

Ground truth comes from enumerating partitions (or, for larger sizes, from
counting Ferrers diagrams by largest part and number of parts).  The series
side builds R(w; q) from the Durfee-square sum and G(w; q) from its Lambert
form, both with w the generator of Z[w]/(w^t - 1), so that component r of the
coefficient of q^n is N(r, t; n).
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._cache import series_cache
from .ring import GroupRingElement
from .series import TruncatedSeries


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> Partition:
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def rank(self) -> int:
        return rank(self)

    def conjugate(self) -> Partition:
        return conjugate_partition(self)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def rank(p: Partition | Sequence[int]) -> int:
    """Largest part minus number of parts; the empty partition has rank 0."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    if not parts:
        return 0
    return parts[0] - len(parts)


def conjugate_partition(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return p
    return Partition(tuple(sum(1 for x in parts if x > i) for i in range(parts[0])))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, starting from (n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # strip trailing ones, then decrement the last part > 1 and refill
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        k = parts.pop() - 1
        rest = ones + 1
        parts.append(k)
        while rest > k:
            parts.append(k)
            rest -= k
        if rest:
            parts.append(rest)


def partition_count(n: int) -> int:
    return sum(1 for _ in enumerate_partitions(n))


class Provenance(str, enum.Enum):
    ENUMERATION = "enumeration"
    GENFUN_DURFEE = "genfun-durfee-sum"
    GENFUN_G = "genfun-G"
    R2_DOUBLE_SUM = "R2-double-sum"
    R2_LAMBERT = "R2-lambert"


@dataclass(frozen=True)
class RankTable:
    """``counts[r][n]`` is the number of objects of size n with statistic = r mod t."""

    t: int
    order: int
    counts: tuple[tuple[int, ...], ...]
    provenance: Provenance

    def __post_init__(self):
        if len(self.counts) != self.t or any(len(row) != self.order + 1 for row in self.counts):
            raise ValueError("counts table has the wrong shape")

    def __getitem__(self, key):
        r, n = key
        return self.counts[r % self.t][n]

    def totals(self) -> list[int]:
        return [sum(self.counts[r][n] for r in range(self.t)) for n in range(self.order + 1)]

    def same_counts(self, other: RankTable) -> bool:
        return self.t == other.t and self.order == other.order and self.counts == other.counts

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "n", "r", "count"])
        for n in range(self.order + 1):
            for r in range(self.t):
                writer.writerow([self.t, n, r, str(self.counts[r][n])])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, provenance: Provenance = Provenance.ENUMERATION) -> RankTable:
        rows = list(csv.DictReader(io.StringIO(text)))
        t = int(rows[0]["t"])
        order = max(int(row["n"]) for row in rows)
        counts = [[0] * (order + 1) for _ in range(t)]
        for row in rows:
            counts[int(row["r"])][int(row["n"])] = int(row["count"])
        return cls(t, order, tuple(map(tuple, counts)), provenance)

    @classmethod
    def from_series(cls, s: TruncatedSeries, provenance: Provenance) -> RankTable:
        t = s.modulus
        counts = tuple(tuple(int(x) for x in s.data[:, r]) for r in range(t))
        return cls(t, s.order, counts, provenance)


def _check_t(t: int):
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"modulus t must be a positive integer, got {t!r}")


def rank_distribution(order: int) -> np.ndarray:
    """Exact counts of partitions by size and rank.

    Returns an object array ``D`` of shape ``(order + 1, 2 * order + 1)`` with
    ``D[n, m + order]`` the number of partitions of n with rank m.

    Partitions are counted by their frame: a partition with largest part a and
    k + 1 parts is a part a followed by k parts of size at most a.  ``F[k, m]``
    tracks partitions of m into exactly k parts bounded by the current a.
    """
    size = order + 1
    D = np.zeros((size, 2 * order + 1), dtype=object)
    D[0, order] = 1
    F = np.zeros((size, size), dtype=object)
    F[0, 0] = 1
    for a in range(1, size):
        for k in range(1, size):
            F[k, a:] = F[k, a:] + F[k - 1, : size - a]
        length = size - a
        for k in range(0, length):
            D[a:, a - k - 1 + order] += F[k, :length]
    return D


def rank_counts_enumeration(t: int, order: int) -> RankTable:
    _check_t(t)
    D = rank_distribution(order)
    counts = [[0] * (order + 1) for _ in range(t)]
    for col in range(D.shape[1]):
        r = (col - order) % t
        for n in np.flatnonzero(D[:, col]):
            counts[r][n] += int(D[n, col])
    return RankTable(t, order, tuple(map(tuple, counts)), Provenance.ENUMERATION)


def rank_counts_brute_force(t: int, order: int) -> RankTable:
    """Rank table by literally walking every partition (small orders only)."""
    _check_t(t)
    counts = [[0] * (order + 1) for _ in range(t)]
    for n in range(order + 1):
        for p in enumerate_partitions(n):
            counts[rank(p) % t][n] += 1
    return RankTable(t, order, tuple(map(tuple, counts)), Provenance.ENUMERATION)


def _w(t: int, a: int = 1) -> GroupRingElement:
    return GroupRingElement.monomial(t, a)


@series_cache("R")
def rank_genfun_durfee(t: int, order: int) -> TruncatedSeries:
    """R(w; q) = sum_n q^(n^2) / ((wq)_n (q/w)_n), summed by nested division."""
    _check_t(t)
    w, w_inv = _w(t, 1), _w(t, -1)
    top = 0
    while (top + 1) ** 2 <= order:
        top += 1
    acc = TruncatedSeries.monomial(order, top * top, 1, t)
    for n in range(top, 0, -1):
        acc = acc.div_factor(w, n).div_factor(w_inv, n)
        acc = acc + TruncatedSeries.monomial(order, (n - 1) ** 2, 1, t)
    return acc


@series_cache("G")
def G_series(t: int, order: int) -> TruncatedSeries:
    """G(w; q) = 1/(q)_inf sum_{n>=1} (-1)^(n-1) (1+q^n)(1-q^n)^2 q^(n(3n-1)/2) / ((1-wq^n)(1-q^n/w))."""
    _check_t(t)
    w, w_inv = _w(t, 1), _w(t, -1)
    total = TruncatedSeries.zero(order, t)
    n = 1
    while n * (3 * n - 1) // 2 <= order:
        sign = 1 if n % 2 else -1
        term = TruncatedSeries.monomial(order, n * (3 * n - 1) // 2, sign, t)
        term = term.mul_factor(-1, n).mul_factor(1, n).mul_factor(1, n)
        term = term.div_factor(w, n).div_factor(w_inv, n)
        total = total + term
        n += 1
    return total.div_euler()


def rank_counts_genfun(t: int, order: int, method: str = "durfee") -> RankTable:
    if method == "durfee":
        return RankTable.from_series(rank_genfun_durfee(t, order), Provenance.GENFUN_DURFEE)
    if method == "G":
        return RankTable.from_series(1 + G_series(t, order), Provenance.GENFUN_G)
    raise ValueError(f"unknown method {method!r}")


def _check_residue(t: int, *residues: int):
    _check_t(t)
    for r in residues:
        if not 0 <= r < t:
            raise ValueError(f"residue {r} outside [0, {t})")


def g_series(t: int, r: int, order: int) -> TruncatedSeries:
    """``sum_n N(r, t; n) q^n``."""
    _check_residue(t, r)
    return rank_genfun_durfee(t, order).component(r)


def g_diff(t: int, r: int, s: int, order: int) -> TruncatedSeries:
    """``sum_n (N(r, t; n) - N(s, t; n)) q^n``."""
    _check_residue(t, r, s)
    R = rank_genfun_durfee(t, order)
    return R.component(r) - R.component(s)


def g_class(t: int, r: int, s: int, d: int, order: int) -> TruncatedSeries:
    """``sum_n (N(r, t; tn+d) - N(s, t; tn+d)) q^n`` from sizes up to ``order``."""
    _check_residue(t, r, s, d)
    return g_diff(t, r, s, order).arithmetic_subsequence(d, t)


def g_mod(t: int, a: int, b: int | None, order: int) -> TruncatedSeries:
    """Like g_series / g_diff but with residues taken mod t."""
    R = rank_genfun_durfee(t, order)
    if b is None:
        return R.component(a % t)
    return R.component(a % t) - R.component(b % t)
