"""Durfee symbols and 2-marked Durfee symbols.

A 2-marked symbol is stored with each row split by subscript:
``top2``/``top1`` and ``bottom2``/``bottom1``, every list non-increasing.
Reading a row left to right as (subscript-2 parts, then subscript-1 parts)
gives the usual matrix notation, so "parts and subscripts both non-increasing"
amounts to every subscript-2 part being at least every subscript-1 part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


from .partitions import Partition, Provenance, RankTable


@dataclass(frozen=True)
class DurfeeSymbol:
    side: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.side**2 + sum(self.top) + sum(self.bottom)

    def rank(self) -> int:
        return len(self.top) - len(self.bottom)

    def __str__(self):
        top = " ".join(map(str, self.top))
        bottom = " ".join(map(str, self.bottom))
        return f"({top} / {bottom})_{self.side}"


def partition_to_durfee(p: Partition) -> DurfeeSymbol:
    parts = p.parts
    d = 0
    while d < len(parts) and parts[d] >= d + 1:
        d += 1
    columns = p.conjugate().parts
    return DurfeeSymbol(d, tuple(columns[d:]), tuple(parts[d:]))


def durfee_to_partition(s: DurfeeSymbol) -> Partition:
    d = s.side
    rows = [d + sum(1 for a in s.top if a >= i) for i in range(1, d + 1)]
    return Partition(tuple(rows) + tuple(s.bottom))


class InvalidSymbolError(ValueError):
    pass


@dataclass(frozen=True)
class MarkedDurfeeSymbol2:
    side: int
    top2: tuple[int, ...]
    top1: tuple[int, ...]
    bottom2: tuple[int, ...] = ()
    bottom1: tuple[int, ...] = ()

    @classmethod
    def from_rows(cls, side: int, top: Sequence[tuple[int, int]],
                  bottom: Sequence[tuple[int, int]] = ()) -> MarkedDurfeeSymbol2:
        """Build from rows of ``(part, subscript)`` pairs in matrix order.

        Raises InvalidSymbolError if a row is not in non-increasing order of
        both parts and subscripts.
        """
        for name, row in (("top", top), ("bottom", bottom)):
            for (p, i), (p2, i2) in zip(row, row[1:]):
                if p < p2 or i < i2:
                    raise InvalidSymbolError(f"condition (1): {name} row not non-increasing")
            if any(i not in (1, 2) for _, i in row):
                raise InvalidSymbolError("subscripts must be 1 or 2")
        pick = lambda row, k: tuple(p for p, i in row if i == k)
        return cls(side, pick(top, 2), pick(top, 1), pick(bottom, 2), pick(bottom, 1))

    @property
    def top(self) -> list[tuple[int, int]]:
        return [(p, 2) for p in self.top2] + [(p, 1) for p in self.top1]

    @property
    def bottom(self) -> list[tuple[int, int]]:
        return [(p, 2) for p in self.bottom2] + [(p, 1) for p in self.bottom1]

    @property
    def n(self) -> int:
        return self.side**2 + sum(self.top2) + sum(self.top1) + sum(self.bottom2) + sum(self.bottom1)

    @property
    def largest_top1(self) -> int:
        return self.top1[0] if self.top1 else 0

    def rank_vector(self) -> tuple[int, int]:
        """``(rho_1, rho_2)``: top count minus bottom count per subscript, minus 1 for subscript 1."""
        return (len(self.top1) - len(self.bottom1) - 1, len(self.top2) - len(self.bottom2))

    def full_rank(self) -> int:
        return full_rank(self)

    def conjugate(self) -> MarkedDurfeeSymbol2:
        return conjugate_2marked(self)

    def __str__(self):
        fmt = lambda row: " ".join(f"{p}_{i}" for p, i in row)
        return f"({fmt(self.top)} / {fmt(self.bottom)})_{self.side}"


def validate_2marked(s: MarkedDurfeeSymbol2) -> tuple[bool, str | None]:
    """Check the 2-marked Durfee symbol conditions; report the first violation."""
    d = s.side
    if d < 1:
        return False, "side must be positive"
    for name in ("top2", "top1", "bottom2", "bottom1"):
        row = getattr(s, name)
        if any(not 1 <= p <= d for p in row):
            return False, f"{name} parts must lie in [1, {d}]"
        if any(a < b for a, b in zip(row, row[1:])):
            return False, f"condition (1): {name} parts not non-increasing"
    if s.top2 and s.top1 and s.top2[-1] < s.top1[0]:
        return False, "condition (1): top row subscripts not non-increasing"
    if s.bottom2 and s.bottom1 and s.bottom2[-1] < s.bottom1[0]:
        return False, "condition (1): bottom row subscripts not non-increasing"
    if not s.top1:
        return False, "condition (2): subscript 1 must occur in the top row"
    M = s.top1[0]
    if any(p > M for p in s.bottom1):
        return False, f"condition (3): bottom subscript-1 parts must lie in [1, {M}]"
    if any(not M <= p <= d for p in s.bottom2):
        return False, f"condition (3): bottom subscript-2 parts must lie in [{M}, {d}]"
    if any(not M <= p <= d for p in s.top2):
        return False, f"condition (3): top subscript-2 parts must lie in [{M}, {d}]"
    return True, None


def full_rank(s: MarkedDurfeeSymbol2) -> int:
    ok, why = validate_2marked(s)
    if not ok:
        raise InvalidSymbolError(why)
    rho1, rho2 = s.rank_vector()
    return rho1 + 2 * rho2


def conjugate_2marked(s: MarkedDurfeeSymbol2) -> MarkedDurfeeSymbol2:
    """Swap the subscript-2 parts between rows; for subscript 1 keep one copy of
    the largest top part in place and swap all the others."""
    ok, why = validate_2marked(s)
    if not ok:
        raise InvalidSymbolError(why)
    M, rest = s.top1[0], s.top1[1:]
    new_top1 = (M,) + s.bottom1
    return MarkedDurfeeSymbol2(s.side, s.bottom2, new_top1, s.top2, rest)


def _bounded_partitions(total: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` with every part in [lo, hi], reverse lexicographic."""
    if total == 0:
        yield ()
        return
    for first in range(min(hi, total), lo - 1, -1):
        for rest in _bounded_partitions(total - first, lo, first):
            yield (first,) + rest


def enumerate_2marked(n: int) -> Iterator[MarkedDurfeeSymbol2]:
    """Every 2-marked Durfee symbol of size n, exactly once.

    Order: side d ascending, largest top subscript-1 part M ascending, then the
    split of the remaining size between top1-tail, top2, bottom2, bottom1, each
    list in reverse lexicographic order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = 1
    while d * d + 1 <= n:
        for M in range(1, d + 1):
            free = n - d * d - M
            if free < 0:
                break
            for a in range(free + 1):
                for top1_tail in _bounded_partitions(a, 1, M):
                    for b in range(free - a + 1):
                        for top2 in _bounded_partitions(b, M, d):
                            for c in range(free - a - b + 1):
                                for bottom2 in _bounded_partitions(c, M, d):
                                    for bottom1 in _bounded_partitions(free - a - b - c, 1, M):
                                        yield MarkedDurfeeSymbol2(
                                            d, top2, (M,) + top1_tail, bottom2, bottom1
                                        )
        d += 1


def full_rank_distribution(order: int) -> list[dict[int, int]]:
    """``[n] -> {full rank: count}`` by walking every symbol of size <= order."""
    dist: list[dict[int, int]] = [dict() for _ in range(order + 1)]
    for n in range(order + 1):
        counts = dist[n]
        for s in enumerate_2marked(n):
            rho1, rho2 = s.rank_vector()
            fr = rho1 + 2 * rho2
            counts[fr] = counts.get(fr, 0) + 1
    return dist


def full_rank_counts_enumeration(t: int, order: int, dist=None) -> RankTable:
    """NF_2(r, t; n) for 0 <= n <= order by enumeration; size 0 counts nothing."""
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"modulus t must be a positive integer, got {t!r}")
    if dist is None:
        dist = full_rank_distribution(order)
    counts = [[0] * (order + 1) for _ in range(t)]
    for n in range(order + 1):
        for fr, c in dist[n].items():
            counts[fr % t][n] += c
    return RankTable(t, order, tuple(map(tuple, counts)), Provenance.ENUMERATION)


def nf2_exact(m: int, order: int, dist=None) -> list[int]:
    """``[NF_2(m; n) for n in 0..order]``: symbols whose full rank equals m exactly."""
    if dist is None:
        dist = full_rank_distribution(order)
    return [dist[n].get(m, 0) for n in range(order + 1)]


def nf2_totals(order: int, dist=None) -> list[int]:
    if dist is None:
        dist = full_rank_distribution(order)
    return [sum(d.values()) for d in dist]


def full_rank_table_from_series(s, provenance: Provenance) -> RankTable:
    return RankTable.from_series(s, provenance)


FullRankTable = RankTable
