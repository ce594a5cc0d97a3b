"""Exact coefficient rings: Python integers and the group ring Z[w]/(w^t - 1).

An element of the group ring is stored densely as ``t`` integer components,
``components[a]`` being the coefficient of ``w**a``.  Evaluating such an
element at a primitive t-th root of unity recovers any single root-of-unity
specialization, but every count the package needs is a plain component read,
so no division by ``t`` ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class InvalidModulusError(ValueError):
    """Raised for a group ring modulus t < 1."""


class ModulusMismatchError(ValueError):
    """Raised when combining elements of different group rings."""


def _check_modulus(t: int) -> int:
    if not isinstance(t, int) or t < 1:
        raise InvalidModulusError(f"group ring modulus must be a positive integer, got {t!r}")
    return t


@dataclass(frozen=True)
class GroupRingElement:
    """Immutable element of Z[w]/(w^t - 1)."""

    components: tuple[int, ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise InvalidModulusError("group ring element needs at least one component")

    @property
    def t(self) -> int:
        return len(self.components)

    @classmethod
    def from_components(cls, components: Iterable[int]) -> GroupRingElement:
        return cls(tuple(int(c) for c in components))

    @classmethod
    def zero(cls, t: int) -> GroupRingElement:
        return cls((0,) * _check_modulus(t))

    @classmethod
    def scalar(cls, t: int, c: int) -> GroupRingElement:
        comps = [0] * _check_modulus(t)
        comps[0] = int(c)
        return cls(tuple(comps))

    @classmethod
    def one(cls, t: int) -> GroupRingElement:
        return cls.scalar(t, 1)

    @classmethod
    def monomial(cls, t: int, a: int, coeff: int = 1) -> GroupRingElement:
        """``coeff * w**a`` with the exponent reduced mod t."""
        comps = [0] * _check_modulus(t)
        comps[a % t] = int(coeff)
        return cls(tuple(comps))

    def _coerce(self, other) -> GroupRingElement:
        if isinstance(other, GroupRingElement):
            if other.t != self.t:
                raise ModulusMismatchError(f"moduli differ: {self.t} != {other.t}")
            return other
        if isinstance(other, int):
            return GroupRingElement.scalar(self.t, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GroupRingElement(tuple(x + y for x, y in zip(self.components, other.components)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(tuple(-x for x in self.components))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = self.t
        out = [0] * t
        for a, x in enumerate(self.components):
            if x:
                for b, y in enumerate(other.components):
                    if y:
                        out[(a + b) % t] += x * y
        return GroupRingElement(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = GroupRingElement.one(self.t)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __getitem__(self, a: int) -> int:
        return self.components[a % self.t]

    def __bool__(self):
        return any(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def conjugate(self) -> GroupRingElement:
        """Apply w -> w^-1."""
        t = self.t
        return GroupRingElement(tuple(self.components[(-a) % t] for a in range(t)))

    def substitute_power(self, k: int) -> GroupRingElement:
        """Apply w -> w^k; components landing on the same exponent accumulate."""
        t = self.t
        out = [0] * t
        for a, x in enumerate(self.components):
            out[(k * a) % t] += x
        return GroupRingElement(tuple(out))

    def unit_exponent(self) -> tuple[int, int] | None:
        """Return ``(sign, a)`` if the element is ``sign * w**a``, else None.

        Only these trivial units are recognised; they are the only ones the
        series code ever needs to invert.
        """
        nz = [(a, x) for a, x in enumerate(self.components) if x]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            a, x = nz[0]
            return x, a
        return None

    def inverse(self) -> GroupRingElement:
        unit = self.unit_exponent()
        if unit is None:
            raise ZeroDivisionError(f"{self} is not a unit of the form ±w^a")
        sign, a = unit
        return GroupRingElement.monomial(self.t, -a, sign)

    def evaluate_at_root_of_unity(self, j: int) -> tuple[int, int]:
        """Gaussian-integer value at w = i**j; only defined for t dividing 4."""
        if 4 % self.t:
            raise ValueError("Gaussian evaluation needs t in {1, 2, 4}")
        step = 4 // self.t
        re = im = 0
        for a, x in enumerate(self.components):
            k = (a * j * step) % 4
            if k == 0:
                re += x
            elif k == 1:
                im += x
            elif k == 2:
                re -= x
            else:
                im -= x
        return re, im

    def __repr__(self):
        terms = []
        for a, x in enumerate(self.components):
            if x:
                terms.append(f"{x}" if a == 0 else f"{x}*w^{a}")
        return f"GroupRingElement(t={self.t}: {' + '.join(terms) or '0'})"


def one_minus_w_identity(t: int) -> tuple[GroupRingElement, GroupRingElement]:
    """Both sides of (1 - w) * sum_m (t-1-m) w^m == t - sum_m w^m in Z[w]/(w^t - 1).

    This is the inverse of ``1 - zeta`` at every non-trivial t-th root of unity,
    scaled by t so that no division is required.  Returns ``(product, expected)``.
    """
    _check_modulus(t)
    if t < 2:
        raise InvalidModulusError("identity needs t >= 2")
    one_minus_w = GroupRingElement.one(t) - GroupRingElement.monomial(t, 1)
    weights = GroupRingElement(tuple(t - 1 - m for m in range(t)))
    product = one_minus_w * weights
    expected = GroupRingElement.scalar(t, t) - GroupRingElement((1,) * t)
    return product, expected
