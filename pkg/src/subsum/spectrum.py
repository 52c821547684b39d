"""Exact eigenvalue multisets: integers and roots of monic integer quadratics."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


@dataclass(frozen=True)
class QuadraticRoot:
    """The root ``(T + sign*sqrt(T**2 + 4C)) / 2`` of ``x**2 - T*x - C``."""

    T: int
    C: int
    sign: int  # +1 or -1

    @property
    def discriminant(self) -> int:
        return self.T * self.T + 4 * self.C

    @property
    def value(self) -> float:
        return (self.T + self.sign * math.sqrt(self.discriminant)) / 2

    def __float__(self):
        return self.value

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        return f"({self.T}{s}sqrt({self.discriminant}))/2"

    def to_json(self):
        return {"T": self.T, "C": self.C, "sign": "+" if self.sign > 0 else "-"}


Eigenvalue = Union[int, QuadraticRoot]


def quadratic_roots(T: int, C: int) -> tuple[Eigenvalue, Eigenvalue]:
    """Both roots of ``x**2 - T*x - C``, as ints when they are rational."""
    disc = T * T + 4 * C
    if disc < 0:
        raise ValueError(f"x^2 - {T}x - {C} has complex roots")
    r = math.isqrt(disc)
    if r * r == disc:
        # monic integer polynomial: rational roots are integers
        return (T + r) // 2, (T - r) // 2
    return QuadraticRoot(T, C, +1), QuadraticRoot(T, C, -1)


def _float(ev: Eigenvalue) -> float:
    return float(ev)


@dataclass(frozen=True)
class SpectrumSpec:
    """Eigenvalue multiset, entries sorted ascending by value."""

    entries: tuple[tuple[Eigenvalue, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Eigenvalue, int]]) -> "SpectrumSpec":
        acc: dict = defaultdict(int)
        for ev, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                acc[ev] += mult
        return cls(tuple(sorted(acc.items(), key=lambda e: _float(e[0]))))

    def __add__(self, other: "SpectrumSpec") -> "SpectrumSpec":
        return SpectrumSpec.from_pairs(self.entries + other.entries)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def numeric(self) -> list[float]:
        out = []
        for ev, mult in self.entries:
            out.extend([_float(ev)] * mult)
        return out

    def _power_sum(self, power: int) -> Fraction:
        """Exact sum of eigenvalue**power (power 1 or 2), times multiplicity."""
        rational = Fraction(0)
        surd: dict[int, Fraction] = defaultdict(Fraction)
        for ev, mult in self.entries:
            if isinstance(ev, int):
                rational += mult * ev**power
                continue
            half_t, half = Fraction(ev.T, 2), Fraction(ev.sign, 2)
            if power == 1:
                rational += mult * half_t
                surd[ev.discriminant] += mult * half
            else:
                # x^2 = T x + C
                rational += mult * (ev.T * half_t + ev.C)
                surd[ev.discriminant] += mult * ev.T * half
        if any(surd.values()):
            raise ArithmeticError("irrational parts do not cancel")
        return rational

    def trace(self) -> Fraction:
        return self._power_sum(1)

    def second_moment(self) -> Fraction:
        return self._power_sum(2)

    def to_json(self):
        return [
            {"value": ev if isinstance(ev, int) else ev.to_json(), "multiplicity": m}
            for ev, m in self.entries
        ]

    def __str__(self):
        return "{" + ", ".join(f"{ev}^{m}" if m > 1 else str(ev) for ev, m in self.entries) + "}"
