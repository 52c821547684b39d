"""Finite abelian groups given as products of cyclic factors.

Elements are coordinate tuples ``(x1, ..., xd)`` with ``0 <= xi < ni``.  Every
element also has an integer index (its mixed-radix rank, first coordinate most
significant), which is what graphs use as vertex ids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    InvalidElementError,
    InvalidGroupError,
    InvalidParameterError,
    InvalidSubgroupError,
)

Element = tuple[int, ...]


@dataclass(frozen=True)
class Group:
    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise InvalidGroupError("a group needs at least one cyclic factor")
        if self.orders != (1,) and any(n < 2 for n in self.orders):
            raise InvalidGroupError(f"bad factor orders {self.orders}; use make_group()")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def __len__(self):
        return self.order

    def __str__(self):
        if self.orders == (1,):
            return "Z1"
        return "x".join(f"Z{n}" for n in self.orders)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        strides, acc = [], 1
        for n in reversed(self.orders):
            strides.append(acc)
            acc *= n
        return tuple(reversed(strides))

    @cached_property
    def coords(self) -> np.ndarray:
        """``(order, rank)`` array; row i holds the coordinates of element i."""
        grids = np.indices(self.orders).reshape(self.rank, -1).T
        return np.ascontiguousarray(grids, dtype=np.int64)

    def _rank_array(self, c: np.ndarray) -> np.ndarray:
        return c @ np.asarray(self._strides, dtype=np.int64)

    @cached_property
    def sum_table(self) -> np.ndarray:
        """``sum_table[i, j]`` is the index of element i + element j."""
        c = self.coords
        mods = np.asarray(self.orders, dtype=np.int64)
        total = (c[:, None, :] + c[None, :, :]) % mods
        return self._rank_array(total)

    @cached_property
    def neg_index(self) -> np.ndarray:
        mods = np.asarray(self.orders, dtype=np.int64)
        return self._rank_array((-self.coords) % mods)

    @cached_property
    def double_index(self) -> np.ndarray:
        mods = np.asarray(self.orders, dtype=np.int64)
        return self._rank_array((2 * self.coords) % mods)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.orders, 1)

    # -- elements ---------------------------------------------------------

    def element(self, x) -> Element:
        """Validate ``x`` and return it as a coordinate tuple.

        A bare integer is accepted for single-factor groups.
        """
        if isinstance(x, (int, np.integer)):
            x = (int(x),)
        x = tuple(int(v) for v in x)
        if len(x) != self.rank:
            raise InvalidElementError(f"{x} has {len(x)} coordinates, {self} needs {self.rank}")
        for v, n in zip(x, self.orders):
            if not 0 <= v < n:
                raise InvalidElementError(f"coordinate {v} out of range for Z{n}")
        return x

    def index(self, x) -> int:
        x = self.element(x)
        return sum(v * s for v, s in zip(x, self._strides))

    def from_index(self, i: int) -> Element:
        if not 0 <= i < self.order:
            raise InvalidElementError(f"index {i} out of range for {self}")
        return tuple(int(v) for v in self.coords[i])

    def elements(self) -> Iterator[Element]:
        for i in range(self.order):
            yield self.from_index(i)

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def add(self, x, y) -> Element:
        x, y = self.element(x), self.element(y)
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x) -> Element:
        return tuple((-a) % n for a, n in zip(self.element(x), self.orders))

    def scalar(self, k: int, x) -> Element:
        return tuple((k * a) % n for a, n in zip(self.element(x), self.orders))


def make_group(orders: Iterable[int]) -> Group:
    """Build a group from cyclic factor orders, dropping trivial factors.

    >>> make_group([2, 1, 9]).orders
    (2, 9)
    """
    orders = [int(n) for n in orders]
    if not orders:
        raise InvalidGroupError("empty list of factor orders")
    if any(n < 1 for n in orders):
        raise InvalidGroupError(f"factor orders must be >= 1, got {orders}")
    kept = tuple(n for n in orders if n > 1)
    return Group(kept or (1,))


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    members: tuple[int, ...]
    membership: int = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def __contains__(self, x) -> bool:
        i = x if isinstance(x, (int, np.integer)) else self.parent.index(x)
        return bool(self.membership >> int(i) & 1)

    def elements(self) -> list[Element]:
        return [self.parent.from_index(i) for i in self.members]

    @property
    def is_trivial(self) -> bool:
        return self.k == 1

    @property
    def is_full(self) -> bool:
        return self.k == self.parent.order

    @classmethod
    def from_indices(cls, g: Group, indices: Iterable[int], check: bool = True) -> "Subgroup":
        members = tuple(sorted({int(i) for i in indices}))
        if check:
            if not members or members[0] != 0:
                raise InvalidSubgroupError("a subgroup must contain the identity")
            if members[-1] >= g.order:
                raise InvalidSubgroupError("index out of range")
            mask = np.zeros(g.order, dtype=bool)
            mask[list(members)] = True
            idx = np.asarray(members)
            if not mask[g.sum_table[np.ix_(idx, idx)]].all():
                raise InvalidSubgroupError("member set is not closed under addition")
        bits = 0
        for i in members:
            bits |= 1 << i
        return cls(g, members, bits)


def zero_subgroup(g: Group) -> Subgroup:
    return Subgroup.from_indices(g, [0], check=False)


def full_subgroup(g: Group) -> Subgroup:
    return Subgroup.from_indices(g, range(g.order), check=False)


def subgroup_nG(g: Group, n: int) -> Subgroup:
    """The subgroup ``nG = {n*t : t in G}``."""
    if n < 1:
        raise InvalidParameterError(f"multiplier must be >= 1, got {n}")
    mods = np.asarray(g.orders, dtype=np.int64)
    idx = g._rank_array((n * g.coords) % mods)
    return Subgroup.from_indices(g, np.unique(idx).tolist(), check=False)


def subgroup_generated(g: Group, gens: Sequence) -> Subgroup:
    """Breadth-first closure of ``gens`` under addition."""
    gen_idx = [g.index(x) for x in gens]
    table = g.sum_table
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gen_idx:
                y = int(table[x, s])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    # finite group: closure under addition already contains all negatives
    return Subgroup.from_indices(g, seen, check=False)


def cyclic_subgroups(g: Group) -> list[Subgroup]:
    """All distinct subgroups ``<a>``, ordered by (order, members)."""
    found = {}
    for i in range(g.order):
        h = subgroup_generated(g, [g.from_index(i)])
        found.setdefault(h.members, h)
    return sorted(found.values(), key=lambda h: (h.k, h.members))


def multiple_subgroups(g: Group) -> list[Subgroup]:
    """All distinct subgroups ``nG`` for ``1 <= n <= |G|``."""
    found = {}
    for n in range(1, g.order + 1):
        h = subgroup_nG(g, n)
        found.setdefault(h.members, h)
    return sorted(found.values(), key=lambda h: (h.k, h.members))


def intersect(h: Subgroup, kk: Subgroup) -> Subgroup:
    if h.parent != kk.parent:
        raise InvalidSubgroupError("subgroups of different groups")
    return Subgroup.from_indices(h.parent, set(h.members) & set(kk.members), check=False)


def _check_parent(g: Group, h: Subgroup):
    if h.parent != g:
        raise InvalidSubgroupError(f"subgroup belongs to {h.parent}, not {g}")


def involution_count(g: Group, within: Subgroup | None = None) -> int:
    """Number of solutions of ``2x = 0`` (the identity included).

    For the whole group the count is checked against ``2**r`` where r is the
    number of even factor orders.
    """
    solutions = g.double_index == 0
    if within is not None:
        _check_parent(g, within)
        return int(np.count_nonzero(solutions & within.mask))
    count = int(np.count_nonzero(solutions))
    expected = 2 ** sum(1 for n in g.orders if n % 2 == 0)
    if count != expected:
        raise AssertionError(f"s({g}) = {count} by count but {expected} by formula")
    return count


@dataclass(frozen=True)
class CosetStats:
    """Census of the cosets of H in G by type.

    Type 1: ``2a`` not in H.  Type 2: ``2a`` in H but the coset has no
    solution of ``2x = 0``.  Type 3: the coset contains such a solution.
    """

    n: int
    k: int
    m: int
    m1: int
    m2: int
    m3: int
    sG: int
    sH: int
    sGH: int
    coset_reps: tuple[tuple[Element, int], ...] = ()

    def check(self):
        problems = []
        if self.m1 + self.m2 + self.m3 != self.m:
            problems.append("m1+m2+m3 != m")
        if self.m2 + self.m3 != self.sGH:
            problems.append("m2+m3 != s(G/H)")
        if self.m3 * self.sH != self.sG:
            problems.append("m3*s(H) != s(G)")
        if self.m1 % 2:
            problems.append("m1 odd")
        if self.m3 < 1:
            problems.append("no type 3 coset")
        if self.k * self.m != self.n:
            problems.append("k*m != |G|")
        if problems:
            raise AssertionError(f"inconsistent coset census {self}: {', '.join(problems)}")
        return self


def coset_labels(g: Group, h: Subgroup) -> np.ndarray:
    """For each element, the index of the smallest element of its coset."""
    _check_parent(g, h)
    return g.sum_table[:, list(h.members)].min(axis=1)


def classify_cosets(g: Group, h: Subgroup) -> CosetStats:
    labels = coset_labels(g, h)
    doubles_in_h = h.mask[g.double_index]
    is_solution = g.double_index == 0

    reps = []
    counts = {1: 0, 2: 0, 3: 0}
    for a in np.unique(labels):
        coset = labels == a
        if not doubles_in_h[a]:
            kind = 1
        elif not is_solution[coset].any():
            kind = 2
        else:
            kind = 3
        counts[kind] += 1
        reps.append((g.from_index(int(a)), kind))

    k = h.k
    s_gh, rem = divmod(int(np.count_nonzero(doubles_in_h)), k)
    if rem:
        raise AssertionError("|{x : 2x in H}| not a multiple of |H|")
    stats = CosetStats(
        n=g.order,
        k=k,
        m=len(reps),
        m1=counts[1],
        m2=counts[2],
        m3=counts[3],
        sG=involution_count(g),
        sH=involution_count(g, within=h),
        sGH=s_gh,
        coset_reps=tuple(reps),
    )
    return stats.check()


# -- enumeration of abelian groups ------------------------------------------


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def abelian_groups_of_order(n: int) -> list[Group]:
    """One group per isomorphism type, as products of prime-power cycles."""
    if n == 1:
        return [make_group([1])]
    choices = [
        [[p**e for e in part] for part in partitions(a)] for p, a in sorted(factorize(n).items())
    ]
    groups = []

    def rec(i, acc):
        if i == len(choices):
            groups.append(make_group(acc))
            return
        for c in choices[i]:
            rec(i + 1, acc + c)

    rec(0, [])
    return groups


def count_abelian_groups(n: int) -> int:
    return math.prod(sum(1 for _ in partitions(a)) for a in factorize(n).values())


def abelian_groups(max_order: int, min_order: int = 2) -> list[Group]:
    return [g for n in range(min_order, max_order + 1) for g in abelian_groups_of_order(n)]


def cyclic_groups(max_order: int, min_order: int = 2) -> list[Group]:
    return [make_group([n]) for n in range(min_order, max_order + 1)]
