"""Arithmetic in the cyclic group Z_d and the multi-argument character on it."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

ATOL = 1e-9


@dataclass(frozen=True, order=True)
class Modulus:
    """Order ``d`` of the cyclic group Z_d."""

    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise TypeError(f"modulus must be an integer, got {self.d!r}")
        if self.d < 2:
            raise ValueError(f"modulus must be >= 2, got {self.d}")

    @property
    def is_prime(self) -> bool:
        d = self.d
        if d < 4:
            return True
        if d % 2 == 0:
            return False
        return all(d % p for p in range(3, math.isqrt(d) + 1, 2))

    @property
    def root_of_unity(self) -> complex:
        return cmath.exp(2j * math.pi / self.d)

    def element(self, value: int) -> "GroupElement":
        return GroupElement(value % self.d, self)

    def zero(self) -> "GroupElement":
        return GroupElement(0, self)

    def elements(self) -> list["GroupElement"]:
        return [GroupElement(v, self) for v in range(self.d)]


def as_modulus(d: int | Modulus) -> Modulus:
    return d if isinstance(d, Modulus) else Modulus(d)


@dataclass(frozen=True)
class GroupElement:
    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.d:
            raise ValueError(f"residue {self.value} outside [0, {self.modulus.d})")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __neg__(self) -> "GroupElement":
        return neg(self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return add(self, neg(other))

    def __repr__(self):
        return f"{self.value} mod {self.modulus.d}"


def _check_same(a: GroupElement, b: GroupElement):
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus.d} vs {b.modulus.d}")


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a, b)
    return GroupElement((a.value + b.value) % a.modulus.d, a.modulus)


def neg(a: GroupElement) -> GroupElement:
    return GroupElement(-a.value % a.modulus.d, a.modulus)


@dataclass(frozen=True)
class GroupTuple:
    """Assignment of group elements to labelled vertices, e.g. a vector over X ∪ E."""

    entries: tuple[GroupElement, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.labels):
            raise ValueError("entries and labels differ in length")
        if len({e.modulus for e in self.entries}) > 1:
            raise ValueError("all entries of a GroupTuple must share one modulus")

    @classmethod
    def from_values(cls, values: Iterable[int], labels: Iterable[int], d: int | Modulus) -> "GroupTuple":
        m = as_modulus(d)
        return cls(tuple(m.element(int(v)) for v in values), tuple(labels))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.labels, self.values))

    def restrict(self, labels: Iterable[int]) -> "GroupTuple":
        lookup = dict(zip(self.labels, self.entries))
        keep = tuple(labels)
        return GroupTuple(tuple(lookup[v] for v in keep), keep)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __len__(self):
        return len(self.entries)


def bicharacter(args: Sequence[GroupElement]) -> complex:
    """k-argument character ``ω^(g1·g2·…·gk)`` with ``ω = exp(2πi/d)``.

    Multiplicative in every argument separately; for k = 2 this is the usual
    non-degenerate symmetric bicharacter of Z_d.
    """
    if not args:
        raise ValueError("bicharacter needs at least one argument")
    m = args[0].modulus
    exponent = 1
    for a in args:
        if a.modulus != m:
            raise ValueError("bicharacter arguments must share one modulus")
        exponent = exponent * a.value % m.d
    return cmath.exp(2j * math.pi * exponent / m.d)


def check_nondegeneracy(d: int | Modulus, k: int, fixed: GroupTuple | Sequence[GroupElement]) -> bool:
    """Whether summing the character over its first argument gives ``|G|·δ``.

    ``fixed`` holds the remaining ``k - 1`` arguments. The expected value is
    ``|G|`` when their product is 0 mod d and 0 otherwise. Note the stricter
    reading, ``|G|`` only when every fixed entry is 0, fails for k >= 3
    whenever some but not all fixed entries vanish.
    """
    m = as_modulus(d)
    if k < 2:
        raise ValueError("non-degeneracy needs k >= 2")
    rest = tuple(fixed.entries if isinstance(fixed, GroupTuple) else fixed)
    if len(rest) != k - 1:
        raise ValueError(f"expected {k - 1} fixed arguments, got {len(rest)}")
    total = sum(bicharacter((g, *rest)) for g in m.elements())
    product = 1
    for a in rest:
        product = product * a.value % m.d
    expected = m.d if product == 0 else 0
    return abs(total - expected) <= ATOL
