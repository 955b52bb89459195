"""Exact integral group-ring arithmetic with the inversion involution.

Elements are finitely supported maps from element indices to Python ints, so
all arithmetic is exact and of arbitrary precision.  Working over the
integers is enough to decide whether an identity in the module generators
vanishes over every coefficient ring of characteristic zero; see
docs/THEORY.md for the argument.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .groups import Group

__all__ = ["MixedGroups", "RingElement", "lie_bracket"]


class MixedGroups(ValueError):
    """Arithmetic was attempted between elements of different groups."""


class RingElement:
    """Immutable sparse element of the integral group ring of a finite group.

    Zero coefficients are never stored, so two elements are equal exactly
    when their stored coefficient maps are identical (canonical form).
    """

    __slots__ = ("group", "_coeffs")

    def __init__(self, group: Group, coeffs: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for g, c in items:
            g = int(g)
            if not 0 <= g < group.order:
                raise ValueError(f"element index {g} outside 0..{group.order - 1}")
            c = int(c)
            if c:
                clean[g] = clean.get(g, 0) + c
                if not clean[g]:
                    del clean[g]
        self.group = group
        self._coeffs = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group: Group) -> "RingElement":
        return cls(group, {})

    @classmethod
    def one(cls, group: Group) -> "RingElement":
        return cls(group, {0: 1})

    @classmethod
    def from_element(cls, group: Group, g: int, coeff: int = 1) -> "RingElement":
        return cls(group, {g: coeff})

    # -- inspection ------------------------------------------------------------

    def coeff(self, g: int) -> int:
        return self._coeffs.get(g, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """Coefficients as (element index, coefficient) pairs, index-sorted."""
        return tuple(sorted(self._coeffs.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- module operations -----------------------------------------------------

    def _require_same_group(self, other: "RingElement") -> None:
        if self.group is not other.group:
            raise MixedGroups("operands belong to different groups")

    def __add__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        self._require_same_group(other)
        out = dict(self._coeffs)
        for g, c in other._coeffs.items():
            s = out.get(g, 0) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return RingElement(self.group, out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "RingElement":
        return RingElement(self.group, {g: -c for g, c in self._coeffs.items()})

    def scale(self, k: int) -> "RingElement":
        if not k:
            return RingElement.zero(self.group)
        return RingElement(self.group, {g: k * c for g, c in self._coeffs.items()})

    # -- ring multiplication -----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        self._require_same_group(other)
        table = self.group.table
        out: dict[int, int] = {}
        for g, cg in self._coeffs.items():
            row = table[g]
            for h, ch in other._coeffs.items():
                k = int(row[h])
                s = out.get(k, 0) + cg * ch
                if s:
                    out[k] = s
                else:
                    del out[k]
        return RingElement(self.group, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    # -- involution ---------------------------------------------------------------

    def star(self) -> "RingElement":
        """Image under the linear extension of ``g -> g^-1``."""
        inv = self.group.inverse
        return RingElement(self.group, {int(inv[g]): c for g, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        inv = self.group.inverse
        return all(self._coeffs.get(int(inv[g]), 0) == c for g, c in self._coeffs.items())

    def is_antisymmetric(self) -> bool:
        inv = self.group.inverse
        return all(self._coeffs.get(int(inv[g]), 0) == -c for g, c in self._coeffs.items())

    # -- equality -------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.group is other.group and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((id(self.group), self.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for g, c in self.items():
            lbl = self.group.label(g)
            parts.append(f"{c}*{lbl}" if c != 1 else lbl)
        return " + ".join(parts).replace("+ -", "- ")

    def serialize(self) -> list[list]:
        """Report form: ``[label_or_index, coefficient]`` pairs, index-sorted."""
        use_labels = self.group.labels is not None
        return [
            [self.group.label(g) if use_labels else g, c] for g, c in self.items()
        ]


def lie_bracket(a: RingElement, b: RingElement) -> RingElement:
    """Additive commutator ``a*b - b*a``."""
    return a * b - b * a
