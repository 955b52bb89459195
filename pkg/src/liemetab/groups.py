"""Finite groups as validated Cayley tables, with 0-based element indices.

Every group here is a full multiplication table over indices ``0..n-1`` with
the identity normalised to index 0.  Construction paths that ingest untrusted
data (explicit tables, files) verify all group axioms exhaustively, so a
malformed table can never leak into downstream verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "ValidationError",
    "NotLatinSquare",
    "NoIdentity",
    "NotAssociative",
    "NotAPermutation",
    "OrderLimitExceeded",
    "Group",
    "Subgroup",
    "group_from_table",
    "group_from_permutations",
    "direct_product",
]

#: orders up to which trusted construction paths re-run the full axiom check
EXHAUSTIVE_VALIDATION_LIMIT = 256

#: default cap on the order of a permutation closure
DEFAULT_CLOSURE_LIMIT = 4096


class ValidationError(ValueError):
    """A candidate multiplication table violates a group axiom."""


class NotLatinSquare(ValidationError):
    """Some row or column of the table is not a permutation of 0..n-1."""


class NoIdentity(ValidationError):
    """No element acts as a two-sided identity."""


class NotAssociative(ValidationError):
    """Associativity fails; the message names the first offending triple."""


class NotAPermutation(ValueError):
    """A generator passed to the permutation closure is not a permutation."""


class OrderLimitExceeded(RuntimeError):
    """A permutation closure grew past the configured order cap."""


class Group:
    """Immutable finite group backed by a Cayley table.

    Attributes:
        order: number of elements ``n``.
        table: ``n x n`` int32 array, ``table[g, h]`` is the index of ``g*h``.
        inverse: length-``n`` int32 array of inverse indices.
        labels: optional display strings, one per element.
        name: optional display name.

    Index 0 is always the identity.
    """

    __slots__ = ("order", "table", "inverse", "labels", "name")

    def __init__(
        self,
        table: np.ndarray,
        inverse: np.ndarray,
        labels: Optional[tuple[str, ...]] = None,
        name: Optional[str] = None,
    ):
        self.order = int(table.shape[0])
        table = np.ascontiguousarray(table, dtype=np.int32)
        inverse = np.ascontiguousarray(inverse, dtype=np.int32)
        table.setflags(write=False)
        inverse.setflags(write=False)
        self.table = table
        self.inverse = inverse
        self.labels = labels
        self.name = name

    # -- element arithmetic ------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def conj(self, g: int, h: int) -> int:
        """Conjugate of ``g`` by ``h``: the element ``h^-1 * g * h``."""
        t = self.table
        return int(t[t[self.inverse[h], g], h])

    def comm(self, g: int, h: int) -> int:
        """Group commutator ``g^-1 * h^-1 * g * h``."""
        t = self.table
        return int(t[t[t[self.inverse[g], self.inverse[h]], g], h])

    def power(self, g: int, k: int) -> int:
        """``g`` raised to an integer power (negative allowed)."""
        if k < 0:
            g, k = self.inv(g), -k
        acc = 0
        t = self.table
        for _ in range(k):
            acc = int(t[acc, g])
        return acc

    def element_order(self, g: int) -> int:
        """Least ``k >= 1`` with ``g^k`` equal to the identity."""
        t = self.table
        acc, k = g, 1
        while acc != 0:
            acc = int(t[acc, g])
            k += 1
        return k

    def cyclic_subgroup(self, g: int) -> "Subgroup":
        t = self.table
        elems = [0]
        acc = g
        while acc != 0:
            elems.append(acc)
            acc = int(t[acc, g])
        return Subgroup(self, tuple(sorted(elems)))

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels is not None else str(g)

    # -- whole-group predicates --------------------------------------------

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def exponent(self) -> int:
        """Least common multiple of all element orders."""
        return math.lcm(*(self.element_order(g) for g in self.elements()))

    def involution_set(self) -> tuple[int, ...]:
        """Sorted indices of all ``g`` with ``g^2`` the identity (identity included)."""
        diag = self.table.diagonal()
        return tuple(int(g) for g in np.nonzero(diag == 0)[0])

    def center(self) -> "Subgroup":
        central = np.all(self.table == self.table.T, axis=1)
        return Subgroup(self, tuple(int(g) for g in np.nonzero(central)[0]))

    # -- subgroup machinery --------------------------------------------------

    def generated_subgroup(self, seed: Iterable[int]) -> "Subgroup":
        """Smallest subgroup containing ``seed``.

        Breadth-first closure under right multiplication by the seed; in a
        finite group this already yields closure under inverses.
        """
        gens = sorted(set(int(s) for s in seed))
        t = self.table
        seen = {0}
        worklist = [0]
        for x in worklist:
            for s in gens:
                y = int(t[x, s])
                if y not in seen:
                    seen.add(y)
                    worklist.append(y)
        return Subgroup(self, tuple(sorted(seen)))

    def subgroup(self, elements: Iterable[int]) -> "Subgroup":
        """Wrap an element set known to be closed; closure is re-verified."""
        elems = tuple(sorted(set(int(x) for x in elements)))
        sub = Subgroup(self, elems)
        if not sub.is_closed():
            raise ValueError("element set is not closed under the group operation")
        return sub

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(self.elements()))

    def __repr__(self) -> str:
        tag = self.name or "Group"
        return f"<{tag} of order {self.order}>"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element indices inside a parent group."""

    parent: Group = field(repr=False)
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._element_set()

    def __iter__(self):
        return iter(self.elements)

    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    def is_closed(self) -> bool:
        members = self._element_set()
        if 0 not in members:
            return False
        t = self.parent.table
        return all(int(t[a, b]) in members for a in self.elements for b in self.elements)

    def is_abelian(self) -> bool:
        t = self.parent.table
        e = self.elements
        return all(t[a, b] == t[b, a] for i, a in enumerate(e) for b in e[i + 1 :])

    def is_elementary_abelian_2(self) -> bool:
        """Abelian with every non-identity element of order 2."""
        t = self.parent.table
        return all(int(t[a, a]) == 0 for a in self.elements) and self.is_abelian()

    def is_normal(self) -> bool:
        members = self._element_set()
        G = self.parent
        return all(
            G.conj(a, g) in members for a in self.elements for g in G.elements()
        )


# -- construction ------------------------------------------------------------


def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    expect = np.arange(n, dtype=table.dtype)
    for g in range(n):
        if not np.array_equal(np.sort(table[g]), expect):
            raise NotLatinSquare(f"row {g} is not a permutation of 0..{n - 1}")
    for g in range(n):
        if not np.array_equal(np.sort(table[:, g]), expect):
            raise NotLatinSquare(f"column {g} is not a permutation of 0..{n - 1}")


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n, dtype=table.dtype)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    raise NoIdentity("no element acts as a two-sided identity")


def _check_associative(table: np.ndarray) -> None:
    for g in range(table.shape[0]):
        left = table[table[g]]  # (g*h)*k
        right = table[g][table]  # g*(h*k)
        if not np.array_equal(left, right):
            h, k = map(int, np.argwhere(left != right)[0])
            raise NotAssociative(f"({g}*{h})*{k} != {g}*({h}*{k})")


def _inverses(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    inverse = np.empty(n, dtype=np.int32)
    for g in range(n):
        inverse[g] = int(np.nonzero(table[g] == 0)[0][0])
    return inverse


def _relabel_identity_to_zero(
    table: np.ndarray, e: int, labels: Optional[Sequence[str]]
) -> tuple[np.ndarray, Optional[tuple[str, ...]]]:
    if e == 0:
        return table, tuple(labels) if labels is not None else None
    n = table.shape[0]
    sigma = np.arange(n)
    sigma[0], sigma[e] = e, 0  # swap is its own inverse
    relabelled = sigma[table[np.ix_(sigma, sigma)]]
    new_labels = None
    if labels is not None:
        new_labels = tuple(labels[sigma[i]] for i in range(n))
    return relabelled, new_labels


def group_from_table(
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
) -> Group:
    """Validate an explicit Cayley table and return the group it defines.

    All axioms are checked exhaustively (associativity is O(n^3)).  The
    identity is relabelled to index 0 if necessary, permuting ``labels``
    along with it.

    Raises:
        NotLatinSquare, NoIdentity, NotAssociative: naming the offending
            row/column or triple.
        ValueError: on shape errors or label count mismatch.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be square and non-empty, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.dtype.kind not in "iu":
        raise ValueError("table entries must be integers")
    if arr.min() < 0 or arr.max() >= n:
        g, h = map(int, np.argwhere((arr < 0) | (arr >= n))[0])
        raise NotLatinSquare(f"entry at ({g},{h}) is outside 0..{n - 1}")
    if labels is not None and len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    arr = arr.astype(np.int32)
    _check_latin(arr)
    e = _find_identity(arr)
    arr, labels_t = _relabel_identity_to_zero(arr, e, labels)
    _check_associative(arr)
    inverse = _inverses(arr)
    # two-sidedness of inverses follows from the verified axioms
    assert all(int(arr[inverse[g], g]) == 0 for g in range(n))
    return Group(arr, inverse, labels_t, name)


def _trusted_group(
    table: np.ndarray, labels: Optional[Sequence[str]], name: Optional[str]
) -> Group:
    """Build a group from a table that is associative by construction.

    The cheap axioms are always re-checked; the O(n^3) associativity sweep is
    re-run only up to EXHAUSTIVE_VALIDATION_LIMIT.
    """
    arr = np.ascontiguousarray(table, dtype=np.int32)
    _check_latin(arr)
    if _find_identity(arr) != 0:
        raise NoIdentity("internal construction must place the identity at index 0")
    if arr.shape[0] <= EXHAUSTIVE_VALIDATION_LIMIT:
        _check_associative(arr)
    return Group(arr, _inverses(arr), tuple(labels) if labels else None, name)


def group_from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    name: Optional[str] = None,
    order_limit: int = DEFAULT_CLOSURE_LIMIT,
) -> Group:
    """Abstract group of the permutation group generated by ``generators``.

    Elements are enumerated breadth-first from the identity (which therefore
    gets index 0) and labelled by their one-line permutation images.

    Raises:
        NotAPermutation: if a generator is not a permutation of 0..degree-1.
        OrderLimitExceeded: if the closure grows past ``order_limit``.
    """
    if degree <= 0:
        raise ValueError("degree must be positive")
    gens: list[tuple[int, ...]] = []
    for k, p in enumerate(generators):
        tup = tuple(int(x) for x in p)
        if sorted(tup) != list(range(degree)):
            raise NotAPermutation(f"generator {k} is not a permutation of 0..{degree - 1}")
        gens.append(tup)

    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index = {ident: 0}
    for p in elems:
        for g in gens:
            q = tuple(p[g[x]] for x in range(degree))
            if q not in index:
                if len(elems) >= order_limit:
                    raise OrderLimitExceeded(
                        f"closure exceeded the order cap of {order_limit}"
                    )
                index[q] = len(elems)
                elems.append(q)

    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(p[q[x]] for x in range(degree))]
    labels = tuple("(" + " ".join(map(str, p)) + ")" for p in elems)
    return _trusted_group(table, labels, name)


def direct_product(G: Group, H: Group, name: Optional[str] = None) -> Group:
    """Direct product with elements encoded as ``a * |H| + b``."""
    n, m = G.order, H.order
    table = (
        G.table[:, None, :, None].astype(np.int64) * m + H.table[None, :, None, :]
    ).reshape(n * m, n * m)
    labels = tuple(
        f"({G.label(a)},{H.label(b)})" for a in range(n) for b in range(m)
    )
    return _trusted_group(table, labels, name)
