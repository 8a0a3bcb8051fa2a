"""Numerical semigroups with exact integer arithmetic.

A numerical semigroup S is an additively closed subset of the
nonnegative integers that contains 0 and has finite complement. It is
determined by its unique minimal system of generators m_1 < ... < m_d;
the smallest generator is the multiplicity e = m(S), the largest integer
outside S is the Frobenius number, and conductor = Frobenius + 1.

Fast paths used here:

* membership is O(1) against the Apery set of the multiplicity (the
  smallest member in each residue class mod e), which is computed once
  by a shortest-path run over the residue graph Z/eZ;
* orders (the largest number of generators summing to a member, written
  ord(s)) are tabulated bottom-up in a lazily grown :class:`OrderTable`.

Independent brute-force counterparts of all of these live in
:mod:`numsgps.verify` and are held against the fast paths by the test
suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import kernels
from .errors import (
    EmptyInputError,
    IntegerWidthError,
    InvalidGeneratorError,
    InvariantViolation,
    NonCoprimeError,
    NotAMemberError,
)

_WIDTH_LIMIT = 1 << 62


@dataclass(frozen=True)
class AperySet:
    """The x smallest elements of a set in each residue class mod x.

    ``ideal_level`` 0 means the Apery set of the semigroup itself;
    level n >= 1 means the Apery set of the ideal nM (elements of order
    at least n). ``elements[r]`` is the smallest element congruent to r.
    """

    base: int
    ideal_level: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) != self.base:
            raise InvariantViolation("Apery set must have exactly `base` elements")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, value):
        return self.elements[value % self.base] == value

    def sorted_values(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def max_value(self) -> int:
        return max(self.elements)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "ideal_level": self.ideal_level,
            "elements": list(self.elements),
        }


class OrderTable:
    """Memoized orders ord(s) for all s up to a growable bound.

    ``-1`` marks non-members. Growth is monotone: extending never changes
    existing entries, so concurrent use is as-if-pure (racing extensions
    recompute identical values and the array swap is atomic).
    """

    def __init__(self, semigroup: "NumericalSemigroup", bound: int | None = None):
        self.semigroup = semigroup
        if bound is None:
            bound = semigroup.conductor + 2 * semigroup.generators[-1]
        self._table = kernels.order_fill(semigroup.generators, bound)

    @property
    def bound(self) -> int:
        return len(self._table) - 1

    def ensure(self, bound: int) -> None:
        """Extend the table so values up to ``bound`` are available."""
        if bound > self.bound:
            gens = self.semigroup.generators
            floor = self.semigroup.conductor + 2 * gens[-1]
            self._table = kernels.order_fill(gens, max(bound, floor), prev=self._table)

    def ord(self, s: int) -> int:
        if s < 0:
            return -1
        self.ensure(s)
        return int(self._table[s])

    def array(self, bound: int) -> np.ndarray:
        """Read-only view of entries 0..bound (inclusive)."""
        self.ensure(bound)
        view = self._table[: bound + 1]
        view.flags.writeable = False
        return view

    def lookup(self, values) -> np.ndarray:
        """Vectorized ord for an array of nonnegative integers."""
        values = np.asarray(values, dtype=np.int64)
        if values.size == 0:
            return np.zeros(0, dtype=np.int64)
        self.ensure(int(values.max()))
        return self._table[values]

    def items(self):
        """Yield (member, ord) pairs for every member within the bound."""
        for s, o in enumerate(self._table):
            if o >= 0:
                yield s, int(o)


class NumericalSemigroup:
    """A numerical semigroup, stored via its minimal generating system.

    Instances are immutable value objects (equality and hashing follow
    the generator tuple); the Apery set of the multiplicity and the
    order table are cached internally.
    """

    __slots__ = ("generators", "multiplicity", "frobenius", "conductor",
                 "_apery_e", "_order_table", "_cache")

    def __init__(self, generators):
        gens = sorted(set(_validate(generators)))
        if reduce(math.gcd, gens) != 1:
            raise NonCoprimeError(
                f"gcd of {gens} is {reduce(math.gcd, gens)}; "
                "the complement would be infinite")
        generators = minimalize(gens)
        self.generators = generators
        self.multiplicity = generators[0]
        apery = kernels.apery_distances(generators, generators[0])
        self._apery_e = AperySet(generators[0], 0, tuple(int(v) for v in apery))
        self.frobenius = self._apery_e.max_value() - self.multiplicity
        self.conductor = self.frobenius + 1
        self._order_table = None
        self._cache = {}

    # -- basic facts ---------------------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def is_naturals(self) -> bool:
        return self.generators == (1,)

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup)
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup{self.generators!r}"

    def __str__(self):
        return "<" + ",".join(str(g) for g in self.generators) + ">"

    # -- membership ----------------------------------------------------

    def contains(self, n: int) -> bool:
        """True iff n is an element of the semigroup. O(1)."""
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return n >= self._apery_e.elements[n % self.multiplicity]

    __contains__ = contains

    def member_mask(self, values) -> np.ndarray:
        """Vectorized membership for an integer array."""
        values = np.asarray(values, dtype=np.int64)
        ap = np.asarray(self._apery_e.elements, dtype=np.int64)
        ok = values >= 0
        res = np.where(ok, values % self.multiplicity, 0)
        return ok & (values >= ap[res])

    def members_up_to(self, bound: int) -> np.ndarray:
        """All members in [0, bound], ascending."""
        values = np.arange(bound + 1, dtype=np.int64)
        return values[self.member_mask(values)]

    # -- Apery sets ------------------------------------------------------

    def apery_set(self, x: int) -> AperySet:
        """Apery set with respect to a member x > 0.

        Computed by a single-source shortest path over the residue
        classes mod x (arc weight = generator value); the sieve-based
        oracle in :mod:`numsgps.verify` recomputes it independently.
        """
        if x <= 0 or not self.contains(x):
            raise NotAMemberError(f"{x} is not a positive element of {self}")
        if x == self.multiplicity:
            return self._apery_e
        distances = kernels.apery_distances(self.generators, x)
        return AperySet(x, 0, tuple(int(v) for v in distances))

    # -- orders ----------------------------------------------------------

    def order_table(self, bound: int | None = None) -> OrderTable:
        if self._order_table is None:
            self._order_table = OrderTable(self)
        if bound is not None:
            self._order_table.ensure(bound)
        return self._order_table

    def ord(self, s: int) -> int:
        """Order of a member: the maximum n with s a sum of n generators."""
        if s < 0 or not self.contains(s):
            raise NotAMemberError(f"{s} is not an element of {self}")
        return self.order_table(s).ord(s)

    def max_expression(self, s: int) -> tuple[int, ...]:
        """Coefficients (r_1, ..., r_d) of a maximal expression of s.

        Sum(r_i * m_i) = s with Sum(r_i) = ord(s); among all such vectors
        the lexicographically largest is returned, i.e. the count of the
        smallest generator is maximized first.
        """
        k = self.ord(s)
        gens = self.generators
        d = len(gens)
        memo: dict[tuple[int, int], int] = {}

        def counts(j: int, v: int) -> int:
            # Bitmask of summand counts achievable for v using gens[j:].
            if j == d:
                return 1 if v == 0 else 0
            key = (j, v)
            cached = memo.get(key)
            if cached is not None:
                return cached
            mask = 0
            c = 0
            step = gens[j]
            while c * step <= v:
                mask |= counts(j + 1, v - c * step) << c
                c += 1
            memo[key] = mask
            return mask

        if counts(0, s).bit_length() - 1 != k:
            raise InvariantViolation(
                f"max expression search disagrees with ord({s}) = {k}")
        coeffs = []
        remaining, needed = s, k
        for j in range(d):
            for c in range(min(remaining // gens[j], needed), -1, -1):
                if (counts(j + 1, remaining - c * gens[j]) >> (needed - c)) & 1:
                    coeffs.append(c)
                    remaining -= c * gens[j]
                    needed -= c
                    break
        return tuple(coeffs)

    # -- gaps --------------------------------------------------------------

    def gaps(self) -> list[int]:
        """All positive integers outside the semigroup, ascending."""
        ap = self._apery_e.elements
        e = self.multiplicity
        return [n for n in range(1, self.frobenius + 1) if n < ap[n % e]]

    def genus(self) -> int:
        """Number of gaps; computed from the Apery set in O(e)."""
        return sum(w // self.multiplicity for w in self._apery_e.elements)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "conductor": self.conductor,
        }


def _validate(raw) -> list[int]:
    values = list(raw)
    if not values:
        raise EmptyInputError("at least one generator is required")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise InvalidGeneratorError(f"generator {v!r} is not an integer")
        v = int(v)
        if v <= 0:
            raise InvalidGeneratorError(f"generator {v} is not positive")
        if v >= _WIDTH_LIMIT:
            raise IntegerWidthError(f"generator {v} exceeds the 64-bit envelope")
        out.append(v)
    return out


def minimalize(raw) -> tuple[int, ...]:
    """Reduce a generating set to the unique minimal system.

    A generator is redundant exactly when it is a sum of two nonzero
    members of the semigroup generated by the whole input.
    """
    gens = sorted(set(_validate(raw)))
    if gens[0] == 1:
        return (1,)
    member = kernels.sieve_fill(gens, gens[-1])
    keep = []
    for g in gens:
        head = member[1:g]
        if not np.any(head & head[::-1]):
            keep.append(g)
    return tuple(keep)


def from_generators(raw) -> NumericalSemigroup:
    """Build the numerical semigroup generated by ``raw``.

    The input is reduced to the unique minimal system; gcd must be 1.
    """
    return NumericalSemigroup(raw)


def naturals() -> NumericalSemigroup:
    """The degenerate semigroup of all nonnegative integers."""
    return NumericalSemigroup([1])
