"""Gluings of numerical semigroups and their classification.

Given semigroups S1 = <m_1,...,m_d> and S2 = <n_1,...,n_k>, an element
p of S1 and an element q of S2, neither a minimal generator, with
gcd(p, q) = 1, the semigroup

    S = <q*m_1, ..., q*m_d, p*n_1, ..., p*n_k>

is the gluing of S1 and S2 along (p, q). The combined set is
automatically the minimal system of S and m(S) = min(q*m_1, p*n_1);
both facts are revalidated on every construction.

Classification flags:

* nice      -- q = a * n_1 for some 1 < a <= ord_{S1}(p);
* specific  -- ord_{S2}(q) + l_q(S2) <= ord_{S1}(p);
* extension -- S2 is the full set of nonnegative integers (then q > 1).

Specific gluings admit a unique representation u = q*z1 + p*z2 with
z2 in AP(S2, q), which is order-additive; that is what makes order and
multiplicity transfer exactly along the gluing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cone import l_value
from .core import NumericalSemigroup, from_generators, naturals
from .errors import (
    InvariantViolation,
    NotAMemberError,
    NotCoprimeError,
    NotSpecificError,
    PIsGeneratorError,
    PNotMemberError,
    QIsGeneratorError,
    QNotMemberError,
    SemigroupError,
)
from . import cone


@dataclass(frozen=True)
class GluingFlags:
    valid: bool
    nice: bool
    specific: bool
    extension: bool
    nice_extension: bool

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "nice": self.nice,
            "specific": self.specific,
            "extension": self.extension,
            "nice_extension": self.nice_extension,
        }


@dataclass(frozen=True)
class GluingSpec:
    """A validated gluing with its classification flags."""

    s1: NumericalSemigroup
    s2: NumericalSemigroup
    p: int
    q: int
    glued: NumericalSemigroup
    flags: GluingFlags

    def __str__(self):
        return f"{self.s1} glued with {self.s2} via p={self.p}, q={self.q} -> {self.glued}"

    def to_json(self) -> dict:
        return {
            "s1": list(self.s1.generators),
            "s2": list(self.s2.generators),
            "p": self.p,
            "q": self.q,
            "glued_generators": list(self.glued.generators),
            "flags": self.flags.to_json(),
        }


@dataclass(frozen=True)
class Representation:
    """u = q*z1 + p*z2; ``additive`` records order additivity."""

    z1: int
    z2: int
    additive: bool


def make_gluing(s1: NumericalSemigroup, s2: NumericalSemigroup,
                p: int, q: int) -> GluingSpec:
    """Validate and classify the gluing of s1 and s2 along (p, q).

    Raises a :class:`GluingError` subclass naming the first failed
    clause: coprimality, membership of p/q, or p/q being a minimal
    generator.
    """
    p, q = int(p), int(q)
    if p <= 0 or not s1.contains(p):
        raise PNotMemberError(f"p={p} is not a positive element of {s1}")
    if p in s1.generators:
        raise PIsGeneratorError(f"p={p} is a minimal generator of {s1}")
    if q <= 0 or not s2.contains(q):
        raise QNotMemberError(f"q={q} is not a positive element of {s2}")
    if q in s2.generators:
        raise QIsGeneratorError(f"q={q} is a minimal generator of {s2}")
    if math.gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd(p={p}, q={q}) = {math.gcd(p, q)} != 1")

    combined = tuple(sorted([q * m for m in s1.generators]
                            + [p * n for n in s2.generators]))
    glued = from_generators(combined)
    if glued.generators != combined:
        raise InvariantViolation(
            f"gluing generators {combined} are not a minimal system")
    expected_mult = min(q * s1.multiplicity, p * s2.multiplicity)
    if glued.multiplicity != expected_mult:
        raise InvariantViolation(
            f"multiplicity of {glued} is not min(q*m_1, p*n_1)")

    ord1_p = s1.ord(p)
    ord2_q = s2.ord(q)
    l_q = l_value(s2, q)
    n1 = s2.multiplicity
    nice = q % n1 == 0 and 1 < q // n1 <= ord1_p
    specific = ord2_q + l_q <= ord1_p
    extension = s2.is_naturals

    # Built-in self-test: nice with a Cohen-Macaulay second cone is the
    # same as ord_{S2}(q) <= ord_{S1}(p) with l_q(S2) = 0, and implies
    # specificity.
    char_a = nice and cone.is_cm_tangent_cone(s2)
    char_b = ord2_q <= ord1_p and l_q == 0
    if char_a != char_b:
        raise InvariantViolation(
            f"nice-gluing characterizations disagree for p={p}, q={q}")
    if char_a and not specific:
        raise InvariantViolation(
            f"nice gluing with CM second cone must be specific (p={p}, q={q})")
    if specific and glued.multiplicity != q * s1.multiplicity:
        raise InvariantViolation(
            f"specific gluing must have multiplicity q*m_1 (p={p}, q={q})")

    flags = GluingFlags(valid=True, nice=nice, specific=specific,
                        extension=extension,
                        nice_extension=nice and extension)
    return GluingSpec(s1=s1, s2=s2, p=p, q=q, glued=glued, flags=flags)


def apery_factorization(g: GluingSpec, x: int) -> tuple[tuple[int, int], ...]:
    """All pairs (z1, z2) with z1 in AP(S1, x), z2 in AP(S2, q).

    Their combinations q*z1 + p*z2 are pairwise distinct and are exactly
    AP(glued, q*x); this is recomputed directly on the glued semigroup
    and cross-checked before returning.
    """
    if x <= 0 or not g.s1.contains(x):
        raise NotAMemberError(f"x={x} is not a positive element of {g.s1}")
    ap1 = g.s1.apery_set(x).elements
    ap2 = g.s2.apery_set(g.q).elements
    pairs = tuple(sorted((z1, z2) for z1 in ap1 for z2 in ap2))
    values = [g.q * z1 + g.p * z2 for z1, z2 in pairs]
    if len(set(values)) != len(values):
        raise InvariantViolation(
            f"Apery factorization of {g} at x={x} produced repeated values")
    direct = set(g.glued.apery_set(g.q * x).elements)
    if set(values) != direct:
        raise InvariantViolation(
            f"Apery factorization of {g} at x={x} disagrees with the direct set")
    return pairs


def unique_representation(g: GluingSpec, u: int) -> Representation:
    """The unique (z1, z2) with z2 in AP(S2, q) and u = q*z1 + p*z2.

    Requires a specific gluing; the representation is order-additive:
    ord(u) = ord_{S1}(z1) + ord_{S2}(z2).
    """
    if not g.flags.specific:
        raise NotSpecificError(
            f"{g} is not specific; uniqueness is not guaranteed")
    if u < 0 or not g.glued.contains(u):
        raise NotAMemberError(f"{u} is not an element of {g.glued}")
    ap2 = g.s2.apery_set(g.q).elements
    z2 = ap2[(u * pow(g.p, -1, g.q)) % g.q]
    rest = u - g.p * z2
    if rest < 0 or rest % g.q != 0 or not g.s1.contains(rest // g.q):
        raise InvariantViolation(
            f"unique representation of {u} in {g} does not exist")
    z1 = rest // g.q
    additive = g.glued.ord(u) == g.s1.ord(z1) + g.s2.ord(z2)
    if not additive:
        raise InvariantViolation(
            f"representation of {u} in {g} is not order-additive")
    return Representation(z1=z1, z2=z2, additive=additive)


def ord_transfer_check(g: GluingSpec, x: int) -> bool:
    """Check ord_glued(q*x) == ord_{S1}(x) for a specific gluing.

    The transfer is a theorem, so False marks an implementation bug;
    the return value exists to make the harness a bug detector.
    """
    if not g.flags.specific:
        raise NotSpecificError(f"{g} is not specific")
    if x < 0 or not g.s1.contains(x):
        raise NotAMemberError(f"x={x} is not an element of {g.s1}")
    return g.glued.ord(g.q * x) == g.s1.ord(x)


@dataclass(frozen=True)
class FreeBuild:
    """Result of an iterated extension chain starting from the naturals."""

    semigroup: NumericalSemigroup
    steps: tuple[GluingSpec, ...]

    @property
    def all_nice(self) -> bool:
        return all(s.flags.nice for s in self.steps)

    @property
    def all_specific(self) -> bool:
        return all(s.flags.specific for s in self.steps)

    def to_json(self) -> dict:
        return {
            "generators": list(self.semigroup.generators),
            "steps": [{"q": s.q, "p": s.p, "flags": s.flags.to_json()}
                      for s in self.steps],
            "all_nice": self.all_nice,
            "all_specific": self.all_specific,
        }


def build_free(steps) -> FreeBuild:
    """Iterate extensions (q_i, p_i) starting from the naturals.

    Each step glues the current semigroup with the naturals, producing a
    free numerical semigroup; per-step flags let callers apply the
    Cohen-Macaulay induction when every step is nice.
    """
    current = naturals()
    specs = []
    for index, (q, p) in enumerate(steps, start=1):
        try:
            spec = make_gluing(current, naturals(), p=p, q=q)
        except SemigroupError as exc:
            raise type(exc)(f"step {index}: {exc}") from exc
        specs.append(spec)
        current = spec.glued
    return FreeBuild(semigroup=current, steps=tuple(specs))
