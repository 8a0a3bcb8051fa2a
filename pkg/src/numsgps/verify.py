"""Brute-force oracles and a seeded theorem-checking harness.

The oracles recompute membership, orders, and Apery sets from first
principles with algorithms disjoint from the fast paths (a plain sieve,
exhaustive representation search, upward residue scans); the test suite
holds them against :mod:`numsgps.core` on random instances.

The harness samples semigroups and gluings reproducibly and checks each
registered theorem's hypothesis and conclusion on every instance. The
theorems are proved statements, so a violation always means an
implementation bug; reports carry full witnesses so the offending
instance can be replayed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field, asdict, replace
from functools import reduce
from typing import Callable, Iterable, Iterator

import numpy as np

from . import cone
from .core import AperySet, NumericalSemigroup, from_generators, naturals
from .errors import (
    BoundsTooSmallError,
    InvariantViolation,
    NotAMemberError,
    NotRepresentableError,
    UnknownTheoremError,
)
from .gluing import GluingSpec, make_gluing
from . import kernels

# ---------------------------------------------------------------------------
# oracles


def sieve_members(generators, bound: int) -> list[bool]:
    """Membership table by direct dynamic programming.

    reachable[0] is True and reachable[n] = OR over generators g of
    reachable[n - g]. Kept deliberately naive: this is the oracle the
    fast membership test is measured against.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    gens = sorted({int(g) for g in generators})
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive")
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for n in range(1, bound + 1):
        for g in gens:
            if g > n:
                break
            if reachable[n - g]:
                reachable[n] = True
                break
    return reachable


def brute_ord(generators, s: int) -> int:
    """Order of s by exhaustive bounded search over all representations.

    No memoized shortcuts and no state shared with the order-table
    recurrence; must agree with the fast path on every representable s.
    """
    result = kernels.max_sum_count(generators, s)
    if result < 0:
        raise NotRepresentableError(f"{s} is not a sum of {sorted(generators)}")
    return result


def brute_apery(generators, x: int) -> AperySet:
    """Apery set by scanning members upward per residue class."""
    gens = sorted({int(g) for g in generators})
    # Every class is filled below the classical (m1-1)(md-1) + x bound.
    bound = (gens[0] - 1) * (gens[-1] - 1) + int(x)
    members = sieve_members(gens, bound)
    if x <= 0 or not members[x]:
        raise NotAMemberError(f"{x} is not a positive member of <{gens}>")
    found: dict[int, int] = {}
    for n in range(bound + 1):
        if members[n]:
            r = n % x
            if r not in found:
                found[r] = n
                if len(found) == x:
                    break
    if len(found) != x:
        raise InvariantViolation("sieve bound failed to fill all residue classes")
    return AperySet(x, 0, tuple(found[r] for r in range(x)))


# ---------------------------------------------------------------------------
# samplers


@dataclass(frozen=True)
class SamplerConfig:
    """Bounds for the instance samplers; all draws are seed-deterministic."""

    max_embdim: int = 4
    max_gen: int = 40
    max_pq: int = 60
    count: int = 200
    conductor_cap: int = 4000
    glued_conductor_cap: int = 120_000
    work_cap: int = 8_000_000
    natural_s2_prob: float = 0.3
    extension_only: bool = False
    max_attempts_factor: int = 100

    def to_json(self) -> dict:
        return asdict(self)


_NATURALS_PROB = 0.04
_DRAW_TRIES = 400


def _draw_semigroup(rng: random.Random, cfg: SamplerConfig) -> NumericalSemigroup | None:
    for _ in range(_DRAW_TRIES):
        if rng.random() < _NATURALS_PROB:
            return naturals()
        d = rng.randint(2, max(2, cfg.max_embdim))
        population = range(2, cfg.max_gen + 1)
        if d > len(population):
            continue
        gens = rng.sample(population, d)
        if reduce(math.gcd, gens) != 1:
            continue
        S = from_generators(gens)
        if S.conductor > cfg.conductor_cap:
            continue
        return S
    return None


def _nongenerator_members(S: NumericalSemigroup, cap: int) -> list[int]:
    gens = set(S.generators)
    return [n for n in range(2, cap + 1) if S.contains(n) and n not in gens]


def _glued_work(spec: GluingSpec, cfg: SamplerConfig) -> bool:
    """Reject instances whose exact computations would be disproportionate."""
    S = spec.glued
    if S.conductor > cfg.glued_conductor_cap:
        return False
    # Worst-case order-table bound for the defect scans is r * m_d with
    # r <= e - 1; refuse instances where even that ceiling is huge.
    if S.multiplicity * S.generators[-1] > cfg.work_cap:
        return False
    return True


def _draw_gluing(rng: random.Random, cfg: SamplerConfig,
                 pair_filter: Callable | None = None,
                 prefer_specific: bool = False) -> GluingSpec | None:
    for _ in range(_DRAW_TRIES):
        s1 = _draw_semigroup(rng, cfg)
        if s1 is None:
            return None
        if cfg.extension_only or rng.random() < cfg.natural_s2_prob:
            s2 = naturals()
        else:
            s2 = _draw_semigroup(rng, cfg)
            if s2 is None:
                return None
        ps = _nongenerator_members(s1, cfg.max_pq)
        qs = _nongenerator_members(s2, cfg.max_pq)
        if not ps or not qs:
            continue
        if prefer_specific:
            q = rng.choice(qs)
            need = s2.ord(q) + cone.l_value(s2, q)
            good = [p for p in ps if math.gcd(p, q) == 1 and s1.ord(p) >= need]
            if not good:
                continue
            p = rng.choice(good)
        else:
            p = rng.choice(ps)
            coprime = [q for q in qs if math.gcd(p, q) == 1]
            if not coprime:
                continue
            q = rng.choice(coprime)
        if pair_filter is not None and not pair_filter(s1, s2, p, q):
            continue
        spec = make_gluing(s1, s2, p, q)
        if not _glued_work(spec, cfg):
            continue
        return spec
    return None


def sample_semigroups(config: SamplerConfig, seed: int) -> Iterator[NumericalSemigroup]:
    """Yield up to ``config.count`` random semigroups, deterministically."""
    rng = random.Random(seed)
    for _ in range(config.count):
        S = _draw_semigroup(rng, config)
        if S is None:
            return
        yield S


def sample_gluings(config: SamplerConfig, seed: int) -> Iterator[GluingSpec]:
    """Yield up to ``config.count`` random valid gluings, deterministically."""
    rng = random.Random(seed)
    for _ in range(config.count):
        spec = _draw_gluing(rng, config)
        if spec is None:
            return
        yield spec


def _stream(draw: Callable, config: SamplerConfig, seed: int) -> Iterator:
    rng = random.Random(seed)
    while True:
        inst = draw(rng, config)
        if inst is None:
            return
        yield inst


def _specific_stream(config: SamplerConfig, seed: int) -> Iterator[GluingSpec]:
    return _stream(lambda rng, cfg: _draw_gluing(rng, cfg, prefer_specific=True),
                   config, seed)


def _gluing_stream(config: SamplerConfig, seed: int) -> Iterator[GluingSpec]:
    return _stream(_draw_gluing, config, seed)


def _extension_stream(config: SamplerConfig, seed: int) -> Iterator[GluingSpec]:
    cfg = replace(config, extension_only=True)
    return _stream(_draw_gluing, cfg, seed)


def _extension_p_lt_q_stream(config: SamplerConfig, seed: int) -> Iterator[GluingSpec]:
    cfg = replace(config, extension_only=True)
    return _stream(
        lambda rng, c: _draw_gluing(rng, c, pair_filter=lambda s1, s2, p, q: p < q),
        cfg, seed)


def _semigroup_stream(config: SamplerConfig, seed: int) -> Iterator[NumericalSemigroup]:
    return _stream(_draw_semigroup, config, seed)


def _gcd_tail_stream(config: SamplerConfig, seed: int) -> Iterator[NumericalSemigroup]:
    """Semigroups <a_1, ..., a_n> built so that gcd(a_2, ..., a_n) > a_1."""
    rng = random.Random(seed)
    produced = 0
    while produced < config.count * _DRAW_TRIES:
        produced += 1
        s1 = _draw_semigroup(rng, config)
        if s1 is None:
            return
        q = rng.randint(2, config.max_pq)
        ps = [p for p in range(2, q) if math.gcd(p, q) == 1]
        if not ps:
            continue
        p = rng.choice(ps)
        S = from_generators([q * m for m in s1.generators] + [p])
        if S.conductor > config.glued_conductor_cap:
            continue
        yield S


# ---------------------------------------------------------------------------
# theorem registry


def _instance_json(inst) -> dict:
    if isinstance(inst, GluingSpec):
        return inst.to_json()
    return inst.to_json()


@dataclass(frozen=True)
class TheoremPredicate:
    """A sampled hypothesis/conclusion pair for one proved statement."""

    id: str
    description: str
    kind: str  # "gluing" | "semigroup"
    hypothesis: Callable
    conclusion: Callable  # returns (ok, expected, got)
    sampler: Callable  # (SamplerConfig, seed) -> iterator


def _t1_conclusion(g: GluingSpec):
    left = cone.is_cm_tangent_cone(g.glued)
    right = cone.is_cm_tangent_cone(g.s1)
    return left == right, "CM(glued) == CM(S1)", f"CM(glued)={left}, CM(S1)={right}"


def _t2_hypothesis(g: GluingSpec) -> bool:
    return (g.flags.specific and cone.is_symmetric(g.s2)
            and cone.purity(g.s2, g.q).m_pure)


def _t2_conclusion(g: GluingSpec):
    left = cone.is_gorenstein_tangent_cone(g.glued)
    right = cone.is_gorenstein_tangent_cone(g.s1)
    return (left == right, "Gorenstein(glued) == Gorenstein(S1)",
            f"Gorenstein(glued)={left}, Gorenstein(S1)={right}")


def _t3_hypothesis(g: GluingSpec) -> bool:
    return g.flags.specific and cone.hilbert_function(g.s1).nondecreasing


def _t3_conclusion(g: GluingSpec):
    h = cone.hilbert_function(g.glued)
    return (h.nondecreasing, "nondecreasing Hilbert function of glued",
            f"classification={h.classification}, values={h.values}")


def _t4_hypothesis(g: GluingSpec) -> bool:
    return g.flags.extension and g.p < g.q


def _t4_conclusion(g: GluingSpec):
    cm = cone.is_cm_tangent_cone(g.glued)
    nondec = cone.hilbert_function(g.glued).nondecreasing
    return (cm and nondec, "CM glued cone and nondecreasing Hilbert function",
            f"CM={cm}, nondecreasing={nondec}")


def _t5_hypothesis(g: GluingSpec) -> bool:
    return g.flags.extension and cone.hilbert_function(g.s1).nondecreasing


def _t5_conclusion(g: GluingSpec):
    nondec = cone.hilbert_function(g.glued).nondecreasing
    ord_p = g.s1.ord(g.p)
    bound = ord_p < g.q < g.p
    return (nondec or bound,
            "decreasing Hilbert function forces ord_{S1}(p) < q < p",
            f"nondecreasing={nondec}, ord_p={ord_p}, q={g.q}, p={g.p}")


def _t6_conclusion(g: GluingSpec):
    sym1 = cone.is_symmetric(g.s1)
    sym2 = cone.is_symmetric(g.s2)
    sym = cone.is_symmetric(g.glued)
    forward = (not (sym1 and sym2)) or sym
    backward = (not (sym and (sym1 or sym2))) or (sym1 and sym2)
    return (forward and backward,
            "S1,S2 symmetric <=> glued symmetric with one factor symmetric",
            f"sym(S1)={sym1}, sym(S2)={sym2}, sym(glued)={sym}")


def _t7_conclusion(g: GluingSpec):
    xs = [g.s1.multiplicity]
    if g.s1.embedding_dimension >= 2:
        xs.append(g.s1.generators[1])
    p_inv = pow(g.p, -1, g.q)
    for x in xs:
        ap1 = g.s1.apery_set(x).elements
        ap2 = g.s2.apery_set(g.q).elements
        values = sorted(g.q * z1 + g.p * z2 for z1 in ap1 for z2 in ap2)
        direct = sorted(g.glued.apery_set(g.q * x).elements)
        if values != direct:
            return (False, f"AP(glued, {g.q * x}) factors through AP(S1,{x}) x AP(S2,{g.q})",
                    "value sets differ")
        ap1_set = set(ap1)
        for u in direct:
            z2 = (u * p_inv) % g.q
            while g.p * z2 <= u:
                if g.s2.contains(z2):
                    z1 = (u - g.p * z2) // g.q
                    if g.s1.contains(z1) and z1 not in ap1_set:
                        return (False,
                                f"every factorization of {u} has z1 in AP(S1,{x})",
                                f"z1={z1}, z2={z2}")
                z2 += g.q
    return True, "Apery factorization", "holds"


def _t8_conclusion(g: GluingSpec):
    if g.glued.multiplicity != g.q * g.s1.multiplicity:
        return (False, "multiplicity(glued) == q * m(S1)",
                f"{g.glued.multiplicity} != {g.q} * {g.s1.multiplicity}")
    window = min(g.s1.conductor + 2 * g.s1.multiplicity, 400)
    xs = g.s1.members_up_to(window)
    ords1 = g.s1.order_table(window).lookup(xs)
    ords_glued = g.glued.order_table(int(g.q * xs.max())).lookup(g.q * xs)
    if not np.array_equal(ords1, ords_glued):
        bad = int(xs[np.nonzero(ords1 != ords_glued)[0][0]])
        return (False, "ord_glued(q*x) == ord_S1(x) for all members x",
                f"first mismatch at x={bad}")
    return True, "order and multiplicity transfer", "holds"


def _t9_hypothesis(S: NumericalSemigroup) -> bool:
    return cone.is_cm_tangent_cone(S) and cone.is_symmetric(S)


def _t9_conclusion(S: NumericalSemigroup):
    e = S.multiplicity
    m_pure = cone.purity(S, e).m_pure
    palindromes = [cone.beta_profile(S, k * e).is_palindrome() for k in (1, 2, 3)]
    m_pures = [cone.purity(S, k * e).m_pure for k in (1, 2, 3)]
    statements = [m_pure, any(palindromes), all(palindromes),
                  all(m_pures), any(m_pures)]
    ok = len(set(statements)) == 1
    return (ok, "the five purity statements agree for k in {1,2,3}",
            f"statements={statements}")


def _t10_hypothesis(S: NumericalSemigroup) -> bool:
    gens = S.generators
    return len(gens) >= 2 and reduce(math.gcd, gens[1:]) > gens[0]


def _t10_conclusion(S: NumericalSemigroup):
    cm = cone.is_cm_tangent_cone(S)
    nondec = cone.hilbert_function(S).nondecreasing
    return (cm and nondec, "CM cone and nondecreasing Hilbert function",
            f"CM={cm}, nondecreasing={nondec}")


THEOREMS: dict[str, TheoremPredicate] = {
    "T1": TheoremPredicate(
        "T1", "specific gluing: glued cone is CM iff the first factor's cone is CM",
        "gluing", lambda g: g.flags.specific, _t1_conclusion, _specific_stream),
    "T2": TheoremPredicate(
        "T2", "specific gluing with symmetric, q-m-pure S2: Gorenstein transfers",
        "gluing", _t2_hypothesis, _t2_conclusion, _specific_stream),
    "T3": TheoremPredicate(
        "T3", "specific gluing of S1 with nondecreasing Hilbert function stays nondecreasing",
        "gluing", _t3_hypothesis, _t3_conclusion, _specific_stream),
    "T4": TheoremPredicate(
        "T4", "extension with p < q has a CM tangent cone",
        "gluing", _t4_hypothesis, _t4_conclusion, _extension_p_lt_q_stream),
    "T5": TheoremPredicate(
        "T5", "extension of nondecreasing S1 can only decrease when ord(p) < q < p",
        "gluing", _t5_hypothesis, _t5_conclusion, _extension_stream),
    "T6": TheoremPredicate(
        "T6", "symmetry of both factors is equivalent to symmetry of the gluing plus one factor",
        "gluing", lambda g: True, _t6_conclusion, _gluing_stream),
    "T7": TheoremPredicate(
        "T7", "AP(glued, q*x) = q*AP(S1,x) + p*AP(S2,q), uniquely",
        "gluing", lambda g: True, _t7_conclusion, _gluing_stream),
    "T8": TheoremPredicate(
        "T8", "specific gluing: ord_glued(q*x) = ord_S1(x) and m(glued) = q*m(S1)",
        "gluing", lambda g: g.flags.specific, _t8_conclusion, _specific_stream),
    "T9": TheoremPredicate(
        "T9", "CM symmetric semigroup: the five m-purity statements are equivalent",
        "semigroup", _t9_hypothesis, _t9_conclusion, _semigroup_stream),
    "T10": TheoremPredicate(
        "T10", "gcd of the non-minimal generators above the multiplicity forces a CM cone",
        "semigroup", _t10_hypothesis, _t10_conclusion, _gcd_tail_stream),
}


# ---------------------------------------------------------------------------
# harness


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of sampling one theorem predicate."""

    id: str
    samples_tried: int
    hypothesis_hits: int
    violations: tuple[dict, ...]
    seed: int
    bounds: dict

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "samples_tried": self.samples_tried,
            "hypothesis_hits": self.hypothesis_hits,
            "violations": list(self.violations),
            "seed": self.seed,
            "bounds": self.bounds,
        }


def run_predicate(pred: TheoremPredicate, config: SamplerConfig | None = None,
                  seed: int = 0, extra_instances: Iterable = ()) -> TheoremReport:
    """Sample instances until ``config.count`` hypothesis hits are collected.

    ``extra_instances`` are checked first (counting towards the totals),
    which lets callers pin known interesting instances into the stream.
    """
    config = config or SamplerConfig()
    attempts_cap = config.count * config.max_attempts_factor
    stream = itertools.chain(iter(extra_instances), pred.sampler(config, seed))
    tried = hits = 0
    violations: list[dict] = []
    for inst in stream:
        if hits >= config.count or tried >= attempts_cap:
            break
        tried += 1
        try:
            if not pred.hypothesis(inst):
                continue
            hits += 1
            ok, expected, got = pred.conclusion(inst)
        except InvariantViolation as exc:
            hits += 1
            ok, expected, got = False, "internal cross-check", f"raised: {exc}"
        if not ok:
            violations.append({
                "instance": _instance_json(inst),
                "expected": expected,
                "got": got,
            })
    if hits == 0:
        raise BoundsTooSmallError(
            f"{pred.id}: no instance satisfied the hypothesis within "
            f"{tried} samples; widen the sampler bounds")
    return TheoremReport(pred.id, tried, hits, tuple(violations), seed,
                         config.to_json())


def verify_theorem(theorem_id: str, config: SamplerConfig | None = None,
                   seed: int = 0, extra_instances: Iterable = ()) -> TheoremReport:
    """Check one registered theorem on a seeded sample; see THEOREMS."""
    if theorem_id not in THEOREMS:
        raise UnknownTheoremError(
            f"unknown theorem {theorem_id!r}; valid ids: {sorted(THEOREMS)}")
    return run_predicate(THEOREMS[theorem_id], config, seed, extra_instances)


def mutated_t1_predicate() -> TheoremPredicate:
    """T1 with the specificity hypothesis deliberately dropped.

    The weakened statement is false: a non-specific gluing can break
    Cohen-Macaulayness of the cone even when the first factor keeps it.
    Used to demonstrate that the harness detects false statements.
    """
    base = THEOREMS["T1"]
    return replace(base, id="T1-mutated-no-specific",
                   description=base.description + " (specificity dropped: false)",
                   hypothesis=lambda g: True, sampler=_gluing_stream)
