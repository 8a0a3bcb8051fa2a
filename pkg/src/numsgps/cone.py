"""Tangent-cone analytics for numerical semigroups.

For a semigroup S with multiplicity e and maximal ideal M = S \\ {0},
the associated graded ring of the semigroup ring is controlled by the
order function and by the Apery sets of the ideals nM. This module
computes:

* the reduction number r (least r with (r+1)M = e + rM),
* the order-defect numbers l_x(S) and their maximum L(S),
* beta profiles (Apery element counts per order) and relative purity,
* symmetry, Cohen-Macaulay and Gorenstein tests for the tangent cone,
* the Hilbert function H(n) = #{s : ord(s) = n}, and
* the Apery table of the ideals nM with its landing structure.

Equivalent characterizations are computed side by side and cross-checked
(raising :class:`InvariantViolation` on disagreement), so every call is
also a self-test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AperySet, NumericalSemigroup
from .errors import InvariantViolation, NotAMemberError, NotSymmetricError

_CHUNK = 512


def _cached(S: NumericalSemigroup, key: str, fn):
    cache = S._cache
    if key not in cache:
        cache[key] = fn()
    return cache[key]


# ---------------------------------------------------------------------------
# reduction number and ideal Apery rows


def _ideal_rows(S: NumericalSemigroup):
    """Rows 0..r+1 of Apery sets of nM w.r.t. e, plus the reduction number.

    Row n+1 is found from row n by walking each residue chain upward in
    steps of e until the order reaches n+1; the walk is short because
    orders strictly increase along a chain. The reduction number is the
    first r with row(r+1) = row(r) + e, and is at most e - 1.
    """

    def compute():
        e = S.multiplicity
        table = S.order_table()
        rows = [tuple(S.apery_set(e).elements)]
        n = 0
        while True:
            n += 1
            prev = rows[-1]
            table.ensure(max(prev) + e)
            row = []
            for s in prev:
                while table.ord(s) < n:
                    s += e
                row.append(s)
            rows.append(tuple(row))
            if all(b == a + e for a, b in zip(prev, row)):
                return tuple(rows), n - 1
            if n > e:
                raise InvariantViolation(
                    f"reduction number of {S} did not stabilize by e = {e}")

    return _cached(S, "ideal_rows", compute)


def reduction_number(S: NumericalSemigroup) -> int:
    """Least r with (r+1)M = e + rM; always at most e - 1."""
    return _ideal_rows(S)[1]


def apery_of_ideal(S: NumericalSemigroup, level: int) -> AperySet:
    """Apery set of the ideal nM with respect to the multiplicity."""
    rows, r = _ideal_rows(S)
    e = S.multiplicity
    if level < len(rows):
        return AperySet(e, level, rows[level])
    # beyond stabilization every step adds e to each entry
    shift = (level - (len(rows) - 1)) * e
    return AperySet(e, level, tuple(v + shift for v in rows[-1]))


# ---------------------------------------------------------------------------
# order defects


def l_value(S: NumericalSemigroup, x: int) -> int:
    """Maximum of ord(s+x) - ord(x) - ord(s) over members s with ord(s) <= r.

    Members of order at most r all lie in [0, r * m_d], which makes the
    search finite and exact. Always nonnegative (s = 0 contributes 0).
    """
    if x <= 0 or not S.contains(x):
        raise NotAMemberError(f"{x} is not a positive element of {S}")
    r = reduction_number(S)
    bound = r * S.generators[-1]
    table = S.order_table(bound + x)
    arr = table.array(bound)
    s_vals = np.nonzero((arr >= 0) & (arr <= r))[0]
    defects = table.lookup(s_vals + x) - arr[s_vals] - table.ord(x)
    return int(defects.max())


def big_L(S: NumericalSemigroup) -> int:
    """L(S) = max l_s(S) over members s with ord(s) <= r.

    Bounds the order defect globally: ord(s1+s2) <= ord(s1) + ord(s2) + L(S).
    """

    def compute():
        r = reduction_number(S)
        if r == 0:
            return 0
        bound = r * S.generators[-1]
        table = S.order_table(2 * bound)
        arr = table.array(bound)
        cand = np.nonzero((arr >= 0) & (arr <= r))[0]
        orders = arr[cand]
        best = 0
        for lo in range(0, len(cand), _CHUNK):
            part = cand[lo:lo + _CHUNK]
            defect = (table.lookup(part[:, None] + cand[None, :])
                      - arr[part][:, None] - orders[None, :])
            best = max(best, int(defect.max()))
        return best

    return _cached(S, "big_L", compute)


# ---------------------------------------------------------------------------
# Apery maxima, purity, symmetry


def _apery_maxima(S: NumericalSemigroup, x: int):
    """Sorted Apery values with maximality masks for both partial orders.

    w is maximal for the semigroup order unless some other Apery element
    w2 has w2 - w in S; maximal for the order-additive refinement unless
    additionally ord(w2) = ord(w) + ord(w2 - w).
    """
    ap = np.asarray(S.apery_set(x).sorted_values(), dtype=np.int64)
    table = S.order_table(int(ap.max()) if len(ap) else 0)
    orders = table.lookup(ap)
    n = len(ap)
    dominated = np.zeros(n, dtype=bool)
    dominated_m = np.zeros(n, dtype=bool)
    for lo in range(0, n, _CHUNK):
        rows = slice(lo, min(lo + _CHUNK, n))
        diffs = ap[None, :] - ap[rows, None]
        above = (diffs > 0) & S.member_mask(diffs)
        dominated[rows] = above.any(axis=1)
        diff_ord = table.lookup(np.where(above, diffs, 0))
        additive = above & (orders[None, :] == orders[rows, None] + diff_ord)
        dominated_m[rows] = additive.any(axis=1)
    if not np.all(dominated_m <= dominated):
        raise InvariantViolation("Max Apery must be contained in Max_M Apery")
    return ap, orders, ~dominated, ~dominated_m


def max_apery(S: NumericalSemigroup, x: int) -> tuple[int, ...]:
    """Maximal Apery elements under the semigroup partial order."""
    ap, _, is_max, _ = _apery_maxima(S, x)
    return tuple(int(v) for v in ap[is_max])


def max_m_apery(S: NumericalSemigroup, x: int) -> tuple[int, ...]:
    """Maximal Apery elements under the order-additive partial order."""
    ap, _, _, is_max_m = _apery_maxima(S, x)
    return tuple(int(v) for v in ap[is_max_m])


@dataclass(frozen=True)
class PurityFlags:
    pure: bool
    m_pure: bool


def purity(S: NumericalSemigroup, x: int) -> PurityFlags:
    """Whether all maximal Apery elements (both orders) share one order.

    Cross-checked identity: m-pure holds iff pure holds and the two sets
    of maxima coincide.
    """
    ap, orders, is_max, is_max_m = _apery_maxima(S, x)
    pure = len(set(orders[is_max].tolist())) == 1
    m_pure = len(set(orders[is_max_m].tolist())) == 1
    same_sets = bool(np.array_equal(is_max, is_max_m))
    if m_pure != (pure and same_sets):
        raise InvariantViolation(f"purity characterizations disagree on {S}, x={x}")
    return PurityFlags(pure=pure, m_pure=m_pure)


def is_symmetric(S: NumericalSemigroup) -> bool:
    """Symmetry of the semigroup.

    Two equivalent tests are run and compared: the sorted Apery pairing
    a_i + a_{e-1-i} = a_{e-1}, and uniqueness of the maximal Apery
    element.
    """

    def compute():
        ap = S.apery_set(S.multiplicity).sorted_values()
        e = len(ap)
        paired = all(ap[i] + ap[e - 1 - i] == ap[e - 1] for i in range(e))
        singleton = len(max_apery(S, S.multiplicity)) == 1
        if paired != singleton:
            raise InvariantViolation(f"symmetry characterizations disagree on {S}")
        return singleton

    return _cached(S, "symmetric", compute)


@dataclass(frozen=True)
class BetaProfile:
    """Counts of Apery elements by order: beta[i] = #{w in AP : ord(w) = i}."""

    base: int
    d: int
    beta: tuple[int, ...]

    def __post_init__(self):
        if sum(self.beta) != self.base or self.beta[0] != 1 or self.beta[-1] < 1:
            raise InvariantViolation(f"malformed beta profile {self}")

    def is_palindrome(self) -> bool:
        half = (self.d + 1) // 2
        return all(self.beta[i] == self.beta[self.d - i] for i in range(half + 1))


def beta_profile(S: NumericalSemigroup, x: int) -> BetaProfile:
    """Order distribution over the Apery set of x; d is the top order."""
    ap = S.apery_set(x)
    table = S.order_table(ap.max_value())
    orders = table.lookup(np.asarray(ap.elements, dtype=np.int64))
    d = int(orders.max())
    counts = np.bincount(orders, minlength=d + 1)
    return BetaProfile(base=x, d=d, beta=tuple(int(c) for c in counts))


def relative_m_pure_symmetric(S: NumericalSemigroup, x: int) -> bool:
    """For symmetric S: is the order-additive Apery maximum w.r.t. x unique?

    Equivalent (and cross-checked) to the beta profile of x being
    palindromic.
    """
    if not is_symmetric(S):
        raise NotSymmetricError(f"{S} is not symmetric")
    singleton = len(max_m_apery(S, x)) == 1
    palindrome = beta_profile(S, x).is_palindrome()
    if singleton != palindrome:
        raise InvariantViolation(
            f"relative purity characterizations disagree on {S}, x={x}")
    return singleton


# ---------------------------------------------------------------------------
# Cohen-Macaulay / Gorenstein


def is_cm_tangent_cone(S: NumericalSemigroup) -> bool:
    """Cohen-Macaulay test for the tangent cone: l_e(S) = 0.

    Cross-checked against the Apery-set form: ord(w + a*e) = ord(w) + a
    for every Apery element w of e and 1 <= a <= r.
    """

    def compute():
        e = S.multiplicity
        by_l = l_value(S, e) == 0
        r = reduction_number(S)
        ap = np.asarray(S.apery_set(e).elements, dtype=np.int64)
        table = S.order_table(int(ap.max()) + r * e)
        if r == 0:
            by_apery = True
        else:
            a = np.arange(1, r + 1, dtype=np.int64)
            sums = table.lookup(ap[:, None] + a[None, :] * e)
            by_apery = bool(np.all(sums == table.lookup(ap)[:, None] + a[None, :]))
        if by_l != by_apery:
            raise InvariantViolation(f"CM characterizations disagree on {S}")
        return by_l

    return _cached(S, "cm", compute)


def is_gorenstein_tangent_cone(S: NumericalSemigroup) -> bool:
    """Gorenstein test: tangent cone CM, S symmetric, and m-pure.

    When the test succeeds, the beta profiles of e and 2e must be
    palindromic; this is verified on the spot.
    """

    def compute():
        result = (is_cm_tangent_cone(S) and is_symmetric(S)
                  and purity(S, S.multiplicity).m_pure)
        if result:
            for k in (1, 2):
                if not beta_profile(S, k * S.multiplicity).is_palindrome():
                    raise InvariantViolation(
                        f"Gorenstein cone of {S} lacks beta symmetry at k={k}")
        return result

    return _cached(S, "gorenstein", compute)


# ---------------------------------------------------------------------------
# Hilbert function


@dataclass(frozen=True)
class HilbertFunction:
    """H(0..r) with the stable value e taken for all n >= r."""

    values: tuple[int, ...]
    stable_value: int
    first_decrease: int | None

    @property
    def nondecreasing(self) -> bool:
        return self.first_decrease is None

    @property
    def classification(self) -> str:
        return "nondecreasing" if self.nondecreasing else "decreasing-somewhere"

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "stable_value": self.stable_value,
            "classification": self.classification,
            "first_decrease": self.first_decrease,
        }


def hilbert_function(S: NumericalSemigroup) -> HilbertFunction:
    """H(n) = #{s in S : ord(s) = n} for 0 <= n <= r, stable at e beyond.

    Members of order n lie in [n*m_1, n*m_d], so a single scan up to
    r*m_d captures every count. H(r) = e is asserted, which certifies
    the stable tail.
    """

    def compute():
        r = reduction_number(S)
        bound = r * S.generators[-1]
        arr = S.order_table(bound).array(bound)
        vals = arr[(arr >= 0) & (arr <= r)]
        counts = np.bincount(vals, minlength=r + 1)
        e = S.multiplicity
        ok = counts[0] == 1 and counts[r] == e
        if r >= 1:
            ok = ok and counts[1] == S.embedding_dimension
        if not ok:
            raise InvariantViolation(f"Hilbert values of {S} fail sanity checks")
        first = None
        for n in range(r):
            if counts[n + 1] < counts[n]:
                first = n
                break
        return HilbertFunction(tuple(int(c) for c in counts), e, first)

    return _cached(S, "hilbert", compute)


# ---------------------------------------------------------------------------
# Apery table


@dataclass(frozen=True)
class Landing:
    """A maximal run of identical entries down one column of the table."""

    residue: int
    value: int
    first_row: int
    last_row: int

    @property
    def length(self) -> int:
        return self.last_row - self.first_row

    @property
    def true_landing(self) -> bool:
        # Runs starting at row 0 are the trivial dwell of a fresh Apery
        # element; only later runs witness an order defect.
        return self.first_row >= 1 and self.last_row > self.first_row


@dataclass(frozen=True)
class AperyTable:
    """Apery sets of S, M, 2M, ..., (r+1)M with respect to e.

    Columns are the residue classes mod e ordered by their row-1 values
    (ascending); rows above index r repeat the previous row shifted by e,
    which is exactly the stabilization witness for the reduction number.
    """

    base: int
    rows: tuple[AperySet, ...]
    reduction_number: int
    column_residues: tuple[int, ...]
    landings: tuple[Landing, ...]

    @property
    def max_true_landing(self) -> int:
        return max((l.length for l in self.landings if l.true_landing), default=0)

    def values_matrix(self) -> list[list[int]]:
        return [[row.elements[c] for c in self.column_residues] for row in self.rows]

    def row_label(self, n: int) -> str:
        if n == 0:
            return "AP(S)"
        if n == 1:
            return "AP(M)"
        return f"AP({n}M)"

    def render_text(self) -> str:
        matrix = self.values_matrix()
        width = max(len(str(v)) for row in matrix for v in row)
        label_w = max(len(self.row_label(n)) for n in range(len(matrix)))
        lines = []
        for n, row in enumerate(matrix):
            cells = " ".join(str(v).rjust(width) for v in row)
            lines.append(f"{self.row_label(n).ljust(label_w)} | {cells}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "rows": self.values_matrix(),
            "reduction_number": self.reduction_number,
        }


def apery_table(S: NumericalSemigroup) -> AperyTable:
    """Assemble the Apery table with its landing metadata.

    The landing runs are display metadata; their maximal true length
    coincides with l_e(S), which the property suite verifies against the
    direct defect computation.
    """

    def compute():
        rows_raw, r = _ideal_rows(S)
        e = S.multiplicity
        rows = tuple(AperySet(e, n, row) for n, row in enumerate(rows_raw))
        order = tuple(int(c) for c in np.argsort(np.asarray(rows_raw[1])))
        landings = []
        for c in range(e):
            n = 0
            while n < len(rows_raw):
                value = rows_raw[n][c]
                last = n
                while last + 1 < len(rows_raw) and rows_raw[last + 1][c] == value:
                    last += 1
                landings.append(Landing(c, value, n, last))
                n = last + 1
        return AperyTable(e, rows, r, order, tuple(landings))

    return _cached(S, "apery_table", compute)
