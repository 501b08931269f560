"""Localizing a sumset bound inside the sum matrix.

Given non-empty X = {x_1 < ... < x_k} and Y = {y_1 < ... < y_l} with
|X + Y| < omega(Y), fix an (l-1)-subset Z of X + Y.  The row sets
Z_i = (x_i + Y) - Z then satisfy Hall's condition, so a system of distinct
representatives exists: one element per row, pairwise distinct and disjoint
from Z, exhibiting k + l - 1 distinct elements of X + Y.

The representatives are chosen by augmenting-path bipartite matching with a
fixed exploration order (ascending row, then ascending element), so results
are reproducible.  `hall_check` provides the independent decision procedure
- exhaustive over all row subsets for k <= 20, matching-based above - that
tests use as a cross-oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import omega
from .core import ElementSet, FiniteSemigroup, iter_bits
from .errors import BadZ, EmptySet, PreconditionFailed
from .setops import span_is_commutative, sumset

HALL_EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class SumMatrix:
    """The k-by-l matrix with entry [i][j] = x_i + y_j."""

    x_order: tuple[int, ...]
    y_order: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.x_order)

    @property
    def l(self) -> int:
        return len(self.y_order)

    def entry_set(self, n: int) -> ElementSet:
        return ElementSet.from_elements(n, (v for row in self.entries for v in row))


@dataclass(frozen=True)
class LocalizationResult:
    Z: ElementSet
    representatives: tuple[int, ...]

    def witness_set(self) -> ElementSet:
        """Z together with the representatives: k + l - 1 distinct elements."""
        return self.Z | ElementSet.from_elements(self.Z.n, self.representatives)


def sum_matrix(
    A: FiniteSemigroup,
    X: ElementSet,
    Y: ElementSet,
    x_order=None,
    y_order=None,
) -> SumMatrix:
    """The sum matrix of (X, Y) under the given numbering (default
    ascending element index).  Its entry set is exactly X + Y."""
    A.check_set(X)
    A.check_set(Y)
    if X.mask == 0 or Y.mask == 0:
        raise EmptySet("sum_matrix needs non-empty X and Y")
    xo = _validated_order(X, x_order, "x_order")
    yo = _validated_order(Y, y_order, "y_order")
    table = A.table
    entries = tuple(tuple(table[x][y] for y in yo) for x in xo)
    return SumMatrix(x_order=xo, y_order=yo, entries=entries)


def _validated_order(S: ElementSet, order, name: str) -> tuple[int, ...]:
    if order is None:
        return S.elements()
    order = tuple(order)
    if sorted(order) != list(S.elements()):
        raise ValueError("%s is not an ordering of the set %s" % (name, S))
    return order


def localize(
    A: FiniteSemigroup,
    X: ElementSet,
    Y: ElementSet,
    Z: ElementSet | None = None,
) -> LocalizationResult:
    """Pick representatives z_i in (x_i + Y) - Z, pairwise distinct.

    Requires a cancellative carrier, a commutative span of Y, and
    |X + Y| < omega(Y).  Z defaults to x_1 + {y_1, ..., y_{l-1}}; any
    (l-1)-subset of X + Y is accepted.  Under these hypotheses a full
    matching always exists; not finding one would be an internal error.
    """
    A.check_set(X)
    A.check_set(Y)
    if X.mask == 0 or Y.mask == 0:
        raise EmptySet("localize needs non-empty X and Y")

    total = sumset(A, X, Y)
    failed = []
    if not A.is_cancellative:
        failed.append("cancellative")
    if not span_is_commutative(A, Y):
        failed.append("span_y_commutative")
    if not omega(A, Y).overall > len(total):
        failed.append("sumset_smaller_than_omega")
    if failed:
        raise PreconditionFailed(failed)

    xs = X.elements()
    ys = Y.elements()
    n = A.n
    if Z is None:
        x1 = xs[0]
        Z = ElementSet.from_elements(n, (A.table[x1][y] for y in ys[:-1]))
    else:
        A.check_set(Z)
        if not Z <= total:
            raise BadZ("Z = %s is not a subset of X+Y = %s" % (Z, total))
    if len(Z) != len(ys) - 1:
        raise BadZ("|Z| = %d, expected l-1 = %d" % (len(Z), len(ys) - 1))

    rows = [sumset(A, ElementSet.of(n, x), Y).mask & ~Z.mask for x in xs]
    matched = _max_matching(rows, n)
    assert all(e is not None for e in matched), (
        "no system of distinct representatives despite hypotheses holding; "
        "this contradicts the localization proposition"
    )
    result = LocalizationResult(Z=Z, representatives=tuple(matched))
    assert len(result.witness_set()) == len(xs) + len(ys) - 1
    return result


def _max_matching(rows: list[int], n: int) -> list[int | None]:
    """Augmenting-path matching of rows to elements (bit masks).

    Deterministic: rows are processed in index order and candidate elements
    in ascending order, so the same input always yields the same matching.
    """
    owner: list[int | None] = [None] * n
    matched: list[int | None] = [None] * len(rows)

    def augment(i: int, seen: list[bool]) -> bool:
        for e in iter_bits(rows[i]):
            if seen[e]:
                continue
            seen[e] = True
            if owner[e] is None or augment(owner[e], seen):
                owner[e] = i
                matched[i] = e
                return True
        return False

    for i in range(len(rows)):
        augment(i, [False] * n)
    return matched


def hall_check(sets: list[ElementSet]) -> tuple[bool, tuple[int, ...] | None]:
    """Does the family admit a system of distinct representatives?

    Returns (True, None) or (False, witness) where the witness is a tuple of
    row indices whose union is smaller than the number of rows.  Families of
    up to 20 rows are decided by checking all row subsets (first violating
    subset in ascending bit-pattern order is the witness); larger families
    by maximum matching (witness reconstructed from the failed augmenting
    search).  The two procedures agree.
    """
    k = len(sets)
    if k == 0:
        return (True, None)
    n = sets[0].n
    for s in sets:
        if s.n != n:
            raise ValueError("all sets must live in the same carrier")
    masks = [s.mask for s in sets]

    if k <= HALL_EXHAUSTIVE_LIMIT:
        union = [0] * (1 << k)
        for sub in range(1, 1 << k):
            low = sub & -sub
            u = union[sub ^ low] | masks[low.bit_length() - 1]
            union[sub] = u
            if u.bit_count() < sub.bit_count():
                return (False, tuple(iter_bits(sub)))
        return (True, None)

    owner: list[int | None] = [None] * n

    def augment(i: int, seen_rows: set, seen: list[bool]) -> bool:
        seen_rows.add(i)
        for e in iter_bits(masks[i]):
            if seen[e]:
                continue
            seen[e] = True
            if owner[e] is None or augment(owner[e], seen_rows, seen):
                owner[e] = i
                return True
        return False

    for i in range(k):
        seen_rows: set = set()
        if not augment(i, seen_rows, [False] * n):
            return (False, tuple(sorted(seen_rows)))
    return (True, None)
