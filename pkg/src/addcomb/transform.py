"""The generalized Davenport transform and its five-point audit.

Given non-empty X, Y in a unital semigroup and an exponent m >= 1, any
z in (mX + 2Y) minus (X + Y) splits Y into

    Y_tilde = {y in Y : z in x_z + X + Y + y}      (the part that reaches z)
    Y'      = Y minus Y_tilde

for a witness x_z in (m-1)X (with 0-fold X = {identity}) and y_z in Y such
that z in x_z + X + Y + y_z.  When Y' is non-empty, the audit checks the five
properties that make (X, Y') a strictly smaller pair still controlling the
sumset: partition facts, two inclusion/disjointness facts under
cancellativity and commutative span, a counting fact, and the key inequality

    |X + Y| + |Y'| >= |X + Y'| + |Y|.

Items whose hypotheses fail are reported as not-applicable (None), never as
false.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ElementSet, FiniteSemigroup, iter_bits
from .errors import CandidateInvalid, EmptySet, EmptyTransform, NotUnital, NoWitness
from .setops import n_fold, right_difference, span_is_commutative, sumset


@dataclass(frozen=True)
class TransformResult:
    m: int
    z: int
    x_z: int
    y_z: int
    y_tilde: ElementSet
    y_prime: ElementSet


@dataclass(frozen=True)
class TransformAudit:
    """Audit of one transform: items i..v are True, False, or None (the
    item's hypotheses do not hold).  The two sides of the counting
    inequality (v) are always reported."""

    item_i: bool | None
    item_ii: bool | None
    item_iii: bool | None
    item_iv: bool | None
    item_v: bool | None
    v_lhs: int
    v_rhs: int

    def items(self) -> tuple[bool | None, ...]:
        return (self.item_i, self.item_ii, self.item_iii, self.item_iv, self.item_v)

    @property
    def any_applicable_false(self) -> bool:
        return any(item is False for item in self.items())


def transform_candidates(
    A: FiniteSemigroup, X: ElementSet, Y: ElementSet, m: int = 1
) -> ElementSet:
    """(mX + 2Y) minus (X + Y); empty means no transform applies."""
    A.check_set(X)
    A.check_set(Y)
    if A.identity is None:
        raise NotUnital("the transform needs an identity; pass the unitization")
    if X.mask == 0 or Y.mask == 0:
        raise EmptySet("transform needs non-empty X and Y")
    if m < 1:
        raise ValueError("exponent m must be >= 1, got %d" % m)
    head = sumset(A, sumset(A, n_fold(A, X, m), Y), Y)
    return head - sumset(A, X, Y)


def apply_transform(
    A: FiniteSemigroup, X: ElementSet, Y: ElementSet, m: int, z: int
) -> TransformResult:
    """Build the transform of (X, Y) relative to a candidate z.

    The witness pair (x_z, y_z) is the lexicographically smallest by element
    index, for reproducibility; the audited properties hold for any valid
    choice.
    """
    if z not in transform_candidates(A, X, Y, m):
        raise CandidateInvalid("z = %d is not in (mX+2Y) minus (X+Y) for m = %d" % (z, m))
    if m == 1:
        x_candidates = ElementSet.of(A.n, A.identity)
    else:
        x_candidates = n_fold(A, X, m - 1)
    table = A.table
    for x in x_candidates:
        base = sumset(A, sumset(A, ElementSet.of(A.n, x), X), Y)  # x + X + Y
        tilde_mask = 0
        for y in Y:
            if any(table[w][y] == z for w in base):
                tilde_mask |= 1 << y
        if tilde_mask:
            y_tilde = ElementSet(A.n, tilde_mask)
            return TransformResult(
                m=m,
                z=z,
                x_z=x,
                y_z=next(iter_bits(tilde_mask)),
                y_tilde=y_tilde,
                y_prime=Y - y_tilde,
            )
    raise NoWitness(
        "no witness (x_z, y_z) found for z = %d; candidate membership should "
        "guarantee one" % z
    )


def audit_transform(
    A: FiniteSemigroup, X: ElementSet, Y: ElementSet, result: TransformResult
) -> TransformAudit:
    """Evaluate the five properties of the transform (hypothesis-gated)."""
    y_tilde, y_prime, z = result.y_tilde, result.y_prime, result.z
    if y_prime.mask == 0:
        raise EmptyTransform()

    cancellative = A.is_cancellative
    commutative_span = span_is_commutative(A, Y)

    x_z_set = ElementSet.of(A.n, result.x_z)
    shifted_x = sumset(A, x_z_set, X)  # x_z + X
    whole = sumset(A, shifted_x, Y)  # x_z + X + Y
    kept = sumset(A, shifted_x, y_prime)  # x_z + X + Y'
    reached = right_difference(A, ElementSet.of(A.n, z), y_tilde)  # z - Y_tilde

    item_i = (
        y_prime.mask != 0
        and y_tilde.mask != 0
        and (y_prime & y_tilde).mask == 0
        and y_tilde == Y - y_prime
        and y_prime.mask != Y.mask
        and y_tilde.mask != Y.mask
    )
    item_ii = (kept | reached) <= whole if cancellative else None
    item_iii = (kept & reached).mask == 0 if commutative_span else None
    item_iv = len(reached) >= len(y_tilde) if cancellative else None

    v_lhs = len(sumset(A, X, Y)) + len(y_prime)
    v_rhs = len(sumset(A, X, y_prime)) + len(Y)
    item_v = v_lhs >= v_rhs if (cancellative and commutative_span) else None

    return TransformAudit(
        item_i=item_i,
        item_ii=item_ii,
        item_iii=item_iii,
        item_iv=item_iv,
        item_v=item_v,
        v_lhs=v_lhs,
        v_rhs=v_rhs,
    )
