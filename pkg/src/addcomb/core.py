"""Finite semigroups as validated Cayley tables, plus bit-mask element sets.

A semigroup of order n lives on the carrier [0, n); the operation is a dense
table with ``table[a][b] = a + b``.  Tables are validated eagerly at
construction (the O(n^3) associativity scan is negligible at these sizes), so
everything downstream may assume validity.  Carriers are capped at 64 so that
subsets are single machine words.

Element names (r, s, i, j, ...) are a display concern only and never appear
below the I/O layer.
"""

from __future__ import annotations

import functools

from .errors import (
    CarrierTooLarge,
    IndexOutOfRange,
    NonAssociative,
    ParseError,
    ValidationError,
)

MAX_CARRIER = 64


def iter_bits(mask: int):
    """Yield the positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@functools.total_ordering
class ExtendedNat:
    """A natural number extended with a single infinite value.

    The infinite value stands for the cardinality of the naturals; it
    compares greater than every finite value.  Only comparisons (and hence
    min/max) are defined; arithmetic on these values is never needed and
    deliberately raises.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError("ExtendedNat value must be a non-negative int or None")
        object.__setattr__(self, "value", value)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtendedNat(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.value is None:
            return False  # infinity is not less than anything
        if other.value is None:
            return True
        return self.value < other.value

    def __hash__(self):
        return hash(("ExtendedNat", self.value))

    def _no_arithmetic(self, *_):
        raise TypeError("ExtendedNat supports ordering only, not arithmetic")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arithmetic

    def __setattr__(self, *_):
        raise AttributeError("ExtendedNat is immutable")

    def to_json(self):
        return "infinity" if self.value is None else self.value

    @classmethod
    def from_json(cls, obj) -> "ExtendedNat":
        if obj == "infinity":
            return INFINITY
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls(obj)
        raise ParseError("not an extended natural: %r" % (obj,))

    def __str__(self):
        return "infinity" if self.value is None else str(self.value)

    def __repr__(self):
        return "ExtendedNat(%r)" % (self.value,)


INFINITY = ExtendedNat(None)


class ElementSet:
    """An immutable subset of the carrier [0, n), stored as a bit mask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if not 1 <= n <= MAX_CARRIER:
            raise CarrierTooLarge("carrier size %r outside [1, %d]" % (n, MAX_CARRIER))
        if not 0 <= mask < (1 << n):
            raise IndexOutOfRange("mask %#x has bits outside [0, %d)" % (mask, n))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *_):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def of(cls, n: int, *elements: int) -> "ElementSet":
        return cls.from_elements(n, elements)

    @classmethod
    def from_elements(cls, n: int, elements) -> "ElementSet":
        mask = 0
        for z in elements:
            if not isinstance(z, int) or isinstance(z, bool) or not 0 <= z < n:
                raise IndexOutOfRange("element %r outside carrier [0, %d)" % (z, n))
            mask |= 1 << z
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def parse(cls, text: str, n: int) -> "ElementSet":
        """Parse a set literal like "{0,3,5}" or "{}" over carrier [0, n).

        A bare comma list without braces is accepted too, as a convenience
        for shells that mangle braces.
        """
        body = text.strip()
        if body.startswith("{"):
            if not body.endswith("}"):
                raise ParseError("set literal %r: missing closing brace" % text)
            body = body[1:-1]
        elif body.endswith("}"):
            raise ParseError("set literal %r: missing opening brace" % text)
        body = body.strip()
        if not body:
            return cls.empty(n)
        elements = []
        for token in body.split(","):
            token = token.strip()
            if not token:
                raise ParseError("set literal %r: empty element token" % text)
            try:
                elements.append(int(token, 10))
            except ValueError:
                raise ParseError(
                    "set literal %r: %r is not an integer" % (text, token)
                ) from None
        return cls.from_elements(n, elements)

    def elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, z):
        return isinstance(z, int) and 0 <= z < self.n and (self.mask >> z) & 1 == 1

    def _check_same_carrier(self, other):
        if not isinstance(other, ElementSet):
            raise TypeError("expected ElementSet, got %r" % (other,))
        if other.n != self.n:
            raise ValueError("carrier mismatch: %d vs %d" % (self.n, other.n))

    def __or__(self, other):
        self._check_same_carrier(other)
        return ElementSet(self.n, self.mask | other.mask)

    def __and__(self, other):
        self._check_same_carrier(other)
        return ElementSet(self.n, self.mask & other.mask)

    def __sub__(self, other):
        self._check_same_carrier(other)
        return ElementSet(self.n, self.mask & ~other.mask)

    def __le__(self, other):
        self._check_same_carrier(other)
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self):
        return hash((self.n, self.mask))

    def __str__(self):
        return "{%s}" % ",".join(str(z) for z in iter_bits(self.mask))

    def __repr__(self):
        return "ElementSet.parse(%r, %d)" % (str(self), self.n)


class FiniteSemigroup:
    """A validated finite semigroup on the carrier [0, n).

    Structural facts (identity, units, inverses, commutativity,
    cancellativity) are computed once at construction.  Instances are
    immutable and safe to share across worker processes.
    """

    __slots__ = (
        "n",
        "table",
        "label",
        "identity",
        "units",
        "is_commutative",
        "is_cancellative",
        "_inverse",
        "_bit_table",
        "_order_cache",
    )

    def __init__(self, table, label: str | None = None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise ValidationError("empty carrier: a semigroup here has n >= 1")
        if n > MAX_CARRIER:
            raise CarrierTooLarge(
                "carrier size %d exceeds the bit-vector limit %d" % (n, MAX_CARRIER)
            )
        for a, row in enumerate(table):
            if len(row) != n:
                raise ValidationError(
                    "row %d has %d entries, expected %d" % (a, len(row), n)
                )
            for b, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise IndexOutOfRange(
                        "table[%d][%d] = %r outside carrier [0, %d)" % (a, b, v, n)
                    )
        for a in range(n):
            row_a = table[a]
            for b in range(n):
                ab = row_a[b]
                row_ab = table[ab]
                row_b = table[b]
                for c in range(n):
                    lhs = row_ab[c]
                    rhs = row_a[row_b[c]]
                    if lhs != rhs:
                        raise NonAssociative(a, b, c, lhs, rhs)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "label", label if label is not None else "table:%d" % n)

        identity = None
        for e in range(n):
            if all(table[e][z] == z and table[z][e] == z for z in range(n)):
                identity = e
                break
        object.__setattr__(self, "identity", identity)

        inverse: list[int | None] = [None] * n
        units_mask = 0
        if identity is not None:
            for z in range(n):
                for w in range(n):
                    if table[z][w] == identity and table[w][z] == identity:
                        inverse[z] = w
                        units_mask |= 1 << z
                        break
        object.__setattr__(self, "_inverse", tuple(inverse))
        object.__setattr__(self, "units", ElementSet(n, units_mask))

        object.__setattr__(
            self,
            "is_commutative",
            all(table[a][b] == table[b][a] for a in range(n) for b in range(a)),
        )
        full = set(range(n))
        cancellative = all(set(row) == full for row in table) and all(
            {table[a][b] for a in range(n)} == full for b in range(n)
        )
        object.__setattr__(self, "is_cancellative", cancellative)
        object.__setattr__(
            self, "_bit_table", tuple(tuple(1 << v for v in row) for row in table)
        )
        object.__setattr__(self, "_order_cache", [None] * n)

    def __setattr__(self, *_):
        raise AttributeError("FiniteSemigroup is immutable")

    @property
    def is_group(self) -> bool:
        # A finite cancellative semigroup is a group; the explicit unit check
        # is belt and braces (tests assert the two views agree).
        return (
            self.is_cancellative
            and self.identity is not None
            and len(self.units) == self.n
        )

    def add(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, z: int) -> int | None:
        """Two-sided inverse of z, or None if z is not a unit."""
        return self._inverse[z]

    def full_set(self) -> ElementSet:
        return ElementSet.full(self.n)

    def check_set(self, X: ElementSet) -> ElementSet:
        if not isinstance(X, ElementSet):
            raise TypeError("expected ElementSet, got %r" % (X,))
        if X.n != self.n:
            raise ValueError(
                "set over carrier [0, %d) used with semigroup of order %d" % (X.n, self.n)
            )
        return X

    def __repr__(self):
        return "<FiniteSemigroup %s (order %d)>" % (self.label, self.n)


def build_semigroup(table, label: str | None = None) -> FiniteSemigroup:
    """Validate an operation table and return the semigroup it defines."""
    return FiniteSemigroup(table, label=label)


def parse_cayley_text(text: str, label: str = "cayley") -> FiniteSemigroup:
    """Parse the plain-text table format: a line with n, then n rows of n entries."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty table file")
    head = lines[0].strip()
    try:
        n = int(head, 10)
    except ValueError:
        raise ParseError("first line must be the carrier size, got %r" % head) from None
    if n < 1:
        raise ParseError("carrier size must be positive, got %d" % n)
    if len(lines) - 1 != n:
        raise ParseError("expected %d table rows, found %d" % (n, len(lines) - 1))
    table = []
    for i, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError("row %d has %d entries, expected %d" % (i, len(tokens), n))
        row = []
        for tok in tokens:
            try:
                row.append(int(tok, 10))
            except ValueError:
                raise ParseError("row %d: %r is not an integer" % (i, tok)) from None
        table.append(row)
    return build_semigroup(table, label=label)


def unitization(A: FiniteSemigroup) -> FiniteSemigroup:
    """Adjoin a fresh identity unless A already has one (then A itself)."""
    if A.identity is not None:
        return A
    n = A.n
    table = [list(row) + [a] for a, row in enumerate(A.table)]
    table.append(list(range(n + 1)))
    return build_semigroup(table, label="unitization(%s)" % A.label)


def element_order(A: FiniteSemigroup, z: int) -> ExtendedNat:
    """|{z, z+z, z+z+z, ...}|, by iterating until the first repeat.

    Always finite on a finite carrier, but typed as an extended natural to
    match the quantities built on top of it.
    """
    cached = A._order_cache[z]
    if cached is None:
        row_step = A.table
        seen = 1 << z
        cur = z
        while True:
            cur = row_step[cur][z]
            if seen >> cur & 1:
                break
            seen |= 1 << cur
        cached = seen.bit_count()
        A._order_cache[z] = cached
    return ExtendedNat(cached)


def generated_subsemigroup(A: FiniteSemigroup, Z: ElementSet) -> ElementSet:
    """Closure of Z under the operation: the union of all k-fold sums of Z."""
    A.check_set(Z)
    bit_table = A._bit_table
    zs = Z.elements()
    span = Z.mask
    while True:
        grown = span
        for a in iter_bits(span):
            row = bit_table[a]
            for z in zs:
                grown |= row[z]
        if grown == span:
            return ElementSet(A.n, span)
        span = grown


def p_constant(A: FiniteSemigroup) -> ExtendedNat:
    """Minimum order of a non-identity element of the unitization.

    Infinite for the trivial monoid (minimum over an empty set).
    """
    A1 = unitization(A)
    if A1.n == 1:
        return INFINITY
    values = [
        element_order(A1, z).value for z in range(A1.n) if z != A1.identity
    ]
    return ExtendedNat(min(values))


def centralizer(A: FiniteSemigroup, X: ElementSet) -> ElementSet:
    """Elements commuting with every member of X (full carrier for X empty)."""
    A.check_set(X)
    table = A.table
    xs = X.elements()
    mask = 0
    for z in range(A.n):
        row_z = table[z]
        if all(row_z[x] == table[x][z] for x in xs):
            mask |= 1 << z
    return ElementSet(A.n, mask)


# ---------------------------------------------------------------------------
# Standard constructions
# ---------------------------------------------------------------------------


def cyclic(m: int) -> FiniteSemigroup:
    """The integers mod m under addition."""
    if m < 1:
        raise ValidationError("cyclic group needs m >= 1, got %d" % m)
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return build_semigroup(table, label="cyclic:%d" % m)


def dihedral(k: int) -> FiniteSemigroup:
    """Dihedral group of order 2k: indices 0..k-1 are the rotations r^i,
    indices k..2k-1 are the reflections s*r^i.

    The table follows r*s = s*r^{ -1 }:
      r^a * r^b   = r^{a+b}
      r^a * s r^b = s r^{b-a}
      s r^a * r^b = s r^{a+b}
      s r^a * s r^b = r^{b-a}
    """
    if k < 1:
        raise ValidationError("dihedral group needs k >= 1, got %d" % k)
    n = 2 * k
    table = [[0] * n for _ in range(n)]
    for a in range(k):
        for b in range(k):
            table[a][b] = (a + b) % k
            table[a][k + b] = k + (b - a) % k
            table[k + a][b] = k + (a + b) % k
            table[k + a][k + b] = (b - a) % k
    return build_semigroup(table, label="dihedral:%d" % k)


def quaternion8() -> FiniteSemigroup:
    """The quaternion group on {1, -1, i, -i, j, -j, k, -k} (indices 0..7)."""
    # element index = 2*basis + (sign < 0), basis 0..3 for 1, i, j, k
    def mul(a, b):
        sa, ba = 1 - 2 * (a & 1), a >> 1
        sb, bb = 1 - 2 * (b & 1), b >> 1
        if ba == 0:
            sign, basis = sa * sb, bb
        elif bb == 0:
            sign, basis = sa * sb, ba
        elif ba == bb:
            sign, basis = -sa * sb, 0
        else:
            # i*j = k, j*k = i, k*i = j and the reversed products negate
            forward = {(1, 2): 3, (2, 3): 1, (3, 1): 2}
            if (ba, bb) in forward:
                sign, basis = sa * sb, forward[(ba, bb)]
            else:
                sign, basis = -sa * sb, forward[(bb, ba)]
        return 2 * basis + (1 if sign < 0 else 0)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return build_semigroup(table, label="quaternion8")


def product(A: FiniteSemigroup, B: FiniteSemigroup) -> FiniteSemigroup:
    """Direct product with componentwise operation; index (a, b) -> a*|B| + b."""
    nA, nB = A.n, B.n
    if nA * nB > MAX_CARRIER:
        raise CarrierTooLarge(
            "product order %d exceeds the carrier limit %d" % (nA * nB, MAX_CARRIER)
        )
    table = [
        [
            A.table[a1][a2] * nB + B.table[b1][b2]
            for a2 in range(nA)
            for b2 in range(nB)
        ]
        for a1 in range(nA)
        for b1 in range(nB)
    ]
    return build_semigroup(table, label="product:(%s,%s)" % (A.label, B.label))


def leftzero(n: int) -> FiniteSemigroup:
    """Left-zero semigroup: a + b = a.  No identity for n >= 2."""
    if n < 1:
        raise ValidationError("left-zero semigroup needs n >= 1, got %d" % n)
    table = [[a] * n for a in range(n)]
    return build_semigroup(table, label="leftzero:%d" % n)


def maxchain(n: int) -> FiniteSemigroup:
    """The chain 0 < 1 < ... < n-1 under max: a commutative idempotent monoid."""
    if n < 1:
        raise ValidationError("max-chain monoid needs n >= 1, got %d" % n)
    table = [[max(a, b) for b in range(n)] for a in range(n)]
    return build_semigroup(table, label="maxchain:%d" % n)
