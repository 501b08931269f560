"""Exhaustive verification sweeps over all subset pairs of a small carrier.

For a carrier of order n <= 16 the engine is vectorized: for each X it
computes |X + Y| for every Y at once with a subset-union dynamic program
(numpy), then evaluates the chosen statement's right side and hypothesis
gates from per-mask precomputed tables.  Carriers above 16 elements require
a size cap and fall back to the scalar verifiers over the capped subset
lists.

Determinism contract: the X-mask space is split into fixed-size chunks
(CHUNK masks each, independent of the worker count), chunks are evaluated
in parallel, and partial results are merged in chunk order.  Enumeration
within a chunk is ascending by bit pattern, so the summary - including the
ordering of any violation witnesses - is byte-identical for any --jobs
value.  Wall-clock time is carried on the side and never enters the
machine-readable dictionary.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .constants import delta, pillai_delta
from .core import (
    ElementSet,
    FiniteSemigroup,
    build_semigroup,
    element_order,
    iter_bits,
    p_constant,
)
from .errors import CarrierTooLarge, NotGroup
from .setops import span_is_commutative
from .theorems import is_standard_cyclic, normalize_statement, run_statement, statement_info

CHUNK = 512
VECTOR_LIMIT = 16
_INF = 1 << 30  # exceeds every finite bound on carriers of order <= 64
_MAX_RECORDED = 64


@dataclass(frozen=True)
class Violation:
    x: str
    y: str
    lhs: int
    rhs: int | str


@dataclass(frozen=True)
class TightPair:
    x: str
    y: str
    value: int


@dataclass(frozen=True)
class SweepSummary:
    statement: str
    semigroup: str
    carrier_order: int
    max_size: int | None
    pairs: int
    applicable: int
    satisfied: int
    violation_count: int
    violations: tuple[Violation, ...]
    tight: int
    first_tight: TightPair | None
    elapsed_s: float | None = field(compare=False, default=None)

    def to_json_dict(self) -> dict:
        """Machine-readable form; deliberately excludes wall-clock time so
        repeated runs serialize identically."""
        return {
            "statement": self.statement,
            "semigroup": self.semigroup,
            "carrier_order": self.carrier_order,
            "max_size": self.max_size,
            "pairs": self.pairs,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "violation_count": self.violation_count,
            "violations": [
                {"x": v.x, "y": v.y, "lhs": v.lhs, "rhs": v.rhs}
                for v in self.violations
            ],
            "tight": self.tight,
            "first_tight": (
                None
                if self.first_tight is None
                else {
                    "x": self.first_tight.x,
                    "y": self.first_tight.y,
                    "value": self.first_tight.value,
                }
            ),
        }


class _Partial:
    """Mergeable tallies for one chunk of X masks."""

    __slots__ = ("pairs", "applicable", "satisfied", "violation_count",
                 "violations", "tight", "first_tight")

    def __init__(self):
        self.pairs = 0
        self.applicable = 0
        self.satisfied = 0
        self.violation_count = 0
        self.violations = []
        self.tight = 0
        self.first_tight = None


def _sentinel(value) -> int:
    return value.value if value.is_finite else _INF


def _rhs_json(r: int) -> int | str:
    return "infinity" if r >= _INF else int(r)


def _reshape_or(dest: np.ndarray, j: int, value: int):
    """dest[m] |= value for every mask m with bit j set."""
    dest.reshape(-1, 2 << j)[:, (1 << j):] |= value


class _VectorContext:
    """Per-worker precomputed tables for a vectorized sweep (n <= 16)."""

    def __init__(self, A: FiniteSemigroup, statement: str, max_size: int | None):
        self.A = A
        self.statement = statement
        n = A.n
        self.n = n
        size = 1 << n
        self.size = size

        pc = np.zeros(size, dtype=np.int64)
        for j in range(n):
            pc.reshape(-1, 2 << j)[:, (1 << j):] += 1
        self.pc = pc
        ok = pc >= 1
        if max_size is not None:
            ok &= pc <= max_size
        self.size_ok = ok
        self.n_considered = int(np.count_nonzero(ok))
        self.x_masks = [int(m) for m in np.nonzero(ok)[0]]

        # M[x, j] = bit mask of the single element x + j.
        self.M = np.array(
            [[1 << A.table[x][j] for j in range(n)] for x in range(n)],
            dtype=np.uint32,
        )
        self._f = np.zeros(size, dtype=np.uint32)

        self.cancellative = A.is_cancellative
        self.group = A.is_group
        self.p_const = _sentinel(p_constant(A))
        self._all = np.ones(size, dtype=bool)
        self._none = np.zeros(size, dtype=bool)

        self.span_comm = None
        self.omega_arr = None
        if statement in ("Thm2.2", "Cor2.4", "Cor2.7", "Kemperman-weak"):
            self.span_comm = self._span_comm_table()
        if statement in ("Thm2.2", "Cor2.4", "Cor2.7"):
            self.omega_arr = self._omega_table()
        if statement == "Chowla":
            elem_ok = [y == 0 or math.gcd(n, y) == 1 for y in range(n)]
            co = np.ones(size, dtype=bool)
            for j in range(n):
                if not elem_ok[j]:
                    co.reshape(-1, 2 << j)[:, (1 << j):] = False
            self.coprime_ok = co
            self.zero_in = (np.arange(size) & 1).astype(bool)
        if statement == "Pillai":
            self.pillai_arr = self._delta_table(pillai_delta)
        if statement == "Cor2.9":
            self.delta_arr = self._delta_table(delta)

    def _span_comm_table(self) -> np.ndarray:
        size = self.size
        out = np.ones(size, dtype=bool)
        if self.A.is_commutative:
            return out
        for m in range(1, size):
            out[m] = span_is_commutative(self.A, ElementSet(self.n, m))
        return out

    def _omega_table(self) -> np.ndarray:
        A = self.A
        n = self.n
        units_mask = A.units.mask
        ordm = [[0] * n for _ in range(n)]
        for z0 in iter_bits(units_mask):
            inv = A.inverse(z0)
            for z in range(n):
                ordm[z][z0] = element_order(A, A.table[z][inv]).value
        out = np.zeros(self.size, dtype=np.int64)
        for m in range(1, self.size):
            best = 0
            um = m & units_mask
            for z0 in iter_bits(um):
                rest = m ^ (1 << z0)
                if rest == 0:
                    best = _INF
                    break
                inner = min(ordm[z][z0] for z in iter_bits(rest))
                if inner > best:
                    best = inner
            out[m] = best
        return out

    def _delta_table(self, fn) -> np.ndarray:
        out = np.ones(self.size, dtype=np.int64)
        for m in range(1, self.size):
            out[m] = fn(self.n, ElementSet(self.n, m))
        return out

    def lhs_row(self, xmask: int) -> np.ndarray:
        """|X + Y| for every Y mask, as an int64 vector of length 2^n."""
        r = np.bitwise_or.reduce(self.M[list(iter_bits(xmask))], axis=0)
        f = self._f
        f.fill(0)
        for j in range(self.n):
            _reshape_or(f, j, r[j])
        return self.pc[f]

    def row(self, xmask: int):
        """(applicable, rhs) vectors over all Y masks for this X."""
        kx = int(self.pc[xmask])
        cap = kx + self.pc - 1
        s = self.statement
        if s == "CD-1813":
            app = self._all if (self.group and _is_prime(self.n)) else self._none
            rhs = np.minimum(self.n, cap)
        elif s == "Thm2.2":
            app = self.span_comm if self.cancellative else self._none
            rhs = np.minimum(self.omega_arr, cap)
        elif s == "Cor2.4":
            ok = self.cancellative and bool(self.span_comm[xmask])
            app = self._all if ok else self._none
            rhs = np.minimum(int(self.omega_arr[xmask]), cap)
        elif s == "Cor2.7":
            if self.cancellative and bool(self.span_comm[xmask]):
                app = self.span_comm
            else:
                app = self._none
            rhs = np.minimum(np.maximum(int(self.omega_arr[xmask]), self.omega_arr), cap)
        elif s == "Kemperman-weak":
            if self.cancellative:
                orders_ok = self.p_const >= cap
                if bool(self.span_comm[xmask]):
                    app = orders_ok
                else:
                    app = orders_ok & self.span_comm
            else:
                app = self._none
            rhs = cap
        elif s == "HK":
            app = self._all
            rhs = np.minimum(self.p_const, cap)
        elif s == "Chowla":
            app = self.zero_in & self.coprime_ok
            rhs = np.minimum(self.n, cap)
        elif s == "Pillai":
            app = self._all
            rhs = np.minimum(self.n // self.pillai_arr, cap)
        elif s == "Cor2.9":
            app = self._all
            d = np.minimum(int(self.delta_arr[xmask]), self.delta_arr)
            rhs = np.minimum(self.n // d, cap)
        else:  # pragma: no cover - registry and dispatch are kept in sync
            raise ValueError("unknown statement %r" % s)
        return app, rhs

    def eval_chunk(self, x_list) -> _Partial:
        part = _Partial()
        n = self.n
        for xmask in x_list:
            lhs = self.lhs_row(xmask)
            app, rhs = self.row(xmask)
            app = app & self.size_ok
            part.pairs += self.n_considered
            n_app = int(np.count_nonzero(app))
            part.applicable += n_app
            viol = app & (lhs < rhs)
            n_viol = int(np.count_nonzero(viol))
            part.satisfied += n_app - n_viol
            part.violation_count += n_viol
            if n_viol:
                xs = str(ElementSet(n, xmask))
                for ymask in np.nonzero(viol)[0]:
                    if len(part.violations) >= _MAX_RECORDED:
                        break
                    ymask = int(ymask)
                    part.violations.append(
                        Violation(
                            x=xs,
                            y=str(ElementSet(n, ymask)),
                            lhs=int(lhs[ymask]),
                            rhs=_rhs_json(int(rhs[ymask])),
                        )
                    )
            tight = app & (lhs == rhs)
            n_tight = int(np.count_nonzero(tight))
            part.tight += n_tight
            if n_tight and part.first_tight is None:
                ymask = int(np.argmax(tight))
                part.first_tight = TightPair(
                    x=str(ElementSet(n, xmask)),
                    y=str(ElementSet(n, ymask)),
                    value=int(lhs[ymask]),
                )
        return part


class _ScalarContext:
    """Fallback for carriers above the vectorization limit (requires a cap)."""

    def __init__(self, A: FiniteSemigroup, statement: str, max_size: int):
        self.A = A
        self.statement = statement
        self.x_masks = _capped_masks(A.n, max_size)
        self.y_masks = self.x_masks
        self.n_considered = len(self.y_masks)

    def eval_chunk(self, x_list) -> _Partial:
        part = _Partial()
        A = self.A
        n = A.n
        for xmask in x_list:
            X = ElementSet(n, xmask)
            for ymask in self.y_masks:
                Y = ElementSet(n, ymask)
                rep = run_statement(A, self.statement, X, Y)
                part.pairs += 1
                if not rep.applicable:
                    continue
                part.applicable += 1
                if rep.satisfied:
                    part.satisfied += 1
                else:
                    part.violation_count += 1
                    if len(part.violations) < _MAX_RECORDED:
                        part.violations.append(
                            Violation(
                                x=str(X),
                                y=str(Y),
                                lhs=rep.lhs,
                                rhs=rep.rhs.to_json(),
                            )
                        )
                if rep.rhs == rep.lhs:
                    part.tight += 1
                    if part.first_tight is None:
                        part.first_tight = TightPair(
                            x=str(X), y=str(Y), value=rep.lhs
                        )
        return part


def _capped_masks(n: int, max_size: int) -> list[int]:
    masks = []
    for k in range(1, min(max_size, n) + 1):
        for bits in combinations(range(n), k):
            m = 0
            for b in bits:
                m |= 1 << b
            masks.append(m)
    masks.sort()
    return masks


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _build_context(payload):
    table, label, statement, max_size = payload
    A = build_semigroup([list(row) for row in table], label=label)
    if A.n <= VECTOR_LIMIT:
        return _VectorContext(A, statement, max_size)
    return _ScalarContext(A, statement, max_size)


_WORKER_CTX = None


def _worker_init(payload):
    global _WORKER_CTX
    _WORKER_CTX = _build_context(payload)


def _worker_run(x_list):
    return _WORKER_CTX.eval_chunk(x_list)


def _merge(parts, statement, label, n, max_size, elapsed) -> SweepSummary:
    total = _Partial()
    for part in parts:
        total.pairs += part.pairs
        total.applicable += part.applicable
        total.satisfied += part.satisfied
        total.violation_count += part.violation_count
        for v in part.violations:
            if len(total.violations) < _MAX_RECORDED:
                total.violations.append(v)
        total.tight += part.tight
        if total.first_tight is None:
            total.first_tight = part.first_tight
    return SweepSummary(
        statement=statement,
        semigroup=label,
        carrier_order=n,
        max_size=max_size,
        pairs=total.pairs,
        applicable=total.applicable,
        satisfied=total.satisfied,
        violation_count=total.violation_count,
        violations=tuple(total.violations),
        tight=total.tight,
        first_tight=total.first_tight,
        elapsed_s=elapsed,
    )


def sweep(
    A: FiniteSemigroup,
    statement: str,
    max_size: int | None = None,
    jobs: int = 1,
) -> SweepSummary:
    """Run one statement over every pair of non-empty subsets of A.

    max_size caps |X| and |Y|; it is mandatory for carriers of order > 16.
    jobs > 1 distributes fixed-size chunks of the X space over worker
    processes; the summary is identical (byte-identical once serialized)
    for every jobs value.
    """
    started = time.monotonic()
    statement = normalize_statement(statement)
    info = statement_info(statement)
    if info.needs_cyclic and not is_standard_cyclic(A):
        raise NotGroup(
            "statement %s needs the standard integers-mod-m table" % statement
        )
    if info.needs_group and not A.is_group:
        raise NotGroup("statement %s is stated for groups" % statement)
    if max_size is not None and max_size < 1:
        raise ValueError("max_size must be >= 1")
    if A.n > VECTOR_LIMIT and max_size is None:
        raise CarrierTooLarge(
            "full sweeps need carrier order <= %d (order %d); pass a size cap"
            % (VECTOR_LIMIT, A.n)
        )

    label = A.label or ("order-%d" % A.n)
    payload = (tuple(tuple(row) for row in A.table), label, statement, max_size)
    ctx = _build_context(payload)
    chunks = [
        ctx.x_masks[i : i + CHUNK] for i in range(0, len(ctx.x_masks), CHUNK)
    ]

    if jobs <= 1 or len(chunks) <= 1:
        parts = [ctx.eval_chunk(chunk) for chunk in chunks]
    else:
        mp = multiprocessing.get_context("fork")
        with mp.Pool(
            processes=min(jobs, len(chunks)),
            initializer=_worker_init,
            initargs=(payload,),
        ) as pool:
            parts = pool.map(_worker_run, chunks, chunksize=1)

    elapsed = time.monotonic() - started
    return _merge(parts, statement, label, A.n, max_size, elapsed)
