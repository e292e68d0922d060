"""Blowup semigroups, adjustment tables, and the maximal denumerant engine.

The engine passes from S to its blowup B, the semigroup generated by the
multiplicity e together with every other minimal generator minus e. That
generating set is kept in source order (it need not be minimal for B), so a
factorization of s in S of length r corresponds position by position to a
factorization of s - r*e over it.

Scanning a residue class of S records the adjustment s - ord(s)*e of each
element. Adjustments never increase along the class and stabilize at the
least element of B in the class, so the scan is finite. For each distinct
adjustment value the candidate factorizations, the ones short enough to come
from a maximal-length factorization in S, are counted; the largest count is
the exact maximum number of maximal-length factorizations over the class,
attained at an explicit witness element.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import InputError, InternalCheckError, NotAMember
from .semigroup import (
    Factorization,
    GeneratingSet,
    Semigroup,
    _least_table_mod,
    contains,
    enumerate_factorizations,
    least_in_class,
    make_semigroup,
    min_order,
    order,
)


class BlowupContext:
    """The blowup B of a source semigroup with its generating set.

    dset keeps the source generator order: position 0 holds the multiplicity
    e, position i holds generators[i] - e. It generates B but need not be
    minimal; blowup holds B reduced to minimal generators.
    """

    __slots__ = ("source", "dset", "blowup", "_least_b", "_facts")

    def __init__(self, source: Semigroup) -> None:
        self.source = source
        e = source.multiplicity
        dset_elems = (e,) + tuple(a - e for a in source.generators[1:])
        self.dset = GeneratingSet(dset_elems)
        self.blowup = make_semigroup(dset_elems)
        self._least_b: list[int] | None = None
        self._facts: dict[int, tuple[Factorization, ...]] = {}

    def least_blowup_in_class(self, residue: int) -> int:
        """Least element of B congruent to residue mod the multiplicity of
        the source (not of B, whose own multiplicity may be smaller)."""
        if self._least_b is None:
            self._least_b = _least_table_mod(
                self.blowup.generators, self.source.multiplicity
            )
        return self._least_b[residue]

    def factorizations_over_dset(self, b: int) -> tuple[Factorization, ...]:
        """All factorizations of b over dset, memoized per context."""
        got = self._facts.get(b)
        if got is None:
            got = tuple(enumerate_factorizations(self.dset, b))
            self._facts[b] = got
        return got


@dataclass(frozen=True)
class AdjustmentEntry:
    value: int  # a distinct adjustment value, an element of B
    min_order: int  # shortest factorization length of value over dset


@dataclass(frozen=True)
class AdjustmentTable:
    residue: int
    entries: tuple[AdjustmentEntry, ...]  # increasing by value
    scan_log: tuple[tuple[int, int, int], ...]  # rows (s, ord(s), adjustment)


@dataclass(frozen=True)
class ResidueReport:
    residue: int
    # pairs (adjustment value, candidate factorizations over dset)
    candidates: tuple[tuple[int, tuple[Factorization, ...]], ...]
    dmax_si: int  # max candidate count: the class's maximal denumerant
    witness: int  # element of the class attaining dmax_si


def blowup(S: Semigroup) -> BlowupContext:
    """Blowup context of S: generating set (e, a1-e, ..., at-e) in source
    order plus the semigroup it generates."""
    return BlowupContext(S)


def adjustment(S: Semigroup, s: int) -> int:
    """s minus its maximal factorization length times the multiplicity."""
    if not contains(S, s):
        raise NotAMember(f"{s} is not in {S}")
    return s - order(S, s) * S.multiplicity


def adjustment_table(ctx: BlowupContext, residue: int) -> AdjustmentTable:
    """Scan residue class `residue` of the source and log adjustments.

    The scan runs from the least element of the class through
    f + min_order(f over dset) * e, where f is the least element of B in the
    class; past that point the adjustment stays f, so nothing is missed.
    """
    S = ctx.source
    e = S.multiplicity
    if not 0 <= residue < e:
        raise InputError(f"residue {residue} out of range for multiplicity {e}")
    f = ctx.least_blowup_in_class(residue)
    stop = f + min_order(ctx.dset, f) * e
    start = least_in_class(S, residue)
    if stop < start:
        raise InternalCheckError(
            f"scan for class {residue} would end at {stop} before starting at {start}"
        )
    rows = []
    prev_adj: int | None = None
    for s in range(start, stop + 1, e):
        r = order(S, s)
        adj = s - r * e
        if prev_adj is not None and adj > prev_adj:
            raise InternalCheckError(
                f"adjustment increased from {prev_adj} to {adj} at {s} in class {residue}"
            )
        prev_adj = adj
        rows.append((s, r, adj))
    values = sorted({adj for _, _, adj in rows})
    if values[0] != f:
        raise InternalCheckError(
            f"least adjustment in class {residue} is {values[0]}, expected {f}"
        )
    entries = tuple(AdjustmentEntry(v, min_order(ctx.dset, v)) for v in values)
    return AdjustmentTable(residue, entries, tuple(rows))


def residue_report(ctx: BlowupContext, table: AdjustmentTable) -> ResidueReport:
    """Candidate factorization sets per adjustment value, and the class max.

    The least adjustment value admits every factorization over dset as a
    candidate. Each later value u admits only factorizations strictly
    shorter than min_order(previous value) - (u - previous value)/e; longer
    ones cannot arise from a maximal-length factorization in S. The largest
    candidate count is the class's maximal denumerant, attained at
    witness = value + (longest candidate length) * e.
    """
    e = ctx.source.multiplicity
    sets: list[tuple[int, tuple[Factorization, ...]]] = []
    prev_value: int | None = None
    prev_min_order = 0
    for entry in table.entries:
        all_facts = ctx.factorizations_over_dset(entry.value)
        if prev_value is None:
            chosen = all_facts
        else:
            gap, rem = divmod(entry.value - prev_value, e)
            if rem:
                raise InternalCheckError(
                    f"adjustment values {prev_value} and {entry.value} differ "
                    f"by a non-multiple of {e}"
                )
            cap = prev_min_order - gap
            chosen = tuple(x for x in all_facts if x.length < cap)
        if not chosen:
            raise InternalCheckError(
                f"empty candidate set at adjustment value {entry.value} "
                f"in class {table.residue}"
            )
        sets.append((entry.value, chosen))
        prev_value = entry.value
        prev_min_order = entry.min_order
    best = max(len(facts) for _, facts in sets)
    witness = -1
    for value, facts in sets:  # ties resolve toward the smallest value
        if len(facts) == best:
            witness = value + max(x.length for x in facts) * e
            break
    return ResidueReport(table.residue, tuple(sets), best, witness)


def dmax(S: Semigroup, workers: int = 1) -> tuple[int, list[ResidueReport]]:
    """Maximal denumerant of S with one report per residue class.

    The class reports are independent of each other; workers > 1 computes
    them on a thread pool after the shared tables are warmed up, with output
    order fixed by residue either way.
    """
    if S.generators == (1,):
        # every element k has the unique maximal factorization k * 1
        trivial = ResidueReport(0, ((0, (Factorization((0,)),)),), 1, 0)
        return 1, [trivial]
    ctx = blowup(S)
    tables = [adjustment_table(ctx, i) for i in range(S.multiplicity)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda t: residue_report(ctx, t), tables))
    else:
        reports = [residue_report(ctx, t) for t in tables]
    return max(r.dmax_si for r in reports), reports


def max_denumerant_element_via_blowup(ctx: BlowupContext, s: int) -> int:
    """Count maximal-length factorizations of s without enumerating them in
    S: factorizations of the adjustment over dset, length capped at ord(s),
    are in bijection with them."""
    S = ctx.source
    if not contains(S, s):
        raise NotAMember(f"{s} is not in {S}")
    r = order(S, s)
    adj = s - r * S.multiplicity
    return sum(1 for x in ctx.factorizations_over_dset(adj) if x.length <= r)
