"""Numerical semigroups and their basic factorization invariants.

Everything here is exact integer arithmetic on Python ints, so there is no
overflow to guard against. A numerical semigroup is the set of nonnegative
integer combinations of finitely many positive integers with gcd 1; its
complement in the nonnegative integers is then finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    DuplicateEntry,
    EmptyInput,
    GcdNotOne,
    NonPositiveEntry,
    NotAMember,
    NotRepresentable,
)


@dataclass(frozen=True)
class Factorization:
    """Coefficient vector aligned with an ordered generating set."""

    coefficients: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.coefficients)

    def value(self, generators) -> int:
        """Dot product with the generating set the coefficients belong to."""
        gens = elements_of(generators)
        return sum(c * g for c, g in zip(self.coefficients, gens, strict=True))


@dataclass(frozen=True)
class AperySet:
    """Elements w of S with w - base_element not in S, sorted increasing."""

    base_element: int
    elements: tuple[int, ...]


class GeneratingSet:
    """Ordered generating set: positive, duplicate-free, in any order.

    Unlike the minimal generators of a Semigroup, no minimality or gcd
    condition is imposed here; factorization coefficients stay aligned with
    the order given at construction.
    """

    __slots__ = ("elements", "_lengths")

    def __init__(self, elements) -> None:
        elems = tuple(int(x) for x in elements)
        if not elems:
            raise EmptyInput("generating set is empty")
        if any(x <= 0 for x in elems):
            raise NonPositiveEntry(f"generating set entries must be positive: {list(elems)}")
        if len(set(elems)) != len(elems):
            raise DuplicateEntry(f"duplicate entries in generating set: {list(elems)}")
        self.elements = elems
        self._lengths = None

    def __repr__(self) -> str:
        return f"GeneratingSet({list(self.elements)})"


class Semigroup:
    """Numerical semigroup held by its minimal generating set.

    Construct through make_semigroup, which reduces the input to minimal
    generators and validates the gcd condition. Instances cache the table of
    least elements per residue class and a factorization-length table, so
    membership and order queries are cheap after warmup. Caches are written
    once and then only read, so sharing an instance across threads for
    reading is safe.
    """

    __slots__ = ("generators", "_least", "_lengths")

    def __init__(self, generators: tuple[int, ...]) -> None:
        self.generators = generators
        self._least = None
        self._lengths = None

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Semigroup<{', '.join(str(g) for g in self.generators)}>"


def elements_of(generators) -> tuple[int, ...]:
    """Generator tuple of a Semigroup, GeneratingSet, or plain sequence."""
    if isinstance(generators, Semigroup):
        return generators.generators
    if isinstance(generators, GeneratingSet):
        return generators.elements
    return GeneratingSet(generators).elements


def make_semigroup(raw_generators) -> Semigroup:
    """Minimal generating set of the monoid generated by the input.

    Idempotent on already-minimal input. Raises EmptyInput, NonPositiveEntry,
    or GcdNotOne when the input cannot generate a numerical semigroup.
    """
    entries = [int(x) for x in raw_generators]
    if not entries:
        raise EmptyInput("no generators given")
    if any(x <= 0 for x in entries):
        raise NonPositiveEntry(f"generators must be positive: {entries}")
    if gcd(*entries) != 1:
        raise GcdNotOne(f"gcd({entries}) > 1: the complement would be infinite")
    candidates = sorted(set(entries))
    top = candidates[-1]
    # reach[n]: n is a sum of already-kept generators; a candidate that is
    # reachable when its turn comes is redundant (sums only use smaller ones)
    reach = [False] * (top + 1)
    reach[0] = True
    kept: list[int] = []
    for g in candidates:
        if reach[g]:
            continue
        kept.append(g)
        for v in range(g, top + 1):
            if reach[v - g]:
                reach[v] = True
    return Semigroup(tuple(kept))


def _least_table_mod(gens: tuple[int, ...], modulus: int) -> list[int]:
    """Least nonnegative combination of gens in each class mod modulus.

    Fixpoint relaxation from 0: repeatedly try to improve class minima by
    adding one generator to a known minimum, until stable. Needs gcd(gens)
    coprime to modulus so that every class gets reached; all callers pass
    gcd-1 generating sets.
    """
    least: list[int | None] = [None] * modulus
    least[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(modulus):
            base = least[r]
            if base is None:
                continue
            for g in gens:
                v = base + g
                t = v % modulus
                cur = least[t]
                if cur is None or v < cur:
                    least[t] = v
                    changed = True
    return least  # type: ignore[return-value]


def _least_table(S: Semigroup) -> list[int]:
    if S._least is None:
        S._least = _least_table_mod(S.generators, S.multiplicity)
    return S._least


def least_in_class(S: Semigroup, residue: int) -> int:
    """Least element of S congruent to residue modulo the multiplicity."""
    return _least_table(S)[residue % S.multiplicity]


def contains(S: Semigroup, n: int) -> bool:
    """Membership test; constant time once the residue table is built."""
    if n < 0:
        return False
    return n >= least_in_class(S, n)


def frobenius_number(S: Semigroup) -> int:
    """Largest integer outside S; -1 when S is all nonnegative integers."""
    return max(_least_table(S)) - S.multiplicity


def apery_set(S: Semigroup, u: int | None = None) -> AperySet:
    """All w in S with w - u not in S. Defaults to u = multiplicity, where
    the result is exactly the least element of each residue class."""
    e = S.multiplicity
    if u is None:
        u = e
    if u <= 0 or not contains(S, u):
        raise NotAMember(f"base element {u} is not a nonzero element of {S}")
    if u == e:
        elems = tuple(sorted(_least_table(S)))
    else:
        # every member is at most frobenius + u: anything larger has its
        # difference with u past the frobenius number, hence inside S
        top = frobenius_number(S) + u
        elems = tuple(
            n for n in range(top + 1) if contains(S, n) and not contains(S, n - u)
        )
    return AperySet(base_element=u, elements=elems)


def enumerate_factorizations(generators, n: int) -> list[Factorization]:
    """All coefficient vectors over the generating set that represent n.

    Deterministic order: lexicographically decreasing on the coefficients
    read from the largest generator down to the smallest.
    """
    gens = elements_of(generators)
    if n < 0:
        return []
    by_size = sorted(range(len(gens)), key=lambda k: gens[k], reverse=True)
    coeffs = [0] * len(gens)
    out: list[Factorization] = []

    def descend(i: int, rem: int) -> None:
        pos = by_size[i]
        g = gens[pos]
        if i == len(by_size) - 1:
            q, r = divmod(rem, g)
            if r == 0:
                coeffs[pos] = q
                out.append(Factorization(tuple(coeffs)))
                coeffs[pos] = 0
            return
        for c in range(rem // g, -1, -1):
            coeffs[pos] = c
            descend(i + 1, rem - c * g)
        coeffs[pos] = 0

    descend(0, n)
    return out


def denumerant(generators, n: int) -> int:
    """Number of factorizations of n over the generating set."""
    return len(enumerate_factorizations(generators, n))


class _LengthTable:
    """Max and min factorization lengths per value, grown on demand.

    Index n holds None when n has no factorization, else the extreme length.
    The recurrence walks one generator back from n, so filling up to n costs
    n times the number of generators.
    """

    __slots__ = ("gens", "max_len", "min_len")

    def __init__(self, gens: tuple[int, ...]) -> None:
        self.gens = gens
        self.max_len: list[int | None] = [0]
        self.min_len: list[int | None] = [0]

    def grow(self, n: int) -> None:
        gens = self.gens
        max_len, min_len = self.max_len, self.min_len
        for v in range(len(max_len), n + 1):
            hi: int | None = None
            lo: int | None = None
            for g in gens:
                w = v - g
                if w < 0:
                    continue
                m = max_len[w]
                if m is None:
                    continue
                if hi is None or m + 1 > hi:
                    hi = m + 1
                k = min_len[w]
                if lo is None or k + 1 < lo:  # type: ignore[operator]
                    lo = k + 1  # type: ignore[operator]
            max_len.append(hi)
            min_len.append(lo)

    def pair(self, n: int) -> tuple[int, int] | None:
        if n < 0:
            return None
        if n >= len(self.max_len):
            self.grow(n)
        m = self.max_len[n]
        if m is None:
            return None
        return m, self.min_len[n]  # type: ignore[return-value]


def _lengths_for(generators) -> _LengthTable:
    if isinstance(generators, (Semigroup, GeneratingSet)):
        if generators._lengths is None:
            generators._lengths = _LengthTable(elements_of(generators))
        return generators._lengths
    return _LengthTable(elements_of(generators))


def order(generators, n: int) -> int:
    """Length of a longest factorization of n over the generating set."""
    pair = _lengths_for(generators).pair(n)
    if pair is None:
        raise NotRepresentable(f"{n} has no factorization over {elements_of(generators)}")
    return pair[0]


def min_order(generators, n: int) -> int:
    """Length of a shortest factorization of n over the generating set."""
    pair = _lengths_for(generators).pair(n)
    if pair is None:
        raise NotRepresentable(f"{n} has no factorization over {elements_of(generators)}")
    return pair[1]


def max_denumerant_element(S: Semigroup, s: int) -> int:
    """Number of factorizations of s in S attaining the maximal length."""
    if not contains(S, s):
        raise NotAMember(f"{s} is not in {S}")
    facts = enumerate_factorizations(S, s)
    top = max(f.length for f in facts)
    return sum(1 for f in facts if f.length == top)


def max_apery(S: Semigroup, u: int) -> list[int]:
    """Maximal nonzero members of apery_set(S, u), where w is below w' when
    w' - w lands in S without being zero."""
    ap = apery_set(S, u).elements
    out = []
    for w in ap:
        if w == 0:
            continue
        if not any(wp != w and contains(S, wp - w) for wp in ap):
            out.append(w)
    return out
