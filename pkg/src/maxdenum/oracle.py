"""Brute-force recomputation of the library's headline quantities.

Nothing here shares algorithms with the rest of the package: enumeration is
plain nested recursion over coefficients, orders are maxima over enumerated
lengths, and membership is enumeration with early exit. Deliberately slow
and simple, for use as ground truth in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundTooSmall, NotAMember
from .semigroup import Factorization, Semigroup, elements_of


@dataclass(frozen=True)
class OracleBound:
    """Scan ceiling for exhaustive searches, with a note on its origin."""

    max_element: int
    rationale: str


def _vectors(gens: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    """Every coefficient tuple with value exactly n, by nested recursion."""
    k = len(gens)
    vec = [0] * k
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int) -> None:
        if i == k:
            if rem == 0:
                out.append(tuple(vec))
            return
        g = gens[i]
        c = 0
        while c * g <= rem:
            vec[i] = c
            rec(i + 1, rem - c * g)
            c += 1
        vec[i] = 0

    if n >= 0:
        rec(0, n)
    return out


def _is_member(gens: tuple[int, ...], n: int) -> bool:
    if n == 0:
        return True
    if n < 0:
        return False

    def rec(i: int, rem: int) -> bool:
        if rem == 0:
            return True
        if i == len(gens):
            return False
        g = gens[i]
        c = 0
        while c * g <= rem:
            if rec(i + 1, rem - c * g):
                return True
            c += 1
        return False

    return rec(0, n)


def oracle_factorizations(generators, n: int) -> list[Factorization]:
    """Every factorization of n, independently of the main enumerator, in
    ascending coefficient order."""
    gens = elements_of(generators)
    return [Factorization(v) for v in sorted(_vectors(gens, n))]


def oracle_dmax_element(S: Semigroup, s: int) -> int:
    """Count of maximal-length factorizations of s, by full enumeration."""
    vecs = _vectors(S.generators, s)
    if not vecs:
        raise NotAMember(f"{s} has no factorization over {S.generators}")
    lengths = [sum(v) for v in vecs]
    top = max(lengths)
    return lengths.count(top)


def auto_bound(S: Semigroup) -> OracleBound:
    """Scan ceiling past which no element can improve the maximum count.

    In each residue class mod e the count of maximal-length factorizations
    becomes constant beyond f + L*e, where f is the least element of the
    blowup semigroup in the class and L is the longest factorization of f
    over the blowup generating set (e, a1-e, ..., at-e). The ceiling
    e*(1 + max L) + max f covers that point for every class, with margin.
    Both ingredients are recomputed here by brute force.
    """
    e = S.multiplicity
    dset = (e,) + tuple(a - e for a in S.generators[1:])
    least: dict[int, int] = {}
    n = 0
    while len(least) < e:
        cls = n % e
        if cls not in least and _is_member(dset, n):
            least[cls] = n
        n += 1
    longest = max(max(sum(v) for v in _vectors(dset, f)) for f in least.values())
    top = max(least.values())
    return OracleBound(
        max_element=e * (1 + longest) + top,
        rationale=f"covers count stabilization in every class mod {e}",
    )


def oracle_dmax_profile(
    S: Semigroup, bound: OracleBound | None = None
) -> dict[int, tuple[int, int]]:
    """Map s -> (max length, count at max length) for every s in S up to the
    bound, from one sweep over all coefficient vectors below the ceiling."""
    if bound is None:
        bound = auto_bound(S)
    gens = S.generators
    limit = bound.max_element
    k = len(gens)
    buckets: dict[int, list[int]] = {}

    def rec(i: int, total: int, length: int) -> None:
        if i == k:
            buckets.setdefault(total, []).append(length)
            return
        g = gens[i]
        c = 0
        while total + c * g <= limit:
            rec(i + 1, total + c * g, length + c)
            c += 1

    rec(0, 0, 0)
    out: dict[int, tuple[int, int]] = {}
    for s in sorted(buckets):
        lengths = buckets[s]
        topval = max(lengths)
        out[s] = (topval, lengths.count(topval))
    return out


def oracle_dmax(S: Semigroup, bound: OracleBound | None = None) -> int:
    """Brute-force maximal denumerant: the largest count of maximal-length
    factorizations among all elements up to the bound."""
    floor_bound = auto_bound(S)
    if bound is None:
        bound = floor_bound
    elif bound.max_element < floor_bound.max_element:
        raise BoundTooSmall(
            f"bound {bound.max_element} is below the derived minimum "
            f"{floor_bound.max_element} for {S}"
        )
    profile = oracle_dmax_profile(S, bound)
    return max(count for _, count in profile.values())


def oracle_dmax_empirical(S: Semigroup, start: int | None = None) -> int:
    """Bound-free variant: double a scan ceiling until the answer is stable
    across two consecutive doublings. Defense against a wrong derivation of
    the automatic bound."""
    limit = start if start is not None else 2 * max(S.generators)

    def value(ceiling: int) -> int:
        profile = oracle_dmax_profile(S, OracleBound(ceiling, "empirical probe"))
        return max(count for _, count in profile.values())

    seen = [value(limit)]
    for _ in range(24):
        limit *= 2
        seen.append(value(limit))
        if len(seen) >= 3 and seen[-1] == seen[-2] == seen[-3]:
            return seen[-1]
    raise BoundTooSmall(f"no stabilization after doubling the ceiling to {limit}")
