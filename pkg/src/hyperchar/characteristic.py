"""Characteristic submonoid of a quotient hyperfield F_p/G, computed exactly.

The submonoid is S = {s >= 0 : some multiset of s elements of G sums to 0 mod p}.
Membership is decided by a reachable-residue dynamic program over big-integer
bitmasks: bit r of the step-k mask says "some sum of exactly k subgroup elements
is congruent to r mod p". All results are exact; no sampling, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .modular import Prime, UnitSubgroup, subgroup_of_order


@dataclass(frozen=True)
class CharacteristicSet:
    """Membership table of the characteristic submonoid up to `bound` (inclusive)."""

    p: Prime
    order: int
    bound: int
    member: tuple[bool, ...]
    continuity_threshold: Optional[int]

    def __post_init__(self) -> None:
        if len(self.member) != self.bound + 1:
            raise ValueError("membership table length must be bound + 1")
        if not self.member[0]:
            raise ValueError("0 belongs to every submonoid of the naturals")

    def __contains__(self, s: int) -> bool:
        return 0 <= s <= self.bound and self.member[s]


@dataclass(frozen=True)
class GeneratingSet:
    """Minimal generating set of a numerical submonoid, sorted ascending."""

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if list(self.generators) != sorted(set(self.generators)):
            raise ValueError("generators must be strictly increasing")
        if any(g < 1 for g in self.generators):
            raise ValueError("generators must be positive")

    def __iter__(self):
        return iter(self.generators)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.generators)


def continuity_threshold_of(member: Sequence[bool], p: int) -> Optional[int]:
    """Start of the certified all-member tail, or None.

    A trailing run of members certifies every larger integer only when the run
    has length >= p: together with p itself (always a member) a run of p
    consecutive members reaches everything beyond it. Shorter trailing runs
    prove nothing about values past the bound, so they return None.
    """
    bound = len(member) - 1
    if not member[bound]:
        return None
    k = bound
    while k > 1 and member[k - 1]:
        k -= 1
    if bound - k + 1 < p:
        return None
    return k


def characteristic_bitset(p: Prime, n: int, bound: Optional[int] = None) -> CharacteristicSet:
    """Exact membership table of char(F_p/G) for G the order-n unit subgroup.

    `bound` defaults to 2p and must be at least 2(p-1): past that point every
    member s splits as (p-1) + (s-p+1) for nontrivial G (both parts members,
    since the submonoid contains every integer >= p-1), so no minimal generator
    lives at 2(p-1) or beyond and the extraction in minimal_generating_set is
    sound. The trivial subgroup yields the multiples of p, handled by the same
    bound.
    """
    if bound is None:
        bound = 2 * p
    if bound < 2 * (p - 1):
        raise ValueError(f"bound {bound} < 2(p-1) = {2 * (p - 1)}: generator extraction unsound")
    G = subgroup_of_order(p, n)

    mask = (1 << p) - 1
    start = 0
    for g in G.elements:
        start |= 1 << g
    member = [False] * (bound + 1)
    member[0] = True
    reach = start
    member[1] = bool(reach & 1)
    for k in range(2, bound + 1):
        nxt = 0
        for g in G.elements:
            # cyclic shift by g: residue r moves to (r + g) mod p
            nxt |= (reach << g) | (reach >> (p - g))
        reach =nxt & mask
        member[k] = bool(reach & 1)

    table = tuple(member)
    return CharacteristicSet(
        p=p,
        order=n,
        bound=bound,
        member=table,
        continuity_threshold=continuity_threshold_of(table, p),
    )


def monoid_minimal_generators(member: Sequence[bool]) -> tuple[int, ...]:
    """Minimal generators of a numerical submonoid given its membership table.

    An element is a generator iff it is a member and not a sum of two smaller
    positive members. Computed with one bitmask convolution.
    """
    bound = len(member) - 1
    bits = 0
    for s in range(1, bound + 1):
        if member[s]:
            bits |= 1 << s
    decomposable = 0
    probe = bits
    for i in range(1, bound + 1):
        if member[i]:
            decomposable |= probe << i
    decomposable &= (1 << (bound + 1)) - 1
    gens = bits & ~decomposable
    return tuple(i for i in range(1, bound + 1) if (gens >> i) & 1)


def minimal_generating_set(S: CharacteristicSet) -> GeneratingSet:
    """Minimal generating set of the characteristic submonoid.

    Sound because S.bound >= 2(p-1) and no minimal generator reaches 2(p-1)
    (see characteristic_bitset); for the trivial subgroup the set is {p}.
    """
    return GeneratingSet(generators=monoid_minimal_generators(S.member))


def _min_summands_table(G: UnitSubgroup, cap: int) -> list[int]:
    """mc[t] = least number of terms g-1 (over g in G, g > 1) summing to t, or cap+1."""
    denoms = [g - 1 for g in G.elements if g > 1]
    inf = cap + 1
    mc = [inf] * (cap + 1)
    mc[0] = 0
    for t in range(1, cap + 1):
        best = inf
        for d in denoms:
            if d <= t and mc[t - d] + 1 < best:
                best = mc[t - d] + 1
        mc[t] = best
    return mc


_MC_CACHE: dict[tuple[int, tuple[int, ...]], list[int]] = {}


def _min_summands(G: UnitSubgroup, cap: int) -> list[int]:
    # rebuild with doubling so an ascending sweep of s costs O(log) rebuilds
    key = (int(G.p), G.elements)
    cached = _MC_CACHE.get(key)
    if cached is None or len(cached) <= cap:
        target = cap if cached is None else max(cap, 2 * (len(cached) - 1))
        cached = _min_summands_table(G, target)
        _MC_CACHE[key] = cached
    return cached


def kp_representation_check(p: Prime, G: UnitSubgroup, s: int) -> bool:
    """Decide membership of s in char(F_p/G) without the residue DP.

    s is a member iff for some k in [1, s] the deficit t = kp - s is a sum of
    at most s terms drawn from {g - 1 : g in G, g > 1}: writing a zero-sum
    multiset of size s as b_1 copies of g_1, ... with sum kp gives exactly
    such a decomposition, and conversely. The trivial subgroup has no terms
    available, so membership degenerates to p | s.
    """
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    if s == 0:
        return True
    if G.is_trivial:
        return s % p == 0
    cap = s * (max(G.elements) - 1)  # mc[t] <= s is impossible past this
    mc = _min_summands(G, cap)
    for k in range(1, s + 1):
        t = k * p - s
        if t < 0:
            continue
        if t > cap:
            break
        if mc[t] <= s:
            return True
    return False
