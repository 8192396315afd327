"""Surface-kernel generating vectors: validation and pruned enumeration.

A generating vector (T_1,...,T_r) aligned with a signature (0|n_1,...,n_r)
realizes an action when the order of T_j is exactly n_j, the full product
T_1...T_r is the identity, and the T_j generate the whole group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .fuchsian import Signature
from .groups import FiniteGroup, _prime_factors, subgroup_closure


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    group: FiniteGroup
    signature: Signature
    elements: tuple[int, ...]

    def words(self) -> tuple[str, ...]:
        return tuple(self.group.name(x) for x in self.elements)

    def to_json_dict(self) -> dict:
        return {
            "signature": str(self.signature),
            "elements": list(self.elements),
            "words": list(self.words()),
        }


def validate(v: GeneratingVector) -> tuple[bool, str | None]:
    """Check the three surface-kernel conditions; on failure the second
    component says which condition failed and where."""
    G, sig = v.group, v.signature
    if len(v.elements) != sig.r:
        raise ValueError(
            f"arity mismatch: {len(v.elements)} elements for {sig.r} periods"
        )
    for j, (t, n) in enumerate(zip(v.elements, sig.periods)):
        if not 0 <= t < G.order:
            raise ValueError(f"invalid element id {t} at index {j}")
        if G.element_order[t] != n:
            return False, (
                f"order condition fails at index {j}: "
                f"order({t}) = {G.element_order[t]} != {n}"
            )
    prod = 0
    for t in v.elements:
        prod = G.table[prod][t]
    if prod != 0:
        return False, f"product condition fails: product is element {prod}, not 1"
    if len(subgroup_closure(G, v.elements)) != G.order:
        return False, "generation condition fails: elements generate a proper subgroup"
    return True, None


def _closure_cache_extend(
    G: FiniteGroup,
    cache: dict[tuple[frozenset[int], int], frozenset[int]],
    base: frozenset[int],
    g: int,
) -> frozenset[int]:
    if g in base:
        return base
    key = (base, g)
    hit = cache.get(key)
    if hit is None:
        hit = subgroup_closure(G, set(base) | {g})
        cache[key] = hit
    return hit


def enumerate_vectors(
    G: FiniteGroup,
    sig: Signature,
    cap: int | None = None,
    dedup: bool = False,
) -> Iterator[GeneratingVector]:
    """Yield every valid generating vector for the signature, in element-id
    lexicographic order (deterministic).

    Backtracking assigns T_1..T_{r-1} from elements of exact order n_j and
    solves T_r as the inverse of the prefix product.  Branches are pruned
    when the subgroup generated so far, together with the remaining period
    orders, cannot cover every prime dividing |G|.

    With dedup=True only the first vector of each simultaneous-conjugation
    orbit is emitted.  cap limits the number of emitted vectors.
    """
    if sig.orbit_genus != 0:
        raise ValueError("only genus-0 signatures carry generating vectors")
    r = sig.r
    if r == 0:
        if G.order == 1:
            yield GeneratingVector(G, sig, ())
        return
    periods = sig.periods
    candidates = [G.elements_of_order(n) for n in periods]
    if any(not c for c in candidates):
        return
    primes = _prime_factors(G.order)
    table, invmap = G.table, G.inverse
    closure_cache: dict[tuple[frozenset[int], int], frozenset[int]] = {}
    trivial = frozenset({0})
    seen_orbits: set[tuple[int, ...]] = set()
    emitted = 0

    # lcm of period orders from position j on (the last slot included)
    suffix_lcm = [1] * (r + 1)
    for j in range(r - 1, -1, -1):
        suffix_lcm[j] = math.lcm(suffix_lcm[j + 1], periods[j])

    def feasible(span: frozenset[int], j: int) -> bool:
        reach = len(span) * suffix_lcm[j]
        return all(reach % p == 0 for p in primes)

    def orbit_key(elems: tuple[int, ...]) -> tuple[int, ...]:
        return min(
            tuple(table[table[g][t]][invmap[g]] for t in elems)
            for g in G.elements()
        )

    stack_elems: list[int] = []

    def search(j: int, prefix_prod: int, span: frozenset[int]) -> Iterator[GeneratingVector]:
        nonlocal emitted
        if cap is not None and emitted >= cap:
            return
        if j == r - 1:
            last = invmap[prefix_prod]
            if G.element_order[last] != periods[j]:
                return
            full = _closure_cache_extend(G, closure_cache, span, last)
            if len(full) != G.order:
                return
            elems = tuple(stack_elems) + (last,)
            if dedup:
                key = orbit_key(elems)
                if key in seen_orbits:
                    return
                seen_orbits.add(key)
            emitted += 1
            yield GeneratingVector(G, sig, elems)
            return
        for t in candidates[j]:
            new_span = _closure_cache_extend(G, closure_cache, span, t)
            if not feasible(new_span, j + 1):
                continue
            stack_elems.append(t)
            yield from search(j + 1, table[prefix_prod][t], new_span)
            stack_elems.pop()
            if cap is not None and emitted >= cap:
                return

    yield from search(0, 0, trivial)


def exists(G: FiniteGroup, sig: Signature) -> bool:
    """Short-circuiting: does any valid generating vector exist?"""
    return next(enumerate_vectors(G, sig, cap=1), None) is not None


def conjugation_orbit(v: GeneratingVector) -> set[tuple[int, ...]]:
    """All simultaneous conjugates of the vector's element tuple."""
    G = v.group
    return {
        tuple(G.conjugate(g, t) for t in v.elements) for g in G.elements()
    }


def count_conjugation_orbits(vectors: list[GeneratingVector]) -> int:
    canons = set()
    for v in vectors:
        canons.add(min(conjugation_orbit(v)))
    return len(canons)
