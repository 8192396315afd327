"""Fixed-point counts and quotient genera for subgroup actions.

Two independent routes are implemented: direct coset counting for the
number of fixed points (with the quotient genus solved exactly from the
Riemann-Hurwitz formula), and a coset-permutation computation of the full
signature of the intermediate group.  The two must always agree; any
disagreement is an internal inconsistency, not an expected error path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import GeneratingVector
from .fuchsian import Signature, rh_genus, rh_measure
from .groups import FiniteGroup, Subgroup, _is_prime, cyclic_subgroup


class NonIntegralQuotientGenus(RuntimeError):
    """Tripwire: Eq-consistency of the pipeline failed on a validated vector."""


@dataclass(frozen=True)
class QuotientReport:
    subgroup: Subgroup
    prime: int
    fixed_points: int
    quotient_genus: int
    gamma_prime_signature: Signature

    def to_json_dict(self) -> dict:
        return {
            "prime": self.prime,
            "subgroup_generator": self.subgroup.generator_witnesses[0],
            "fixed_points": self.fixed_points,
            "quotient_genus": self.quotient_genus,
            "gamma_prime_signature": str(self.gamma_prime_signature),
        }


def count_fixed_cosets(
    G: FiniteGroup, s: int, subgroup_elements: frozenset[int]
) -> int:
    """Number of cosets d<T> with d^-1 s d inside the given cyclic subgroup."""
    table, inv = G.table, G.inverse
    hits = sum(
        1 for d in G.elements() if table[table[inv[d]][s]][d] in subgroup_elements
    )
    assert hits % len(subgroup_elements) == 0
    return hits // len(subgroup_elements)


def fixed_point_count(v: GeneratingVector, s: int) -> int:
    """Fixed points of the element s on the surface: for each period j,
    count the cosets of <T_j> whose conjugate of s lands in <T_j>."""
    if s == 0:
        raise ValueError("the identity fixes every point; pass s != 1")
    G = v.group
    return sum(
        count_fixed_cosets(G, s, frozenset(cyclic_subgroup(G, t).elements))
        for t in v.elements
    )


def fixed_points_unique_subgroup(v: GeneratingVector, p: int) -> int:
    """|G| * sum of 1/n_j over periods divisible by p; valid only when G has
    a unique subgroup of order p (checked by scanning order-p elements)."""
    G = v.group
    order_p = G.elements_of_order(p)
    if not order_p:
        raise ValueError(f"no element of order {p}")
    sets = {frozenset(cyclic_subgroup(G, x).elements) for x in order_p}
    if len(sets) != 1:
        raise ValueError(f"subgroup of order {p} is not unique")
    total = sum(
        (Fraction(1, n) for n in v.signature.periods if n % p == 0), Fraction(0)
    )
    t = Fraction(G.order) * total
    assert t.denominator == 1
    return int(t)


def quotient_genus(v: GeneratingVector, H: Subgroup) -> QuotientReport:
    """Solve 2g - 2 = p * (2k - 2 + t(1 - 1/p)) for the quotient genus k.

    Non-integral or negative k raises NonIntegralQuotientGenus; on vectors
    that pass validation this must never fire.
    """
    p = H.order
    if not _is_prime(p):
        raise ValueError(f"subgroup order {p} is not prime")
    G = v.group
    g = rh_genus(G.order, v.signature)
    t = fixed_point_count(v, H.generator_witnesses[0])
    k = (Fraction(2 * g - 2, p) - t * (1 - Fraction(1, p)) + 2) / 2
    if k.denominator != 1 or k < 0:
        raise NonIntegralQuotientGenus(
            f"g={g}, p={p}, t={t} gives quotient genus {k}"
        )
    return QuotientReport(
        subgroup=H,
        prime=p,
        fixed_points=t,
        quotient_genus=int(k),
        gamma_prime_signature=Signature(int(k), (p,) * t),
    )


def gamma_prime_signature(v: GeneratingVector, H: Subgroup) -> Signature:
    """Independent oracle: signature of the preimage of H under the
    surface-kernel epimorphism, via the coset-permutation method.

    Each T_j permutes the cosets G/H by left multiplication; every cycle of
    length l < n_j contributes a period n_j/l, and the orbit genus follows
    from the Riemann-Hurwitz formula at index |G|/|H|.
    """
    G = v.group
    members = set(H.elements)
    coset_of = [-1] * G.order
    n_cosets = 0
    for g in G.elements():
        if coset_of[g] >= 0:
            continue
        for h in members:
            coset_of[G.table[g][h]] = n_cosets
        n_cosets += 1
    reps = [-1] * n_cosets
    for g in G.elements():
        if reps[coset_of[g]] < 0:
            reps[coset_of[g]] = g

    periods: list[int] = []
    for t, n in zip(v.elements, v.signature.periods):
        seen = [False] * n_cosets
        for start in range(n_cosets):
            if seen[start]:
                continue
            length, c = 0, start
            while not seen[c]:
                seen[c] = True
                c = coset_of[G.table[t][reps[c]]]
                length += 1
            assert n % length == 0
            if length < n:
                periods.append(n // length)

    index = G.order // len(H.elements)
    measure = Fraction(index) * rh_measure(v.signature)
    k = (
        measure
        - sum((1 - Fraction(1, m) for m in periods), Fraction(0))
        + 2
    ) / 2
    assert k.denominator == 1 and k >= 0, f"non-integral orbit genus {k}"
    return Signature(int(k), tuple(sorted(periods)))
