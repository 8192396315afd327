"""Signatures and exact Riemann-Hurwitz arithmetic.

All genus computations use rational arithmetic (fractions.Fraction);
no floating point appears anywhere in this module.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteGroup


class NonIntegralGenus(ValueError):
    """The Riemann-Hurwitz formula gives a non-integral genus."""


class NegativeGenus(ValueError):
    """The Riemann-Hurwitz formula gives a negative genus."""


@dataclass(frozen=True, order=True)
class Signature:
    """Orbit genus h plus a multiset of periods, stored sorted ascending."""

    orbit_genus: int
    periods: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.orbit_genus < 0:
            raise ValueError("orbit genus must be nonnegative")
        if any(n < 2 for n in self.periods):
            raise ValueError("every period must be >= 2 (and finite)")
        object.__setattr__(self, "periods", tuple(sorted(self.periods)))

    @property
    def r(self) -> int:
        return len(self.periods)

    def __str__(self) -> str:
        body = ",".join(str(n) for n in self.periods) if self.periods else "-"
        return f"({self.orbit_genus}|{body})"


_SIG_RE = re.compile(r"^\(\s*(\d+)\s*\|\s*(-|\d+(?:\s*,\s*\d+)*)\s*\)$")


def parse_signature(text: str) -> Signature:
    """Parse '(0|2,2,3,3)' or '(2|-)' into a Signature."""
    m = _SIG_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse signature: {text!r}")
    h = int(m.group(1))
    body = m.group(2)
    periods = () if body == "-" else tuple(int(t) for t in body.split(","))
    return Signature(h, periods)


def rh_measure(sig: Signature) -> Fraction:
    """2h - 2 + sum(1 - 1/n_j), the normalized hyperbolic area of the group."""
    return Fraction(2 * sig.orbit_genus - 2) + sum(
        (1 - Fraction(1, n) for n in sig.periods), Fraction(0)
    )


def rh_genus(group_order: int, sig: Signature) -> int:
    """Genus g solving 2g - 2 = |G| * (2h - 2 + sum(1 - 1/n_j)).

    Raises NonIntegralGenus when no integer solves the equation and
    NegativeGenus when the solution is negative.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    g = 1 + Fraction(group_order) * rh_measure(sig) / 2
    if g.denominator != 1:
        raise NonIntegralGenus(f"|G|={group_order}, sig={sig}: g={g}")
    if g < 0:
        raise NegativeGenus(f"|G|={group_order}, sig={sig}: g={g}")
    return int(g)


SPHERICAL, EUCLIDEAN, HYPERBOLIC = "spherical", "euclidean", "hyperbolic"


def geometry_type(sig: Signature) -> str:
    """Trichotomy by the sign of the orbifold Euler characteristic
    chi = 2 - sum(1 - 1/n_j), which for three periods reduces to the
    classical sum(1/n_j) > 1, = 1, < 1 test."""
    if sig.orbit_genus != 0:
        raise ValueError("geometry trichotomy is defined for orbit genus 0")
    chi = 2 - sum((1 - Fraction(1, n) for n in sig.periods), Fraction(0))
    if chi > 0:
        return SPHERICAL
    if chi == 0:
        return EUCLIDEAN
    return HYPERBOLIC


def enumerate_signatures(
    G: FiniteGroup, max_genus: int
) -> list[tuple[Signature, int]]:
    """All genus-0 signatures with periods in the element-order spectrum of G
    whose Riemann-Hurwitz genus is defined and <= max_genus.

    Each period term contributes at least 1/2 to the RH measure, which caps
    the number of periods and makes the enumeration exhaustive.
    """
    if max_genus < 0:
        raise ValueError("max_genus must be >= 0")
    spectrum = sorted(G.order_spectrum() - {1})
    budget = Fraction(2 * max_genus - 2, G.order) + 2
    r_max = max(0, int(budget * 2)) if budget > 0 else 0
    found: list[tuple[Signature, int]] = []
    for r in range(r_max + 1):
        for periods in itertools.combinations_with_replacement(spectrum, r):
            sig = Signature(0, periods)
            try:
                g = rh_genus(G.order, sig)
            except (NonIntegralGenus, NegativeGenus):
                continue
            if g <= max_genus:
                found.append((sig, g))
    found.sort(key=lambda item: (item[1], item[0]))
    return found
