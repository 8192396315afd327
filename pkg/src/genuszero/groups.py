"""Finite groups as explicit multiplication tables.

Every group is materialized as a full Cayley table on element ids
0..order-1, with id 0 always the identity.  Element ids follow a fixed
normal-form ordering per family, so all downstream reports are
bit-for-bit reproducible.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GroupConstructionError(ValueError):
    """Raised when constructor parameters violate a defining condition."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    family: str
    names: tuple[str, ...]
    inverse: tuple[int, ...] = field(repr=False)
    element_order: tuple[int, ...] = field(repr=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elt_order(self, a: int) -> int:
        return self.element_order[a]

    def power(self, a: int, k: int) -> int:
        k %= self.element_order[a]
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.table[self.table[g][x]][self.inverse[g]]

    def elements(self) -> range:
        return range(self.order)

    def elements_of_order(self, n: int) -> list[int]:
        return [x for x in range(self.order) if self.element_order[x] == n]

    def order_spectrum(self) -> set[int]:
        return set(self.element_order)

    def name(self, x: int) -> str:
        return self.names[x]

    def __repr__(self) -> str:  # pragma: no cover
        return f"FiniteGroup({self.family}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]
    generator_witnesses: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _orders_from_table(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    orders = []
    for x in range(len(table)):
        k, acc = 1, x
        while acc != 0:
            acc = table[acc][x]
            k += 1
        orders.append(k)
    return tuple(orders)


def _from_table(
    table: list[list[int]], family: str, names: Sequence[str]
) -> FiniteGroup:
    n = len(table)
    for x in range(n):
        if table[0][x] != x or table[x][0] != x:
            raise GroupConstructionError(f"id 0 is not an identity (element {x})")
    inverse = [-1] * n
    for x in range(n):
        row = table[x]
        for y in range(n):
            if row[y] == 0:
                inverse[x] = y
                break
        if inverse[x] < 0:
            raise GroupConstructionError(f"element {x} has no inverse")
    return FiniteGroup(
        order=n,
        table=tuple(tuple(r) for r in table),
        family=family,
        names=tuple(names),
        inverse=tuple(inverse),
        element_order=_orders_from_table(table),
    )


def is_associative(G: FiniteGroup, samples: int = 100_000, seed: int = 0) -> bool:
    """Exhaustive associativity check up to order 64, randomized above."""
    n = G.order
    t = G.table
    if n <= 64:
        triples: Iterable[tuple[int, int, int]] = itertools.product(
            range(n), repeat=3
        )
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(samples)
        )
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in triples)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _word_name(parts: list[tuple[str, int]]) -> str:
    bits = []
    for letter, exp in parts:
        if exp == 0:
            continue
        bits.append(letter if exp == 1 else f"{letter}^{exp}")
    return " ".join(bits) if bits else "1"


def build_cyclic(n: int) -> FiniteGroup:
    """Cyclic group Z_n, elements T^0..T^(n-1)."""
    if n < 1:
        raise GroupConstructionError("cyclic order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [_word_name([("T", i)]) for i in range(n)]
    return _from_table(table, f"Cyclic({n})", names)


def _metacyclic_table(m: int, n: int, r: int, e: int) -> list[list[int]]:
    """Table for <A,B | A^m=1, B^n=A^e, BAB^-1=A^r> on ids j*m+i = B^j A^i.

    Requires r^n = 1 (mod m) and e*(r-1) = 0 (mod m) for consistency.
    """
    r %= m
    if pow(r, n, m) != 1:
        raise GroupConstructionError(f"r^n != 1 (mod m): r={r}, n={n}, m={m}")
    if (e * (r - 1)) % m != 0:
        raise GroupConstructionError("B^n=A^e incompatible with BAB^-1=A^r")
    order = m * n
    rpow = [pow(r, k, m) for k in range(n)]
    table = [[0] * order for _ in range(order)]
    for j1, i1, j2, i2 in itertools.product(range(n), range(m), range(n), range(m)):
        # (B^j1 A^i1)(B^j2 A^i2) = B^(j1+j2) A^(i1*r^j2 + i2)
        q, j = divmod(j1 + j2, n)
        i = (q * e + i1 * rpow[j2] + i2) % m
        table[j1 * m + i1][j2 * m + i2] = j * m + i
    return table


def _metacyclic_names(m: int, n: int) -> list[str]:
    return [
        _word_name([("B", j), ("A", i)]) for j in range(n) for i in range(m)
    ]


def build_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: A^n=1, B^2=1, BAB^-1=A^-1."""
    if n < 2:
        raise GroupConstructionError("dihedral parameter must be >= 2")
    table = _metacyclic_table(n, 2, n - 1, 0)
    return _from_table(table, f"Dihedral({2 * n})", _metacyclic_names(n, 2))


def build_generalized_quaternion(n: int) -> FiniteGroup:
    """Q(2^n): A^(2^(n-1))=1, B^2=A^(2^(n-2)), BAB^-1=A^-1.  Needs n >= 3."""
    if n < 3:
        raise GroupConstructionError("Q(2^n) needs n >= 3 (otherwise cyclic)")
    m = 2 ** (n - 1)
    table = _metacyclic_table(m, 2, m - 1, m // 2)
    return _from_table(
        table, f"GeneralizedQuaternion({2 ** n})", _metacyclic_names(m, 2)
    )


def build_zm(m: int, n: int, r: int) -> FiniteGroup:
    """ZM group G_{m,n}(r): A^m=1, B^n=1, BAB^-1=A^r.

    Rejects parameters unless gcd((r-1)*n, m) = 1 and r^n = 1 (mod m).
    """
    if m < 1 or n < 1:
        raise GroupConstructionError("ZM group needs m >= 1 and n >= 1")
    if math.gcd((r - 1) * n, m) != 1:
        raise GroupConstructionError(
            f"ZM condition gcd((r-1)n, m)=1 fails: "
            f"gcd({(r - 1) * n}, {m}) = {math.gcd((r - 1) * n, m)}"
        )
    if pow(r, n, m) != 1:
        raise GroupConstructionError(
            f"ZM condition r^n = 1 (mod m) fails: {r}^{n} = {pow(r, n, m)} (mod {m})"
        )
    table = _metacyclic_table(m, n, r, 0)
    return _from_table(table, f"ZM({m},{n},{r})", _metacyclic_names(m, n))


def _perm_group(perms: list[tuple[int, ...]], family: str) -> FiniteGroup:
    k = len(perms[0])
    ident = tuple(range(k))
    perms = [ident] + sorted(p for p in perms if p != ident)
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms
    ]

    def cycles(p: tuple[int, ...]) -> str:
        seen, out = set(), []
        for s in range(k):
            if s in seen or p[s] == s:
                seen.add(s)
                continue
            cyc, x = [], s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = p[x]
            out.append("(" + " ".join(str(c) for c in cyc) + ")")
        return "".join(out) if out else "1"

    return _from_table(table, family, [cycles(p) for p in perms])


def _parity(p: tuple[int, ...]) -> int:
    inv = sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )
    return inv % 2


def build_polyhedral(kind: str) -> FiniteGroup:
    """A4, S4 or A5 as permutation groups of degree 4, 4, 5."""
    kind = kind.upper()
    if kind == "A4":
        perms = [p for p in itertools.permutations(range(4)) if _parity(p) == 0]
    elif kind == "S4":
        perms = list(itertools.permutations(range(4)))
    elif kind == "A5":
        perms = [p for p in itertools.permutations(range(5)) if _parity(p) == 0]
    else:
        raise GroupConstructionError(f"unknown polyhedral kind: {kind}")
    return _perm_group(perms, f"Polyhedral({kind})")


def build_binary_icosahedral() -> FiniteGroup:
    """The binary icosahedral group I*, realized as SL(2,5)."""
    p = 5
    mats = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            mats.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    mats = [ident] + sorted(m for m in mats if m != ident)
    index = {m: i for i, m in enumerate(mats)}
    table = []
    for a, b, c, d in mats:
        row = []
        for e, f, g, h in mats:
            row.append(
                index[
                    (
                        (a * e + b * g) % p,
                        (a * f + b * h) % p,
                        (c * e + d * g) % p,
                        (c * f + d * h) % p,
                    )
                ]
            )
        table.append(row)
    names = [f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in mats]
    return _from_table(table, "BinaryIcosahedral", names)


def build_type_ii(p: int, l: int) -> FiniteGroup:
    """Order-8p group: A^p=1, B^4=1, BAB^-1=A^-1, R^2=B^2, RAR^-1=A^l, RBR^-1=B^-1.

    Requires p an odd prime and l = +-1 (mod p).
    """
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise GroupConstructionError("type II parameter p must be an odd prime")
    if l % p not in (1, p - 1):
        raise GroupConstructionError(f"type II needs l = +-1 (mod p), got l={l}")
    linv = pow(l % p, -1, p)

    def mul_a(k: int, j: int, i: int, exp: int) -> tuple[int, int, int]:
        return k, j, (i + exp) % p

    def mul_b(k: int, j: int, i: int) -> tuple[int, int, int]:
        # A^i B = B A^-i
        return k, (j + 1) % 4, (-i) % p

    def mul_r(k: int, j: int, i: int) -> tuple[int, int, int]:
        # A^i R = R A^(i*l^-1);  B^j R = R B^-j;  R^2 = B^2
        k, j, i = k + 1, (-j) % 4, (i * linv) % p
        if k == 2:
            k, j = 0, (j + 2) % 4
        return k, j, i

    def encode(k: int, j: int, i: int) -> int:
        return (k * 4 + j) * p + i

    order = 8 * p
    table = [[0] * order for _ in range(order)]
    for k1, j1, i1 in itertools.product(range(2), range(4), range(p)):
        for k2, j2, i2 in itertools.product(range(2), range(4), range(p)):
            z = (k1, j1, i1)
            for _ in range(k2):
                z = mul_r(*z)
            for _ in range(j2):
                z = mul_b(*z)
            z = mul_a(*z, i2)
            table[encode(k1, j1, i1)][encode(k2, j2, i2)] = encode(*z)
    names = [
        _word_name([("R", k), ("B", j), ("A", i)])
        for k in range(2)
        for j in range(4)
        for i in range(p)
    ]
    return _from_table(table, f"TypeII({p},{l})", names)


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing the generators, as an element-id set.

    Words in the generators form a finite set closed under multiplication,
    which in a group is already a subgroup; a BFS by right multiplication
    from the identity therefore suffices.
    """
    table = G.table
    gens = sorted(set(generators))
    elems = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        row = table[x]
        for g in gens:
            y = row[g]
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return frozenset(elems)


def make_subgroup(G: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    gens = tuple(sorted(set(generators)))
    return Subgroup(G, tuple(sorted(subgroup_closure(G, gens))), gens)


def cyclic_subgroup(G: FiniteGroup, x: int) -> Subgroup:
    elems, acc = [0], G.table[0][x]
    while acc != 0:
        elems.append(acc)
        acc = G.table[acc][x]
    return Subgroup(G, tuple(sorted(elems)), (x,))


def conjugate_set(G: FiniteGroup, elems: Iterable[int], g: int) -> frozenset[int]:
    return frozenset(G.conjugate(g, x) for x in elems)


def prime_order_subgroups_up_to_conjugacy(G: FiniteGroup) -> list[Subgroup]:
    """One representative per conjugacy class of prime-order subgroups."""
    if G.order <= 1:
        raise ValueError("trivial group has no prime-order subgroups")
    subs: dict[frozenset[int], int] = {}
    for x in G.elements():
        if _is_prime(G.element_order[x]):
            key = frozenset(cyclic_subgroup(G, x).elements)
            subs.setdefault(key, x)
    reps: list[Subgroup] = []
    seen: set[frozenset[int]] = set()
    for key in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if key in seen:
            continue
        for g in G.elements():
            seen.add(conjugate_set(G, key, g))
        reps.append(Subgroup(G, tuple(sorted(key)), (subs[key],)))
    return reps


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_cyclic_set(G: FiniteGroup, elems: frozenset[int]) -> bool:
    k = len(elems)
    return any(G.element_order[x] == k for x in elems)


def check_conditions(G: FiniteGroup, which: str) -> bool:
    """True iff every subgroup of order p^2 (resp. pq) is cyclic, or the
    Sylow subgroups are cyclic / generalized quaternion (which='sylow').

    Subgroups of order p^2 or pq are 2-generated, so a scan over pairs of
    elements of suitable order is exhaustive.
    """
    primes = _prime_factors(G.order)
    if which == "p2":
        targets = [(p * p, {1, p, p * p}) for p in primes]
    elif which == "pq":
        targets = [
            (p * q, {1, p, q, p * q})
            for p, q in itertools.combinations(primes, 2)
        ]
        targets += [(p * p, {1, p, p * p}) for p in primes]
    elif which == "sylow":
        return _check_sylow_conditions(G)
    else:
        raise ValueError(f"unknown condition kind: {which}")
    for size, orders in targets:
        if G.order % size != 0:
            continue
        cands = [x for x in G.elements() if G.element_order[x] in orders]
        for x, y in itertools.combinations_with_replacement(cands, 2):
            sub = subgroup_closure(G, (x, y))
            if len(sub) == size and not _is_cyclic_set(G, sub):
                return False
    return True


def _check_sylow_conditions(G: FiniteGroup) -> bool:
    n = G.order
    spectrum = G.order_spectrum()
    for p in _prime_factors(n):
        a = 0
        m = n
        while m % p == 0:
            m //= p
            a += 1
        if p ** a in spectrum:
            continue  # cyclic Sylow p-subgroup exists
        if p != 2:
            return False
        # Sylow 2-subgroup is generalized quaternion iff it is non-cyclic
        # and contains no Klein four subgroup.
        if a < 3:
            return False
        twos = [x for x in G.elements() if G.element_order[x] in (1, 2, 4)]
        for x, y in itertools.combinations(twos, 2):
            sub = subgroup_closure(G, (x, y))
            if len(sub) == 4 and not _is_cyclic_set(G, sub):
                return False
    return True


# ---------------------------------------------------------------------------
# group mini-language and portable table files
# ---------------------------------------------------------------------------

_ZM_RE = re.compile(r"^ZM\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$", re.I)
_TYPEII_RE = re.compile(r"^TypeII\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$", re.I)


def parse_group(spec: str) -> FiniteGroup:
    """Parse the group mini-language.

    C<n>, D<2n>, Q<2^n>, ZM(m,n,r), A4, S4, A5, Istar, TypeII(p,l),
    or @<path> for a portable table file.
    """
    spec = spec.strip()
    up = spec.upper()
    if up in ("A4", "S4", "A5"):
        return build_polyhedral(up)
    if up in ("ISTAR", "I*"):
        return build_binary_icosahedral()
    if spec.startswith("@"):
        return load_table(spec[1:])
    m = _ZM_RE.match(spec)
    if m:
        return build_zm(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = _TYPEII_RE.match(spec)
    if m:
        return build_type_ii(int(m.group(1)), int(m.group(2)))
    m = re.match(r"^([CDQ])(\d+)$", up)
    if m:
        kind, val = m.group(1), int(m.group(2))
        if kind == "C":
            return build_cyclic(val)
        if kind == "D":
            if val % 2 != 0 or val < 4:
                raise GroupConstructionError(
                    f"D<k> takes the group order, an even k >= 4: got {spec}"
                )
            return build_dihedral(val // 2)
        n = val.bit_length() - 1
        if 2 ** n != val:
            raise GroupConstructionError(f"Q<k> needs a power of two: got {spec}")
        return build_generalized_quaternion(n)
    raise GroupConstructionError(f"cannot parse group spec: {spec!r}")


def dump_table(G: FiniteGroup, path: str) -> None:
    """Write the portable table format: 'order N' then N rows of N ids."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"order {G.order}\n")
        for row in G.table:
            fh.write(" ".join(str(x) for x in row) + "\n")


def load_table(path: str) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("order "):
        raise GroupConstructionError(f"{path}: missing 'order N' header")
    n = int(lines[0].split()[1])
    if len(lines) != n + 1:
        raise GroupConstructionError(f"{path}: expected {n} table rows")
    table = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise GroupConstructionError(f"{path}: malformed table row")
    G = _from_table(table, "Custom", [f"g{i}" for i in range(n)])
    if not is_associative(G):
        raise GroupConstructionError(f"{path}: table is not associative")
    return G
