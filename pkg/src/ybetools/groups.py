"""Finite groups given by Cayley tables on {0..m-1}, identity 0.

Brute-force group theory at desk scale: subgroups, Sylow subgroups,
nilpotency, p-nilpotency, automorphisms and isomorphisms.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .perm import Permutation, closure, p_part, prime_divisors

Subset = frozenset

MAX_BRUTEFORCE_ORDER = 24


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        problems = group_axiom_failures(table)
        if problems:
            raise GroupError("; ".join(problems))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.table[a].index(0) for a in self.elements)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        t, inv = self.table, self.inverses
        return t[t[t[a][b]][inv[a]]][inv[b]]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in range(a))

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in self.elements))

    def order_statistics(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for a in self.elements:
            k = self.element_order(a)
            counts[k] = counts.get(k, 0) + 1
        return dict(sorted(counts.items()))

    def generated(self, seed: Iterable[int]) -> Subset:
        """Subgroup generated by ``seed``."""
        t = self.table
        gens = sorted(set(seed) - {0})
        sub = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = t[x][g]
                    if y not in sub:
                        sub.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(sub)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = set(s)
        t = self.table
        return 0 in s and all(t[a][self.inverses[b]] in s for a in s for b in s)

    def is_normal(self, s: Iterable[int]) -> bool:
        s = set(s)
        t, inv = self.table, self.inverses
        return self.is_subgroup(s) and all(t[t[g][x]][inv[g]] in s for g in self.elements for x in s)

    def center(self) -> Subset:
        t = self.table
        return frozenset(a for a in self.elements if all(t[a][b] == t[b][a] for b in self.elements))

    def upper_central_series(self) -> list[Subset]:
        series = [frozenset({0})]
        while True:
            z = series[-1]
            nxt = frozenset(x for x in self.elements
                            if all(self.commutator(x, g) in z for g in self.elements))
            if nxt == z:
                return series
            series.append(nxt)

    def is_nilpotent(self) -> bool:
        return len(self.upper_central_series()[-1]) == self.order

    def p_elements(self, p: int) -> list[int]:
        return [a for a in self.elements if _is_power_of(self.element_order(a), p)]

    def p_prime_elements(self, p: int) -> list[int]:
        return [a for a in self.elements if self.element_order(a) % p != 0]

    def is_p_nilpotent(self, p: int) -> bool:
        """A normal p-complement exists iff the p'-elements form a subgroup."""
        return self.is_subgroup(self.p_prime_elements(p))

    def p_subgroups(self, p: int) -> list[Subset]:
        """All p-subgroups (including the trivial one), by joining p-elements."""
        if self.order > MAX_BRUTEFORCE_ORDER:
            raise GroupError(f"p-subgroup enumeration limited to order <= {MAX_BRUTEFORCE_ORDER}")
        pel = self.p_elements(p)
        found = {frozenset({0})}
        frontier = list(found)
        while frontier:
            nxt = []
            for h in frontier:
                for x in pel:
                    if x in h:
                        continue
                    k = self.generated(set(h) | {x})
                    if _is_power_of(len(k), p) and k not in found:
                        found.add(k)
                        nxt.append(k)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def sylow_subgroups(self, p: int) -> list[Subset]:
        target = p_part(self.order, p)
        return [h for h in self.p_subgroups(p) if len(h) == target]

    def has_abelian_normal_sylow(self, p: int) -> bool:
        syl = self.sylow_subgroups(p)
        if len(syl) != 1:
            return False
        h = syl[0]
        t = self.table
        return all(t[a][b] == t[b][a] for a in h for b in h)

    def all_sylows_cyclic(self) -> bool:
        return all(any(self.element_order(a) == p_part(self.order, p) for a in self.elements)
                   for p in prime_divisors(self.order))

    def subgroups(self) -> list[Subset]:
        """Every subgroup, by joining cyclic subgroups."""
        if self.order > MAX_BRUTEFORCE_ORDER:
            raise GroupError(f"subgroup enumeration limited to order <= {MAX_BRUTEFORCE_ORDER}")
        found = {frozenset({0})}
        frontier = [frozenset({0})]
        while frontier:
            nxt = []
            for h in frontier:
                for x in self.elements:
                    if x not in h:
                        k = self.generated(set(h) | {x})
                        if k not in found:
                            found.add(k)
                            nxt.append(k)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def generating_set(self) -> list[int]:
        """A small generating set, greedily chosen by decreasing element order."""
        gens: list[int] = []
        sub = frozenset({0})
        for a in sorted(self.elements, key=lambda a: (-self.element_order(a), a)):
            if a not in sub:
                gens.append(a)
                sub = self.generated(gens)
            if len(sub) == self.order:
                break
        return gens

    @cached_property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All automorphisms as image tuples, sorted; the identity comes first."""
        return tuple(sorted(_homomorphism_search(self, self, bijective=True, find_all=True)))


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def group_axiom_failures(table: Sequence[Sequence[int]]) -> list[str]:
    m = len(table)
    out = []
    if m == 0:
        return ["empty table"]
    if any(len(row) != m for row in table) or any(not 0 <= x < m for row in table for x in row):
        return ["table is not an m x m array over 0..m-1"]
    if list(table[0]) != list(range(m)) or [row[0] for row in table] != list(range(m)):
        out.append("element 0 is not the identity")
    if any(sorted(row) != list(range(m)) for row in table):
        out.append("some element has no inverse (row is not a permutation)")
    bad = next(((a, b, c) for a in range(m) for b in range(m) for c in range(m)
                if table[table[a][b]][c] != table[a][table[b][c]]), None)
    if bad is not None:
        out.append(f"not associative at {bad}")
    return out


def _homomorphism_search(g: FiniteGroup, h: FiniteGroup, bijective: bool, find_all: bool):
    """Maps g -> h respecting the tables, built from images of a generating set."""
    if bijective and g.order != h.order:
        return []
    gens = g.generating_set()
    orders = [g.element_order(x) for x in gens]
    # express every element of g as a word in gens (BFS)
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for i, s in enumerate(gens):
                y = g.table[x][s]
                if y not in words:
                    words[y] = words[x] + (i,)
                    nxt.append(y)
        frontier = nxt
    cands = [[y for y in h.elements if h.element_order(y) == k] for k in orders]
    results = []
    for imgs in itertools.product(*cands):
        f = [0] * g.order
        for x, w in words.items():
            y = 0
            for i in w:
                y = h.table[y][imgs[i]]
            f[x] = y
        if bijective and len(set(f)) != g.order:
            continue
        if all(f[g.table[a][b]] == h.table[f[a]][f[b]] for a in g.elements for b in gens):
            results.append(tuple(f))
            if not find_all:
                break
    return results


def isomorphism(g: FiniteGroup, h: FiniteGroup) -> tuple[int, ...] | None:
    if g.order != h.order or g.order_statistics() != h.order_statistics():
        return None
    found = _homomorphism_search(g, h, bijective=True, find_all=False)
    return found[0] if found else None


# -- constructions --------------------------------------------------------------

def from_operation(elements: Sequence, op: Callable, identity) -> FiniteGroup:
    """Cayley table of ``op`` on ``elements``; ``identity`` is relabelled to 0."""
    elems = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elems)}
    return FiniteGroup(tuple(tuple(index[op(a, b)] for b in elems) for a in elems))


def cyclic(m: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % m for b in range(m)) for a in range(m)))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element (a, b) gets index a * |h| + b."""
    k = h.order
    return FiniteGroup(tuple(
        tuple(g.table[a1][a2] * k + h.table[b1][b2] for a2 in g.elements for b2 in h.elements)
        for a1 in g.elements for b1 in h.elements))


def from_permutations(gens: Sequence[Permutation]) -> FiniteGroup:
    grp = closure(gens)
    ident = Permutation.identity(grp.degree)
    return from_operation(list(grp.elements), lambda a, b: a * b, ident)


def dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 2m: rotations r^k -> k, reflections s r^k -> m + k."""
    def op(a, b):
        (fa, ka), (fb, kb) = a, b
        k = (ka + (-kb if fa else kb)) % m
        return (fa ^ fb, k)
    elems = [(f, k) for f in (0, 1) for k in range(m)]
    return from_operation(elems, op, (0, 0))


def quaternion() -> FiniteGroup:
    """Q8 as unit quaternions +-1, +-i, +-j, +-k."""
    # (sign, unit) with unit in 1, i, j, k
    mult = {("1", u): (1, u) for u in "1ijk"}
    mult.update({(u, "1"): (1, u) for u in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def op(a, b):
        s, u = mult[a[1], b[1]]
        return (a[0] * b[0] * s, u)
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    return from_operation(elems, op, (1, "1"))


def symmetric(n: int) -> FiniteGroup:
    ident = list(range(n))
    t = ident[:]
    t[0], t[1] = 1, 0
    c = ident[1:] + ident[:1]
    return from_permutations([Permutation(tuple(t)), Permutation(tuple(c))])


def alternating4() -> FiniteGroup:
    return from_permutations([Permutation((1, 2, 0, 3)), Permutation((0, 2, 3, 1))])


def small_groups(m: int) -> list[tuple[str, FiniteGroup]]:
    """Representatives of every isomorphism class of groups of order m <= 8,
    plus the two nilpotent (abelian) groups of order 12."""
    c2 = cyclic(2)
    table = {
        1: [("C1", cyclic(1))],
        2: [("C2", c2)],
        3: [("C3", cyclic(3))],
        4: [("C4", cyclic(4)), ("C2xC2", direct_product(c2, c2))],
        5: [("C5", cyclic(5))],
        6: [("C6", cyclic(6)), ("S3", symmetric(3))],
        7: [("C7", cyclic(7))],
        8: [("C8", cyclic(8)), ("C4xC2", direct_product(cyclic(4), c2)),
            ("C2xC2xC2", direct_product(direct_product(c2, c2), c2)),
            ("D8", dihedral(4)), ("Q8", quaternion())],
        12: [("C12", cyclic(12)), ("C6xC2", direct_product(cyclic(6), c2))],
    }
    if m not in table:
        raise GroupError(f"no group list for order {m}")
    return table[m]
