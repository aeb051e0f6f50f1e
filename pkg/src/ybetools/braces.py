"""Finite skew left braces as pairs of Cayley tables sharing the identity 0.

Subsets of the brace (left ideals, ideals, socle series, ...) are frozensets
of element indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .groups import FiniteGroup, GroupError, Subset, group_axiom_failures
from .perm import Permutation, prime_divisors


class BraceError(ValueError):
    pass


class NotNilpotentTypeError(BraceError):
    pass


@dataclass(frozen=True)
class BraceReport:
    add_group: bool
    circ_group: bool
    shared_identity: bool
    compatibility: bool
    lambda_automorphisms: bool
    lambda_homomorphism: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all((self.add_group, self.circ_group, self.shared_identity, self.compatibility,
                    self.lambda_automorphisms, self.lambda_homomorphism))

    def to_json_dict(self) -> dict:
        return {"valid": self.ok, "add_group": self.add_group, "circ_group": self.circ_group,
                "shared_identity": self.shared_identity, "compatibility": self.compatibility,
                "lambda_automorphisms": self.lambda_automorphisms,
                "lambda_homomorphism": self.lambda_homomorphism,
                "failures": list(self.failures)}


def _two_sided_identity(table: Sequence[Sequence[int]]) -> int | None:
    m = len(table)
    for e in range(m):
        if list(table[e]) == list(range(m)) and all(table[x][e] == x for x in range(m)):
            return e
    return None


def normalize_identity(add: Sequence[Sequence[int]], circ: Sequence[Sequence[int]]):
    """Relabel so that a shared identity sits at index 0 (swap 0 and e).

    Tables are returned unchanged when the identity is already 0 or when the
    two operations have no common identity (verification then reports it).
    """
    e = _two_sided_identity(add)
    if not e or len(circ) != len(add) or _two_sided_identity(circ) != e:
        return add, circ
    f = list(range(len(add)))
    f[0], f[e] = e, 0
    def swap(table):
        return [[f[table[f[x]][f[y]]] for y in range(len(f))] for x in range(len(f))]
    return swap(add), swap(circ)


def verify_brace_tables(add: Sequence[Sequence[int]], circ: Sequence[Sequence[int]]) -> BraceReport:
    """Exhaustive check of the skew brace axioms on raw tables.

    A shared identity at an index other than 0 is moved to 0 first.
    """
    add, circ = normalize_identity(add, circ)
    fails: list[str] = []
    add_f = group_axiom_failures(add)
    circ_f = group_axiom_failures(circ)
    fails += [f"(A,+): {p}" for p in add_f]
    fails += [f"(A,o): {p}" for p in circ_f]
    m = len(add)
    shared = len(circ) == m and not any("identity" in p for p in add_f + circ_f)
    if add_f or circ_f or not shared:
        return BraceReport(not add_f, not circ_f, shared, False, False, False, tuple(fails))
    neg = [add[a].index(0) for a in range(m)]
    compat = True
    for a, b, c in itertools.product(range(m), repeat=3):
        # a o (b + c) == a o b - a + a o c
        if circ[a][add[b][c]] != add[add[circ[a][b]][neg[a]]][circ[a][c]]:
            compat = False
            fails.append(f"compatibility fails at {(a, b, c)}")
            break
    lam = [[add[neg[a]][circ[a][b]] for b in range(m)] for a in range(m)]
    auto = all(sorted(lam[a]) == list(range(m))
               and all(lam[a][add[b][c]] == add[lam[a][b]][lam[a][c]]
                       for b in range(m) for c in range(m))
               for a in range(m))
    if not auto:
        fails.append("some lambda_a is not an automorphism of (A,+)")
    hom = all(lam[circ[a][b]][c] == lam[a][lam[b][c]]
              for a in range(m) for b in range(m) for c in range(m))
    if not hom:
        fails.append("a -> lambda_a is not a homomorphism")
    return BraceReport(True, True, True, compat, auto, hom, tuple(fails))


@dataclass(frozen=True, eq=False)
class SkewBrace:
    add: FiniteGroup
    circ: FiniteGroup

    def __post_init__(self):
        if self.add.order != self.circ.order:
            raise BraceError("additive and multiplicative groups differ in order")

    @classmethod
    def from_tables(cls, add, circ, check: bool = True) -> SkewBrace:
        """Build from Cayley tables; a shared identity is relabelled to 0."""
        add, circ = normalize_identity(add, circ)
        if check:
            rep = verify_brace_tables(add, circ)
            if not rep.ok:
                raise BraceError("not a skew brace: " + "; ".join(rep.failures))
        return cls(FiniteGroup(add), FiniteGroup(circ))

    @classmethod
    def trivial(cls, g: FiniteGroup) -> SkewBrace:
        return cls(g, g)

    def __eq__(self, other):
        return isinstance(other, SkewBrace) and self.add == other.add and self.circ == other.circ

    def __hash__(self):
        return hash((self.add, self.circ))

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def A(self) -> Subset:
        return frozenset(self.elements)

    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def minus(self, a: int) -> int:
        return self.add.inverses[a]

    def o(self, a: int, b: int) -> int:
        return self.circ.table[a][b]

    def prime(self, a: int) -> int:
        """Inverse of a in (A, o)."""
        return self.circ.inverses[a]

    @cached_property
    def lam(self) -> tuple[tuple[int, ...], ...]:
        """lam[a][b] = -a + a o b."""
        add, neg, circ = self.add.table, self.add.inverses, self.circ.table
        return tuple(tuple(add[neg[a]][circ[a][b]] for b in self.elements) for a in self.elements)

    @cached_property
    def star_table(self) -> tuple[tuple[int, ...], ...]:
        """a * b = lambda_a(b) - b."""
        add, neg, lam = self.add.table, self.add.inverses, self.lam
        return tuple(tuple(add[lam[a][b]][neg[b]] for b in self.elements) for a in self.elements)

    def is_abelian_type(self) -> bool:
        return self.add.is_abelian()

    def is_nilpotent_type(self) -> bool:
        return self.add.is_nilpotent()

    def to_json_dict(self) -> dict:
        return {"order": self.order, "add": [list(r) for r in self.add.table],
                "circ": [list(r) for r in self.circ.table]}


def brace_from_json(data: dict) -> SkewBrace:
    try:
        b = SkewBrace.from_tables(data["add"], data["circ"])
    except KeyError as exc:
        raise BraceError(f"missing key {exc} in brace JSON") from None
    except GroupError as exc:
        raise BraceError(str(exc)) from None
    if "order" in data and data["order"] != b.order:
        raise BraceError(f"declared order {data['order']} but tables have size {b.order}")
    return b


def verify_brace(b: SkewBrace) -> BraceReport:
    return verify_brace_tables(b.add.table, b.circ.table)


def lam(b: SkewBrace, a: int, x: int) -> int:
    return b.lam[a][x]


def star(b: SkewBrace, a: int, x: int) -> int:
    return b.star_table[a][x]


def add_comm(b: SkewBrace, x: int, y: int) -> int:
    """[x, y]_+ = x + y - x - y."""
    add, neg = b.add.table, b.add.inverses
    return add[add[add[x][y]][neg[x]]][neg[y]]


# -- subsets and spans ---------------------------------------------------------

def additive_closure(b: SkewBrace, seed: Iterable[int]) -> Subset:
    return b.add.generated(seed)


def star_span(b: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> Subset:
    """Additive subgroup generated by every x * y."""
    st = b.star_table
    Y = list(Y)
    return b.add.generated({st[x][y] for x in X for y in Y})


def comm_span(b: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> Subset:
    Y = list(Y)
    return b.add.generated({add_comm(b, x, y) for x in X for y in Y})


def is_left_ideal(b: SkewBrace, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return b.add.is_subgroup(s) and all(b.lam[a][x] in s for a in b.elements for x in s)


def is_ideal(b: SkewBrace, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return is_left_ideal(b, s) and b.add.is_normal(s) and b.circ.is_normal(s)


def kernel_lambda(b: SkewBrace) -> Subset:
    ident = tuple(b.elements)
    return frozenset(a for a in b.elements if b.lam[a] == ident)


def socle(b: SkewBrace) -> Subset:
    """ker(lambda) intersected with the centre of (A,+)."""
    return kernel_lambda(b) & b.add.center()


def fix(b: SkewBrace) -> Subset:
    """Elements fixed by every lambda_x."""
    return frozenset(a for a in b.elements if all(b.lam[x][a] == a for x in b.elements))


def _iterate(first: Subset, step) -> list[Subset]:
    """first, step(first), ... up to (excluding) the first repeated term."""
    series = [first]
    seen = {first}
    while True:
        nxt = step(series[-1])
        if nxt in seen:
            return series
        series.append(nxt)
        seen.add(nxt)


def soc_series(b: SkewBrace) -> list[Subset]:
    """Soc_0 = 0 and Soc_{n+1} = {x : x * a, [x, a]_+ in Soc_n for all a}."""
    st = b.star_table

    def step(prev: Subset) -> Subset:
        return frozenset(x for x in b.elements
                         if all(st[x][a] in prev and add_comm(b, x, a) in prev for a in b.elements))
    series = _iterate(frozenset({0}), step)
    for term in series:
        if not is_ideal(b, term):
            raise BraceError("socle series term is not an ideal (internal error)")
    return series


def right_series(b: SkewBrace) -> list[Subset]:
    """A^(1) = A and A^(n+1) = A^(n) * A."""
    return _iterate(b.A, lambda prev: star_span(b, prev, b.elements))


def left_series(b: SkewBrace) -> list[Subset]:
    """A^1 = A and A^(n+1) = A * A^n; every term is checked to be a left ideal."""
    series = _iterate(b.A, lambda prev: star_span(b, b.elements, prev))
    for term in series:
        if not is_left_ideal(b, term):
            raise BraceError("left series term is not a left ideal (internal error)")
    return series


def is_right_nilpotent(b: SkewBrace) -> bool:
    return len(right_series(b)[-1]) == 1


def is_left_nilpotent(b: SkewBrace) -> bool:
    return len(left_series(b)[-1]) == 1


def R_series(b: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> list[Subset]:
    """R_0 = X and R_{n+1} = <R_n * Y, [R_n, Y]_+> (additive span)."""
    Y = frozenset(Y)

    def step(prev: Subset) -> Subset:
        return star_span(b, prev, Y) | comm_span(b, prev, Y)

    def closed(prev: Subset) -> Subset:
        return additive_closure(b, step(prev))
    return _iterate(frozenset(X), closed)


def L_series(b: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> list[Subset]:
    """L_0 = Y and L_{n+1} = X * L_n."""
    X = frozenset(X)
    return _iterate(frozenset(Y), lambda prev: star_span(b, X, prev))


def _terminal_zero(series: list[Subset]) -> bool:
    return series[-1] == frozenset({0})


# -- Sylow theory on the additive group ------------------------------------------

def _require_nilpotent_type(b: SkewBrace) -> None:
    if not b.is_nilpotent_type():
        raise NotNilpotentTypeError("the additive group is not nilpotent")


def _require_prime_divisor(b: SkewBrace, p: int) -> None:
    if p not in prime_divisors(b.order):
        raise BraceError(f"{p} does not divide the order {b.order}")


def sylow_additive(b: SkewBrace, p: int) -> Subset:
    """The unique Sylow p-subgroup A_p of a nilpotent (A,+)."""
    _require_nilpotent_type(b)
    s = frozenset(b.add.p_elements(p))
    if not b.add.is_subgroup(s) or not is_left_ideal(b, s):
        raise BraceError("Sylow p-subgroup is not a left ideal (internal error)")
    return s


def sylow_subgroups_bruteforce(g: FiniteGroup, p: int) -> list[Subset]:
    return g.sylow_subgroups(p)


def hall_p_prime(b: SkewBrace, p: int) -> Subset:
    """A_{p'}: additive span of the Sylow q-subgroups for q != p."""
    _require_nilpotent_type(b)
    parts = [sylow_additive(b, q) for q in prime_divisors(b.order) if q != p]
    s = additive_closure(b, set().union(*parts)) if parts else frozenset({0})
    if not b.add.is_normal(s) or not is_left_ideal(b, s):
        raise BraceError("Hall p'-subgroup is not a normal left ideal (internal error)")
    return s


def is_right_p_nilpotent(b: SkewBrace, p: int) -> bool:
    _require_nilpotent_type(b)
    _require_prime_divisor(b, p)
    return _terminal_zero(R_series(b, sylow_additive(b, p), b.elements))


def is_left_p_nilpotent(b: SkewBrace, p: int) -> bool:
    _require_nilpotent_type(b)
    _require_prime_divisor(b, p)
    return _terminal_zero(L_series(b, b.elements, sylow_additive(b, p)))


def group_p_nilpotent(g: FiniteGroup, p: int) -> bool:
    return g.is_p_nilpotent(p)


def group_nilpotent(g: FiniteGroup) -> bool:
    return g.is_nilpotent()


def has_abelian_normal_sylow(g: FiniteGroup, p: int) -> bool:
    return g.has_abelian_normal_sylow(p)


# -- sub-braces and quotients -------------------------------------------------------

def substructure(b: SkewBrace, s: Iterable[int]) -> tuple[SkewBrace, list[int]]:
    """Sub-brace on a subset closed under both operations.

    Returns the brace (relabelled 0..k-1 in increasing order) and the
    embedding new index -> old index.
    """
    elems = sorted(s)
    if not elems or elems[0] != 0:
        raise BraceError("a sub-brace must contain 0")
    idx = {e: i for i, e in enumerate(elems)}
    try:
        add = [[idx[b.plus(x, y)] for y in elems] for x in elems]
        circ = [[idx[b.o(x, y)] for y in elems] for x in elems]
    except KeyError:
        raise BraceError("subset is not closed under both operations") from None
    return SkewBrace.from_tables(add, circ), elems


def quotient(b: SkewBrace, ideal: Iterable[int]) -> tuple[SkewBrace, list[int]]:
    """A / I for an ideal I. Cosets are labelled in order of their least
    element; returns the brace and the projection old index -> coset."""
    ideal = frozenset(ideal)
    if not is_ideal(b, ideal):
        raise BraceError("quotient by a subset that is not an ideal")
    proj = [-1] * b.order
    reps = []
    for a in b.elements:
        if proj[a] >= 0:
            continue
        k = len(reps)
        reps.append(a)
        for i in ideal:
            proj[b.plus(a, i)] = k
    add = [[proj[b.plus(x, y)] for y in reps] for x in reps]
    circ = [[proj[b.o(x, y)] for y in reps] for x in reps]
    return SkewBrace.from_tables(add, circ), proj


# -- brace <-> solution ---------------------------------------------------------------

def solution_from_brace(b: SkewBrace):
    """r(a, b) = (lambda_a(b), lambda_a(b)' o a o b)."""
    from .solutions import Solution
    m = b.order
    sigma = tuple(Permutation(b.lam[a]) for a in b.elements)
    # tau[y](x) = lambda_x(y)' o x o y
    tau = tuple(Permutation(tuple(b.o(b.o(b.prime(b.lam[x][y]), x), y) for x in range(m)))
                for y in range(m))
    return Solution(m, sigma, tau)


def permutation_brace(s, cap: int | None = None) -> SkewBrace:
    """The finite left brace G(X,r)/Soc on Z^n / L.

    Residue classes modulo the translation lattice L are in bijection with
    the permutation group; addition is vector addition mod L and
    a o b = a + A_a b mod L, with A_a the permutation part attached to a.
    """
    from .perm import DEFAULT_CLOSURE_CAP
    from .structure_group import act, translation_lattice, transversal
    cap = cap or DEFAULT_CLOSURE_CAP
    tv = transversal(s, cap)
    lat = translation_lattice(s, cap, tv)
    perms = list(tv.group.elements)  # sorted; identity first
    vecs = [lat.reduce(tv.reps[g].trans) for g in perms]
    index = {v: i for i, v in enumerate(vecs)}
    if len(index) != len(perms):
        raise BraceError("residues do not separate the permutation group (internal error)")
    m = len(perms)
    add = [[index[lat.reduce([x + y for x, y in zip(vecs[i], vecs[j])])] for j in range(m)]
           for i in range(m)]
    circ = [[index[lat.reduce([x + y for x, y in zip(vecs[i], act(perms[i], vecs[j]))])]
             for j in range(m)] for i in range(m)]
    b = SkewBrace.from_tables(add, circ)
    grp = tv.group
    if (b.circ.order != grp.order or b.circ.exponent() != grp.exponent()
            or b.circ.order_statistics() != grp.order_statistics()):
        raise BraceError("multiplicative group does not match the permutation group")
    return b


# -- concrete examples ----------------------------------------------------------------

def twisted_cyclic_brace(m: int) -> SkewBrace:
    """g_i + g_j = g_{i + (-1)^i j} and g_i o g_j = g_{i + j} on Z/m (m even)."""
    add = [[(i + (-1) ** i * j) % m for j in range(m)] for i in range(m)]
    circ = [[(i + j) % m for j in range(m)] for i in range(m)]
    return SkewBrace.from_tables(add, circ)


def power_brace_z8() -> SkewBrace:
    """a o b = a + 3^a b on Z/8."""
    add = [[(a + b) % 8 for b in range(8)] for a in range(8)]
    circ = [[(a + pow(3, a, 8) * b) % 8 for b in range(8)] for a in range(8)]
    return SkewBrace.from_tables(add, circ)
