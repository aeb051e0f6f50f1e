"""Enumeration of small skew braces and brace isomorphism.

Skew braces with additive group A correspond to regular subgroups of the
holomorph A x| Aut(A): a map a -> lambda_a into Aut(A) with lambda_0 = id and
lambda_{a + lambda_a(b)} = lambda_a lambda_b. Two such maps give isomorphic
braces iff they are conjugate under Aut(A).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .braces import BraceError, SkewBrace, verify_brace
from .groups import FiniteGroup, small_groups

MAX_ENUM_ORDER = 8
MAX_ISO_ORDER = 8

Auto = tuple[int, ...]


def _compose(f: Auto, g: Auto) -> Auto:
    return tuple(f[x] for x in g)


def _inv(f: Auto) -> Auto:
    out = [0] * len(f)
    for i, x in enumerate(f):
        out[x] = i
    return tuple(out)


def lambda_maps(g: FiniteGroup) -> list[tuple[Auto, ...]]:
    """Every regular-subgroup map a -> lambda_a on the group g (labelled)."""
    m = g.order
    add = g.table
    autos = g.automorphisms
    ident = autos[0]
    found: list[tuple[Auto, ...]] = []

    def propagate(lam: list, new: list[int]) -> bool:
        queue = list(new)
        while queue:
            a = queue.pop()
            assigned = [x for x in range(m) if lam[x] is not None]
            for x in assigned:
                for u, v in ((a, x), (x, a)):
                    lu, lv = lam[u], lam[v]
                    c = add[u][lu[v]]
                    val = _compose(lu, lv)
                    if lam[c] is None:
                        lam[c] = val
                        queue.append(c)
                    elif lam[c] != val:
                        return False
        return True

    def search(lam: list) -> None:
        free = next((x for x in range(m) if lam[x] is None), None)
        if free is None:
            found.append(tuple(lam))
            return
        for f in autos:
            trial = list(lam)
            trial[free] = f
            if propagate(trial, [free]):
                search(trial)

    start: list = [None] * m
    start[0] = ident
    if propagate(start, [0]):
        search(start)
    return found


def _conjugate(lam: Sequence[Auto], f: Auto, finv: Auto) -> tuple[Auto, ...]:
    # lambda'_{f(a)} = f lambda_a f^-1
    out: list = [None] * len(lam)
    for a, la in enumerate(lam):
        out[f[a]] = _compose(f, _compose(la, finv))
    return tuple(out)


def braces_on(g: FiniteGroup) -> list[SkewBrace]:
    """Skew braces with additive group g, one per isomorphism class, in a
    deterministic order (least lambda-map of each Aut(g)-orbit, sorted)."""
    autos = [(f, _inv(f)) for f in g.automorphisms]
    seen: set = set()
    reps = []
    for lam in lambda_maps(g):
        if lam in seen:
            continue
        orbit = {_conjugate(lam, f, finv) for f, finv in autos}
        seen |= orbit
        reps.append(min(orbit))
    out = []
    for lam in sorted(reps):
        circ = [[g.table[a][lam[a][b]] for b in g.elements] for a in g.elements]
        b = SkewBrace(g, FiniteGroup(circ))
        if not verify_brace(b).ok:
            raise BraceError("enumerated brace fails the axioms (internal error)")
        out.append(b)
    return out


def enumerate_braces(m: int, threads: int = 1, max_order: int = MAX_ENUM_ORDER) -> list[SkewBrace]:
    """All skew braces of order m up to isomorphism (m <= 8 by default)."""
    if not 1 <= m <= max_order:
        raise BraceError(f"brace enumeration supports orders 1..{max_order}, got {m}")
    groups = [g for _, g in small_groups(m)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(braces_on, groups))
    else:
        blocks = [braces_on(g) for g in groups]
    return [b for block in blocks for b in block]


def nilpotent_type_braces(m: int) -> list[SkewBrace]:
    """Skew braces of order m whose additive group is nilpotent.

    Works for every order listed in :func:`groups.small_groups`, including
    the abelian groups of order 12.
    """
    return [b for _, g in small_groups(m) if g.is_nilpotent() for b in braces_on(g)]


def brace_isomorphic(b1: SkewBrace, b2: SkewBrace, max_order: int = MAX_ISO_ORDER) -> list[int] | None:
    """A bijection fixing 0 that respects both operations, or None."""
    if b1.order != b2.order:
        return None
    m = b1.order
    if m > max_order:
        raise BraceError(f"brace isomorphism search limited to order <= {max_order}")
    if (b1.add.order_statistics() != b2.add.order_statistics()
            or b1.circ.order_statistics() != b2.circ.order_statistics()):
        return None
    a1, c1, a2, c2 = b1.add.table, b1.circ.table, b2.add.table, b2.circ.table
    fp1 = [(b1.add.element_order(x), b1.circ.element_order(x)) for x in range(m)]
    fp2 = [(b2.add.element_order(x), b2.circ.element_order(x)) for x in range(m)]

    def propagate(f: list, inv: list, start: int, img: int) -> bool:
        stack = [(start, img)]
        while stack:
            a, b = stack.pop()
            if f[a] is not None:
                if f[a] != b:
                    return False
                continue
            if inv[b] is not None or fp1[a] != fp2[b]:
                return False
            f[a], inv[b] = b, a
            for x in range(m):
                fx = f[x]
                if fx is None:
                    continue
                stack.append((a1[a][x], a2[b][fx]))
                stack.append((a1[x][a], a2[fx][b]))
                stack.append((c1[a][x], c2[b][fx]))
                stack.append((c1[x][a], c2[fx][b]))
        return True

    def search(f: list, inv: list) -> list[int] | None:
        free = next((x for x in range(m) if f[x] is None), None)
        if free is None:
            return list(f)
        for b in range(m):
            if inv[b] is None and fp1[free] == fp2[b]:
                f2, inv2 = list(f), list(inv)
                if propagate(f2, inv2, free, b):
                    res = search(f2, inv2)
                    if res is not None:
                        return res
        return None

    f0: list = [None] * m
    inv0: list = [None] * m
    if not propagate(f0, inv0, 0, 0):
        return None
    return search(f0, inv0)


def relabel_brace(b: SkewBrace, f: Sequence[int]) -> SkewBrace:
    """Copy of b transported along a bijection f with f(0) = 0."""
    if f[0] != 0:
        raise BraceError("relabelling must fix the identity")
    m = b.order
    inv = [0] * m
    for i, x in enumerate(f):
        inv[x] = i
    add = [[f[b.plus(inv[x], inv[y])] for y in range(m)] for x in range(m)]
    circ = [[f[b.o(inv[x], inv[y])] for y in range(m)] for x in range(m)]
    return SkewBrace.from_tables(add, circ)
