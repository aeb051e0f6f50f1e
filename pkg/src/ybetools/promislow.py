"""Promislow subgroups of Bieberbach groups and the 14-element set used to
show failure of the unique product property.

The Promislow group is <x, y | x^-1 y^2 x = y^-2, y^-1 x^2 y = x^-2>. Two
elements satisfy relation (P) when x^2 y = y x^-2 and y^2 x = x y^-2.
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import intlin
from .intlin import Lattice, Matrix
from .perm import DEFAULT_CLOSURE_CAP, Permutation, compose, inverse
from .solutions import Solution, _require_involutive
from .structure_group import (AffineElement, perm_matrix, transversal,
                              translation_lattice)


class PromislowError(ValueError):
    pass


# -- generic group arithmetic ------------------------------------------------

def _is_matrix(a: Any) -> bool:
    return isinstance(a, (list, tuple)) and bool(a) and isinstance(a[0], (list, tuple))


def _mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _mat_inv(a):
    """Gauss-Jordan inverse over the rationals."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise PromislowError("matrix is not invertible")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _ops(a):
    if isinstance(a, AffineElement):
        return (lambda u, v: u * v), (lambda u: u.inverse()), (lambda u, v: u == v)
    if isinstance(a, Permutation):
        return compose, inverse, (lambda u, v: u == v)
    if _is_matrix(a):
        def eq(u, v):
            return all(Fraction(x) == Fraction(y) for ru, rv in zip(u, v) for x, y in zip(ru, rv))
        return _mat_mul, _mat_inv, eq
    raise TypeError(f"unsupported group element type {type(a).__name__}")


def satisfies_P(a, b) -> bool:
    """Relation (P): a^2 b = b a^-2 and b^2 a = a b^-2."""
    mul, inv, eq = _ops(a)
    a2, b2 = mul(a, a), mul(b, b)
    ai2, bi2 = inv(a2), inv(b2)
    return eq(mul(a2, b), mul(b, ai2)) and eq(mul(b2, a), mul(a, bi2))


def satisfies_promislow_relations(a, b) -> bool:
    """a^-1 b^2 a = b^-2 and b^-1 a^2 b = a^-2."""
    mul, inv, eq = _ops(a)
    a2, b2 = mul(a, a), mul(b, b)
    return (eq(mul(mul(inv(a), b2), a), inv(b2))
            and eq(mul(mul(inv(b), a2), b), inv(a2)))


# -- the linear system --------------------------------------------------------

def _int_inverse(m: Matrix) -> Matrix:
    h, u = intlin.hnf(m)
    if h != intlin.identity(len(m)):
        raise PromislowError("matrix is not invertible over the integers")
    return u


def laurent_P1(a: Matrix, b: Matrix) -> Matrix:
    """1 + X + Y X^-1 + Y X^-2 evaluated at X = a, Y = b."""
    n = len(a)
    ai = _int_inverse(a)
    ai2 = intlin.matmul(ai, ai)
    terms = [intlin.identity(n), a, intlin.matmul(b, ai), intlin.matmul(b, ai2)]
    out = intlin.zeros(n, n)
    for t in terms:
        out = intlin.matadd(out, t)
    return out


def laurent_P1_horner(a: Matrix, b: Matrix) -> Matrix:
    """Same polynomial as :func:`laurent_P1`, as 1 + X + Y X^-1 (1 + X^-1)."""
    n = len(a)
    ai = _int_inverse(a)
    inner = intlin.matadd(intlin.identity(n), ai)
    tail = intlin.matmul(b, intlin.matmul(ai, inner))
    return intlin.matadd(intlin.matadd(intlin.identity(n), a), tail)


def laurent_P2(a: Matrix, b: Matrix) -> Matrix:
    """-1 + X^2 at X = a (Y does not occur)."""
    _int_inverse(a)
    n = len(a)
    return intlin.matadd(intlin.matmul(a, a), intlin.scale(-1, intlin.identity(n)))


def block_matrix(a: Matrix, b: Matrix) -> Matrix:
    """[[P1(A,B), P2(A,B)], [P2(B,A), P1(B,A)]]."""
    top = [r1 + r2 for r1, r2 in zip(laurent_P1(a, b), laurent_P2(a, b))]
    bot = [r1 + r2 for r1, r2 in zip(laurent_P2(b, a), laurent_P1(b, a))]
    return top + bot


def assemble_system(a: Matrix, v: Sequence[int], b: Matrix, w: Sequence[int],
                    lat: Lattice) -> tuple[Matrix, list[int]]:
    """Integer system in lattice coordinates.

    With x = sum s_i l_i and y = sum t_i l_i over the basis l_i of ``lat``,
    integer solutions (s, t) of the returned system are exactly the pairs
    x, y in L with M [x; y] = -M [v; w].
    """
    n = len(a)
    if len(b) != n or len(v) != n or len(w) != n or lat.ambient_dim != n:
        raise PromislowError("dimension mismatch in Promislow system")
    if lat.rank != n:
        raise PromislowError("translation lattice must have full rank")
    m = block_matrix(a, b)
    bt = intlin.transpose([list(r) for r in lat.basis])
    coords = intlin.zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            coords[i][j] = bt[i][j]
            coords[n + i][n + j] = bt[i][j]
    rhs = [-c for c in intlin.matvec(m, list(v) + list(w))]
    return intlin.matmul(m, coords), rhs


# -- certificates and search ---------------------------------------------------

@dataclass(frozen=True)
class PromislowCertificate:
    alpha: AffineElement
    beta: AffineElement
    verified_relations: bool

    def to_json_dict(self) -> dict:
        return {"alpha": self.alpha.to_json_dict(), "beta": self.beta.to_json_dict(),
                "verified_relations": self.verified_relations}


@dataclass
class SearchReport:
    pairs_tested: int
    certificate: PromislowCertificate | None
    exhausted: bool
    solvable_pairs: int = 0
    holonomy_order: int = 0
    witness_words: dict | None = field(default=None)

    def to_json_dict(self) -> dict:
        return {
            "holonomy_order": self.holonomy_order,
            "pairs_tested": self.pairs_tested,
            "solvable_pairs": self.solvable_pairs,
            "exhausted": self.exhausted,
            "certificate": None if self.certificate is None else self.certificate.to_json_dict(),
            "preimage_words": self.witness_words,
        }


def abelian_subgroup_rank(alpha: AffineElement, beta: AffineElement) -> int:
    """Rank of <alpha^2, beta^2, (alpha beta)^2>.

    Powers that land in the translation subgroup have the same rank, so the
    rank is read off the translation parts of their k-th powers, where k
    kills every permutation part.
    """
    gens = [alpha * alpha, beta * beta, (alpha * beta) * (alpha * beta)]
    k = 1
    for g in gens:
        q, e = 1, g
        while not e.perm.is_identity():
            e, q = e * g, q + 1
        k = k * q // _gcd(k, q)
    vecs = [list((g ** k).trans) for g in gens]
    return intlin.rank(vecs)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def check_certificate(alpha: AffineElement, beta: AffineElement) -> bool:
    """All the invariants a Promislow certificate must satisfy."""
    if alpha.perm.is_identity() or beta.perm.is_identity():
        return False
    if not satisfies_P(alpha, beta) or not satisfies_promislow_relations(alpha, beta):
        return False
    gens = [alpha * alpha, beta * beta, (alpha * beta) * (alpha * beta)]
    if any(u * v != v * u for u, v in itertools.combinations(gens, 2)):
        return False
    return abelian_subgroup_rank(alpha, beta) == 3


def p_pairs(elements: Sequence[Permutation]) -> list[tuple[Permutation, Permutation]]:
    """Ordered pairs of non-identity elements satisfying (P), canonical order."""
    nontriv = [g for g in sorted(elements) if not g.is_identity()]
    return [(a, b) for a in nontriv for b in nontriv if satisfies_P(a, b)]


def _solve_pair(a: Permutation, b: Permutation, reps: dict, lat: Lattice):
    v, w = reps[a].trans, reps[b].trans
    am, bm = perm_matrix(a), perm_matrix(b)
    m, c = assemble_system(am, v, bm, w, lat)
    sol = intlin.solve_integer(m, c)
    if sol is None:
        return None
    st, _ = sol
    n = len(v)
    basis_t = intlin.transpose([list(r) for r in lat.basis])
    x = intlin.matvec(basis_t, st[:n])
    y = intlin.matvec(basis_t, st[n:])
    alpha = AffineElement(a, tuple(xi + vi for xi, vi in zip(x, v)))
    beta = AffineElement(b, tuple(yi + wi for yi, wi in zip(y, w)))
    return alpha, beta


def pair_verdicts(s: Solution, cap: int = DEFAULT_CLOSURE_CAP,
                  generator_order: Sequence[int] | None = None) -> dict:
    """Solvability of the system for every (P)-pair, keyed by the pair."""
    _require_involutive(s)
    tv = transversal(s, cap, generator_order)
    lat = translation_lattice(s, cap, tv)
    return {(a, b): _solve_pair(a, b, tv.reps, lat) is not None
            for a, b in p_pairs(tv.group.elements)}


def find_promislow(s: Solution, cap: int = DEFAULT_CLOSURE_CAP, threads: int = 1,
                   generator_order: Sequence[int] | None = None,
                   stop_at_first: bool = False) -> SearchReport:
    """Search the structure group of ``s`` for a Promislow subgroup.

    Every ordered (P)-pair of non-identity holonomy elements is tested with
    one preimage each (taken from the BFS transversal). The first solvable
    pair in canonical order yields the certificate.
    """
    _require_involutive(s)
    tv = transversal(s, cap, generator_order)
    lat = translation_lattice(s, cap, tv)
    pairs = p_pairs(tv.group.elements)

    def job(pair):
        return _solve_pair(pair[0], pair[1], tv.reps, lat)

    results = []
    if stop_at_first:
        for pair in pairs:
            res = job(pair)
            results.append(res)
            if res is not None:
                break
    elif threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(job, pairs))
    else:
        results = [job(p) for p in pairs]

    first = next((i for i, r in enumerate(results) if r is not None), None)
    report = SearchReport(pairs_tested=len(results), certificate=None,
                          exhausted=first is None,
                          solvable_pairs=sum(r is not None for r in results),
                          holonomy_order=tv.group.order)
    if first is not None:
        alpha, beta = results[first]
        ok = check_certificate(alpha, beta)
        if not ok:
            raise PromislowError("solved system produced elements failing the certificate checks")
        report.certificate = PromislowCertificate(alpha, beta, ok)
        a, b = pairs[first]
        report.witness_words = {"A": list(tv.words[a]), "B": list(tv.words[b])}
    return report


# -- the Promislow set -----------------------------------------------------------

SET_LABELS = ("x^2y", "y^2x", "xyx^-1", "(y^2x)^-1", "(xy)^-2", "y", "(xy)^2x",
              "(xy)^2", "(xyx)^-1", "yxy", "y^-1", "x", "xyx", "x^-1")


def promislow_set(x, y) -> list:
    """The 14 words in x, y used by Promislow's argument, in fixed order."""
    mul, inv, eq = _ops(x)
    xy = mul(x, y)
    xyx = mul(xy, x)
    y2x = mul(mul(y, y), x)
    xy2 = mul(xy, xy)
    s = [mul(mul(x, x), y), y2x, mul(xy, inv(x)), inv(y2x), inv(xy2), y,
         mul(xy2, x), xy2, inv(xyx), mul(mul(y, x), y), inv(y), x, xyx, inv(x)]
    for i, j in itertools.combinations(range(len(s)), 2):
        if eq(s[i], s[j]):
            raise PromislowError(f"degenerate pair: {SET_LABELS[i]} equals {SET_LABELS[j]}")
    return s


def product_table(S: Sequence) -> Counter:
    mul, _, _ = _ops(S[0])
    counts: Counter = Counter()
    for a in S:
        for b in S:
            counts[_key(mul(a, b))] += 1
    return counts


def _key(e):
    if isinstance(e, AffineElement):
        return (e.perm.images, e.trans)
    if isinstance(e, Permutation):
        return e.images
    return tuple(tuple(Fraction(x) for x in row) for row in e)


def upp_failure_witness(S: Sequence) -> bool:
    """True iff every product s1 s2 (s1, s2 in S) has at least two factorizations."""
    if not S:
        raise PromislowError("empty set")
    return min(product_table(S).values()) >= 2
