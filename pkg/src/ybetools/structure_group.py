"""Affine representation of the structure group of an involutive solution.

Generator x maps to (sigma_x, e_x) in Sym(n) x| Z^n, with product
(A, a)(B, b) = (AB, a + A b). A permutation p acts on Z^n by moving
coordinate i to coordinate p(i), i.e. through the matrix with
M[p(i)][i] = 1.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import intlin
from .intlin import Lattice
from .perm import (DEFAULT_CLOSURE_CAP, ClosureCapExceeded, PermGroup,
                   Permutation, compose, inverse)
from .solutions import Solution, _require_involutive


class StructureGroupError(ValueError):
    pass


def act(p: Permutation, v: Sequence[int]) -> tuple[int, ...]:
    """Coordinate permutation: (p . v)[p(i)] = v[i]."""
    out = [0] * len(v)
    for i, j in enumerate(p.images):
        out[j] = v[i]
    return tuple(out)


def perm_matrix(p: Permutation) -> list[list[int]]:
    n = p.degree
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(p.images):
        m[j][i] = 1
    return m


@dataclass(frozen=True)
class AffineElement:
    perm: Permutation
    trans: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "trans", tuple(int(x) for x in self.trans))
        if len(self.trans) != self.perm.degree:
            raise StructureGroupError("translation length differs from the permutation degree")

    @classmethod
    def identity(cls, n: int) -> AffineElement:
        return cls(Permutation.identity(n), (0,) * n)

    @classmethod
    def translation(cls, v: Sequence[int]) -> AffineElement:
        return cls(Permutation.identity(len(v)), tuple(v))

    @property
    def dim(self) -> int:
        return self.perm.degree

    def __mul__(self, other: AffineElement) -> AffineElement:
        moved = act(self.perm, other.trans)
        return AffineElement(compose(self.perm, other.perm),
                             tuple(a + b for a, b in zip(self.trans, moved)))

    def inverse(self) -> AffineElement:
        pinv = inverse(self.perm)
        return AffineElement(pinv, tuple(-x for x in act(pinv, self.trans)))

    def __pow__(self, k: int) -> AffineElement:
        base = self if k >= 0 else self.inverse()
        result = AffineElement.identity(self.dim)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.trans)

    def to_matrix(self) -> list[list[int]]:
        """The (n+1)x(n+1) integer matrix [[A, a], [0, 1]]."""
        m = perm_matrix(self.perm)
        rows = [row + [t] for row, t in zip(m, self.trans)]
        rows.append([0] * self.dim + [1])
        return rows

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[int]]) -> AffineElement:
        n = len(m) - 1
        if list(m[n]) != [0] * n + [1]:
            raise StructureGroupError("last row must be (0, ..., 0, 1)")
        images = [None] * n
        for i in range(n):
            col = [m[j][i] for j in range(n)]
            if sorted(col) != [0] * (n - 1) + [1]:
                raise StructureGroupError("linear part is not a permutation matrix")
            images[i] = col.index(1)
        return cls(Permutation(tuple(images)), tuple(m[j][n] for j in range(n)))

    def to_json_dict(self) -> dict:
        return {"perm": list(self.perm.images), "trans": list(self.trans)}


def is_translation(e: AffineElement) -> bool:
    return e.perm.is_identity()


def generator(s: Solution, x: int) -> AffineElement:
    if not 0 <= x < s.n:
        raise StructureGroupError(f"generator index {x} out of range 0..{s.n - 1}")
    e = [0] * s.n
    e[x] = 1
    return AffineElement(s.sigma[x], tuple(e))


def parse_word(text: str) -> list[int]:
    """Signed-word syntax ``"1,-2"`` for x1 x2^-1 (1-indexed letters)."""
    text = text.strip()
    if not text:
        return []
    try:
        letters = [int(t) for t in text.replace(" ", "").split(",")]
    except ValueError:
        raise StructureGroupError(f"malformed word {text!r}") from None
    if 0 in letters:
        raise StructureGroupError("word letters must be non-zero")
    return letters


def eval_word(s: Solution, word: Sequence[int]) -> AffineElement:
    gens = [generator(s, x) for x in range(s.n)]
    invs = [g.inverse() for g in gens]
    result = AffineElement.identity(s.n)
    for k in word:
        if k == 0 or abs(k) > s.n:
            raise StructureGroupError(f"letter {k} out of range for n={s.n}")
        result = result * (gens[k - 1] if k > 0 else invs[-k - 1])
    return result


@dataclass(frozen=True)
class Transversal:
    """BFS over the projection onto the permutation group.

    ``reps[g]`` is an element of the structure group projecting to ``g`` and
    ``words[g]`` the generator word it was built from.
    """
    group: PermGroup
    reps: dict
    words: dict
    order: tuple  # BFS discovery order


def transversal(s: Solution, cap: int = DEFAULT_CLOSURE_CAP,
                generator_order: Sequence[int] | None = None) -> Transversal:
    n = s.n
    gens = [generator(s, x) for x in range(n)]
    gorder = list(range(n)) if generator_order is None else list(generator_order)
    ident = AffineElement.identity(n)
    reps = {ident.perm: ident}
    words = {ident.perm: ()}
    queue = deque([ident.perm])
    seen_order = [ident.perm]
    while queue:
        g = queue.popleft()
        for x in gorder:
            h = reps[g] * gens[x]
            if h.perm not in reps:
                reps[h.perm] = h
                words[h.perm] = words[g] + (x + 1,)
                if len(reps) > cap:
                    raise ClosureCapExceeded(f"permutation group exceeded cap of {cap} elements")
                queue.append(h.perm)
                seen_order.append(h.perm)
    group = PermGroup(n, s.sigma, cap, tuple(sorted(reps)))
    return Transversal(group, reps, words, tuple(seen_order))


def schreier_translations(s: Solution, tv: Transversal) -> list[tuple[int, ...]]:
    """Translation vectors of the Schreier generators rep(g) x rep(g sigma_x)^-1."""
    gens = [generator(s, x) for x in range(s.n)]
    out = []
    for g in tv.order:
        for x in range(s.n):
            prod = tv.reps[g] * gens[x]
            k = prod * tv.reps[prod.perm].inverse()
            if not is_translation(k):
                raise StructureGroupError("Schreier generator with non-trivial permutation part")
            if any(k.trans):
                out.append(k.trans)
    return out


def translation_lattice(s: Solution, cap: int = DEFAULT_CLOSURE_CAP,
                        tv: Transversal | None = None) -> Lattice:
    """Lattice L with {I} x L the translation subgroup of the structure group."""
    _require_involutive(s)
    tv = tv or transversal(s, cap)
    vecs = schreier_translations(s, tv)
    lat = intlin.lattice_from_vectors(vecs, ambient_dim=s.n)
    if lat.rank != s.n:
        raise StructureGroupError(f"translation lattice has rank {lat.rank} < {s.n}")
    for g in tv.group.generators:
        if not lat.is_invariant_under(perm_matrix(g)):
            raise StructureGroupError("translation lattice is not invariant under the holonomy")
    return lat


def holonomy(s: Solution, cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Holonomy group of the structure group, i.e. the permutation group."""
    return transversal(s, cap).group
