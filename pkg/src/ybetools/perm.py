"""Permutations of {0..n-1} and permutation groups given by generators.

Points are 0-indexed internally. Text I/O (cycle notation) is 1-indexed.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_CLOSURE_CAP = 10**6


class PermError(ValueError):
    pass


class ClosureCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise PermError(f"not a bijection of 0..{n - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else inverse(self)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-indexed, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def to_cycles(self) -> str:
        """1-indexed cycle notation; "()" for the identity."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        sep = "" if self.degree <= 9 else " "
        return "".join("(" + sep.join(str(i + 1) for i in c) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({self.to_cycles()}, n={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse a product of disjoint cycles over points 1..n.

    Points inside a cycle may be separated by whitespace or commas; a run of
    digits with no separators is read digit by digit ("(1324)").
    """
    compact = re.sub(r"\s+", " ", text.strip())
    if compact in ("", "()"):
        return Permutation.identity(n)
    stripped = _CYCLE_RE.sub("", compact).strip()
    if stripped:
        raise PermError(f"malformed cycle notation: {text!r}")
    images = list(range(n))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(compact):
        body = body.strip()
        if not body:
            continue
        if re.fullmatch(r"\d+", body):
            points = [int(ch) for ch in body]
        else:
            tokens = [t for t in re.split(r"[\s,]+", body) if t]
            if not all(t.isdigit() for t in tokens):
                raise PermError(f"malformed cycle notation: {text!r}")
            points = [int(t) for t in tokens]
        for pt in points:
            if not 1 <= pt <= n:
                raise PermError(f"point {pt} out of range 1..{n}")
            if pt in used:
                raise PermError(f"point {pt} repeated in {text!r}")
            used.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p*q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise PermError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


def order(p: Permutation) -> int:
    result = 1
    for c in p.cycles():
        result = math.lcm(result, len(c))
    return result


@dataclass
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    cap: int = DEFAULT_CLOSURE_CAP
    _elements: tuple[Permutation, ...] | None = field(default=None, repr=False)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = _bfs_closure(self.degree, self.generators, self.cap)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set

    @property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def exponent(self) -> int:
        e = 1
        for g in self.elements:
            e = math.lcm(e, order(g))
        return e

    def order_statistics(self) -> dict[int, int]:
        """Multiset of element orders as {order: count}."""
        counts: dict[int, int] = {}
        for g in self.elements:
            k = order(g)
            counts[k] = counts.get(k, 0) + 1
        return dict(sorted(counts.items()))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def _bfs_closure(n: int, gens: Sequence[Permutation], cap: int) -> tuple[Permutation, ...]:
    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    gens = [g for g in gens if not g.is_identity()]
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise ClosureCapExceeded(
                        f"group closure exceeded cap of {cap} elements")
                queue.append(h)
    return tuple(sorted(seen))


def closure(gens: Iterable[Permutation], n: int | None = None,
            cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Group generated by ``gens``; elements sorted by image array."""
    gens = tuple(gens)
    degrees = {g.degree for g in gens}
    if n is not None:
        degrees.add(n)
    if len(degrees) > 1:
        raise PermError(f"generators of mixed degree: {sorted(degrees)}")
    if not degrees:
        raise PermError("closure of an empty generator list needs an explicit degree")
    group = PermGroup(degrees.pop(), gens, cap)
    group.elements  # noqa: B018  (force closure so the cap error surfaces here)
    return group


def p_part(m: int, p: int) -> int:
    q = 1
    while m % p == 0:
        m //= p
        q *= p
    return q


def sylow_cyclic(g: PermGroup, p: int) -> bool:
    """True iff the Sylow p-subgroups of ``g`` are cyclic."""
    target = p_part(g.order, p)
    if target == 1:
        return True
    return any(order(x) == target for x in g.elements)


def prime_divisors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def all_sylows_cyclic(g: PermGroup) -> bool:
    return all(sylow_cyclic(g, p) for p in prime_divisors(g.order))
