"""Finite non-degenerate set-theoretic solutions of the Yang-Baxter equation.

A solution on {0..n-1} is stored through its two families of permutations,
r(x, y) = (sigma[x](y), tau[y](x)).
"""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .perm import (DEFAULT_CLOSURE_CAP, PermGroup, Permutation, closure,
                   compose, inverse, parse_cycles)


class SolutionError(ValueError):
    pass


class NotInvolutiveError(SolutionError):
    pass


@dataclass(frozen=True)
class Solution:
    n: int
    sigma: tuple[Permutation, ...]
    tau: tuple[Permutation, ...]

    def __post_init__(self):
        sigma = tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in self.sigma)
        tau = tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in self.tau)
        if len(sigma) != self.n or len(tau) != self.n:
            raise SolutionError(f"need {self.n} sigma and tau maps, got {len(sigma)}, {len(tau)}")
        if any(p.degree != self.n for p in sigma + tau):
            raise SolutionError("every sigma_x and tau_y must act on the n points")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "tau", tau)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x].images[y], self.tau[y].images[x]

    @classmethod
    def from_tables(cls, sigma: Sequence[Sequence[int]], tau: Sequence[Sequence[int]]) -> Solution:
        return cls(len(sigma), tuple(Permutation(tuple(s)) for s in sigma),
                   tuple(Permutation(tuple(t)) for t in tau))

    @classmethod
    def from_cycles(cls, sigma: Sequence[str], tau: Sequence[str] | None = None) -> Solution:
        """Build from 1-indexed cycle strings; ``tau=None`` means tau_x = sigma_x
        (the square-free form r(x, y) = (phi_x(y), phi_y(x)))."""
        n = len(sigma)
        s = tuple(parse_cycles(c, n) for c in sigma)
        t = s if tau is None else tuple(parse_cycles(c, n) for c in tau)
        return cls(n, s, t)

    @classmethod
    def from_sigma_involutive(cls, sigma: Sequence[Permutation]) -> Solution:
        """Solution whose tau is forced by involutivity: tau_y(x) = sigma^{-1}_{sigma_x(y)}(x)."""
        sigma = tuple(sigma)
        n = len(sigma)
        inv = [inverse(p).images for p in sigma]
        tau = tuple(Permutation(tuple(inv[sigma[x].images[y]][x] for x in range(n)))
                    for y in range(n))
        return cls(n, sigma, tau)

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "sigma": [list(p.images) for p in self.sigma],
                "tau": [list(p.images) for p in self.tau]}

    def relabel(self, f: Sequence[int]) -> Solution:
        """Isomorphic copy transported along the bijection ``f``."""
        fp = Permutation(tuple(f))
        finv = inverse(fp)
        sigma = [None] * self.n
        tau = [None] * self.n
        for x in range(self.n):
            sigma[f[x]] = compose(fp, compose(self.sigma[x], finv))
            tau[f[x]] = compose(fp, compose(self.tau[x], finv))
        return Solution(self.n, tuple(sigma), tuple(tau))


def load_solution(path: str | Path) -> Solution:
    """Read a solution from JSON (0-indexed tables) or the cycle text format."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return solution_from_json(json.loads(text))
    return parse_solution_text(text)


def solution_from_json(data: dict) -> Solution:
    try:
        sol = Solution.from_tables(data["sigma"], data["tau"])
    except KeyError as exc:
        raise SolutionError(f"missing key {exc} in solution JSON") from None
    if "n" in data and data["n"] != sol.n:
        raise SolutionError(f"declared n={data['n']} but tables have size {sol.n}")
    return sol


def parse_solution_text(text: str) -> Solution:
    """Cycle text format, one point per line, 1-indexed::

        # comment
        1: (34) | (24)
        2: (1324) | (1432)

    A line with a single cycle product and no ``|`` means tau_x = sigma_x.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        if not body:
            raise SolutionError(f"expected '<point>: <sigma> | <tau>', got {raw!r}")
        parts = [p.strip() for p in body.split("|")]
        if len(parts) > 2:
            raise SolutionError(f"too many fields in {raw!r}")
        rows.append((int(head), parts[0], parts[1] if len(parts) == 2 else None))
    rows.sort()
    if [r[0] for r in rows] != list(range(1, len(rows) + 1)):
        raise SolutionError("points must be listed exactly once as 1..n")
    if all(r[2] is None for r in rows):
        return Solution.from_cycles([r[1] for r in rows])
    if any(r[2] is None for r in rows):
        raise SolutionError("either every line gives tau or none does")
    return Solution.from_cycles([r[1] for r in rows], [r[2] for r in rows])


def format_solution_text(s: Solution) -> str:
    return "".join(f"{x + 1}: {s.sigma[x].to_cycles()} | {s.tau[x].to_cycles()}\n"
                   for x in range(s.n))


@dataclass(frozen=True)
class VerifyReport:
    bijective_r: bool
    braid: bool
    nondegenerate: bool

    @property
    def ok(self) -> bool:
        return self.bijective_r and self.braid and self.nondegenerate


def verify(s: Solution) -> VerifyReport:
    n = s.n
    sig = [p.images for p in s.sigma]
    tau = [p.images for p in s.tau]
    r = {(x, y): (sig[x][y], tau[y][x]) for x in range(n) for y in range(n)}
    bijective = len(set(r.values())) == n * n
    braid = True
    for x, y, z in itertools.product(range(n), repeat=3):
        # left: (r x id)(id x r)(r x id)
        a, b = r[x, y]
        b, c = r[b, z]
        a, b = r[a, b]
        # right: (id x r)(r x id)(id x r)
        q, w = r[y, z]
        p, q = r[x, q]
        q, w = r[q, w]
        if (a, b, c) != (p, q, w):
            braid = False
            break
    # Permutation construction already enforces bijective sigma_x, tau_y.
    return VerifyReport(bijective, braid, True)


def is_involutive(s: Solution) -> bool:
    return all(s.r(*s.r(x, y)) == (x, y) for x in range(s.n) for y in range(s.n))


def _require_involutive(s: Solution) -> None:
    if not is_involutive(s):
        raise NotInvolutiveError("operation is defined for involutive solutions only")


def retract(s: Solution) -> tuple[Solution, list[int]]:
    """Induced solution on the classes x ~ y iff sigma_x = sigma_y.

    Classes are numbered by first occurrence. Returns the retraction and the
    map point -> class.
    """
    _require_involutive(s)
    label: dict[Permutation, int] = {}
    cls = []
    for p in s.sigma:
        cls.append(label.setdefault(p, len(label)))
    m = len(label)
    sig = [[None] * m for _ in range(m)]
    tau = [[None] * m for _ in range(m)]
    for x in range(s.n):
        for y in range(s.n):
            for table, val in ((sig, cls[s.sigma[x].images[y]]), (tau, cls[s.tau[x].images[y]])):
                cell = table[cls[x]][cls[y]]
                if cell is None:
                    table[cls[x]][cls[y]] = val
                elif cell != val:
                    raise SolutionError("retraction is not well defined (internal contradiction)")
    try:
        ret = Solution.from_tables(sig, tau)
    except ValueError as exc:
        raise SolutionError(f"retraction is not well defined: {exc}") from None
    if not verify(ret).ok:
        raise SolutionError("retraction failed verification (internal contradiction)")
    return ret, cls


def retraction_chain(s: Solution) -> list[Solution]:
    """[s, Ret(s), Ret^2(s), ...] until the size stops dropping."""
    chain = [s]
    while True:
        nxt, _ = retract(chain[-1])
        if nxt.n == chain[-1].n:
            return chain
        chain.append(nxt)


def mp_level(s: Solution) -> int | None:
    """Multipermutation level, or None when the retraction chain stalls above
    one point. The one-point solution has level 0."""
    _require_involutive(s)
    chain = retraction_chain(s)
    return len(chain) - 1 if chain[-1].n == 1 else None


def permutation_group(s: Solution, cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    return closure(s.sigma, n=s.n, cap=cap)


def _cycle_type(p: Permutation) -> tuple[int, ...]:
    lengths = sorted((len(c) for c in p.cycles()), reverse=True)
    return tuple(lengths) + (1,) * (p.degree - sum(lengths))


def _fingerprints(s: Solution) -> list[tuple]:
    return [(_cycle_type(s.sigma[x]), _cycle_type(s.tau[x])) for x in range(s.n)]


MAX_ISO_SIZE = 10


def is_isomorphic(s1: Solution, s2: Solution) -> list[int] | None:
    """A bijection f with f sigma_x f^-1 = sigma_f(x) and f tau_x f^-1 = tau_f(x),
    or None. Backtracking with forced-image propagation."""
    if s1.n != s2.n:
        return None
    n = s1.n
    if n > MAX_ISO_SIZE:
        raise SolutionError(f"isomorphism search limited to n <= {MAX_ISO_SIZE}")
    fp1, fp2 = _fingerprints(s1), _fingerprints(s2)
    if sorted(fp1) != sorted(fp2):
        return None
    sig1 = [p.images for p in s1.sigma]
    tau1 = [p.images for p in s1.tau]
    sig2 = [p.images for p in s2.sigma]
    tau2 = [p.images for p in s2.tau]

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
            for x in range(n):
                fx = f[x]
                if fx is None:
                    continue
                # f(sigma_x(a)) = sigma_f(x)(f(a)) and f(sigma_a(x)) = sigma_f(a)(f(x))
                stack.append((sig1[x][a], sig2[fx][b]))
                stack.append((sig1[a][x], sig2[b][fx]))
                stack.append((tau1[x][a], tau2[fx][b]))
                stack.append((tau1[a][x], tau2[b][fx]))
        return True

    def search(f: list, inv: list) -> list[int] | None:
        free = next((x for x in range(n) if f[x] is None), None)
        if free is None:
            return list(f)
        for b in range(n):
            if inv[b] is not None or fp1[free] != fp2[b]:
                continue
            f2, inv2 = list(f), list(inv)
            if propagate(f2, inv2, free, b):
                found = search(f2, inv2)
                if found is not None:
                    return found
        return None

    f = search([None] * n, [None] * n)
    if f is None:
        return None
    if s1.relabel(f) != s2:
        raise SolutionError("isomorphism search returned a non-isomorphism (internal error)")
    return f


MAX_CANONICAL_SIZE = 6


def canonical_form(s: Solution) -> tuple:
    """Lexicographically least relabelled (sigma, tau) tables; a complete
    isomorphism invariant. Costs n! relabellings, so n is capped."""
    if s.n > MAX_CANONICAL_SIZE:
        raise SolutionError(f"canonical form limited to n <= {MAX_CANONICAL_SIZE}")
    best = None
    for f in itertools.permutations(range(s.n)):
        t = s.relabel(f)
        key = (tuple(p.images for p in t.sigma), tuple(p.images for p in t.tau))
        if best is None or key < best:
            best = key
    return best


MAX_ENUM_SIZE = 4


def _involutive_candidates(n: int, first: Permutation) -> list[Solution]:
    """Labelled involutive solutions with sigma_0 = first.

    Backtracks over sigma_1.., pruning with the cycle-set condition
    sigma_x sigma_{sigma_x^-1(y)} = sigma_y sigma_{sigma_y^-1(x)} whenever all
    four maps involved are assigned. Every survivor is re-verified in full.
    """
    perms = [Permutation(p) for p in itertools.permutations(range(n))]
    inv_of = {p: inverse(p) for p in perms}
    found = []
    sigma: list[Permutation | None] = [first] + [None] * (n - 1)

    def consistent() -> bool:
        for x in range(n):
            sx = sigma[x]
            if sx is None:
                continue
            for y in range(n):
                sy = sigma[y]
                if sy is None:
                    continue
                u = sigma[inv_of[sx].images[y]]
                v = sigma[inv_of[sy].images[x]]
                if u is None or v is None:
                    continue
                if compose(sx, u) != compose(sy, v):
                    return False
        return True

    def rec(k: int) -> None:
        if k == n:
            cand = Solution.from_sigma_involutive(sigma)
            if verify(cand).ok and is_involutive(cand):
                found.append(cand)
            return
        for p in perms:
            sigma[k] = p
            if consistent():
                rec(k + 1)
        sigma[k] = None

    if consistent():
        rec(1)
    return found


def enumerate_solutions(n: int, threads: int = 1) -> list[Solution]:
    """All involutive solutions of size n (1 <= n <= 4) up to isomorphism.

    Each class is represented by its canonical form; output is sorted by it.
    """
    if not 1 <= n <= MAX_ENUM_SIZE:
        raise SolutionError(f"enumeration supports 1 <= n <= {MAX_ENUM_SIZE}, got {n}")
    firsts = [Permutation(p) for p in itertools.permutations(range(n))]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(lambda p: _involutive_candidates(n, p), firsts))
    else:
        blocks = [_involutive_candidates(n, p) for p in firsts]
    reps: dict[tuple, Solution] = {}
    for block in blocks:
        for cand in block:
            key = canonical_form(cand)
            if key not in reps:
                reps[key] = Solution.from_tables(*key)
    return [reps[k] for k in sorted(reps)]


def count_solutions(n: int, threads: int = 1) -> dict[str, int]:
    sols = enumerate_solutions(n, threads=threads)
    return {"total": len(sols), "not_mp": sum(mp_level(s) is None for s in sols)}


def distinct_up_to_isomorphism(sols: Iterable[Solution]) -> bool:
    sols = list(sols)
    return all(is_isomorphic(a, b) is None for a, b in itertools.combinations(sols, 2))
