"""Executable statements of the structural results on skew braces.

Each check takes a brace and returns a list of human-readable violations
(empty when the statement holds on that brace). ``sweep`` runs every check
over a population.
"""
from __future__ import annotations

from typing import Callable

from . import braces as br
from .braces import SkewBrace
from .perm import prime_divisors

Check = Callable[[SkewBrace], list]


def _primes(b: SkewBrace) -> list[int]:
    return prime_divisors(b.order)


def left_p_equivalence(b: SkewBrace) -> list[str]:
    """left p-nilpotent <=> A_{p'} * A_p = 0 <=> (A,o) p-nilpotent."""
    out = []
    for p in _primes(b):
        ap, app = br.sylow_additive(b, p), br.hall_p_prime(b, p)
        v = (br.is_left_p_nilpotent(b, p),
             br.star_span(b, app, ap) == frozenset({0}),
             b.circ.is_p_nilpotent(p))
        if len(set(v)) != 1:
            out.append(f"p={p}: left p-nilpotent/A_p'*A_p=0/(A,o) p-nilpotent = {v}")
    return out


def left_nilpotent_iff_circ_nilpotent(b: SkewBrace) -> list[str]:
    v = (br.is_left_nilpotent(b), b.circ.is_nilpotent())
    return [] if v[0] == v[1] else [f"left nilpotent={v[0]} but (A,o) nilpotent={v[1]}"]


def left_nilpotent_iff_all_left_p(b: SkewBrace) -> list[str]:
    lhs = br.is_left_nilpotent(b)
    rhs = all(br.is_left_p_nilpotent(b, p) for p in _primes(b))
    return [] if lhs == rhs else [f"left nilpotent={lhs}, left p-nilpotent for all p={rhs}"]


def abelian_normal_sylow_implies_right_p(b: SkewBrace) -> list[str]:
    return [f"p={p}: (A,o) has an abelian normal Sylow but not right p-nilpotent"
            for p in _primes(b)
            if b.circ.has_abelian_normal_sylow(p) and not br.is_right_p_nilpotent(b, p)]


def right_p_iff_sylow_in_socle_series(b: SkewBrace) -> list[str]:
    socs = br.soc_series(b)
    out = []
    for p in _primes(b):
        ap = br.sylow_additive(b, p)
        lhs = any(ap <= s for s in socs)
        rhs = br.is_right_p_nilpotent(b, p)
        if lhs != rhs:
            out.append(f"p={p}: A_p in some Soc_n={lhs}, right p-nilpotent={rhs}")
    return out


def right_nilpotent_iff_socle_series_full(b: SkewBrace) -> list[str]:
    lhs = br.is_right_nilpotent(b)
    rhs = br.soc_series(b)[-1] == b.A
    return [] if lhs == rhs else [f"right nilpotent={lhs}, Soc_n = A={rhs}"]


def right_nilpotent_iff_R_series_vanishes(b: SkewBrace) -> list[str]:
    lhs = br.is_right_nilpotent(b)
    rhs = br.R_series(b, b.A, b.A)[-1] == frozenset({0})
    return [] if lhs == rhs else [f"right nilpotent={lhs}, R_n(A,A)=0={rhs}"]


def right_nilpotent_iff_all_right_p(b: SkewBrace) -> list[str]:
    lhs = br.is_right_nilpotent(b)
    rhs = all(br.is_right_p_nilpotent(b, p) for p in _primes(b))
    return [] if lhs == rhs else [f"right nilpotent={lhs}, right p-nilpotent for all p={rhs}"]


def _direct_decompositions(b: SkewBrace):
    """Pairs (B, C) of left ideals with (A,+) the internal direct product."""
    lefts = [s for s in b.add.subgroups() if br.is_left_ideal(b, s) and b.add.is_normal(s)]
    for B in lefts:
        for C in lefts:
            if len(B) * len(C) == b.order and B & C == frozenset({0}):
                yield B, C


def star_factorization(b: SkewBrace) -> list[str]:
    """A * (B + C) = A * B + A * C for direct decompositions into left ideals."""
    out = []
    for B, C in _direct_decompositions(b):
        lhs = br.star_span(b, b.A, br.additive_closure(b, B | C))
        rhs = br.additive_closure(b, br.star_span(b, b.A, B) | br.star_span(b, b.A, C))
        if lhs != rhs:
            out.append(f"factorization fails for B={sorted(B)}, C={sorted(C)}")
    return out


def cyclic_sylows_implies_right_nilpotent(b: SkewBrace) -> list[str]:
    """Nilpotent type, all Sylows of (A,o) cyclic => right nilpotent (covers
    the abelian-type statement as a special case)."""
    if b.circ.all_sylows_cyclic() and not br.is_right_nilpotent(b):
        return ["(A,o) has cyclic Sylows but the brace is not right nilpotent"]
    return []


def socle_series_quotient_characterization(b: SkewBrace) -> list[str]:
    """Soc_{n+1} is the preimage of Soc(A / Soc_n)."""
    socs = br.soc_series(b)
    out = []
    for n in range(len(socs)):
        q, proj = br.quotient(b, socs[n])
        pre = frozenset(a for a in b.elements if proj[a] in br.socle(q))
        nxt = socs[n + 1] if n + 1 < len(socs) else socs[n]
        if pre != nxt:
            out.append(f"Soc_{n + 1} differs from the preimage of Soc(A/Soc_{n})")
    return out


def R_series_of_ideals_descend(b: SkewBrace) -> list[str]:
    out = []
    for ideal in b.add.subgroups():
        if not br.is_ideal(b, ideal):
            continue
        series = br.R_series(b, ideal, b.A)
        for k, term in enumerate(series):
            if not br.is_ideal(b, term):
                out.append(f"R_{k}({sorted(ideal)}, A) is not an ideal")
            if k and not term <= series[k - 1]:
                out.append(f"R_{k}({sorted(ideal)}, A) not contained in R_{k - 1}")
    return out


def socle_of_sylow_brace(b: SkewBrace) -> list[str]:
    """When (A_p, o) is abelian, Soc(A_p) = Fix(A_p) intersected with Z(A_p, +)."""
    out = []
    for p in _primes(b):
        sub, emb = br.substructure(b, br.sylow_additive(b, p))
        if not sub.circ.is_abelian():
            continue
        if br.socle(sub) != br.fix(sub) & sub.add.center():
            out.append(f"p={p}: Soc(A_p) != Fix(A_p) & Z(A_p,+)")
    return out


def star_identities(b: SkewBrace) -> list[str]:
    """a*(b+c) = a*b + b + a*c - b and (a o b)*c = a*(b*c) + b*c + a*c."""
    st, P, neg, O = b.star_table, b.plus, b.minus, b.o
    for a in b.elements:
        for x in b.elements:
            for c in b.elements:
                if st[a][P(x, c)] != P(P(P(st[a][x], x), st[a][c]), neg(x)):
                    return [f"a*(b+c) identity fails at {(a, x, c)}"]
                if st[O(a, x)][c] != P(P(st[a][st[x][c]], st[x][c]), st[a][c]):
                    return [f"(a o b)*c identity fails at {(a, x, c)}"]
    return []


def lambda_identities(b: SkewBrace) -> list[str]:
    """lambda_{a o b} = lambda_a lambda_b, a o b = a + lambda_a(b), lambda_a(a') = -a."""
    lam = b.lam
    for a in b.elements:
        if lam[a][b.prime(a)] != b.minus(a):
            return [f"lambda_a(a') != -a at a={a}"]
        for x in b.elements:
            if b.o(a, x) != b.plus(a, lam[a][x]):
                return [f"a o b != a + lambda_a(b) at {(a, x)}"]
            if lam[b.o(a, x)] != tuple(lam[a][lam[x][c]] for c in b.elements):
                return [f"lambda is not multiplicative at {(a, x)}"]
    return []


# Checks that need nilpotent type (the additive Sylows must be canonical).
NILPOTENT_TYPE_CHECKS: dict[str, Check] = {
    "left_p_equivalence": left_p_equivalence,
    "left_nilpotent_iff_circ_nilpotent": left_nilpotent_iff_circ_nilpotent,
    "left_nilpotent_iff_all_left_p": left_nilpotent_iff_all_left_p,
    "abelian_normal_sylow_implies_right_p": abelian_normal_sylow_implies_right_p,
    "right_p_iff_sylow_in_socle_series": right_p_iff_sylow_in_socle_series,
    "right_nilpotent_iff_socle_series_full": right_nilpotent_iff_socle_series_full,
    "right_nilpotent_iff_R_series_vanishes": right_nilpotent_iff_R_series_vanishes,
    "right_nilpotent_iff_all_right_p": right_nilpotent_iff_all_right_p,
    "star_factorization": star_factorization,
    "cyclic_sylows_implies_right_nilpotent": cyclic_sylows_implies_right_nilpotent,
    "socle_of_sylow_brace": socle_of_sylow_brace,
}

# Checks valid for every skew brace.
GENERAL_CHECKS: dict[str, Check] = {
    "star_identities": star_identities,
    "lambda_identities": lambda_identities,
    "socle_series_quotient_characterization": socle_series_quotient_characterization,
    "R_series_of_ideals_descend": R_series_of_ideals_descend,
}


def sweep(population: list[SkewBrace], checks: dict[str, Check] | None = None) -> dict[str, list]:
    """Run checks over a population; returns {check name: [(index, violation), ...]}.

    Without explicit ``checks`` the nilpotent-type checks run only on braces
    of nilpotent type and the general checks on all of them.
    """
    results: dict[str, list] = {}
    if checks is None:
        plan = [(GENERAL_CHECKS, False), (NILPOTENT_TYPE_CHECKS, True)]
    else:
        plan = [(checks, False)]
    for table, need_nilpotent in plan:
        for name, check in table.items():
            bad = results.setdefault(name, [])
            for i, b in enumerate(population):
                if need_nilpotent and not b.is_nilpotent_type():
                    continue
                bad.extend((i, msg) for msg in check(b))
    return results
