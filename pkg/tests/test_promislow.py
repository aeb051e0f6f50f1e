import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ybetools import TABLE_FIXTURES, load_fixture
from ybetools.perm import Permutation, parse_cycles
from ybetools.promislow import (
    PromislowError,
    abelian_subgroup_rank,
    check_certificate,
    find_promislow,
    laurent_P1,
    laurent_P1_horner,
    laurent_P2,
    p_pairs,
    pair_verdicts,
    product_table,
    promislow_set,
    satisfies_P,
    satisfies_promislow_relations,
    upp_failure_witness,
)
from ybetools.solutions import NotInvolutiveError, Solution
from ybetools.structure_group import AffineElement, eval_word, translation_lattice, transversal
from ybetools.structure_group import perm_matrix

HALF = Fraction(1, 2)
# Hantzsche-Wendt realization of the Promislow group by rigid motions of R^3
HW_X = [[1, 0, 0, HALF], [0, -1, 0, HALF], [0, 0, -1, 0], [0, 0, 0, 1]]
HW_Y = [[-1, 0, 0, 0], [0, 1, 0, HALF], [0, 0, -1, HALF], [0, 0, 0, 1]]


def test_rational_realization_is_a_promislow_pair():
    assert satisfies_promislow_relations(HW_X, HW_Y)
    assert satisfies_P(HW_X, HW_Y)
    S = promislow_set(HW_X, HW_Y)
    assert len(S) == 14
    assert upp_failure_witness(S)
    assert min(product_table(S).values()) == 2


def test_degenerate_set_is_rejected():
    e = AffineElement(parse_cycles("(12)", 2), (1, 0))
    with pytest.raises(PromislowError):
        promislow_set(e, e)
    with pytest.raises(PromislowError):
        upp_failure_witness([])


def test_pairs_in_the_klein_group():
    klein = [parse_cycles(c, 4) for c in ("()", "(12)(34)", "(13)(24)", "(14)(23)")]
    pairs = p_pairs(klein)
    # every pair of involutions satisfies (P) in an elementary abelian 2-group
    assert len(pairs) == 9
    assert pairs == sorted(pairs)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.permutations(range(n)),
                                                    st.permutations(range(n)))))
def test_laurent_polynomials_two_ways(pq):
    a, b = (perm_matrix(Permutation(tuple(p))) for p in pq)
    assert laurent_P1(a, b) == laurent_P1_horner(a, b)
    n = len(a)
    sq = [[sum(a[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert laurent_P2(a, b) == [[sq[i][j] - (i == j) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("name,solvable", [("prop-4-13", 6), ("prop-4-19", 6)])
def test_certificates_for_size_four(name, solvable):
    s = load_fixture(name)
    rep = find_promislow(s)
    assert rep.pairs_tested == 49 and rep.solvable_pairs == solvable
    assert not rep.exhausted and rep.holonomy_order == 8
    cert = rep.certificate
    assert cert.verified_relations
    assert check_certificate(cert.alpha, cert.beta)
    assert satisfies_promislow_relations(cert.alpha, cert.beta)
    assert abelian_subgroup_rank(cert.alpha, cert.beta) == 3
    # both elements lie in the structure group
    tv = transversal(s)
    lat = translation_lattice(s, tv=tv)
    for e in (cert.alpha, cert.beta):
        k = e * tv.reps[e.perm].inverse()
        assert k.perm.is_identity() and lat.member(k.trans)
    words = rep.witness_words
    assert eval_word(s, words["A"]).perm == cert.alpha.perm
    assert eval_word(s, words["B"]).perm == cert.beta.perm
    assert sum(pair_verdicts(s).values()) == solvable


def test_certificate_checks_reject_bad_pairs():
    s = load_fixture("prop-4-19")
    cert = find_promislow(s).certificate
    assert not check_certificate(cert.alpha, cert.alpha)
    ident = AffineElement.identity(4)
    assert not check_certificate(ident, cert.beta)
    assert not check_certificate(cert.alpha, cert.beta * cert.beta)


@pytest.mark.parametrize("name", TABLE_FIXTURES[:2] + TABLE_FIXTURES[4:6])
def test_table_solutions_are_exhausted(name):
    rep = find_promislow(load_fixture(name))
    assert rep.exhausted and rep.certificate is None
    assert rep.pairs_tested > 0 and rep.solvable_pairs == 0


def test_search_is_thread_count_independent():
    s = load_fixture("table-4-19-1")
    one = json.dumps(find_promislow(s, threads=1).to_json_dict())
    assert json.dumps(find_promislow(s, threads=4).to_json_dict()) == one
    quick = find_promislow(load_fixture("prop-4-13"), stop_at_first=True)
    assert quick.certificate == find_promislow(load_fixture("prop-4-13")).certificate


def test_search_requires_involutive_input():
    f = parse_cycles("(123)", 3)
    with pytest.raises(NotInvolutiveError):
        find_promislow(Solution(3, (f,) * 3, (f,) * 3))


def test_upp_witness_prop_4_19():
    s = load_fixture("prop-4-19")
    x, y = eval_word(s, [1, -2]), eval_word(s, [1, -3])
    S = promislow_set(x, y)
    assert len({(e.perm, e.trans) for e in S}) == 14
    assert upp_failure_witness(S)
