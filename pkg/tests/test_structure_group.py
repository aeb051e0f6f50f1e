import pytest
from hypothesis import given, settings, strategies as st

from ybetools import FIXTURE_NAMES, load_fixture
from ybetools.intlin import matmul, matvec
from ybetools.perm import ClosureCapExceeded, Permutation, parse_cycles
from ybetools.solutions import permutation_group
from ybetools.structure_group import (
    AffineElement,
    StructureGroupError,
    act,
    eval_word,
    generator,
    holonomy,
    is_translation,
    parse_word,
    perm_matrix,
    translation_lattice,
    transversal,
)

PROP_4_19_GENERATORS = [
    [[0, 1, 0, 0, 1], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
    [[0, 0, 0, 1, 0], [0, 0, 1, 0, 1], [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1]],
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 1, 1], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]],
    [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 1, 0, 0, 0], [1, 0, 0, 0, 1], [0, 0, 0, 0, 1]],
]


def affine(max_n=5):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        st.permutations(range(n)), st.lists(st.integers(-9, 9), min_size=n, max_size=n)
    ).map(lambda pt: AffineElement(Permutation(tuple(pt[0])), tuple(pt[1]))))


def affine_triples():
    return st.integers(1, 5).flatmap(lambda n: st.tuples(*[st.tuples(
        st.permutations(range(n)), st.lists(st.integers(-9, 9), min_size=n, max_size=n)
    ).map(lambda pt: AffineElement(Permutation(tuple(pt[0])), tuple(pt[1])))] * 3))


def test_action_moves_coordinates_along_the_permutation():
    p = parse_cycles("(123)", 3)
    assert act(p, (1, 0, 0)) == (0, 1, 0)
    assert matvec(perm_matrix(p), [5, 6, 7]) == list(act(p, (5, 6, 7)))


def test_generators_of_prop_4_19():
    s = load_fixture("prop-4-19")
    assert [generator(s, x).to_matrix() for x in range(4)] == PROP_4_19_GENERATORS


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_defining_relations_hold(name):
    s = load_fixture(name)
    g = [generator(s, x) for x in range(s.n)]
    for x in range(s.n):
        for y in range(s.n):
            u, v = s.r(x, y)
            assert g[x] * g[y] == g[u] * g[v]


@given(affine_triples())
def test_affine_group_laws(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a * b).to_matrix() == matmul(a.to_matrix(), b.to_matrix())
    assert AffineElement.from_matrix(a.to_matrix()) == a
    assert a ** 3 == a * a * a
    assert a ** -2 == (a * a).inverse()


def test_words():
    s = load_fixture("prop-4-19")
    assert parse_word("1,-2") == [1, -2]
    assert parse_word("") == []
    w = eval_word(s, [1, -2])
    assert w == generator(s, 0) * generator(s, 1).inverse()
    for bad in ("1,x", "0"):
        with pytest.raises(StructureGroupError):
            parse_word(bad)
    with pytest.raises(StructureGroupError):
        eval_word(s, [5])
    with pytest.raises(StructureGroupError):
        generator(s, 4)


def test_prop_4_19_lattice():
    lat = translation_lattice(load_fixture("prop-4-19"))
    assert lat.basis == ((1, 1, 0, 0), (0, 2, 0, 2), (0, 0, 1, 1), (0, 0, 0, 4))
    assert lat.index() == 8


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_lattice_index_equals_holonomy_order(name):
    s = load_fixture(name)
    lat = translation_lattice(s)
    assert lat.rank == s.n
    assert lat.index() == holonomy(s).order == permutation_group(s).order
    assert all(lat.is_invariant_under(perm_matrix(p)) for p in s.sigma)


@pytest.mark.parametrize("name", ["prop-4-13", "table-4-19-2", "mp-example"])
def test_lattice_does_not_depend_on_generator_order(name):
    s = load_fixture(name)
    ref = translation_lattice(s)
    for order in (list(reversed(range(s.n))), list(range(1, s.n)) + [0]):
        assert translation_lattice(s, tv=transversal(s, generator_order=order)) == ref


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["prop-4-13", "prop-4-19", "table-4-13-2", "mp-example"]), st.data())
def test_random_translations_lie_in_the_lattice(name, data):
    s = load_fixture(name)
    lat = translation_lattice(s)
    letters = st.integers(1, s.n).flatmap(lambda k: st.sampled_from([k, -k]))
    w = data.draw(st.lists(letters, max_size=12))
    e = eval_word(s, w)
    # a power of e is a translation
    k = 1
    while not (e ** k).perm.is_identity():
        k += 1
    t = e ** k
    assert is_translation(t) and lat.member(t.trans)
    assert (e * eval_word(s, [-x for x in reversed(w)])).is_identity()


def test_transversal_words_evaluate_to_representatives():
    s = load_fixture("table-4-19-1")
    tv = transversal(s)
    assert len(tv.reps) == 16
    for g, rep in tv.reps.items():
        assert rep.perm == g
        assert eval_word(s, list(tv.words[g])) == rep


def test_closure_cap_is_respected():
    with pytest.raises(ClosureCapExceeded):
        translation_lattice(load_fixture("prop-GI"), cap=10)
