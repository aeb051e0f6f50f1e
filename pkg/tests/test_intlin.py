import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from ybetools import intlin
from ybetools.intlin import IntLinError, Lattice, lattice_from_vectors

entries = st.integers(-6, 6)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(entries, min_size=c, max_size=c)) for _ in range(r)]


def is_unimodular(u):
    return abs(intlin.det(u)) == 1


def test_hnf_known_value():
    h, u = intlin.hnf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert h == [[2, 4, 4], [0, 6, 0], [0, 0, 12]]
    assert intlin.matmul(u, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == h


def test_snf_known_value():
    s, _, _ = intlin.snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [s[i][i] for i in range(3)] == [2, 6, 12]


def test_det_matches_sympy():
    m = [[3, -1, 2, 0], [1, 4, -2, 5], [0, 2, 7, -3], [6, -5, 1, 1]]
    assert intlin.det(m) == sympy.Matrix(m).det()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hnf_properties(m):
    h, u = intlin.hnf(m)
    assert intlin.matmul(u, m) == h
    assert intlin.is_hnf(h)
    assert is_unimodular(u)
    assert intlin.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_properties_and_sympy_oracle(m):
    s, u, v = intlin.snf(m)
    assert intlin.matmul(intlin.matmul(u, m), v) == s
    assert is_unimodular(u) and is_unimodular(v)
    rows, cols = intlin.shape(m)
    diag = [s[i][i] for i in range(min(rows, cols))]
    assert all(s[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    ref = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    assert [abs(ref[i, i]) for i in range(min(rows, cols))] == diag


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_system(m, data):
    cols = len(m[0])
    z0 = data.draw(st.lists(entries, min_size=cols, max_size=cols))
    c = intlin.matvec(m, z0)
    for solver in (intlin.solve_integer, intlin.solve_integer_snf):
        sol = solver(m, c)
        assert sol is not None
        part, kernel = sol
        assert intlin.matvec(m, part) == c
        assert all(not any(intlin.matvec(m, k)) for k in kernel)
        assert len(kernel) == cols - intlin.rank(m)


@settings(max_examples=200, deadline=None)
@given(matrices(max_rows=3, max_cols=3), st.lists(st.integers(-10, 10), min_size=3, max_size=3))
def test_hnf_and_snf_solvers_agree(m, c):
    c = c[:len(m)]
    a = intlin.solve_integer(m, c)
    b = intlin.solve_integer_snf(m, c)
    assert (a is None) == (b is None)
    if a is not None:
        # difference of particular solutions lies in the kernel lattice
        diff = [x - y for x, y in zip(a[0], b[0])]
        assert not any(intlin.matvec(m, diff))
        if a[1]:
            assert lattice_from_vectors(a[1]).member(diff)


def test_solve_detects_no_integer_solution():
    assert intlin.solve_integer([[2, 4]], [3]) is None
    assert intlin.solve_integer([[1, 1], [1, 1]], [1, 2]) is None
    assert intlin.solve_integer_snf([[2, 4]], [3]) is None
    with pytest.raises(IntLinError):
        intlin.solve_integer([[1, 2]], [1, 2])


def test_lattice_membership_index_and_reduce():
    lat = lattice_from_vectors([[2, 0], [0, 3], [4, 3]])
    assert lat.rank == 2 and lat.index() == 6
    assert lat.member([4, -3]) and not lat.member([1, 0])
    reps = {lat.reduce(v) for v in itertools.product(range(-5, 6), repeat=2)}
    assert len(reps) == 6
    assert lat.is_invariant_under([[-1, 0], [0, 1]])
    skew = lattice_from_vectors([[1, 1], [0, 2]])
    assert not skew.is_invariant_under([[1, 0], [0, 0]])
    assert skew.is_invariant_under([[0, 1], [1, 0]])


def test_degenerate_lattices():
    lat = lattice_from_vectors([[1, 2, 3], [2, 4, 6]])
    assert lat.rank == 1 and lat.index() is None
    with pytest.raises(IntLinError):
        lat.reduce([0, 0, 0])
    empty = lattice_from_vectors([], ambient_dim=2)
    assert empty.member([0, 0]) and not empty.member([0, 1])
    assert Lattice(2, ()).rank == 0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=5),
       st.lists(st.integers(-20, 20), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_reduce_is_a_coset_invariant(vs, v, coeffs):
    lat = lattice_from_vectors(vs)
    if lat.rank < 3:
        return
    w = list(v)
    for k, row in zip(coeffs, lat.basis):
        w = [a + k * b for a, b in zip(w, row)]
    assert lat.reduce(v) == lat.reduce(w)
    assert lat.member([a - b for a, b in zip(v, lat.reduce(v))])
