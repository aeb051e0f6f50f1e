import math

import pytest
from hypothesis import given, strategies as st

from ybetools.perm import (
    ClosureCapExceeded,
    Permutation,
    PermError,
    all_sylows_cyclic,
    closure,
    compose,
    inverse,
    order,
    p_part,
    parse_cycles,
    prime_divisors,
    sylow_cyclic,
)


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(n)).map(lambda im: Permutation(tuple(im))))


def perm_pairs(max_n=9):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        st.permutations(range(n)).map(lambda im: Permutation(tuple(im))),
        st.permutations(range(n)).map(lambda im: Permutation(tuple(im)))))


def test_parse_compact_and_spaced():
    assert parse_cycles("(123)", 4).images == (1, 2, 0, 3)
    assert parse_cycles("(1 2 3)", 4) == parse_cycles("(123)", 4)
    assert parse_cycles("(12)(34)", 4).images == (1, 0, 3, 2)
    assert parse_cycles("()", 3).is_identity()
    assert parse_cycles("(1 10)", 10).images[0] == 9


@pytest.mark.parametrize("text", ["(11)", "(15)", "(1 2", "x", "(12)(2 3)"])
def test_parse_rejects(text):
    with pytest.raises(PermError):
        parse_cycles(text, 4)


def test_not_a_bijection():
    with pytest.raises(PermError):
        Permutation((0, 0, 1))


def test_compose_applies_right_factor_first():
    p, q = parse_cycles("(123)", 3), parse_cycles("(12)", 3)
    for i in range(3):
        assert compose(p, q)(i) == p(q(i))
    assert p * q == compose(p, q)


def test_closure_small_groups():
    s3 = closure([parse_cycles("(123)", 3), parse_cycles("(12)", 3)])
    assert s3.order == 6
    assert s3.order_statistics() == {1: 1, 2: 3, 3: 2}
    assert not s3.is_abelian()
    klein = closure([parse_cycles("(12)(34)", 4), parse_cycles("(13)(24)", 4)])
    assert klein.order == 4 and klein.exponent() == 2 and klein.is_abelian()
    c4 = closure([parse_cycles("(1234)", 4)])
    assert sylow_cyclic(c4, 2) and not sylow_cyclic(klein, 2)
    assert all_sylows_cyclic(s3) and not all_sylows_cyclic(klein)


def test_closure_cap():
    gens = [parse_cycles("(12345678)", 8), parse_cycles("(12)", 8)]
    with pytest.raises(ClosureCapExceeded):
        closure(gens, cap=100)
    assert closure(gens).order == math.factorial(8)


def test_arithmetic_helpers():
    assert prime_divisors(360) == [2, 3, 5]
    assert prime_divisors(1) == []
    assert p_part(360, 2) == 8 and p_part(360, 7) == 1


@given(perms())
def test_inverse_and_cycles_roundtrip(p):
    assert (p * inverse(p)).is_identity()
    assert parse_cycles(p.to_cycles(), p.degree) == p
    assert order(p) == math.lcm(*[len(c) for c in p.cycles()] or [1])
    assert (p ** order(p)).is_identity()


@given(perm_pairs())
def test_group_laws(pq):
    p, q = pq
    assert inverse(p * q) == inverse(q) * inverse(p)
    assert (p * q) * p == p * (q * p)
