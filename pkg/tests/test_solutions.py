import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from ybetools import FIXTURE_NAMES, TABLE_FIXTURES, load_fixture
from ybetools.perm import Permutation, parse_cycles
from ybetools.solutions import (
    NotInvolutiveError,
    Solution,
    SolutionError,
    canonical_form,
    count_solutions,
    distinct_up_to_isomorphism,
    enumerate_solutions,
    format_solution_text,
    is_involutive,
    is_isomorphic,
    load_solution,
    mp_level,
    parse_solution_text,
    permutation_group,
    retract,
    retraction_chain,
    solution_from_json,
    verify,
)

MP_LEVELS = {"mp-example": 3, "lyubashenko": 1}
GROUP_ORDERS = {"prop-4-13": 8, "prop-4-19": 8, "prop-GI": 64, "exa-15579": 32, "mp-example": 4,
                "lyubashenko": 2, "table-4-13-1": 32, "table-4-13-2": 32, "table-4-13-3": 32,
                "table-4-13-4": 32, "table-4-19-1": 16, "table-4-19-2": 16, "table-4-19-3": 32,
                "table-4-19-4": 32}


def is_iso_map(a, b, f):
    return all(b.r(f[x], f[y]) == tuple(f[z] for z in a.r(x, y))
               for x in range(a.n) for y in range(a.n))


def brute_isomorphic(a, b):
    return any(is_iso_map(a, b, f) for f in itertools.permutations(range(a.n)))


def non_involutive_example():
    f = parse_cycles("(123)", 3)
    return Solution(3, (f,) * 3, (f,) * 3)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_is_an_involutive_solution(name):
    s = load_fixture(name)
    rep = verify(s)
    assert rep.ok and rep.bijective_r and rep.braid and rep.nondegenerate
    assert is_involutive(s)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_mp_level_and_group_order(name):
    s = load_fixture(name)
    assert mp_level(s) == MP_LEVELS.get(name)
    assert permutation_group(s).order == GROUP_ORDERS[name]


def test_table_solutions_retract_to_four_points():
    for name in TABLE_FIXTURES:
        sizes = [t.n for t in retraction_chain(load_fixture(name))]
        assert sizes == [8, 4]


def test_retraction_of_the_mp_example():
    s = load_fixture("mp-example")
    assert [t.n for t in retraction_chain(s)] == [4, 3, 2, 1]
    ret, cls = retract(s)
    assert len(set(cls)) == ret.n
    assert [c for i, c in enumerate(cls) if c not in cls[:i]] == list(range(ret.n))
    assert all(s.sigma[x] == s.sigma[y] for x in range(s.n) for y in range(s.n)
               if cls[x] == cls[y])


def test_trivial_solutions():
    swap = Solution.from_cycles(["()"] * 3)
    assert verify(swap).ok and is_involutive(swap) and mp_level(swap) == 1
    one = Solution.from_cycles(["()"])
    assert mp_level(one) == 0


def test_non_involutive_solution():
    s = non_involutive_example()
    assert verify(s).ok
    assert not is_involutive(s)
    with pytest.raises(NotInvolutiveError):
        retract(s)
    with pytest.raises(NotInvolutiveError):
        mp_level(s)


def test_braid_failure_is_reported():
    t = parse_cycles("(12)", 3)
    e = parse_cycles("()", 3)
    s = Solution(3, (t, e, e), (e, e, e))
    rep = verify(s)
    assert rep.nondegenerate and not rep.braid and not rep.ok


def test_text_and_json_roundtrip(tmp_path):
    for name in ("prop-4-19", "mp-example"):
        s = load_fixture(name)
        assert parse_solution_text(format_solution_text(s)) == s
        assert solution_from_json(json.loads(json.dumps(s.to_json_dict()))) == s
        path = tmp_path / f"{name}.txt"
        path.write_text("# transcribed\n" + format_solution_text(s))
        assert load_solution(path) == s


@pytest.mark.parametrize("text", ["1: (12)\n3: (12)\n", "1 (12)\n", "1: (12) | (12)\n2: ()\n",
                                  "1: (1) | (1) | (1)\n"])
def test_bad_text_is_rejected(text):
    with pytest.raises(SolutionError):
        parse_solution_text(text)


def test_json_size_mismatch():
    with pytest.raises(SolutionError):
        solution_from_json({"n": 3, "sigma": [[0, 1], [0, 1]], "tau": [[0, 1], [0, 1]]})
    with pytest.raises(SolutionError):
        solution_from_json({"sigma": [[0]]})


def test_enumeration_counts():
    assert [count_solutions(n) for n in (1, 2, 3, 4)] == [
        {"total": 1, "not_mp": 0}, {"total": 2, "not_mp": 0},
        {"total": 5, "not_mp": 0}, {"total": 23, "not_mp": 2}]


def test_enumeration_matches_bruteforce_oracle_n3():
    # every pair of sigma/tau tables, no pruning, classes by naive relabelling
    n = 3
    perms = [Permutation(p) for p in itertools.permutations(range(n))]
    found = [Solution(n, sig, tau)
             for sig in itertools.product(perms, repeat=n)
             for tau in itertools.product(perms, repeat=n)]
    found = [s for s in found if is_involutive(s) and verify(s).ok]
    classes = {min(json.dumps(s.relabel(f).to_json_dict()) for f in itertools.permutations(range(n)))
               for s in found}
    assert len(found) == 12
    assert len(classes) == 5 == len(enumerate_solutions(3))


def test_enumerated_solutions_are_valid_and_pairwise_distinct():
    for n in (1, 2, 3, 4):
        sols = enumerate_solutions(n)
        assert all(verify(s).ok and is_involutive(s) for s in sols)
        assert distinct_up_to_isomorphism(sols)
        for a, b in itertools.combinations(sols, 2):
            assert not brute_isomorphic(a, b)


def test_enumeration_threads_agree():
    assert enumerate_solutions(4, threads=4) == enumerate_solutions(4)


def test_size_limits():
    with pytest.raises(SolutionError):
        enumerate_solutions(5)
    with pytest.raises(SolutionError):
        canonical_form(load_fixture("prop-GI"))


def test_isomorphism_against_bruteforce_on_size_4():
    sols = enumerate_solutions(4)
    for a in sols[:8]:
        for b in sols:
            f = is_isomorphic(a, b)
            assert (f is not None) == brute_isomorphic(a, b)
            if f is not None:
                assert is_iso_map(a, b, f)


def test_retraction_of_example_is_prop_4_13():
    ret, _ = retract(load_fixture("exa-15579"))
    f = is_isomorphic(ret, load_fixture("prop-4-13"))
    assert f is not None and is_iso_map(ret, load_fixture("prop-4-13"), f)


def test_distinct_fixtures_are_not_isomorphic():
    assert is_isomorphic(load_fixture("prop-4-13"), load_fixture("prop-4-19")) is None


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["prop-4-13", "prop-4-19", "table-4-19-1", "exa-15579", "mp-example"]),
       st.data())
def test_relabelled_copy_is_isomorphic(name, data):
    s = load_fixture(name)
    f = data.draw(st.permutations(range(s.n)))
    t = s.relabel(f)
    assert verify(t).ok
    g = is_isomorphic(s, t)
    assert g is not None and is_iso_map(s, t, g)
    if s.n <= 4:
        assert canonical_form(t) == canonical_form(s)
    assert mp_level(t) == mp_level(s)
