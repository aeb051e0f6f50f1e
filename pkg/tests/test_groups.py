import itertools

import pytest

from ybetools.groups import (
    FiniteGroup,
    GroupError,
    alternating4,
    cyclic,
    dihedral,
    direct_product,
    from_permutations,
    group_axiom_failures,
    isomorphism,
    quaternion,
    small_groups,
    symmetric,
)
from ybetools.perm import parse_cycles

GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 12: 2}
AUT_ORDERS = {"C8": 4, "C4xC2": 8, "C2xC2xC2": 168, "D8": 8, "Q8": 24, "S3": 6, "C2xC2": 6}


@pytest.mark.parametrize("m", sorted(GROUP_COUNTS))
def test_small_groups_are_pairwise_non_isomorphic(m):
    groups = small_groups(m)
    assert len(groups) == GROUP_COUNTS[m]
    assert all(g.order == m for _, g in groups)
    for (_, g), (_, h) in itertools.combinations(groups, 2):
        assert isomorphism(g, h) is None


def test_automorphism_group_orders():
    for m in (4, 6, 8):
        for name, g in small_groups(m):
            if name in AUT_ORDERS:
                assert len(g.automorphisms) == AUT_ORDERS[name], name


def test_isomorphism_is_a_homomorphism():
    g = from_permutations([parse_cycles("(1234)", 4), parse_cycles("(13)", 4)])
    h = dihedral(4)
    f = isomorphism(g, h)
    assert f is not None and f[0] == 0
    assert all(f[g.mul(a, b)] == h.mul(f[a], f[b]) for a in g.elements for b in g.elements)
    assert isomorphism(quaternion(), h) is None


def test_axiom_failures():
    assert group_axiom_failures([[0, 1], [1, 0]]) == []
    assert group_axiom_failures([[0, 1], [1, 1]])
    assert group_axiom_failures([[1, 0], [0, 1]])
    # a Latin square that is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    assert group_axiom_failures(bad)
    with pytest.raises(GroupError):
        FiniteGroup(bad)


def test_invariants():
    s3, a4, q8, d8 = symmetric(3), alternating4(), quaternion(), dihedral(4)
    assert s3.order_statistics() == {1: 1, 2: 3, 3: 2}
    assert q8.order_statistics() == {1: 1, 2: 1, 4: 6}
    assert d8.order_statistics() == {1: 1, 2: 5, 4: 2}
    assert len(s3.center()) == 1 and len(q8.center()) == 2
    assert q8.is_nilpotent() and d8.is_nilpotent() and not s3.is_nilpotent()
    assert len(s3.sylow_subgroups(2)) == 3 and len(s3.sylow_subgroups(3)) == 1
    assert len(a4.sylow_subgroups(3)) == 4 and len(a4.sylow_subgroups(2)) == 1
    assert s3.is_p_nilpotent(2) and not s3.is_p_nilpotent(3)
    assert a4.is_p_nilpotent(3) and not a4.is_p_nilpotent(2)
    assert a4.has_abelian_normal_sylow(2) and not a4.has_abelian_normal_sylow(3)
    assert s3.all_sylows_cyclic() and not a4.all_sylows_cyclic() and not q8.all_sylows_cyclic()
    assert len(q8.subgroups()) == 6 and len(d8.subgroups()) == 10
    assert all(q8.is_normal(h) for h in q8.subgroups())
    assert not all(d8.is_normal(h) for h in d8.subgroups())


def test_products_and_generation():
    g = direct_product(cyclic(4), cyclic(2))
    assert g.order == 8 and g.is_abelian() and g.exponent() == 4
    assert g.generated(g.generating_set()) == frozenset(g.elements)
    assert g.upper_central_series()[-1] == frozenset(g.elements)
    assert all(g.power(a, g.element_order(a)) == 0 for a in g.elements)
    assert all(g.mul(a, g.inv(a)) == 0 for a in g.elements)
