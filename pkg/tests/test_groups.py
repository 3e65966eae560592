import itertools

import pytest

from hgw.catalog import catalog_group, catalog_names
from hgw.dsl import build_group
from hgw.errors import EnumerationOverflow
from hgw.groups import (
    SubgroupHandle,
    all_isomorphisms,
    as_finite_group,
    automorphisms,
    core_of,
    holomorph,
    is_isomorphic,
    left_regular,
    right_regular,
    subgroups,
    subgroups_brute_oracle,
)
from hgw.perm import Permutation


@pytest.mark.parametrize("spec", ["C6", "D4", "Q8", "A4", "S4", "C7:C3", "D21", "C42"])
def test_associativity_full(spec):
    group = build_group(spec)
    assert group.check_associative()


def test_associativity_every_catalog_group():
    for order in (1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 42):
        for name in catalog_names(order):
            assert catalog_group(name).check_associative(), name


def test_left_right_regular_commute_and_regular():
    for spec in ["C6", "D4", "S4"]:
        group = build_group(spec)
        lam, rho = left_regular(group), right_regular(group)
        assert lam.is_regular() and rho.is_regular()
        for lg in lam.elements:
            for rh in rho.elements:
                assert lg * rh == rh * lg


def test_lambda_rho_intersection_is_center():
    for spec in ["C6", "D4", "S4", "D21"]:
        group = build_group(spec)
        lam = {p.images for p in left_regular(group).elements}
        rho = {p.images for p in right_regular(group).elements}
        center_lams = {tuple(group.table[z]) for z in group.center()}
        assert lam & rho == center_lams


def test_abelian_lambda_equals_rho():
    group = build_group("C6")
    assert left_regular(group) == right_regular(group)


def test_left_regular_c2():
    lam = left_regular(build_group("C2"))
    assert {p.images for p in lam.elements} == {(0, 1), (1, 0)}


def test_subgroup_counts():
    assert len(subgroups(build_group("C6"))) == 4
    assert len(subgroups(build_group("S4"))) == 30
    subs_d7 = subgroups(build_group("D7"))
    assert len(subs_d7) == 10
    assert sorted(h.order for h in subs_d7) == [1, 2, 2, 2, 2, 2, 2, 2, 7, 14]


@pytest.mark.parametrize("spec", ["C6", "C8", "D4", "Q8", "C2 x C2 x C2", "D6", "C12", "A4"])
def test_subgroups_match_brute_oracle(spec):
    group = build_group(spec)
    ours = {frozenset(h.members) for h in subgroups(group)}
    oracle = set(subgroups_brute_oracle(group))
    assert ours == oracle


def test_subgroups_cap():
    with pytest.raises(EnumerationOverflow):
        subgroups(build_group("C6"), cap=4)


def test_core_of():
    d21 = build_group("D21")
    for handle in subgroups(d21):
        core = core_of(d21, handle)
        # the core is normal, inside J, and contains every normal subgroup inside J
        assert core.member_set <= handle.member_set
        assert all(d21.conj(g, x) in core.member_set for g in range(42) for x in core.members)
    d7_sub = next(h for h in subgroups(d21)
                  if h.order == 14)
    assert core_of(d21, d7_sub).order == 7


def test_core_contains_every_normal_subgroup_inside():
    group = build_group("S4")
    subs = subgroups(group)
    normal = [h for h in subs
              if all(group.conj(g, x) in h.member_set for g in range(24) for x in h.members)]
    for handle in subs:
        core = core_of(group, handle)
        for n_handle in normal:
            if n_handle.member_set <= handle.member_set:
                assert n_handle.member_set <= core.member_set


def test_core_of_normal_is_itself():
    group = build_group("C42")
    for handle in subgroups(group):
        assert core_of(group, handle).member_set == handle.member_set


def test_automorphism_counts():
    assert automorphisms(build_group("C7")).order == 6
    aut = automorphisms(build_group("C2 x C2 x C2"))
    assert aut.order == 168
    assert aut.order == 7 * 6 * 4  # ordered bases of F_2^3


def test_holomorph_orders():
    for spec, aut_order in [("C6", 2), ("C7", 6), ("D4", 8)]:
        group = build_group(spec)
        hol = holomorph(group)
        assert hol.order == group.order * aut_order
    assert holomorph(build_group("C6")).order == 12


def test_holomorph_order_identity_up_to_24():
    for order in (1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24):
        for name in catalog_names(order):
            group = catalog_group(name)
            assert holomorph(group).order == group.order * automorphisms(group).order


def test_is_isomorphic_equivalence_relation():
    pool = [catalog_group(n) for order in (4, 6, 8, 12) for n in catalog_names(order)]
    pool += [as_finite_group(left_regular(build_group("D6"))),
             as_finite_group(right_regular(build_group("Q8")))]
    assert len(pool) <= 20
    k = len(pool)
    matrix = [[is_isomorphic(pool[i], pool[j]) for j in range(k)] for i in range(k)]
    for i in range(k):
        assert matrix[i][i]  # reflexive
    for i, j in itertools.combinations(range(k), 2):
        assert matrix[i][j] == matrix[j][i]  # symmetric
    for i, j, l in itertools.product(range(k), repeat=3):
        if matrix[i][j] and matrix[j][l]:
            assert matrix[i][l]  # transitive


def test_all_isomorphisms_are_isos():
    c6, d3 = build_group("C6"), build_group("D3")
    assert all_isomorphisms(c6, d3) == []
    autos = all_isomorphisms(c6, c6)
    assert len(autos) == 2
    q8 = build_group("Q8")
    maps = all_isomorphisms(q8, q8)
    assert len(maps) == 24
    for m in maps[:4]:
        for a in range(8):
            for b in range(8):
                assert m[q8.mul(a, b)] == q8.mul(m[a], m[b])


def test_subgroup_handle_perms():
    group = build_group("S4")
    lam = left_regular(group)
    handle = SubgroupHandle(lam, (0, 1))
    perms = handle.element_perms()
    assert perms[0] == Permutation.identity(24)
