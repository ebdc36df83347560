import pytest

from corpus import all_subgroups, corpus, small_groups
from equirank.errors import (
    BudgetExceeded,
    GroupMismatch,
    IdentityNotFixing,
    MalformedTable,
    NotCompatible,
    PointOutOfRange,
)
from equirank.group_core import (
    conjugate_subgroup,
    cyclic_group,
    subgroup_closure,
    symmetric_group,
    trivial_subgroup,
    whole_group,
)
from equirank.gset import (
    build_action,
    classify,
    coset_action,
    disjoint_union,
    is_transitive,
    orbit,
    orbits,
    regular_action,
    restrict_action,
    shift_action,
    stabilizer,
    trivial_action,
)


def test_build_action_trivial_group():
    a = build_action(cyclic_group(1), [[0, 1, 2]])
    assert a.point_count == 3


def test_build_action_swap():
    a = build_action(cyclic_group(2), [[0, 1], [1, 0]])
    assert orbit(a, 0) == {0, 1}


def test_build_action_not_compatible():
    with pytest.raises(NotCompatible):
        build_action(cyclic_group(2), [[0, 1], [0, 0]])


def test_build_action_identity_must_fix():
    with pytest.raises(IdentityNotFixing, match="point 0"):
        build_action(cyclic_group(2), [[1, 0], [0, 1]])


def test_build_action_range_and_shape():
    with pytest.raises(PointOutOfRange):
        build_action(cyclic_group(2), [[0, 1], [1, 2]])
    with pytest.raises(MalformedTable):
        build_action(cyclic_group(2), [[0, 1]])


def test_shift_z2_example():
    a = shift_action(cyclic_group(2), 2)
    assert a.point_count == 4
    # config 10 (x(0)=1) goes to 01 (x(1)=1)
    assert a.act[1][1] == 2
    assert a.act[1][3] == 3


def test_shift_alphabet_one():
    for G in (cyclic_group(3), symmetric_group(3)):
        a = shift_action(G, 1)
        assert a.point_count == 1
        assert stabilizer(a, 0) == whole_group(G)


def test_shift_matches_definition():
    # (g.c)(h) = c(g^-1 h), decoded independently
    G = symmetric_group(3)
    q = 2
    a = shift_action(G, q)
    n = G.order
    for x in a.points():
        c = [(x // q**h) % q for h in range(n)]
        for g in G.elements():
            d = [c[G.mul[G.inv[g]][h]] for h in range(n)]
            assert a.act[g][x] == sum(v * q**h for h, v in enumerate(d))


def test_shift_budget():
    with pytest.raises(BudgetExceeded):
        shift_action(cyclic_group(5), 3, budget=100)


def test_z4_shift_orbits_and_stabilizers(z4_shift):
    assert orbit(z4_shift, 5) == {5, 10}
    assert orbit(z4_shift, 0) == {0}
    assert stabilizer(z4_shift, 0) == whole_group(cyclic_group(4))
    assert stabilizer(z4_shift, 5).elements == (0, 2)
    assert stabilizer(z4_shift, 1).elements == (0,)
    with pytest.raises(PointOutOfRange):
        orbit(z4_shift, 16)


def test_coset_action_examples():
    Z4 = cyclic_group(4)
    assert coset_action(Z4, whole_group(Z4)).point_count == 1
    assert coset_action(Z4, trivial_subgroup(Z4)) == regular_action(Z4)
    a = coset_action(Z4, subgroup_closure(Z4, [2]))
    assert a.point_count == 2
    assert a.act[1] == (1, 0)


def test_disjoint_union_examples():
    G = cyclic_group(4)
    one = trivial_action(G, 1)
    u = disjoint_union(one, one)
    assert u.point_count == 2 and len(orbits(u)) == 2
    empty = trivial_action(G, 0)
    assert disjoint_union(one, empty) == one
    assert disjoint_union(empty, one) == one
    u = disjoint_union(coset_action(G, subgroup_closure(G, [2])), coset_action(G, trivial_subgroup(G)))
    assert u.point_count == 6
    assert sorted(len(o) for o in orbits(u)) == [2, 4]
    with pytest.raises(GroupMismatch):
        disjoint_union(one, trivial_action(cyclic_group(2), 1))


def test_restrict_action(z4_shift):
    sub = restrict_action(z4_shift, [1, 2, 4, 8])
    assert sub == regular_action(cyclic_group(4))
    with pytest.raises(MalformedTable):
        restrict_action(z4_shift, [1, 2])


def test_classify_z4(z4_class):
    c = z4_class
    assert c.alphas == [2, 1, 3]
    assert [e.rep.elements for e in c.classes] == [(0, 1, 2, 3), (0, 2), (0,)]
    assert [e.block for e in c.classes][:2] == [(0, 15), (5, 10)]
    assert len(c.classes[2].block) == 12


def test_classify_z2(z2_class):
    assert z2_class.alphas == [2, 1]
    assert [e.rep.order for e in z2_class.classes] == [2, 1]


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_classify_regular(name):
    G = small_groups()[name]
    c = classify(regular_action(G))
    assert c.alphas == [1]
    assert c.classes[0].rep == trivial_subgroup(G)
    assert c.classes[0].orbit_size == G.order


def _union_find_orbits(a):
    parent = list(a.points())

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in a.act:
        for x, y in enumerate(row):
            parent[find(x)] = find(y)
    return len({find(x) for x in a.points()})


@pytest.mark.parametrize("inst", corpus(), ids=lambda i: i[0])
def test_classification_invariants(inst):
    _, a = inst
    G = a.group
    c = classify(a)
    # blocks partition the points; orbit sizes follow orbit-stabilizer
    assert sorted(x for e in c.classes for x in e.block) == list(a.points())
    assert sum(e.alpha * (G.order // e.rep.order) for e in c.classes) == a.point_count
    for e in c.classes:
        assert set(e.block) == {x for o in e.orbits for x in o}
        for o in e.orbits:
            assert len(o) == e.orbit_size
        for x in e.block:
            assert stabilizer(a, x) in e.conjugates
    keys = [(-e.rep.order, e.rep.elements) for e in c.classes]
    assert keys == sorted(keys)
    assert len(c.orbits) == _union_find_orbits(a)
    for x in a.points():
        sx = stabilizer(a, x)
        for g in G.elements():
            assert stabilizer(a, a.act[g][x]) == conjugate_subgroup(G, sx, g)


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_coset_action_transitive(name):
    G = small_groups()[name]
    for H in all_subgroups(G):
        a = coset_action(G, H)
        assert is_transitive(a)
        assert stabilizer(a, 0) == H
