import itertools

import pytest

from corpus import all_subgroups, small_groups
from equirank.errors import (
    ElementOutOfRange,
    MalformedTable,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    ParentMismatch,
    TooLarge,
    ZeroOrder,
)
from equirank.group_core import (
    Subgroup,
    build_group,
    conjugacy_class,
    conjugate_subgroup,
    cyclic_group,
    is_subgroup_leq,
    n_conjugacy_class,
    normalizer,
    subgroup_closure,
    symmetric_group,
    symmetric_permutations,
    trivial_subgroup,
    whole_group,
)


def _perm_id(k, word):
    return list(itertools.permutations(range(k))).index(tuple(word))


def test_build_trivial_group():
    G = build_group([[0]])
    assert G.order == 1 and G.identity == 0 and G.inv == (0,)


def test_build_z4_from_table():
    G = build_group([[(a + b) % 4 for b in range(4)] for a in range(4)])
    assert G.identity == 0
    assert G.inv == (0, 3, 2, 1)


def test_identity_need_not_be_zero():
    # Z2 with the identity stored as element 1
    G = build_group([[1, 0], [0, 1]])
    assert G.identity == 1
    assert G.inv == (0, 1)


def test_not_latin_square():
    with pytest.raises(NotLatinSquare, match="row 0"):
        build_group([[0, 0], [1, 0]])


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        build_group([[0, 1]])
    with pytest.raises(MalformedTable):
        build_group([[0, 2], [1, 0]])
    with pytest.raises(ZeroOrder):
        build_group([])


def test_no_identity():
    # x*y = -x-y mod 3: a Latin square with no identity
    with pytest.raises(NoIdentity):
        build_group([[0, 2, 1], [2, 1, 0], [1, 0, 2]])


def test_not_associative():
    # a loop of order 5 (Latin square with identity 0) that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        build_group(table)


def test_cyclic_builders():
    assert cyclic_group(1).order == 1
    z2 = cyclic_group(2)
    assert z2.inv == (0, 1)
    with pytest.raises(ZeroOrder):
        cyclic_group(0)


def test_symmetric_builders():
    assert symmetric_group(1).order == 1
    assert symmetric_group(2).order == 2
    S3 = symmetric_group(3)
    assert S3.order == 6
    # brute force over words: p o p = id
    words = list(itertools.permutations(range(3)))
    self_inverse = [w for w in words if tuple(w[w[i]] for i in range(3)) == (0, 1, 2)]
    assert len(self_inverse) == 4
    assert sum(1 for g in S3.elements() if S3.inv[g] == g) == 4
    with pytest.raises(TooLarge):
        symmetric_group(6)


def test_symmetric_elements_are_lexicographic_words():
    S3 = symmetric_group(3)
    words = symmetric_permutations(3)
    for g, p in enumerate(words):
        for h, q in enumerate(words):
            assert words[S3.mul[g][h]] == tuple(p[q[i]] for i in range(3))


def test_subgroup_closure():
    Z4 = cyclic_group(4)
    assert subgroup_closure(Z4, []).elements == (0,)
    assert subgroup_closure(Z4, [2]).elements == (0, 2)
    S3 = symmetric_group(3)
    three_cycle = _perm_id(3, (1, 2, 0))
    assert len(subgroup_closure(S3, [three_cycle])) == 3
    with pytest.raises(ElementOutOfRange):
        subgroup_closure(Z4, [4])


def test_conjugate_subgroup():
    S3 = symmetric_group(3)
    H = subgroup_closure(S3, [_perm_id(3, (1, 0, 2))])
    assert conjugate_subgroup(S3, H, S3.identity) == H
    c = _perm_id(3, (1, 2, 0))
    K = conjugate_subgroup(S3, H, c)
    assert K != H and len(K) == 2
    # independent check: c (01) c^-1 as words is the transposition (12)... or (02)
    words = symmetric_permutations(3)
    t = words[K.elements[1]]
    assert sum(1 for i in range(3) if t[i] != i) == 2
    Z4 = cyclic_group(4)
    two = subgroup_closure(Z4, [2])
    assert all(conjugate_subgroup(Z4, two, g) == two for g in Z4.elements())


def test_normalizer():
    Z4 = cyclic_group(4)
    assert normalizer(Z4, subgroup_closure(Z4, [2])) == whole_group(Z4)
    S3 = symmetric_group(3)
    A3 = subgroup_closure(S3, [_perm_id(3, (1, 2, 0))])
    assert normalizer(S3, A3) == whole_group(S3)
    H = subgroup_closure(S3, [_perm_id(3, (1, 0, 2))])
    assert normalizer(S3, H) == H


def test_n_conjugacy_class():
    S3 = symmetric_group(3)
    H = subgroup_closure(S3, [_perm_id(3, (1, 0, 2))])
    assert n_conjugacy_class(S3, H, trivial_subgroup(S3)).members == (H,)
    full = n_conjugacy_class(S3, H, whole_group(S3))
    assert len(full) == 3
    assert all(len(m) == 2 for m in full.members)
    assert full.canonical == min(full.members, key=lambda s: s.elements)
    Z4 = cyclic_group(4)
    two = subgroup_closure(Z4, [2])
    assert n_conjugacy_class(Z4, two, whole_group(Z4)).members == (two,)


def test_is_subgroup_leq():
    Z4 = cyclic_group(4)
    two = subgroup_closure(Z4, [2])
    assert is_subgroup_leq(trivial_subgroup(Z4), two)
    assert is_subgroup_leq(two, two)
    assert is_subgroup_leq(two, whole_group(Z4))
    assert not is_subgroup_leq(whole_group(Z4), two)
    with pytest.raises(ParentMismatch):
        is_subgroup_leq(two, trivial_subgroup(cyclic_group(2)))


def test_lagrange_checked():
    with pytest.raises(NotASubgroup, match="divide"):
        Subgroup((0, 1, 2), 4)


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_group_laws_exhaustive(name):
    G = small_groups()[name]
    n = G.order
    e = G.identity
    for a in range(n):
        assert G.mul[e][a] == G.mul[a][e] == a
        assert G.mul[a][G.inv[a]] == e
        for b in range(n):
            for c in range(n):
                assert G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]]


@pytest.mark.parametrize("name", sorted(small_groups()))
def test_subgroup_invariants(name):
    G = small_groups()[name]
    for H in all_subgroups(G):
        N = normalizer(G, H)
        assert is_subgroup_leq(H, N)
        assert G.order % N.order == 0
        cls = conjugacy_class(G, H)
        # orbit-stabilizer for the conjugation action
        assert len(cls) == G.order // N.order
        for member, w in zip(cls.members, cls.witnesses):
            assert conjugate_subgroup(G, H, w) == member
            assert len(member) == len(H)
        assert cls.canonical in cls
