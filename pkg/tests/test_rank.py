import json
import math

import pytest

from corpus import all_subgroups, corpus, small_groups
from equirank.equivariant import classify_elementary_collapsing
from equirank.errors import IndexOutOfRange
from equirank.group_core import cyclic_group, normalizer
from equirank.gset import classify, coset_action, disjoint_union, regular_action, trivial_action
from equirank.rank import (
    aut_order,
    end_order,
    generating_set_V,
    generating_set_W,
    kappa,
    relative_rank,
    u_set,
)


def _brute_W(a):
    """Distinct [x -> y] images, built straight from the definition."""
    m = a.point_count
    orbit = [frozenset(row[x] for row in a.act) for x in range(m)]
    stab = [{g for g, row in enumerate(a.act) if row[x] == x} for x in range(m)]
    images = set()
    for x in range(m):
        for y in range(m):
            if orbit[x] == orbit[y] or not stab[x] <= stab[y]:
                continue
            img = list(range(m))
            for row in a.act:
                img[row[x]] = row[y]
            images.add(tuple(img))
    return images


def test_u_sets_z4(z4_shift, z4_class):
    sizes = [len(u_set(z4_shift, z4_class, i)) for i in range(3)]
    assert sizes == [1, 2, 3]
    assert [u.canonical.elements for u in u_set(z4_shift, z4_class, 1)] == [(0, 2), (0, 1, 2, 3)]
    with pytest.raises(IndexOutOfRange):
        u_set(z4_shift, z4_class, 3)


def test_kappa_examples(z4_class):
    assert kappa(z4_class) == 1
    reg = regular_action(cyclic_group(3))
    assert kappa(classify(reg)) == 1
    assert kappa(classify(disjoint_union(reg, reg))) == 0


def test_relative_rank_examples(z4_shift, z2_shift):
    r = relative_rank(z4_shift)
    assert (r.relative_rank, r.aut_order, r.end_order) == (5, 1536, 65536)
    r = relative_rank(z2_shift)
    assert (r.relative_rank, r.aut_order, r.end_order) == (2, 4, 16)


def test_rank_report_json(z4_shift):
    doc = relative_rank(z4_shift).to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert doc["aut_order"] == "1536" and doc["end_order"] == "65536"
    assert [row["u_size"] for row in doc["classes"]] == [1, 2, 3]
    assert doc["kappa"] == 1 and doc["relative_rank"] == 5


def test_orders_are_exact_integers():
    a = disjoint_union(regular_action(cyclic_group(4)), trivial_action(cyclic_group(4), 30))
    # a free orbit plus 30 fixed points: huge End, still exact
    assert end_order(a) == 30**30 * 34
    assert aut_order(a) == math.factorial(30) * 4


def test_generating_set_W(z2_shift, z4_shift):
    W2 = generating_set_W(z2_shift)
    assert [f.image for f in W2] == [(3, 1, 2, 3), (0, 0, 0, 3), (0, 3, 3, 3), (0, 1, 2, 0)]
    assert {f.image for f in W2} == _brute_W(z2_shift)
    assert len(W2) == 4
    W4 = generating_set_W(z4_shift)
    assert {f.image for f in W4} == _brute_W(z4_shift)
    assert len(W4) == 40
    assert generating_set_W(regular_action(cyclic_group(5))) == []


def test_generating_set_V(z2_shift, z4_shift):
    V = generating_set_V(z4_shift)
    assert [(g.source, g.target) for g in V] == [(0, 15), (5, 0), (1, 5), (1, 0), (1, 3)]
    V = generating_set_V(z2_shift)
    assert [(g.source, g.target) for g in V] == [(0, 3), (1, 0)]
    assert generating_set_V(regular_action(cyclic_group(3))) == []


def test_coset_orders():
    for G in small_groups().values():
        for H in all_subgroups(G):
            a = coset_action(G, H)
            r = relative_rank(a)
            assert r.relative_rank == 0
            assert r.aut_order == r.end_order == normalizer(G, H).order // H.order


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_group_rank(n):
    r = relative_rank(trivial_action(cyclic_group(1), n))
    assert r.relative_rank == (1 if n >= 2 else 0)
    assert r.aut_order == math.factorial(n)
    assert r.end_order == n**n


@pytest.mark.parametrize("inst", corpus(), ids=lambda i: i[0])
def test_rank_invariants(inst):
    _, a = inst
    c = classify(a)
    r = relative_rank(a, c)
    assert r.relative_rank == sum(row.u_size for row in r.classes) - r.kappa
    assert r.aut_order <= r.end_order
    assert (r.relative_rank == 0) == (r.aut_order == r.end_order)
    V = generating_set_V(a, c)
    assert len(V) == r.relative_rank
    for g in V:
        assert classify_elementary_collapsing(a, c, g.map) == g.ctype
    assert len({g.ctype for g in V}) == len(V)
