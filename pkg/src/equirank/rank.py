"""Closed formulas for the relative rank of End_G(X) modulo Aut_G(X), the
explicit generating sets W and V, and the orders of Aut_G(X) and End_G(X)."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .equivariant import CollapsingType, GMap, collapsing
from .errors import IndexOutOfRange
from .group_core import SubgroupClass, is_subgroup_leq, n_conjugacy_class
from .gset import Classification, GAction, classify


def u_set(a: GAction, c: Classification, i: int) -> list[SubgroupClass]:
    """``U(H_i)``: the N_i-classes of stabilizers containing H_i, by canonical key."""
    if not 0 <= i < c.r:
        raise IndexOutOfRange(f"class index {i} not in [0,{c.r})")
    entry = c.classes[i]
    found: dict[SubgroupClass, None] = {}
    for K in c.stabs:
        if is_subgroup_leq(entry.rep, K):
            found.setdefault(n_conjugacy_class(a.group, K, entry.normalizer))
    return sorted(found, key=lambda s: s.key)


def kappa(c: Classification) -> int:
    return sum(1 for e in c.classes if e.alpha == 1)


def aut_order(a: GAction, c: Optional[Classification] = None) -> int:
    c = c or classify(a)
    out = 1
    for e in c.classes:
        out *= (e.normalizer.order // e.rep.order) ** e.alpha * factorial(e.alpha)
    return out


def end_order(a: GAction, c: Optional[Classification] = None) -> int:
    """Product over orbit representatives x of ``#{y : G_x <= G_y}``."""
    c = c or classify(a)
    stabs = c.point_stabilizers
    counts: dict = {}
    out = 1
    for orb in c.orbits:
        h = stabs[orb[0]]
        if h not in counts:
            counts[h] = sum(1 for s in stabs if is_subgroup_leq(h, s))
        out *= counts[h]
    return out


@dataclass(frozen=True)
class ClassRank:
    stabilizer: tuple[int, ...]
    stabilizer_order: int
    alpha: int
    u_classes: tuple[SubgroupClass, ...]

    @property
    def u_size(self) -> int:
        return len(self.u_classes)


@dataclass(frozen=True)
class RankReport:
    classes: tuple[ClassRank, ...]
    kappa: int
    relative_rank: int
    aut_order: int
    end_order: int

    def to_json(self) -> dict:
        return {
            "classes": [
                {
                    "stabilizer": list(cr.stabilizer),
                    "stabilizer_order": cr.stabilizer_order,
                    "alpha": cr.alpha,
                    "u_size": cr.u_size,
                    "u_classes": [list(u.canonical.elements) for u in cr.u_classes],
                }
                for cr in self.classes
            ],
            "kappa": self.kappa,
            "relative_rank": self.relative_rank,
            "aut_order": str(self.aut_order),
            "end_order": str(self.end_order),
        }


def relative_rank(a: GAction, c: Optional[Classification] = None) -> RankReport:
    c = c or classify(a)
    rows = tuple(
        ClassRank(e.rep.elements, e.rep.order, e.alpha, tuple(u_set(a, c, i)))
        for i, e in enumerate(c.classes)
    )
    k = kappa(c)
    return RankReport(
        classes=rows,
        kappa=k,
        relative_rank=sum(r.u_size for r in rows) - k,
        aut_order=aut_order(a, c),
        end_order=end_order(a, c),
    )


def generating_set_W(a: GAction, c: Optional[Classification] = None) -> list[GMap]:
    """Every ``[x -> y]`` with Gx != Gy and G_x <= G_y, deduplicated, in (x, y) order."""
    c = c or classify(a)
    stabs = c.point_stabilizers
    seen = set()
    out = []
    for x in a.points():
        for y in a.points():
            if c.point_orbit[x] == c.point_orbit[y] or not is_subgroup_leq(stabs[x], stabs[y]):
                continue
            f = collapsing(a, x, y)
            if f.image not in seen:
                seen.add(f.image)
                out.append(f)
    return out


@dataclass(frozen=True)
class Generator:
    """A collapsing ``[source -> target]`` together with its declared type."""

    map: GMap
    source: int
    target: int
    ctype: CollapsingType


def generating_set_V(a: GAction, c: Optional[Classification] = None) -> list[Generator]:
    """The minimal generating set V, one collapsing per type.

    For each class i: ``x_i`` is the least point with stabilizer exactly H_i;
    for each strictly larger class in U(H_i) (ascending canonical key) the
    target is the least point whose stabilizer is that class's canonical
    member; when alpha_i >= 2 a final ``[x_i -> x_i']`` uses the least point
    outside Gx_i with stabilizer exactly H_i.
    """
    c = c or classify(a)
    stabs = c.point_stabilizers
    out = []
    for i, e in enumerate(c.classes):
        x = next(p for p in e.block if stabs[p] == e.rep)
        for u in u_set(a, c, i):
            K = u.canonical
            if K == e.rep:
                continue
            y = next(p for p in a.points() if stabs[p] == K)
            out.append(Generator(collapsing(a, x, y), x, y, CollapsingType(i, u)))
        if e.alpha >= 2:
            ox = c.point_orbit[x]
            x2 = next(p for p in e.block if stabs[p] == e.rep and c.point_orbit[p] != ox)
            own = n_conjugacy_class(a.group, e.rep, e.normalizer)
            out.append(Generator(collapsing(a, x, x2), x, x2, CollapsingType(i, own)))
    return out
