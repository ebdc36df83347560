"""Finite G-sets: action tables, orbits, stabilizers and the stabilizer-class
classification that every counting formula is built on."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    GroupMismatch,
    IdentityNotFixing,
    MalformedTable,
    NotCompatible,
    PointOutOfRange,
)
from .group_core import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    conjugacy_class,
    normalizer,
)

DEFAULT_POINT_BUDGET = 2**20


@dataclass(frozen=True)
class GAction:
    """``act[g][x]`` is ``g . x``."""

    group: FiniteGroup
    act: tuple[tuple[int, ...], ...]

    @property
    def point_count(self) -> int:
        return len(self.act[0]) if self.act else 0

    def points(self) -> range:
        return range(self.point_count)

    def to_json(self, group_spec: str | None = None) -> dict:
        return {
            "group": group_spec if group_spec is not None else self.group.to_json(),
            "points": self.point_count,
            "act": [list(row) for row in self.act],
        }


def build_action(G: FiniteGroup, act_table: Sequence[Sequence[int]]) -> GAction:
    rows = [list(r) for r in act_table]
    if len(rows) != G.order:
        raise MalformedTable(f"action table has {len(rows)} rows, group has {G.order} elements")
    m = len(rows[0])
    for g, row in enumerate(rows):
        if len(row) != m:
            raise MalformedTable(f"row {g} has {len(row)} entries, expected {m}")
        for x, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < m:
                raise PointOutOfRange(f"act[{g}][{x}] = {v!r} is not a point in [0,{m})")
    if m:
        a = np.asarray(rows, dtype=np.int64)
        e = G.identity
        moved = np.flatnonzero(a[e] != np.arange(m))
        if len(moved):
            raise IdentityNotFixing(f"identity moves point {int(moved[0])}")
        mul = np.asarray(G.mul, dtype=np.int64)
        for g in G.elements():
            # [h,x]: act[g][act[h][x]] vs act[gh][x]
            bad = np.argwhere(a[g][a] != a[mul[g]])
            if len(bad):
                h, x = (int(v) for v in bad[0])
                raise NotCompatible(f"g{g}.(g{h}.{x}) != (g{g}g{h}).{x}")
    return GAction(G, tuple(tuple(int(v) for v in row) for row in rows))


def shift_action(G: FiniteGroup, alphabet_size: int, budget: int = DEFAULT_POINT_BUDGET) -> GAction:
    """Shift action on configurations ``G -> {0..q-1}``.

    A configuration ``c`` is encoded as ``sum(c(h) * q**h)``, the element id h
    giving the digit position.  ``(g.c)(h) = c(g^-1 h)``.
    """
    q = alphabet_size
    if q < 1:
        raise MalformedTable(f"alphabet size must be >= 1, got {q}")
    n = G.order
    m = q**n
    if m > budget:
        raise BudgetExceeded(f"shift action has {q}^{n} = {m} points, budget is {budget}")
    pts = np.arange(m, dtype=np.int64)
    weights = q ** np.arange(n, dtype=np.int64)
    digits = (pts[:, None] // weights[None, :]) % q          # [x, h] = c_x(h)
    mul = np.asarray(G.mul)
    rows = []
    for g in G.elements():
        src = mul[G.inv[g]]                                   # h -> g^-1 h
        rows.append(tuple(int(v) for v in digits[:, src] @ weights))
    return GAction(G, tuple(rows))


def coset_action(G: FiniteGroup, H: Subgroup) -> GAction:
    """Left-multiplication action on the cosets aH, ordered by least element."""
    owner = [-1] * G.order
    reps = []
    for a in G.elements():
        if owner[a] < 0:
            idx = len(reps)
            reps.append(a)
            for h in H.elements:
                owner[G.mul[a][h]] = idx
    act = tuple(tuple(owner[G.mul[g][a]] for a in reps) for g in G.elements())
    return GAction(G, act)


def regular_action(G: FiniteGroup) -> GAction:
    return GAction(G, G.mul)


def trivial_action(G: FiniteGroup, m: int) -> GAction:
    """m fixed points."""
    return GAction(G, tuple(tuple(range(m)) for _ in G.elements()))


def disjoint_union(a: GAction, b: GAction) -> GAction:
    if a.group != b.group:
        raise GroupMismatch("disjoint union of actions of different groups")
    shift = a.point_count
    return GAction(
        a.group,
        tuple(ra + tuple(v + shift for v in rb) for ra, rb in zip(a.act, b.act)),
    )


def restrict_action(a: GAction, points: Sequence[int]) -> GAction:
    """The sub-action on a G-invariant point set, renumbered in sorted order."""
    pts = sorted(points)
    index = {x: i for i, x in enumerate(pts)}
    try:
        act = tuple(tuple(index[row[x]] for x in pts) for row in a.act)
    except KeyError as exc:
        raise MalformedTable(f"point set is not G-invariant (escapes to {exc.args[0]})") from None
    return GAction(a.group, act)


def _check_point(a: GAction, x: int) -> None:
    if not 0 <= x < a.point_count:
        raise PointOutOfRange(f"point {x} not in [0,{a.point_count})")


def orbit(a: GAction, x: int) -> frozenset:
    _check_point(a, x)
    return frozenset(row[x] for row in a.act)


def stabilizer(a: GAction, x: int) -> Subgroup:
    _check_point(a, x)
    return Subgroup(tuple(g for g, row in enumerate(a.act) if row[x] == x), a.group.order)


def orbits(a: GAction) -> list[tuple[int, ...]]:
    """All G-orbits as sorted tuples, ordered by least point."""
    seen = [False] * a.point_count
    out = []
    for x in a.points():
        if not seen[x]:
            orb = sorted(orbit(a, x))
            for y in orb:
                seen[y] = True
            out.append(tuple(orb))
    return out


def is_transitive(a: GAction) -> bool:
    return len(orbits(a)) <= 1


@dataclass(frozen=True)
class ClassEntry:
    """One stabilizer conjugacy class [H_i] with its block and orbits."""

    rep: Subgroup
    conjugates: SubgroupClass
    normalizer: Subgroup
    block: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def alpha(self) -> int:
        return len(self.orbits)

    @property
    def orbit_reps(self) -> tuple[int, ...]:
        return tuple(o[0] for o in self.orbits)

    @property
    def orbit_size(self) -> int:
        return self.rep.group_order // self.rep.order


@dataclass(frozen=True)
class Classification:
    classes: tuple[ClassEntry, ...]
    stabs: tuple[Subgroup, ...]
    point_stabilizers: tuple[Subgroup, ...]
    point_class: tuple[int, ...]
    point_orbit: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.classes)

    @property
    def alphas(self) -> list[int]:
        return [c.alpha for c in self.classes]


def point_stabilizers(a: GAction) -> list[Subgroup]:
    n = a.group.order
    cols = [[] for _ in a.points()]
    for g, row in enumerate(a.act):
        for x, y in enumerate(row):
            if x == y:
                cols[x].append(g)
    return [Subgroup(tuple(c), n) for c in cols]


def classify(a: GAction) -> Classification:
    """Group points by the conjugacy class of their stabilizer.

    Classes come out by descending stabilizer order, ties broken by the
    canonical member's carrier.
    """
    G = a.group
    stabs = point_stabilizers(a)
    orbs = orbits(a)
    point_orbit = [0] * a.point_count
    for i, o in enumerate(orbs):
        for x in o:
            point_orbit[x] = i

    class_of: dict[Subgroup, SubgroupClass] = {}
    grouped: dict[SubgroupClass, list[tuple[int, ...]]] = {}
    for o in orbs:
        h = stabs[o[0]]
        cls = class_of.get(h)
        if cls is None:
            cls = conjugacy_class(G, h)
            for member in cls.members:
                class_of[member] = cls
        grouped.setdefault(cls, []).append(o)

    order = sorted(grouped, key=lambda c: (-c.canonical.order, c.canonical.elements))
    entries = []
    for cls in order:
        os_ = tuple(grouped[cls])
        rep = cls.canonical
        entries.append(
            ClassEntry(
                rep=rep,
                conjugates=cls,
                normalizer=normalizer(G, rep),
                block=tuple(sorted(x for o in os_ for x in o)),
                orbits=os_,
            )
        )
    point_class = [0] * a.point_count
    for i, e in enumerate(entries):
        for x in e.block:
            point_class[x] = i
    return Classification(
        classes=tuple(entries),
        stabs=tuple(sorted(set(stabs), key=lambda s: s.key)),
        point_stabilizers=tuple(stabs),
        point_class=tuple(point_class),
        point_orbit=tuple(point_orbit),
        orbits=tuple(orbs),
    )
