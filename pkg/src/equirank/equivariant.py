"""Equivariant self-maps of a G-set.

Maps are plain image vectors (``image[x]`` is the image of x).  Equivariance
is checked where a map enters from outside; composing equivariant maps needs
no re-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .errors import (
    BindingMismatch,
    EscapesSubset,
    LengthMismatch,
    NotEquivariant,
    NotEquivariantOnSubset,
    NotInNormalizer,
    NotInvariant,
    PointOutOfRange,
    SameOrbit,
    StabilizerMismatch,
    StabilizerNotContained,
)
from .group_core import (
    SubgroupClass,
    conjugate_subgroup,
    is_subgroup_leq,
    n_conjugacy_class,
    normalizer,
)
from .gset import Classification, GAction, orbit, stabilizer


@dataclass(frozen=True)
class GMap:
    image: tuple[int, ...]

    def __post_init__(self):
        m = len(self.image)
        for x, y in enumerate(self.image):
            if not 0 <= y < m:
                raise PointOutOfRange(f"image[{x}] = {y} is not a point in [0,{m})")

    @classmethod
    def identity(cls, m: int) -> "GMap":
        return cls(tuple(range(m)))

    @property
    def point_count(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __len__(self) -> int:
        return len(self.image)

    def is_bijective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def to_json(self) -> list[int]:
        return list(self.image)


MapLike = Union[GMap, Sequence[int]]


def _image(f: MapLike) -> tuple[int, ...]:
    return f.image if isinstance(f, GMap) else tuple(f)


def is_equivariant(a: GAction, f: MapLike) -> bool:
    img = _image(f)
    if len(img) != a.point_count:
        raise LengthMismatch(f"map has length {len(img)}, action has {a.point_count} points")
    return all(img[row[x]] == row[img[x]] for row in a.act for x in a.points())


def compose(f: GMap, g: GMap) -> GMap:
    """``f o g``: apply g first."""
    if len(f) != len(g):
        raise BindingMismatch(f"cannot compose maps on {len(f)} and {len(g)} points")
    fi = f.image
    return GMap(tuple(fi[y] for y in g.image))


def _extend(a: GAction, img: list[int], x: int, target_of) -> None:
    # g.x -> target_of(g) for every g
    for g, row in enumerate(a.act):
        img[row[x]] = target_of(g)


def collapsing(a: GAction, x: int, y: int) -> GMap:
    """``[x -> y]``: sends g.x to g.y, fixes every point outside Gx."""
    ox = orbit(a, x)
    if y in ox:
        raise SameOrbit(f"{x} and {y} lie in the same orbit")
    if not is_subgroup_leq(stabilizer(a, x), stabilizer(a, y)):
        raise StabilizerNotContained(f"stabilizer of {x} is not contained in stabilizer of {y}")
    img = list(a.points())
    _extend(a, img, x, lambda g: a.act[g][y])
    return GMap(tuple(img))


def translation(a: GAction, x: int, k: int) -> GMap:
    """``tau_{x,k}``: g.x -> gk.x on Gx, identity elsewhere."""
    G = a.group
    if not 0 <= k < G.order:
        raise NotInNormalizer(f"{k} is not an element of the group")
    if k not in normalizer(G, stabilizer(a, x)):
        raise NotInNormalizer(f"element {k} does not normalize the stabilizer of {x}")
    img = list(a.points())
    _extend(a, img, x, lambda g: a.act[G.mul[g][k]][x])
    return GMap(tuple(img))


def orbit_swap(a: GAction, x: int, y: int) -> GMap:
    """``[x, y]``: exchanges g.x and g.y, identity elsewhere."""
    if stabilizer(a, x) != stabilizer(a, y):
        raise StabilizerMismatch(f"points {x} and {y} have different stabilizers")
    if y in orbit(a, x):
        raise SameOrbit(f"{x} and {y} lie in the same orbit")
    img = list(a.points())
    _extend(a, img, x, lambda g: a.act[g][y])
    _extend(a, img, y, lambda g: a.act[g][x])
    return GMap(tuple(img))


@dataclass(frozen=True)
class KernelRelation:
    """Partition of the points by equal image; blocks sorted by least point."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def pair_count(self) -> int:
        return sum(len(b) ** 2 for b in self.classes)

    def refines(self, other: "KernelRelation") -> bool:
        """True iff every block of self lies inside a block of other."""
        where = {}
        for i, b in enumerate(other.classes):
            for x in b:
                where[x] = i
        return all(len({where[x] for x in b}) == 1 for b in self.classes)


def kernel(f: MapLike) -> KernelRelation:
    groups: dict[int, list[int]] = {}
    for x, y in enumerate(_image(f)):
        groups.setdefault(y, []).append(x)
    return KernelRelation(tuple(sorted(tuple(b) for b in groups.values())))


def extend_by_identity(a: GAction, sub_points, f_sub: Mapping[int, int]) -> GMap:
    """Act as ``f_sub`` on a G-invariant subset and as the identity elsewhere."""
    ys = set(sub_points)
    for x in ys:
        if not 0 <= x < a.point_count:
            raise PointOutOfRange(f"point {x} not in [0,{a.point_count})")
        for row in a.act:
            if row[x] not in ys:
                raise NotInvariant(f"{row[x]} = g.{x} leaves the subset")
    img = list(a.points())
    for x in ys:
        if x not in f_sub:
            raise EscapesSubset(f"no image given for {x}")
        if f_sub[x] not in ys:
            raise EscapesSubset(f"{x} maps to {f_sub[x]}, outside the subset")
        img[x] = f_sub[x]
    for row in a.act:
        for x in ys:
            if img[row[x]] != row[img[x]]:
                raise NotEquivariantOnSubset(f"f(g.{x}) != g.f({x})")
    return GMap(tuple(img))


@dataclass(frozen=True)
class CollapsingType:
    """Type ``(i, [K]_{N_i})`` of an elementary collapsing."""

    class_index: int
    target_class: SubgroupClass

    def describe(self) -> dict:
        return {
            "class_index": self.class_index,
            "target_stabilizer": list(self.target_class.canonical.elements),
        }


def _merge_closure(a: GAction, x: int, y: int) -> list[int]:
    # union-find over {(g.x, g.y)}; returns a canonical label per point
    parent = list(a.points())

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for row in a.act:
        ru, rv = find(row[x]), find(row[y])
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(u) for u in a.points()]


def _labels(ker: KernelRelation, m: int) -> list[int]:
    out = [0] * m
    for b in ker.classes:
        for x in b:
            out[x] = b[0]
    return out


def classify_elementary_collapsing(
    a: GAction, c: Classification, f: MapLike
) -> Optional[CollapsingType]:
    """Return the type of f if it is an elementary collapsing, else None.

    f qualifies when its kernel is exactly the equivalence relation generated
    by ``{(g.x, g.y)}`` for two points x, y in different orbits with
    ``G_x <= G_y``, and ``[G_f(x)]`` and ``[G_y]`` agree up to conjugation by
    ``N_i`` once x is moved so that ``G_x = H_i``.
    """
    img = _image(f)
    if not is_equivariant(a, img):
        raise NotEquivariant("map is not equivariant")
    ker = kernel(img)
    merged = [b for b in ker.classes if len(b) > 1]
    if not merged:
        return None
    orbit_ids = sorted({c.point_orbit[x] for b in merged for x in b})
    if len(orbit_ids) != 2:
        return None
    labels = _labels(ker, a.point_count)
    G = a.group
    stabs = c.point_stabilizers
    for src, dst in (orbit_ids, orbit_ids[::-1]):
        x = c.orbits[src][0]
        block = next(b for b in merged if x in b)
        ys = [u for u in block if c.point_orbit[u] == dst]
        if len(ys) != 1:
            continue
        y = ys[0]
        if not is_subgroup_leq(stabs[x], stabs[y]):
            continue
        if _merge_closure(a, x, y) != labels:
            continue
        i = c.point_class[x]
        entry = c.classes[i]
        # move x by the least g with g G_x g^-1 = H_i
        g = next(g for g in G.elements() if conjugate_subgroup(G, stabs[x], g) == entry.rep)
        x2, y2 = a.act[g][x], a.act[g][y]
        n_i = entry.normalizer
        target = n_conjugacy_class(G, stabs[img[x2]], n_i)
        if stabs[y2] not in target:
            continue
        return CollapsingType(i, target)
    return None
