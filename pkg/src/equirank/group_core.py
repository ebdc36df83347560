"""Finite groups given by multiplication tables, and subgroup arithmetic.

Elements are integer ids ``0 .. n-1``.  The identity is detected from the
table, so it need not be element 0.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ElementOutOfRange,
    MalformedTable,
    MissingInverse,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    ParentMismatch,
    TooLarge,
    ZeroOrder,
)

MAX_SYMMETRIC_DEGREE = 5


@dataclass(frozen=True)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(len(self.mul))

    def product(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.mul[out][g]
        return out

    def is_abelian(self) -> bool:
        m = np.asarray(self.mul)
        return bool((m == m.T).all())

    def to_json(self) -> dict:
        return {"order": self.order, "mul": [list(row) for row in self.mul]}


def _key(elements: Sequence[int]) -> tuple:
    return (len(elements), tuple(elements))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, stored as its sorted carrier.

    Ordering (``key``) is by size, then lexicographically by carrier.  Within a
    conjugacy class all members have equal size, so the least member is the
    one with the lexicographically least carrier.
    """

    elements: tuple[int, ...]
    group_order: int

    def __post_init__(self):
        if self.group_order % len(self.elements):
            raise NotASubgroup(
                f"subgroup of size {len(self.elements)} cannot divide group order {self.group_order}"
            )

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> tuple:
        return _key(self.elements)

    @property
    def mask(self) -> int:
        out = 0
        for g in self.elements:
            out |= 1 << g
        return out

    def __contains__(self, g: int) -> bool:
        return g in self._set

    @property
    def _set(self) -> frozenset:
        # cached lazily; frozen dataclass needs object.__setattr__
        s = self.__dict__.get("_members")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_members", s)
        return s

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup({list(self.elements)})"


@dataclass(frozen=True)
class SubgroupClass:
    """``{gHg^-1 : g in N}`` with a canonical member and one witness per member.

    ``witnesses[k]`` is the least g in N with ``g H g^-1 == members[k]``.
    Equality and hashing only look at the member set.
    """

    members: tuple[Subgroup, ...]
    witnesses: tuple[int, ...] = field(compare=False)

    @property
    def canonical(self) -> Subgroup:
        return self.members[0]

    @property
    def key(self) -> tuple:
        return self.canonical.key

    def __contains__(self, h: Subgroup) -> bool:
        return h in self.members

    def witness(self, h: Subgroup) -> int:
        return self.witnesses[self.members.index(h)]

    def __len__(self) -> int:
        return len(self.members)


def build_group(mul_table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Validate a multiplication table and derive identity and inverses."""
    rows = [list(r) for r in mul_table]
    n = len(rows)
    if n == 0:
        raise ZeroOrder("empty multiplication table")
    for g, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"row {g} has length {len(row)}, expected {n}")
        for h, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"entry ({g},{h}) = {v!r} is not an element id in [0,{n})")
    m = np.asarray(rows, dtype=np.int64)
    full = np.arange(n)
    for g in range(n):
        if not np.array_equal(np.sort(m[g]), full):
            h = _first_repeat(m[g])
            raise NotLatinSquare(f"row {g} repeats element {h}")
    for h in range(n):
        if not np.array_equal(np.sort(m[:, h]), full):
            v = _first_repeat(m[:, h])
            raise NotLatinSquare(f"column {h} repeats element {v}")
    identity = None
    for e in range(n):
        if (m[e] == full).all() and (m[:, e] == full).all():
            identity = e
            break
    if identity is None:
        raise NoIdentity("no element acts as a two-sided identity")
    # (ab)c vs a(bc), all triples at once
    left = m[m, :]          # [a,b,c] -> m[m[a,b], c]
    right = m[:, m]         # [a,b,c] -> m[a, m[b,c]]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise NotAssociative(f"(g{a}*g{b})*g{c} != g{a}*(g{b}*g{c})")
    inv = []
    for g in range(n):
        hits = np.flatnonzero(m[g] == identity)
        h = int(hits[0])
        if m[h, g] != identity:
            raise MissingInverse(f"element {g} has no two-sided inverse")
        inv.append(h)
    return FiniteGroup(
        mul=tuple(tuple(int(v) for v in row) for row in rows),
        identity=identity,
        inv=tuple(inv),
    )


def _first_repeat(values) -> int:
    seen = set()
    for v in values:
        v = int(v)
        if v in seen:
            return v
        seen.add(v)
    return -1


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ZeroOrder(f"cyclic group needs n >= 1, got {n}")
    return build_group([[(g + h) % n for h in range(n)] for g in range(n)])


def symmetric_group(k: int) -> FiniteGroup:
    """Sym(k) with elements numbered by the lexicographic order of their words.

    Multiplication is composition, ``(p*q)(i) = p[q[i]]``.
    """
    if k < 1:
        raise ZeroOrder(f"symmetric group needs k >= 1, got {k}")
    if k > MAX_SYMMETRIC_DEGREE:
        raise TooLarge(f"symmetric:{k} has {_factorial(k)} elements; limit is k <= {MAX_SYMMETRIC_DEGREE}")
    return permutation_group(list(itertools.permutations(range(k))), closed=True)


def symmetric_permutations(k: int) -> list[tuple[int, ...]]:
    """The permutation word of each element of ``symmetric_group(k)``, by id."""
    return list(itertools.permutations(range(k)))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def permutation_group(gens: Iterable[Sequence[int]], closed: bool = False) -> FiniteGroup:
    """Group generated by permutation words, elements in lexicographic order."""
    gens = [tuple(p) for p in gens]
    if not gens:
        raise ZeroOrder("need at least one permutation to fix the degree")
    degree = len(gens[0])
    if any(len(p) != degree or sorted(p) != list(range(degree)) for p in gens):
        raise MalformedTable("generators must be permutations of equal degree")
    if closed:
        perms = set(gens)
    else:
        ident = tuple(range(degree))
        perms = {ident}
        todo = deque([ident])
        while todo:
            p = todo.popleft()
            for s in gens:
                q = tuple(s[i] for i in p)
                if q not in perms:
                    perms.add(q)
                    todo.append(q)
    elems = sorted(perms)
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(p[i] for i in q)] for q in elems] for p in elems]
    return build_group(table)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon acting on its vertices (order 2n), n >= 3."""
    if n < 3:
        raise MalformedTable("dihedral_group needs n >= 3")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref])


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """``a x b`` with pair ``(g, h)`` numbered ``g * |b| + h``."""
    nb = b.order
    n = a.order * nb
    table = [
        [a.mul[i // nb][j // nb] * nb + b.mul[i % nb][j % nb] for j in range(n)]
        for i in range(n)
    ]
    return build_group(table)


def _check_elements(G: FiniteGroup, elems: Iterable[int]) -> list[int]:
    out = []
    for g in elems:
        if not isinstance(g, (int, np.integer)) or not 0 <= g < G.order:
            raise ElementOutOfRange(f"element {g!r} is not in [0,{G.order})")
        out.append(int(g))
    return out


def subgroup_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens`` (breadth-first closure)."""
    gens = _check_elements(G, gens)
    seen = {G.identity}
    todo = deque([G.identity])
    steps = set(gens) | {G.inv[g] for g in gens}
    while todo:
        h = todo.popleft()
        for s in steps:
            p = G.mul[h][s]
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return Subgroup(tuple(sorted(seen)), G.order)


def make_subgroup(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Wrap an element set as a Subgroup after checking the subgroup laws."""
    elems = sorted(set(_check_elements(G, elements)))
    if G.identity not in elems:
        raise NotASubgroup("identity missing")
    s = set(elems)
    for a in elems:
        if G.inv[a] not in s:
            raise NotASubgroup(f"not closed under inverse at {a}")
        for b in elems:
            if G.mul[a][b] not in s:
                raise NotASubgroup(f"not closed: {a}*{b}")
    return Subgroup(tuple(elems), G.order)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup((G.identity,), G.order)


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(tuple(G.elements()), G.order)


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    """``g H g^-1``."""
    _check_elements(G, [g])
    _bind(G, H)
    gi = G.inv[g]
    row = G.mul[g]
    return Subgroup(tuple(sorted(G.mul[row[h]][gi] for h in H.elements)), G.order)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    _bind(G, H)
    return Subgroup(
        tuple(g for g in G.elements() if conjugate_subgroup(G, H, g) == H), G.order
    )


def n_conjugacy_class(G: FiniteGroup, H: Subgroup, N: Subgroup) -> SubgroupClass:
    """The N-conjugacy class ``[H]_N``; ``N = G`` gives the full class."""
    _bind(G, H)
    _bind(G, N)
    found: dict[Subgroup, int] = {}
    for g in N.elements:
        c = conjugate_subgroup(G, H, g)
        if c not in found:
            found[c] = g
    members = sorted(found, key=lambda s: s.key)
    return SubgroupClass(tuple(members), tuple(found[s] for s in members))


def conjugacy_class(G: FiniteGroup, H: Subgroup) -> SubgroupClass:
    return n_conjugacy_class(G, H, whole_group(G))


def is_subgroup_leq(H: Subgroup, K: Subgroup) -> bool:
    if H.group_order != K.group_order:
        raise ParentMismatch(
            f"subgroups of groups of order {H.group_order} and {K.group_order}"
        )
    return H._set <= K._set


def _bind(G: FiniteGroup, H: Subgroup) -> None:
    if H.group_order != G.order:
        raise ParentMismatch(f"subgroup belongs to a group of order {H.group_order}, not {G.order}")
