"""Brute-force ground truth for the closed formulas.

Nothing here calls the rank formulas.  End_G(X) is enumerated by trying every
target for every orbit representative and keeping the ones whose equivariant
extension is well defined; monoid closures are plain breadth-first searches
over image vectors.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb, prod
from typing import Iterable, Optional, Sequence

import numpy as np

from .equivariant import (
    CollapsingType,
    GMap,
    MapLike,
    classify_elementary_collapsing,
    is_equivariant,
    orbit_swap,
    translation,
    _image,
)
from .errors import BudgetExceeded, NotEquivariant, NotGenerating, SearchBudgetExceeded
from .group_core import is_subgroup_leq, n_conjugacy_class
from .gset import Classification, GAction, classify, is_transitive, restrict_action

DEFAULT_ENUM_BUDGET = 2**20
DEFAULT_SEARCH_BUDGET = 10**7


@dataclass(frozen=True)
class MapSet:
    members: frozenset
    closed_under_composition: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f) -> bool:
        return _image(f) in self.members

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.members)


def admissible_targets(a: GAction) -> list[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """For each orbit, its points and every well-defined image vector on them.

    The orbit of representative x is listed as ``(g.x for g)`` deduplicated;
    a candidate y is admissible when ``g.x -> g.y`` never sends one point to
    two places.
    """
    seen = [False] * a.point_count
    out = []
    for x in a.points():
        if seen[x]:
            continue
        pts = sorted({row[x] for row in a.act})
        for p in pts:
            seen[p] = True
        options = []
        for y in a.points():
            img = {}
            ok = True
            for row in a.act:
                p, q = row[x], row[y]
                if img.setdefault(p, q) != q:
                    ok = False
                    break
            if ok:
                options.append(tuple(img[p] for p in pts))
        out.append((tuple(pts), options))
    return out


def end_count(a: GAction) -> int:
    return prod(len(opts) for _, opts in admissible_targets(a))


def _end_array(a: GAction, budget: int) -> np.ndarray:
    parts = admissible_targets(a)
    total = prod(len(opts) for _, opts in parts)
    if total > budget:
        raise BudgetExceeded(f"End_G(X) has {total} members, budget is {budget}")
    m = a.point_count
    idx = np.arange(total)
    out = np.empty((total, m), dtype=np.int64)
    stride = total
    for pts, opts in parts:
        stride //= len(opts)
        choice = (idx // stride) % len(opts)
        out[:, list(pts)] = np.asarray(opts, dtype=np.int64)[choice]
    return out


def _bijective_rows(arr: np.ndarray) -> np.ndarray:
    if arr.shape[1] == 0:
        return np.ones(len(arr), dtype=bool)
    return (np.sort(arr, axis=1) == np.arange(arr.shape[1])).all(axis=1)


def enumerate_end(a: GAction, budget: int = DEFAULT_ENUM_BUDGET) -> MapSet:
    arr = _end_array(a, budget)
    return MapSet(frozenset(map(tuple, arr.tolist())), True)


def enumerate_aut(a: GAction, budget: int = DEFAULT_ENUM_BUDGET) -> MapSet:
    arr = _end_array(a, budget)
    arr = arr[_bijective_rows(arr)]
    return MapSet(frozenset(map(tuple, arr.tolist())), True)


def _closure_keys(m: int, seeds: Sequence[tuple[int, ...]], budget: int, stop_at: Optional[int] = None):
    """Breadth-first closure of ``seeds`` plus the identity under composition.

    Frontier elements are composed with every seed on both sides.  Image
    vectors are hashed as ``bytes`` (composition is ``bytes.translate``) when
    the point count fits in a byte, otherwise as tuples.
    """
    use_bytes = m <= 256
    if use_bytes:
        pad = bytes(256 - m)
        conv = bytes
        ident = bytes(range(m))
        seeds = list(dict.fromkeys(bytes(s) for s in seeds))
        tables = [s + pad for s in seeds]

        def products(e):
            et = e + pad
            for s, st in zip(seeds, tables):
                yield e.translate(st)     # s o e
                yield s.translate(et)     # e o s
    else:
        conv = tuple
        ident = tuple(range(m))
        seeds = list(dict.fromkeys(tuple(s) for s in seeds))

        def products(e):
            for s in seeds:
                yield tuple(s[v] for v in e)
                yield tuple(e[v] for v in s)

    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for p in products(e):
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"closure exceeded {budget} members")
                    if stop_at is not None and len(seen) >= stop_at:
                        return seen
        frontier = nxt
    del conv
    return seen


def monoid_closure(a: GAction, seeds: Iterable[MapLike], budget: int = DEFAULT_ENUM_BUDGET) -> MapSet:
    m = a.point_count
    imgs = [_image(s) for s in seeds]
    for s in imgs:
        if not is_equivariant(a, s):
            raise NotEquivariant(f"seed {list(s)} is not equivariant")
    keys = _closure_keys(m, imgs, budget)
    return MapSet(frozenset(tuple(k) for k in keys), True)


def aut_generators(a: GAction, c: Optional[Classification] = None) -> list[GMap]:
    """Generators of Aut_G(X) following its wreath-product shape.

    Per stabilizer class: translations ``tau_{x,k}`` on every orbit for every
    k in the normalizer, plus orbit swaps between consecutive orbits.
    """
    c = c or classify(a)
    stabs = c.point_stabilizers
    ident = tuple(a.points())
    out: dict[tuple, GMap] = {}
    for e in c.classes:
        reps = [next(p for p in orb if stabs[p] == e.rep) for orb in e.orbits]
        for x in reps:
            for k in e.normalizer.elements:
                t = translation(a, x, k)
                if t.image != ident:
                    out.setdefault(t.image, t)
        for x, y in zip(reps, reps[1:]):
            s = orbit_swap(a, x, y)
            out.setdefault(s.image, s)
    return list(out.values())


def generates_modulo_aut(
    a: GAction,
    W: Iterable[MapLike],
    aut_seeds: Optional[Sequence[MapLike]] = None,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> bool:
    """True iff W together with Aut_G(X) generates all of End_G(X)."""
    target = end_count(a)
    if target > budget:
        raise BudgetExceeded(f"End_G(X) has {target} members, budget is {budget}")
    seeds = [_image(f) for f in (aut_generators(a) if aut_seeds is None else aut_seeds)]
    ws = [_image(f) for f in W]
    for w in ws:
        if not is_equivariant(a, w):
            raise NotEquivariant(f"{list(w)} is not equivariant")
    return len(_closure_keys(a.point_count, seeds + ws, budget, stop_at=target)) == target


def min_generating_size(
    a: GAction,
    cap: int,
    budget: int = DEFAULT_ENUM_BUDGET,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> int:
    """Least k <= cap such that some k non-invertible maps generate End modulo Aut.

    Exhaustive over subsets of the non-invertible members of End_G(X);
    returns ``cap + 1`` when no subset of size <= cap works.
    """
    arr = _end_array(a, budget)
    target = len(arr)
    noninv = sorted(map(tuple, arr[~_bijective_rows(arr)].tolist()))
    tests = sum(comb(len(noninv), k) for k in range(cap + 1))
    if tests > search_budget:
        raise SearchBudgetExceeded(
            f"{tests} subset tests over {len(noninv)} maps exceeds budget {search_budget}"
        )
    seeds = [g.image for g in aut_generators(a)]
    for k in range(cap + 1):
        for combo in itertools.combinations(noninv, k):
            if len(_closure_keys(a.point_count, seeds + list(combo), budget, stop_at=target)) == target:
                return k
    return cap + 1


def collapsing_types(a: GAction, c: Optional[Classification] = None) -> list[CollapsingType]:
    """Every realizable type ``(i, [K]_{N_i})``, read off collapsings ``[x -> y]``
    with ``G_x = H_i`` exactly."""
    c = c or classify(a)
    stabs = c.point_stabilizers
    found: dict[CollapsingType, None] = {}
    for i, e in enumerate(c.classes):
        x = next(p for p in e.block if stabs[p] == e.rep)
        for y in a.points():
            if c.point_orbit[y] == c.point_orbit[x] or not is_subgroup_leq(stabs[x], stabs[y]):
                continue
            found.setdefault(CollapsingType(i, n_conjugacy_class(a.group, stabs[y], e.normalizer)))
    return sorted(found, key=lambda t: (t.class_index, t.target_class.key))


@dataclass
class LowerBoundReport:
    consistent: bool
    coverage: list[tuple[CollapsingType, Optional[int]]]
    offending: Optional[list[list[int]]] = None

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else "violation"

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "types": [
                dict(t.describe(), covered_by=idx) for t, idx in self.coverage
            ],
        }
        if self.offending is not None:
            out["offending_set"] = self.offending
        return out


def verify_lower_bound(
    a: GAction,
    W: Sequence[MapLike],
    c: Optional[Classification] = None,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> LowerBoundReport:
    """Check that a generating set contains an elementary collapsing of every type.

    ``coverage`` pairs each type with the index of the first member of W
    classified to it (None when uncovered).
    """
    c = c or classify(a)
    ws = [_image(f) for f in W]
    if not generates_modulo_aut(a, ws, budget=budget):
        raise NotGenerating("the given set does not generate End_G(X) modulo Aut_G(X)")
    kinds = [classify_elementary_collapsing(a, c, w) for w in ws]
    coverage = []
    for t in collapsing_types(a, c):
        idx = next((j for j, k in enumerate(kinds) if k == t), None)
        coverage.append((t, idx))
    ok = all(idx is not None for _, idx in coverage)
    return LowerBoundReport(ok, coverage, None if ok else [list(w) for w in ws])


@dataclass
class CheckResult:
    name: str
    passed: bool
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self, timings: bool = True) -> dict:
        out = {"name": self.name, "passed": self.passed, "counts": self.counts}
        if timings:
            out["elapsed_s"] = round(self.elapsed, 6)
        return out


def _reach(maps: MapSet, m: int) -> set[tuple[int, int]]:
    return {(x, f[x]) for f in maps.members for x in range(m)}


def check_invariant_suite(a: GAction, budget: int = DEFAULT_ENUM_BUDGET) -> list[CheckResult]:
    """Executable versions of the structural lemmas, checked by enumeration."""
    results = []
    c = classify(a)
    stabs = c.point_stabilizers
    m = a.point_count

    t0 = time.perf_counter()
    end = enumerate_end(a, budget)
    aut = enumerate_aut(a, budget)
    end_pairs = _reach(end, m)
    aut_pairs = _reach(aut, m)
    noninv = MapSet(frozenset(f for f in end.members if len(set(f)) < m))
    noninv_pairs = _reach(noninv, m)
    setup = time.perf_counter() - t0

    t0 = time.perf_counter()
    bad = [(x, y) for x in range(m) for y in range(m)
           if ((x, y) in aut_pairs) != (stabs[x] == stabs[y])]
    results.append(CheckResult(
        "bijective_map_iff_equal_stabilizers", not bad,
        {"pairs": m * m, "mismatches": len(bad), "aut": len(aut)},
        time.perf_counter() - t0 + setup,
    ))

    t0 = time.perf_counter()
    bad = []
    checked = 0
    for x in range(m):
        for y in range(m):
            if c.point_orbit[x] == c.point_orbit[y]:
                continue
            checked += 1
            leq = is_subgroup_leq(stabs[x], stabs[y])
            if ((x, y) in end_pairs) != leq or ((x, y) in noninv_pairs) != leq:
                bad.append((x, y))
    results.append(CheckResult(
        "map_across_orbits_iff_stabilizer_contained", not bad,
        {"pairs": checked, "mismatches": len(bad), "end": len(end)},
        time.perf_counter() - t0,
    ))

    t0 = time.perf_counter()
    transitive = is_transitive(a)
    ok = (end.members == aut.members) if transitive else True
    results.append(CheckResult(
        "transitive_end_equals_aut", ok,
        {"transitive": transitive, "end": len(end), "aut": len(aut)},
        time.perf_counter() - t0,
    ))

    t0 = time.perf_counter()
    ok = True
    rows = []
    for e in c.classes:
        block = e.block
        sub = restrict_action(a, block)
        sub_aut = len(enumerate_aut(sub, budget))
        bset = set(block)
        setwise = sum(1 for f in aut.members if all(f[x] in bset for x in block))
        pointwise = sum(1 for f in aut.members if all(f[x] == x for x in block))
        good = sub_aut * pointwise == setwise == len(aut)
        ok &= good
        rows.append([sub_aut, pointwise, setwise])
    results.append(CheckResult(
        "block_quotient_identity", ok, {"blocks": rows, "aut": len(aut)},
        time.perf_counter() - t0,
    ))

    t0 = time.perf_counter()
    ok = True
    rows = []
    for e in c.classes:
        sub_end = len(enumerate_end(restrict_action(a, e.block), budget))
        expect = (e.normalizer.order // e.rep.order) ** e.alpha * e.alpha ** e.alpha
        ok &= sub_end == expect
        rows.append([sub_end, expect])
    results.append(CheckResult(
        "block_end_is_wreath_with_full_transformations", ok, {"blocks": rows},
        time.perf_counter() - t0,
    ))
    return results
