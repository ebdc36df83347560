"""Group, action and map specifiers plus their JSON file formats.

Group specifiers: ``cyclic:n``, ``symmetric:k``, ``dihedral:n``, ``file:path``.
Action specifiers: ``shift:q``, ``coset:<gens>``, ``regular``, ``fixed:m``,
``file:path`` and ``union:<spec>+<spec>[+...]``.

Coset generators are comma-separated element ids, or one of ``trivial``,
``whole``, ``transposition`` (the least-id involution; in ``symmetric:k``
that is the transposition of the last two symbols).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .equivariant import GMap
from .errors import GroupMismatch, SpecParseError
from .group_core import (
    FiniteGroup,
    Subgroup,
    build_group,
    cyclic_group,
    dihedral_group,
    subgroup_closure,
    symmetric_group,
    trivial_subgroup,
    whole_group,
)
from .gset import (
    DEFAULT_POINT_BUDGET,
    GAction,
    build_action,
    coset_action,
    disjoint_union,
    regular_action,
    shift_action,
    trivial_action,
)


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecParseError(f"{what}: expected an integer, got {text!r}") from None


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path} is not valid JSON: {exc}") from None


def group_from_json(obj: Any) -> FiniteGroup:
    if isinstance(obj, str):
        return parse_group(obj)
    if not isinstance(obj, dict) or "mul" not in obj:
        raise SpecParseError('group object must look like {"order": n, "mul": [[...]]}')
    mul = obj["mul"]
    if not isinstance(mul, list) or not all(isinstance(r, list) for r in mul):
        raise SpecParseError("mul must be a list of lists")
    if "order" in obj and obj["order"] != len(mul):
        raise SpecParseError(f"order {obj['order']} disagrees with a {len(mul)}-row table")
    return build_group(mul)


def parse_group(spec: str) -> FiniteGroup:
    kind, _, arg = spec.partition(":")
    if kind == "cyclic":
        return cyclic_group(_int(arg, spec))
    if kind == "symmetric":
        return symmetric_group(_int(arg, spec))
    if kind == "dihedral":
        return dihedral_group(_int(arg, spec))
    if kind == "file":
        return group_from_json(_read_json(arg))
    raise SpecParseError(f"unknown group specifier {spec!r}")


def parse_subgroup(G: FiniteGroup, text: str) -> Subgroup:
    text = text.strip()
    if text in ("", "trivial"):
        return trivial_subgroup(G)
    if text == "whole":
        return whole_group(G)
    if text in ("transposition", "involution"):
        inv = [g for g in G.elements() if g != G.identity and G.inv[g] == g]
        if not inv:
            raise SpecParseError("group has no element of order 2")
        return subgroup_closure(G, [inv[0]])
    return subgroup_closure(G, [_int(t, "coset generator") for t in text.split(",")])


def _split_union(text: str) -> list[str]:
    # split on '+' outside nested union:(...) parentheses
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p[1:-1] if p.startswith("(") and p.endswith(")") else p for p in parts]


def action_from_json(obj: Any, G: Optional[FiniteGroup] = None) -> GAction:
    if not isinstance(obj, dict) or "act" not in obj:
        raise SpecParseError('action file must look like {"group": ..., "points": m, "act": [[...]]}')
    own = group_from_json(obj["group"]) if "group" in obj else G
    if own is None:
        raise SpecParseError("action file names no group and none was given")
    if G is not None and own != G:
        raise GroupMismatch("action file's group differs from --group")
    act = obj["act"]
    if not isinstance(act, list) or not act or not all(isinstance(r, list) for r in act):
        raise SpecParseError("act must be a non-empty list of lists")
    if "points" in obj and act and obj["points"] != len(act[0]):
        raise SpecParseError(f"points {obj['points']} disagrees with rows of length {len(act[0])}")
    return build_action(own, act)


def parse_action(spec: str, G: Optional[FiniteGroup], point_budget: int = DEFAULT_POINT_BUDGET) -> GAction:
    kind, _, arg = spec.partition(":")
    if kind == "file":
        return action_from_json(_read_json(arg), G)
    if G is None:
        raise SpecParseError(f"action {spec!r} needs --group")
    if kind == "shift":
        return shift_action(G, _int(arg, spec), budget=point_budget)
    if kind == "coset":
        return coset_action(G, parse_subgroup(G, arg))
    if kind == "regular" and not arg:
        return regular_action(G)
    if kind == "fixed":
        m = _int(arg, spec)
        if m < 1:
            raise SpecParseError("fixed:m needs m >= 1")
        return trivial_action(G, m)
    if kind == "union":
        parts = _split_union(arg)
        if len(parts) < 2:
            raise SpecParseError("union needs at least two operands joined by '+'")
        out = parse_action(parts[0], G, point_budget)
        for p in parts[1:]:
            out = disjoint_union(out, parse_action(p, G, point_budget))
        return out
    raise SpecParseError(f"unknown action specifier {spec!r}")


def parse_map(text: str) -> GMap:
    """A map given inline as a JSON array, or ``@path`` to a JSON file."""
    obj = _read_json(text[1:]) if text.startswith("@") else _loads(text)
    if not isinstance(obj, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in obj):
        raise SpecParseError("a map must be a JSON array of integers")
    return GMap(tuple(obj))


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"not valid JSON: {exc}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
