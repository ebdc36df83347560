"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 parse error,
3 validation error, 4 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .equivariant import classify_elementary_collapsing, compose, is_equivariant, kernel
from .errors import BudgetExceeded, EquirankError, SpecParseError, ValidationError
from .formats import dumps, parse_action, parse_group, parse_map
from .gset import DEFAULT_POINT_BUDGET, GAction, classify
from .oracle import (
    DEFAULT_ENUM_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    aut_generators,
    check_invariant_suite,
    collapsing_types,
    end_count,
    enumerate_aut,
    enumerate_end,
    generates_modulo_aut,
    min_generating_size,
    verify_lower_bound,
)
from .rank import generating_set_V, generating_set_W, relative_rank

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    group_spec: Optional[str]
    action_spec: str
    output_format: str = "json"
    budget_enum: int = DEFAULT_ENUM_BUDGET
    budget_search: int = DEFAULT_SEARCH_BUDGET
    budget_points: int = DEFAULT_POINT_BUDGET

    def load(self) -> GAction:
        G = parse_group(self.group_spec) if self.group_spec else None
        return parse_action(self.action_spec, G, self.budget_points)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecParseError(message)


def _render_text(obj, prefix="") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            lines += _render_text(v, f"{prefix}.{k}" if prefix else str(k))
        return lines
    if isinstance(obj, list) and any(isinstance(v, dict) for v in obj):
        lines = []
        for i, v in enumerate(obj):
            lines += _render_text(v, f"{prefix}[{i}]")
        return lines
    return [f"{prefix} = {json.dumps(obj, separators=(',', ':'))}"]


def _emit(report: dict, args) -> None:
    text = dumps(report) if args.format == "json" else "\n".join(_render_text(report)) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def analyze_report(a: GAction) -> dict:
    c = classify(a)
    return {
        "group_order": a.group.order,
        "points": a.point_count,
        "r": c.r,
        "alpha": c.alphas,
        "classes": [
            {
                "stabilizer": list(e.rep.elements),
                "stabilizer_order": e.rep.order,
                "conjugates": [list(h.elements) for h in e.conjugates.members],
                "normalizer": list(e.normalizer.elements),
                "alpha": e.alpha,
                "orbit_size": e.orbit_size,
                "block": list(e.block),
                "orbit_reps": list(e.orbit_reps),
            }
            for e in c.classes
        ],
        "partition": [[list(o) for o in e.orbits] for e in c.classes],
        "stabs": [list(s.elements) for s in c.stabs],
    }


def gens_report(a: GAction, which: str) -> dict:
    c = classify(a)
    if which == "V":
        maps = [
            {"image": list(g.map.image), "source": g.source, "target": g.target,
             "type": g.ctype.describe()}
            for g in generating_set_V(a, c)
        ]
    else:
        maps = []
        for f in generating_set_W(a, c):
            t = classify_elementary_collapsing(a, c, f)
            maps.append({"image": list(f.image), "type": t.describe() if t else None})
    return {"set": which, "size": len(maps), "maps": maps}


def verify_report(a: GAction, cfg: RunConfig, exhaustive_min: bool, min_cap: Optional[int],
                  timings: bool) -> tuple[dict, int]:
    c = classify(a)
    rank = relative_rank(a, c)
    report = {"rank": rank.to_json(), "checks": []}
    total = end_count(a)
    if total > cfg.budget_enum:
        report["budget_refused"] = (
            f"End_G(X) has {total} members, enumeration budget is {cfg.budget_enum}"
        )
        return report, EXIT_BUDGET

    checks = []

    def run(name, fn):
        t0 = time.perf_counter()
        passed, counts = fn()
        checks.append({"name": name, "passed": passed, "counts": counts,
                       "elapsed_s": round(time.perf_counter() - t0, 6)})

    V = [g.map for g in generating_set_V(a, c)]
    W = generating_set_W(a, c)

    def orders():
        n_end = len(enumerate_end(a, cfg.budget_enum))
        n_aut = len(enumerate_aut(a, cfg.budget_enum))
        return (n_end == rank.end_order and n_aut == rank.aut_order,
                {"end": n_end, "aut": n_aut})

    def closure_v():
        ok = generates_modulo_aut(a, V, budget=cfg.budget_enum)
        return ok, {"closure_size": total if ok else None, "v_size": len(V),
                    "aut_generators": len(aut_generators(a, c))}

    def minimal_v():
        broken = [not generates_modulo_aut(a, V[:j] + V[j + 1:], budget=cfg.budget_enum)
                  for j in range(len(V))]
        return all(broken), {"removals_breaking": sum(broken), "v_size": len(V)}

    def lower(W_):
        def fn():
            rep = verify_lower_bound(a, W_, c, budget=cfg.budget_enum)
            return rep.consistent, {"types": len(rep.coverage), "relative_rank": rank.relative_rank,
                                    "verdict": rep.verdict}
        return fn

    def count_types():
        n = len(collapsing_types(a, c))
        return n == rank.relative_rank, {"types": n}

    run("orders_match_enumeration", orders)
    run("v_generates_modulo_aut", closure_v)
    run("v_is_minimal", minimal_v)
    run("collapsing_type_count", count_types)
    run("lower_bound_V", lower(V))
    run("lower_bound_W", lower(W))
    for r in check_invariant_suite(a, cfg.budget_enum):
        checks.append(r.to_json())
    if exhaustive_min:
        cap = rank.relative_rank + 1 if min_cap is None else min_cap

        def search():
            k = min_generating_size(a, cap, cfg.budget_enum, cfg.budget_search)
            return k == rank.relative_rank, {"min_size": k, "cap": cap}
        run("exhaustive_min_generating_size", search)
    if not timings:
        for ch in checks:
            ch.pop("elapsed_s", None)
    report["checks"] = checks
    report["all_passed"] = all(ch["passed"] for ch in checks)
    return report, EXIT_OK if report["all_passed"] else EXIT_FAIL


def _config(args) -> RunConfig:
    return RunConfig(
        group_spec=args.group,
        action_spec=args.action,
        output_format=args.format,
        budget_enum=args.budget_enum,
        budget_search=args.budget_search,
        budget_points=args.budget_points,
    )


def cmd_analyze(args) -> int:
    _emit(analyze_report(_config(args).load()), args)
    return EXIT_OK


def cmd_rank(args) -> int:
    _emit(relative_rank(_config(args).load()).to_json(), args)
    return EXIT_OK


def cmd_gens(args) -> int:
    _emit(gens_report(_config(args).load(), args.set), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    report, code = verify_report(cfg.load(), cfg, args.exhaustive_min, args.min_cap, not args.no_timings)
    _emit(report, args)
    return code


def cmd_shift(args) -> int:
    G = parse_group(args.group)
    a = parse_action(f"shift:{args.alphabet}", G, args.budget_points)
    spec = args.group if not args.group.startswith("file:") else None
    _emit(a.to_json(spec), args)
    return EXIT_OK


def cmd_map(args) -> int:
    a = _config(args).load()
    if args.map_cmd == "check":
        f = parse_map(args.map)
        _emit({"equivariant": is_equivariant(a, f), "bijective": f.is_bijective()}, args)
    elif args.map_cmd == "compose":
        f, g = parse_map(args.f), parse_map(args.g)
        _emit({"image": list(compose(f, g).image)}, args)
    else:
        k = kernel(parse_map(args.map))
        _emit({"classes": [list(b) for b in k.classes], "pair_count": k.pair_count}, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="equirank", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, group_required=False):
        sp.add_argument("--group", required=group_required,
                        help="cyclic:n | symmetric:k | dihedral:n | file:path")
        sp.add_argument("--format", choices=["json", "text"], default="json")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--budget-enum", type=int, default=DEFAULT_ENUM_BUDGET)
        sp.add_argument("--budget-search", type=int, default=DEFAULT_SEARCH_BUDGET)
        sp.add_argument("--budget-points", type=int, default=DEFAULT_POINT_BUDGET)

    def with_action(sp):
        common(sp)
        sp.add_argument("--action", required=True,
                        help="shift:q | coset:<gens> | regular | fixed:m | file:path | union:A+B")

    sp = sub.add_parser("analyze", help="orbit/stabilizer classification")
    with_action(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("rank", help="relative rank and orders by formula")
    with_action(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("gens", help="explicit generating set V (or W)")
    with_action(sp)
    sp.add_argument("--set", choices=["V", "W"], default="V")
    sp.set_defaults(func=cmd_gens)

    sp = sub.add_parser("verify", help="cross-check every formula by enumeration")
    with_action(sp)
    sp.add_argument("--exhaustive-min", action="store_true",
                    help="also search exhaustively for the least generating set")
    sp.add_argument("--min-cap", type=int, help="subset size cap for --exhaustive-min")
    sp.add_argument("--no-timings", action="store_true", help="omit elapsed times (byte-stable output)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("shift", help="write a shift action file")
    common(sp, group_required=True)
    sp.add_argument("--alphabet", type=int, required=True)
    sp.set_defaults(func=cmd_shift)

    sp = sub.add_parser("map", help="inspect equivariant maps")
    msub = sp.add_subparsers(dest="map_cmd", required=True, parser_class=_Parser)
    for name in ("check", "kernel"):
        mp = msub.add_parser(name)
        with_action(mp)
        mp.add_argument("--map", required=True, help="JSON array or @file")
    mp = msub.add_parser("compose", help="f o g (g applied first)")
    with_action(mp)
    mp.add_argument("--f", required=True)
    mp.add_argument("--g", required=True)
    sp.set_defaults(func=cmd_map)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValidationError as exc:
        print(f"validation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EquirankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
