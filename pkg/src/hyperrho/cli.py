"""Command-line interface: ``hyperrho {spectral,bounds,transform,generate,enumerate,verify}``.

Exit codes: 0 ok, 2 parse / usage error, 3 non-convergence, 4 precondition
violation, 5 extremal mismatch or other falsified statement.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import (
    BoundReport,
    all_bounds,
    bound_max_degree,
    bound_thm31,
    bound_thm31_weak,
)
from .errors import (
    ChainViolation,
    Disconnected,
    ExtremalMismatch,
    HypergraphError,
    InvalidParams,
    NoConvergence,
    ScaleExceeded,
    TheoremViolation,
    TransformError,
)
from .extremal import (
    DEFAULT_ALPHAS,
    FamilyConstraint,
    enumerate_hypercacti,
    enumerate_hypertrees,
    rho_table,
    run_suite,
    standard_constraints,
    verify_broom_chain,
)
from .families import FAMILIES, generate
from .hypergraph import components, is_connected, parse, serialize
from .spectral import DEFAULT_MAX_ITER, DEFAULT_SHIFT, DEFAULT_TOL, check_alpha, spectral_radius
from .transforms import (
    TransformOutcome,
    attach_path,
    check_consolidate_increase,
    check_graft_compare,
    check_move_increase,
    check_switch_increase,
)

EXIT_PARSE, EXIT_NUMERIC, EXIT_PRECONDITION, EXIT_MISMATCH = 2, 3, 4, 5
SIG_DIGITS = 15


class UsageError(Exception):
    pass


# --- formatting ---------------------------------------------------------------

def _num(x):
    """Round floats to 15 significant digits; recurse into containers."""
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x):.{SIG_DIGITS}g}")
    if isinstance(x, np.ndarray):
        return [_num(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {str(k): _num(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    if hasattr(x, "value") and isinstance(x.value, str):  # str enums
        return x.value
    return x


def _human(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.extend(_human(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for i, val in enumerate(obj):
            if isinstance(val, (dict, list)) and not _flat(val):
                lines.append(f"{pad}- [{i}]")
                lines.extend(_human(val, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _flat(val) -> bool:
    return isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val)


def _scalar(val) -> str:
    if isinstance(val, float):
        return repr(val)
    if isinstance(val, str) and "\n" in val:
        return val.strip().replace("\n", " | ")
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(v) for v in val) + "]"
    return str(val)


def emit(payload: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    payload = _num(payload)
    if fmt == "json":
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    else:
        stream.write("\n".join(_human(payload)) + "\n")


def _envelope(command: str, args, inputs: dict, alphas, results) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "alpha": list(alphas),
        "tolerances": {"tol": args.tol, "max_iter": args.max_iter, "shift": args.shift},
        "results": results,
    }


def _spectral_opts(args) -> dict:
    return {"tol": args.tol, "max_iter": args.max_iter, "shift": args.shift}


def _read_input(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse(text)


def _parse_alphas(text: str) -> list[float]:
    try:
        return [check_alpha(float(tok)) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spectral_record(res) -> dict:
    return {
        "rho": res.rho,
        "perron": res.perron,
        "iterations": res.iterations,
        "residual_inf": res.residual_inf,
        "bracket": list(res.bracket),
    }


def _bound_record(b: BoundReport, rho: float | None) -> dict:
    return {
        "name": b.name,
        "value": b.value,
        "slack": None if rho is None else b.value - rho,
        "equality_case": b.equality_case,
        "certificate": b.certificate,
        "inputs": b.inputs,
        "note": b.note,
    }


def _outcome_record(out: TransformOutcome) -> dict:
    return {
        "result": serialize(out.result),
        "precondition_evidence": out.precondition_evidence,
        "hypothesis": out.hypothesis,
        "asserted": out.asserted,
        "rho_before": out.rho_before,
        "rho_after": out.rho_after,
        "strict_increase": out.strict_increase,
    }


# --- commands -----------------------------------------------------------------

def cmd_spectral(args) -> int:
    G = _read_input(args.input)
    opts = _spectral_opts(args)
    results = []
    for a in args.alpha:
        if is_connected(G):
            results.append({"alpha": a, **_spectral_record(spectral_radius(G, a, **opts))})
            continue
        parts = []
        for H, verts in components(G):
            rec = _spectral_record(spectral_radius(H, a, **opts))
            parts.append({"vertices": verts, **rec})
        best = max(range(len(parts)), key=lambda i: parts[i]["rho"])
        results.append({"alpha": a, "rho": parts[best]["rho"], "max_component": best, "components": parts})
    emit(_envelope("spectral", args, {"path": args.input, "k": G.k, "n": G.n, "m": G.m}, args.alpha, results),
         args.format)
    return 0


def cmd_bounds(args) -> int:
    G = _read_input(args.input)
    opts = _spectral_opts(args)
    connected = is_connected(G)
    results = []
    for a in args.alpha:
        if connected:
            res = spectral_radius(G, a, **opts)
            rho = res.rho
            reports = all_bounds(G, a, res)
        else:
            rho = max(spectral_radius(H, a, **opts).rho for H, _ in components(G))
            reports = [bound_max_degree(G, a), bound_thm31(G, a), bound_thm31_weak(G, a)]
        results.append({"alpha": a, "rho": rho, "connected": connected,
                        "bounds": [_bound_record(b, rho) for b in reports]})
    emit(_envelope("bounds", args, {"path": args.input, "k": G.k, "n": G.n, "m": G.m}, args.alpha, results),
         args.format)
    return 0


def cmd_generate(args) -> int:
    G = generate(args.family, *args.params)
    text = serialize(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _transform_description(args) -> dict:
    desc: dict = {}
    if args.spec:
        raw = Path(args.spec).read_text() if Path(args.spec).exists() else args.spec
        try:
            desc.update(json.loads(raw))
        except json.JSONDecodeError as exc:
            raise UsageError(f"transform description is not valid JSON: {exc}") from None
    for key in ("u", "e", "f", "p", "q", "s", "edge", "keep", "spare"):
        val = getattr(args, key, None)
        if val is not None:
            desc[key] = val
    if args.move:
        desc["moves"] = [[int(t) for t in item.split(":")] for item in args.move]
    if args.U:
        desc["U"] = [int(t) for t in args.U.split(",")]
    if args.V:
        desc["V"] = [int(t) for t in args.V.split(",")]
    return desc


def cmd_transform(args) -> int:
    G = _read_input(args.input)
    desc = _transform_description(args)
    opts = _spectral_opts(args)
    try:
        results = []
        for a in args.alpha:
            if args.kind == "move":
                out = check_move_increase(G, a, desc["u"], [tuple(mv) for mv in desc["moves"]], **opts)
            elif args.kind == "switch":
                out = check_switch_increase(G, a, desc["e"], desc["f"], desc["U"], desc["V"], **opts)
            elif args.kind == "graft":
                out = check_graft_compare(G, a, desc["u"], desc["p"], desc["q"], **opts)
            elif args.kind == "consolidate":
                out = check_consolidate_increase(G, a, desc["edge"], desc["keep"], desc.get("spare"), **opts)
            else:  # attach: construction only
                H = attach_path(G, desc["u"], desc["s"])
                out = TransformOutcome(H, {"s": desc["s"]}, 0.0, 0.0, "not_required", False)
            results.append({"alpha": a, **_outcome_record(out)})
    except KeyError as exc:
        raise UsageError(f"transform {args.kind} needs parameter {exc.args[0]!r}") from None
    if args.out:
        Path(args.out).write_text(results[-1]["result"])
    emit(_envelope("transform", args, {"path": args.input, "kind": args.kind, "description": desc},
                   args.alpha, results), args.format)
    return 0


def cmd_enumerate(args) -> int:
    if args.family == "hypertrees":
        classes = enumerate_hypertrees(args.m, args.k)
    else:
        classes = enumerate_hypercacti(args.m, args.k, args.r)
    table = rho_table(classes, args.alpha, **_spectral_opts(args))
    results = [{"uhg": serialize(G), "rho": list(table[i])} for i, G in enumerate(classes)]
    inputs = {"family": args.family, "m": args.m, "k": args.k, "r": args.r, "count": len(classes)}
    emit(_envelope("enumerate", args, inputs, args.alpha, results), args.format)
    return 0


def _report_record(rep) -> dict:
    return {
        "constraint": rep.constraint.describe(),
        "classes": len(rep.classes),
        "expected": serialize(rep.expected),
        "match": rep.match,
        "unique": rep.unique,
        "per_alpha": [
            {"alpha": v.alpha, "winner": serialize(rep.classes[v.winner]), "rho": v.rho_winner,
             "runner_up": v.rho_runner_up, "match": v.match, "unique": v.unique}
            for v in rep.verdicts
        ],
    }


def cmd_verify(args) -> int:
    opts = _spectral_opts(args)
    alphas = args.alpha
    if args.suite == "broom":
        verify_broom_chain(args.m, args.k, alphas, **opts)
        results = [{"constraint": f"broom_chain(m={args.m}, k={args.k})", "match": True, "unique": True}]
    else:
        if args.suite == "all":
            constraints = standard_constraints()
        else:
            kind = {"hypertrees": "hypertree", "cacti": "hypercactus"}.get(args.suite, args.suite)
            param = {"diameter": args.d, "pendant": args.t, "hypercactus": args.r}.get(kind)
            if kind in ("diameter", "pendant", "hypercactus") and param is None:
                flag = {"diameter": "d", "pendant": "t"}.get(kind, "r")
                raise UsageError(f"verify {args.suite} needs --{flag}")
            constraints = [FamilyConstraint(kind, args.m, args.k, param)]
        reports = run_suite(constraints, alphas, **opts)
        results = [_report_record(r) for r in reports]
    ok = all(r["match"] and r["unique"] for r in results)
    inputs = {"suite": args.suite, "m": args.m, "k": args.k}
    emit(_envelope("verify", args, inputs, alphas, results), args.format)
    return 0 if ok else EXIT_MISMATCH


# --- parser -------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, default_alpha: str = "0"):
    p.add_argument("--alpha", type=_parse_alphas, default=_parse_alphas(default_alpha),
                   help="comma-separated alpha values in [0, 1)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative bracket width for convergence")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--shift", type=float, default=DEFAULT_SHIFT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--out", help="write the resulting hypergraph here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperrho", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectral", help="alpha-spectral radius and Perron vector")
    p.add_argument("input", help=".uhg file ('-' for stdin)")
    _add_common(p)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("bounds", help="evaluate every applicable upper bound")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="emit a named family member as .uhg")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="+", help="star/path: m k; cactus: m r k; broom: m d k; spider: m t k")
    _add_common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("transform", help="apply a rewiring and compare spectral radii")
    p.add_argument("kind", choices=("move", "switch", "graft", "consolidate", "attach"))
    p.add_argument("input")
    p.add_argument("--spec", help="JSON transform description (inline or file)")
    p.add_argument("--u", type=int)
    p.add_argument("--move", action="append", help="EDGE:VERTEX, repeatable")
    p.add_argument("--e", type=int)
    p.add_argument("--f", type=int)
    p.add_argument("--U")
    p.add_argument("--V")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--edge", type=int)
    p.add_argument("--keep", type=int)
    p.add_argument("--spare", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("enumerate", help="list isomorphism classes with their radii")
    p.add_argument("family", choices=("hypertrees", "cacti"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the extremal hypergraph statements by enumeration")
    p.add_argument("suite", choices=("hypertrees", "diameter", "pendant", "unicyclic", "cacti", "broom", "all"))
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    _add_common(p, ",".join(str(a) for a in DEFAULT_ALPHAS))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except (HypergraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (TransformError, InvalidParams, ScaleExceeded, Disconnected) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ExtremalMismatch, ChainViolation, TheoremViolation) as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
