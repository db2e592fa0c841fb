"""Command line front end.

Verbs:
  solve      minimize the weight over the integer covering hull
  separate   decide hull membership of a point, producing a cut if outside
  facets     enumerate candidate facet inequalities, flagging real facets
  verify     compare the candidate list against the brute-force hull
  minors     enumerate certified circulant minors
  cut-loop   cutting-plane run from the plain relaxation

Instances are JSON objects {"n": ..., "rows": [[start, length], ...]} with
optional "b" (one integer demand per row, default all 1) and "w" (one
rational weight per column, default all 1). Points are JSON arrays of
rationals written as strings or integers.

Exit codes: 0 success, 1 bad input (including points outside the covering
polyhedron), 2 a cap or budget was hit and the JSON emitted is partial.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .digraph import build_digraph, enumerate_circuits
from .errors import (
    BadParameters,
    BudgetExceeded,
    CircoverError,
    IterationLimit,
    NoEssentialBullets,
)
from .inequalities import (
    enumerate_circulant_minors,
    enumerate_facet_candidates,
    enumerate_candidates_general,
    extract_minor,
)
from .jsonio import (
    inequality_json,
    load_instance,
    load_point,
    optimization_json,
    point_json,
    separation_json,
)
from .oracle import check_facet, enumerate_minimal_covers, hull_facets
from .optimize import optimize
from .rationals import format_rational
from .separation import cut_loop, separate


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"invalid JSON in {path}: {exc}") from None


def _instance_json(inst) -> dict:
    return {
        "n": inst.matrix.n,
        "rows": [list(row) for row in inst.matrix.rows],
        "b": list(inst.demands),
        "w": [format_rational(v) for v in inst.weights],
    }


def _pick_demands(inst, alpha):
    if alpha is None:
        return inst.demands
    if alpha < 0:
        raise BadParameters("--alpha must be non-negative")
    return (alpha,) * inst.matrix.m


def _candidates(matrix, demands, max_circuits):
    levels = set(demands)
    if len(levels) == 1 and demands and demands[0] >= 1:
        return enumerate_facet_candidates(
            matrix, demands[0], max_circuits=max_circuits
        )
    return enumerate_candidates_general(matrix, demands, max_circuits=max_circuits)


def _cmd_solve(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    return optimization_json(optimize(inst.matrix, inst.demands, inst.weights)), 0


def _cmd_separate(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    try:
        raw = json.loads(args.point)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"--point is not valid JSON: {exc}") from None
    point = load_point(raw, inst.matrix.n)
    return separation_json(separate(inst.matrix, inst.demands, point)), 0


def _cmd_facets(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    matrix = inst.matrix
    demands = _pick_demands(inst, args.alpha)
    enum = _candidates(matrix, demands, args.max_circuits)
    try:
        covers = enumerate_minimal_covers(matrix, demands, args.budget)
    except BudgetExceeded:
        covers = None
    items = []
    for ineq in enum.inequalities:
        flag = "unknown" if covers is None else check_facet(ineq, covers, matrix.n)
        items.append(inequality_json(ineq, facet=flag))
    payload = {
        "instance": _instance_json(inst),
        "b": list(demands),
        "inequalities": items,
        "circuits_seen": enum.circuits_seen,
        "complete": enum.complete,
    }
    return payload, 0 if enum.complete else 2


def _cmd_verify(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    matrix = inst.matrix
    demands = _pick_demands(inst, args.alpha)
    enum = _candidates(matrix, demands, args.max_circuits)
    cand_items = [inequality_json(q) for q in enum.inequalities]
    try:
        hull = hull_facets(matrix, demands, args.budget)
    except BudgetExceeded as exc:
        payload = {
            "instance": _instance_json(inst),
            "error": str(exc),
            "candidates": cand_items,
        }
        return payload, 2
    # candidates carry their construction scale; compare normalized
    cand_keys = {q.normalized().key() for q in enum.inequalities}
    facet_keys = {q.normalized().key() for q in hull.facets}
    matched = [q for q in hull.facets if q.normalized().key() in cand_keys]
    missing = [q for q in hull.facets if q.normalized().key() not in cand_keys]
    extra = [q for q in enum.inequalities if q.normalized().key() not in facet_keys]
    payload = {
        "instance": _instance_json(inst),
        "b": list(demands),
        "hull_facets": [inequality_json(q, facet=True) for q in hull.facets],
        "candidates": cand_items,
        "matched": len(matched),
        "missing": [inequality_json(q) for q in missing],
        "extra_nonfacets": [inequality_json(q) for q in extra],
        "ok": not missing,
        "complete": enum.complete,
    }
    return payload, 0 if enum.complete else 2


def _witness_json(w) -> dict:
    return {
        "removed": list(w.removed_columns),
        "order": w.order,
        "window": w.window,
        "rows": list(w.rows),
        "exact": w.exact,
    }


def _cmd_minors(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    matrix = inst.matrix
    circ = matrix.as_circulant()
    if circ is not None:
        enum = enumerate_circulant_minors(circ, max_count=args.max_circuits)
        witnesses, complete = list(enum.witnesses), enum.complete
    else:
        digraph = build_digraph(matrix, restricted=True)
        cenum = enumerate_circuits(digraph, min_winding=2, max_count=args.max_circuits)
        seen: dict[tuple, object] = {}
        for path in cenum.circuits:
            try:
                w = extract_minor(matrix, path)
            except (BadParameters, NoEssentialBullets):
                continue
            prev = seen.get(w.removed_columns)
            if prev is None or (w.exact and not prev.exact):
                seen[w.removed_columns] = w
        witnesses = sorted(
            seen.values(), key=lambda w: (len(w.removed_columns), w.removed_columns)
        )
        complete = cenum.complete
    payload = {
        "instance": _instance_json(inst),
        "minors": [_witness_json(w) for w in witnesses],
        "complete": complete,
    }
    return payload, 0 if complete else 2


def _cmd_cut_loop(args) -> tuple[dict, int]:
    inst = load_instance(_read_json(args.instance))
    try:
        res = cut_loop(
            inst.matrix, inst.demands, inst.weights, max_rounds=args.max_rounds
        )
    except IterationLimit as exc:
        return {"instance": _instance_json(inst), "error": str(exc)}, 2
    steps = []
    for step in res.steps:
        entry = {
            "point": point_json(step.point),
            "value": format_rational(step.value),
        }
        if step.inequality is not None:
            entry["cut"] = inequality_json(step.inequality)
            entry["certificate"] = format_rational(step.certificate)
        steps.append(entry)
    payload = {
        "value": format_rational(res.value),
        "point": point_json(res.point),
        "rounds": len(res.steps),
        "steps": steps,
    }
    return payload, 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circover",
        description="exact covering polyhedra of circular 0/1 matrices",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("instance", help="instance JSON file, or - for stdin")
        p.add_argument("--output", help="write the JSON result here instead of stdout")
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help="reserved for reproducibility; every verb is deterministic, "
            "so this is accepted and ignored",
        )

    p = sub.add_parser("solve", help="minimize the weights over the hull")
    common(p)

    p = sub.add_parser("separate", help="membership / cutting plane for a point")
    common(p)
    p.add_argument("--point", required=True, help="JSON array of rationals")

    for name in ("facets", "verify"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--alpha", type=int, default=None,
                       help="override every demand with this level")
        p.add_argument("--max-circuits", type=int, default=None)
        p.add_argument("--budget", type=int, default=None,
                       help="point budget for the brute-force oracle")

    p = sub.add_parser("minors", help="certified circulant minors")
    common(p)
    p.add_argument("--max-circuits", type=int, default=None)

    p = sub.add_parser("cut-loop", help="cutting-plane optimization")
    common(p)
    p.add_argument("--max-rounds", type=int, default=200)

    return parser


_HANDLERS = {
    "solve": _cmd_solve,
    "separate": _cmd_separate,
    "facets": _cmd_facets,
    "verify": _cmd_verify,
    "minors": _cmd_minors,
    "cut-loop": _cmd_cut_loop,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = _HANDLERS[args.verb](args)
    except (CircoverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(payload, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
