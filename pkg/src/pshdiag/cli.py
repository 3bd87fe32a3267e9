"""Command-line front end.

Commands operate on JSON files (diagrams, singularity inputs, matrices,
batch manifests) and print deterministic JSON or text reports.

Exit codes: 0 success; 2 parse/validation error; 3 semantically infinite or
unsupported result; 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import diagram as dg
from . import measures
from . import polynomials as poly
from .decomposition import (
    Decomposable,
    certificate_to_json,
    classify_extreme,
    decide_decomposability,
)
from .errors import PshDiagError, UnsupportedDimension, VerificationFailure

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SEMANTIC = 3
EXIT_INTERNAL = 4


class CliInputError(Exception):
    pass


class SemanticExit(Exception):
    def __init__(self, payload: dict):
        self.payload = payload


def _parse_vector(text: str):
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliInputError(f"bad vector {text!r}: {exc}") from exc


def _diagram_from_payload(payload) -> dg.Diagram:
    if not isinstance(payload, dict):
        raise CliInputError("expected a diagram JSON object")
    return dg.diagram_from_json(payload)


def _input_from_payload(payload) -> poly.SingularityInput:
    if not isinstance(payload, dict):
        raise CliInputError("expected a singularity JSON object")
    return poly.input_from_json(payload)


# --- command implementations (pure payload -> result dict) ------------------


def cmd_diagram(payload: dict) -> dict:
    u = _input_from_payload(payload.get("input"))
    return {"diagram": dg.diagram_to_json(poly.diagram_of_input(u))}


def cmd_lelong(payload: dict) -> dict:
    u = _input_from_payload(payload.get("input"))
    a = payload.get("weight")
    if not isinstance(a, list):
        raise CliInputError("'weight' must be a list of rationals")
    value = measures.relative_type_monomial(u, [Fraction(c) for c in a])
    return {"lelong": str(value)}


def cmd_sum(payload: dict) -> dict:
    a = _diagram_from_payload(payload.get("a"))
    b = _diagram_from_payload(payload.get("b"))
    return {"diagram": dg.diagram_to_json(dg.minkowski_sum(a, b))}


def cmd_homothetic(payload: dict) -> dict:
    a = _diagram_from_payload(payload.get("a"))
    b = _diagram_from_payload(payload.get("b"))
    witness = dg.is_homothetic_to(a, b)
    if witness is None:
        return {"homothetic": False}
    return {
        "homothetic": True,
        "c": str(witness.c),
        "x": [str(c) for c in witness.x],
    }


def cmd_decompose(payload: dict) -> dict:
    g = _diagram_from_payload(payload.get("diagram"))
    return {"certificate": certificate_to_json(decide_decomposability(g))}


def cmd_classify(payload: dict) -> dict:
    u = _input_from_payload(payload.get("input"))
    report = classify_extreme(u)
    return {
        "input": poly.input_to_json(report.input),
        "diagram": dg.diagram_to_json(report.diagram),
        "verdict": report.verdict,
        "certificate": certificate_to_json(report.certificate),
        "caveat": report.caveat,
    }


def cmd_newton_number(payload: dict) -> dict:
    g = _diagram_from_payload(payload.get("diagram"))
    result = measures.newton_number(g)
    if result.infinite:
        raise SemanticExit({"newton_number": "infinite"})
    return {"newton_number": str(result.value)}


def cmd_substitute(payload: dict) -> dict:
    u = _input_from_payload(payload.get("input"))
    m = poly.matrix_from_json(payload.get("matrix"), u.dim)
    transformed = poly.singularity_input(
        u.dim, [poly.substitute_linear(p, m) for p in u.polys]
    )
    return {"input": poly.input_to_json(transformed)}


def cmd_indicator(payload: dict) -> dict:
    g = _diagram_from_payload(payload.get("diagram"))
    t = payload.get("t")
    if not isinstance(t, list):
        raise CliInputError("'t' must be a list of rationals")
    return {"indicator": str(measures.indicator_eval(g, [Fraction(c) for c in t]))}


COMMANDS = {
    "diagram": cmd_diagram,
    "lelong": cmd_lelong,
    "sum": cmd_sum,
    "homothetic": cmd_homothetic,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "newton-number": cmd_newton_number,
    "substitute": cmd_substitute,
    "indicator": cmd_indicator,
}


def execute(command: str, payload: dict) -> tuple[dict, int]:
    """Dispatch one request; returns (result, exit code). Never raises."""
    handler = COMMANDS.get(command)
    if handler is None:
        return {"error": f"unknown command {command!r}"}, EXIT_INPUT
    try:
        return handler(payload), EXIT_OK
    except SemanticExit as exc:
        return exc.payload, EXIT_SEMANTIC
    except (UnsupportedDimension,) as exc:
        return {"error": str(exc)}, EXIT_SEMANTIC
    except VerificationFailure as exc:
        return {"error": f"internal invariant violation: {exc}"}, EXIT_INTERNAL
    except (CliInputError, PshDiagError, ValueError, ZeroDivisionError, TypeError) as exc:
        return {"error": str(exc)}, EXIT_INPUT


def run_batch(manifest: dict, jobs: int = 1) -> tuple[dict, int]:
    """Execute a manifest; aggregate output is order-independent."""
    if not isinstance(manifest, dict) or not isinstance(manifest.get("requests", []), list):
        return {"error": "manifest must have a 'requests' list"}, EXIT_INPUT
    requests = manifest.get("requests", [])
    entries = []
    ids = set()
    for idx, req in enumerate(requests):
        if not isinstance(req, dict) or "id" not in req or "command" not in req:
            return {"error": f"request #{idx} needs 'id' and 'command'"}, EXIT_INPUT
        if req["id"] in ids:
            return {"error": f"duplicate request id {req['id']!r}"}, EXIT_INPUT
        ids.add(req["id"])
        entries.append((req["id"], req["command"], req.get("payload", {})))

    def run_one(entry):
        rid, command, payload = entry
        result, code = execute(command, payload)
        return rid, result, code

    if jobs > 1 and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_one, entries))
    else:
        outcomes = [run_one(e) for e in entries]

    results = {}
    exit_code = EXIT_OK
    for rid, result, code in sorted(outcomes, key=lambda o: str(o[0])):
        results[rid] = {"ok": code == EXIT_OK, "exit_code": code, "result": result}
        exit_code = max(exit_code, code)
    return {"results": results}, exit_code


# --- rendering --------------------------------------------------------------


def _color_enabled() -> bool:
    return os.environ.get("NO_COLOR") is None and sys.stdout.isatty()


def _staircase(g: dg.Diagram) -> str:
    """ASCII sketch of a 2-D diagram's vertex chain."""
    height = 10
    width = 2 * height
    xs = [p[0] for p in g.generators]
    ys = [p[1] for p in g.generators]
    span = max(max(xs), max(ys), 1)
    grid = [[" "] * width for _ in range(height)]
    for p in g.generators:
        col = int(p[0] / span * (width - 1))
        row = height - 1 - int(p[1] / span * (height - 1))
        grid[row][col] = "*"
    out = ["  |" + "".join(row) for row in grid]
    out.append("  +" + "-" * width)
    return "\n".join(out)


def render_text(command: str, result: dict) -> str:
    lines = []

    def diagram_lines(obj):
        pts = ", ".join("(" + ", ".join(p) + ")" for p in obj["generators"])
        lines.append(f"vertices: {pts}")
        if obj["dim"] == 2:
            lines.append(_staircase(dg.diagram_from_json(obj)))

    if "diagram" in result and command in ("diagram", "sum"):
        diagram_lines(result["diagram"])
    elif command == "classify":
        verdict = result["verdict"]
        if _color_enabled():
            color = "\033[32m" if verdict == "extreme" else "\033[31m"
            lines.append(f"verdict: {color}{verdict}\033[0m")
        else:
            lines.append(f"verdict: {verdict}")
        diagram_lines(result["diagram"])
        cert = result["certificate"]
        if cert["verdict"] == "decomposable":
            left = ", ".join("(" + ", ".join(p) + ")" for p in cert["left"]["generators"])
            right = ", ".join("(" + ", ".join(p) + ")" for p in cert["right"]["generators"])
            lines.append(f"witness: [{left}] + [{right}]")
        else:
            lines.append(f"indecomposability method: {cert['method']}")
        lines.append(result["caveat"])
    else:
        for key, value in result.items():
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


def emit(result: dict, fmt: str, command: str, output_path: str | None) -> None:
    if fmt == "json":
        text = json.dumps(result, indent=2, sort_keys=True)
    else:
        text = render_text(command, result)
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# --- argument parsing -------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pshdiag",
        description="Exact calculus of indicator diagrams: Lelong numbers, "
        "Newton numbers, Minkowski decomposability, extremity tests.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", help="write the result to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", help="indicator diagram of an input")
    p.add_argument("--input", required=True)

    p = sub.add_parser("lelong", help="directional Lelong number")
    p.add_argument("--input", required=True)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("sum", help="Minkowski sum of two diagrams")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("homothetic", help="homothety witness A = c*B + x")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("decompose", help="decomposability certificate")
    p.add_argument("diagram")

    p = sub.add_parser("classify", help="extremity of a homogeneous singularity")
    p.add_argument("--input", required=True)

    p = sub.add_parser("newton-number", help="Newton number of a diagram")
    p.add_argument("diagram")

    p = sub.add_parser("substitute", help="linear change of variables")
    p.add_argument("--matrix", required=True)
    p.add_argument("--input", required=True)

    p = sub.add_parser("indicator", help="indicator value at t <= 0")
    p.add_argument("diagram")
    p.add_argument("--t", required=True)

    p = sub.add_parser("batch", help="run a manifest of requests")
    p.add_argument("manifest")
    p.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "batch":
            manifest = _load_json(args.manifest)
            jobs = manifest.get("jobs", args.jobs) if isinstance(manifest, dict) else args.jobs
            result, code = run_batch(manifest, jobs=max(int(jobs or 1), 1))
        else:
            payload = {}
            if args.command in ("diagram", "lelong", "classify", "substitute"):
                payload["input"] = _load_json(args.input)
            if args.command == "lelong":
                payload["weight"] = [str(c) for c in _parse_vector(args.weight)]
            if args.command == "substitute":
                payload["matrix"] = _load_json(args.matrix)
            if args.command in ("sum", "homothetic"):
                payload["a"] = _load_json(args.a)
                payload["b"] = _load_json(args.b)
            if args.command in ("decompose", "newton-number", "indicator"):
                payload["diagram"] = _load_json(args.diagram)
            if args.command == "indicator":
                payload["t"] = [str(c) for c in _parse_vector(args.t)]
            result, code = execute(args.command, payload)
    except CliInputError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    emit(result, args.format, args.command, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
