"""Command-line front end.

Input is one JSON document ``{"dim": s, "vectors": [[...], ...]}`` read from
``--input`` or standard input.  Every command writes a single JSON report to
standard output.  Exit codes: 0 success, 2 unparsable input or arguments,
3 violated precondition, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .algebra import format_fraction
from .arrangement import (
    RegularFace,
    VectorList,
    chambers,
    cocircuits,
    enumerate_bases,
    rational_subspaces,
    span_subspace,
    tutte,
)
from .dmspace import dspace_basis
from .errors import InvariantError, PreconditionError
from .gspaces import compact_support_betti_fin, filtration_report, stratum_betti_series
from .ideals import IdealSpec, betti_open_stratum, hilbert
from .splines import eval_T, eval_TF, local_piece
from .verify import run_suite

CONVENTIONS = {
    "indices": "0-based positions in the input list",
    "list_order": "as given; external/internal activity use this order",
    "monomial_order": "graded lexicographic, x1 > x2 > ... > xs",
    "degrees": "polynomial degree d is reported beside cohomological degree 2d",
    "rationals": "strings p/q",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_input(doc) -> tuple[VectorList, list | None]:
    if not isinstance(doc, dict) or "dim" not in doc or "vectors" not in doc:
        raise UsageError('input must be a JSON object with "dim" and "vectors"')
    dim, vectors = doc["dim"], doc["vectors"]
    if not isinstance(dim, int) or not isinstance(vectors, list) or not vectors:
        raise UsageError('"dim" must be an integer and "vectors" a nonempty list')
    for v in vectors:
        if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
            raise UsageError(f"vector {v!r} is not a list of integers")
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(vectors)):
        raise UsageError('"labels" must list one label per vector')
    try:
        X = VectorList(dim, tuple(tuple(v) for v in vectors))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return X, labels


def parse_rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rationals from {text!r}") from None


def _subspaces_from(X: VectorList, text: str):
    try:
        sets = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"subspace list must be JSON, e.g. [[0],[1,2]], got {text!r}") from None
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise UsageError("subspace list must be a JSON list of index lists")
    out = []
    for idx in sets:
        if any(not isinstance(i, int) or not 0 <= i < X.m for i in idx):
            raise UsageError(f"bad index set {idx}")
        out.append(span_subspace(X, idx))
    return out


def _dims_json(dims) -> dict:
    return {
        "by_degree": [
            {"polynomial_degree": d, "cohomological_degree": 2 * d, "dim": v} for d, v in enumerate(dims.dims)
        ],
        "truncated": dims.truncated,
        "total": dims.total if not dims.truncated else None,
    }


def cmd_matroid(X, args):
    X.require_spanning()
    return {
        "rank": X.full_rank,
        "bases": [list(B) for B in enumerate_bases(X)],
        "count": len(enumerate_bases(X)),
        "cocircuits": [list(c.complement) for c in cocircuits(X)],
    }


def cmd_tutte(X, args):
    return tutte(X).to_json()


def cmd_subspaces(X, args):
    return {str(k): [r.to_json() for r in subs] for k, subs in rational_subspaces(X).items()}


def cmd_chambers(X, args):
    faces = chambers(X)
    return {"count": len(faces), "faces": [f.to_json() for f in faces]}


def _ideal_spec(X, text: str) -> IdealSpec:
    if text == "full":
        return IdealSpec.full()
    if text.startswith("level="):
        try:
            return IdealSpec.level(int(text[6:]))
        except ValueError:
            raise UsageError(f"bad level in {text!r}") from None
    if text.startswith("subspaces="):
        return IdealSpec.of_subspaces(_subspaces_from(X, text[10:]))
    raise UsageError(f"unknown ideal {text!r}")


def cmd_hilbert(X, args):
    spec = _ideal_spec(X, args.ideal)
    return _dims_json(hilbert(X, spec, args.max_degree))


def cmd_betti(X, args):
    text = args.stratum
    if text.startswith("geq="):
        try:
            k = int(text[4:])
        except ValueError:
            raise UsageError(f"bad stratum {text!r}") from None
        if not 0 <= k <= X.s:
            raise PreconditionError(f"stratum level must lie in 0..{X.s}")
        Q = rational_subspaces(X)[k - 1] if k > 0 else []
    elif text.startswith("open="):
        Q = _subspaces_from(X, text[5:])
    else:
        raise UsageError(f"unknown stratum {text!r}")
    table = betti_open_stratum(X, Q, args.max_degree)
    return {"Q": [list(r.index_set) for r in Q], **table.to_json()}


def cmd_dspace(X, args):
    basis = dspace_basis(X)
    out = _dims_json(basis.dims)
    if args.basis:
        out["basis"] = basis.to_json()
    return out


def cmd_gdims(X, args):
    return filtration_report(X).to_json()


def cmd_csbetti(X, args):
    if args.stratum is None:
        return compact_support_betti_fin(X, args.max_degree).to_json()
    return stratum_betti_series(X, args.stratum, args.max_degree).to_json()


def _parse_face(X, text: str) -> RegularFace:
    if len(text) != X.m or set(text) - {"+", "-"}:
        raise UsageError(f"face must be a string of {X.m} signs from '+-'")
    signs = tuple(1 if c == "+" else -1 for c in text)
    for face in chambers(X):
        if face.signs == signs:
            return face
    raise PreconditionError(f"sign vector {text} is not a regular face of X")


def cmd_spline(X, args):
    if args.action == "eval":
        if args.point is None:
            raise UsageError("spline eval needs --point")
        point = parse_rationals(args.point)
        if args.face:
            face = _parse_face(X, args.face)
            value = eval_TF(X, face, point)
        else:
            value = eval_T(X, point)
        return {"point": [format_fraction(v) for v in point], "face": args.face, "value": format_fraction(value)}
    if args.witness is None:
        raise UsageError("spline piece needs --witness")
    piece = local_piece(X, parse_rationals(args.witness))
    return {
        "witness": [format_fraction(v) for v in piece.witness],
        "degree": X.m - X.s,
        "polynomial": piece.polynomial.to_json(),
    }


def cmd_verify(X, args):
    return run_suite(args.suite, X)


COMMANDS = {
    "matroid": cmd_matroid,
    "tutte": cmd_tutte,
    "subspaces": cmd_subspaces,
    "chambers": cmd_chambers,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "dspace": cmd_dspace,
    "gdims": cmd_gdims,
    "csbetti": cmd_csbetti,
    "spline": cmd_spline,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equivspline", description=__doc__.splitlines()[0])
    parser.add_argument("--input", "-i", help="JSON input file (default: standard input)")
    parser.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    parser.add_argument("--seed-corpus", metavar="DIR", help="run the golden cases in DIR and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in ("matroid", "tutte", "subspaces", "chambers", "gdims"):
        sub.add_parser(name)
    p = sub.add_parser("hilbert")
    p.add_argument("--ideal", default="full", help="full | level=k | subspaces=[[i,...],...]")
    p.add_argument("--max-degree", type=int)
    p = sub.add_parser("betti")
    p.add_argument("--stratum", required=True, help="geq=k | open=[[i,...],...]")
    p.add_argument("--max-degree", type=int)
    p = sub.add_parser("dspace")
    p.add_argument("--basis", action="store_true")
    p = sub.add_parser("csbetti")
    p.add_argument("--stratum", type=int)
    p.add_argument("--max-degree", type=int)
    p = sub.add_parser("spline")
    p.add_argument("action", choices=["eval", "piece"])
    p.add_argument("--point")
    p.add_argument("--face")
    p.add_argument("--witness")
    p = sub.add_parser("verify")
    p.add_argument("--suite", required=True, choices=["lamain", "duality", "exactseq", "tutte", "spline", "all"])
    return parser


def execute(argv: list[str], doc) -> dict:
    """Run one command on a parsed JSON document and return the report."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError("no command given")
    X, labels = parse_input(doc)
    started = time.perf_counter()
    result = COMMANDS[args.command](X, args)
    echo = X.to_json()
    if labels is not None:
        echo["labels"] = labels
    report = {"command": list(argv), "input": echo, "result": result, "conventions": CONVENTIONS}
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 6)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def run_corpus(directory: str) -> tuple[int, dict]:
    cases = sorted(Path(directory).glob("*.json"))
    results = []
    for path in cases:
        case = json.loads(path.read_text())
        code, out = run(case["argv"], json.dumps(case["input"]))
        ok = code == case.get("exit", 0)
        if ok and code == 0:
            ok = json.loads(out)["result"] == case["expected"]
        results.append({"case": path.name, "passed": ok})
    summary = {"cases": results, "passed": all(r["passed"] for r in results)}
    return (0 if summary["passed"] else 4), summary


def run(argv: list[str], stdin_text: str | None = None) -> tuple[int, str]:
    """Execute without touching the process streams: returns (exit code, stdout text)."""
    err = sys.stderr
    try:
        pre = build_parser()
        known, _ = pre.parse_known_args(argv)
        if known.seed_corpus:
            code, summary = run_corpus(known.seed_corpus)
            return code, dumps(summary) + "\n"
        if known.input:
            text = Path(known.input).read_text()
        else:
            text = stdin_text if stdin_text is not None else sys.stdin.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"input is not valid JSON: {exc}") from None
        rest = _strip_globals(argv)
        report = execute(rest, doc)
        if known.timing:
            report.setdefault("timing_seconds", None)
        return 0, dumps(report) + "\n"
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=err)
        return 2, ""
    except OSError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=err)
        return 2, ""
    except (PreconditionError, ValueError) as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}), file=err)
        return 3, ""
    except InvariantError as exc:
        print(json.dumps({"error": "invariant", "message": str(exc)}), file=err)
        return 4, ""


def _strip_globals(argv: list[str]) -> list[str]:
    # the echoed command excludes where the input came from, so reports of
    # the same input compare equal regardless of file name
    out, skip = [], False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--input", "-i"):
            skip = True
            continue
        if tok.startswith("--input="):
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
