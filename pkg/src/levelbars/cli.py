"""Command-line interface.

Each command reads one JSON document, runs the corresponding library call,
and writes a canonical JSON report (sorted keys, bars sorted by degree,
endpoints, and kind, infinities spelled "inf") to stdout or --output.  The
svg and both formats additionally render the result as a figure next to the
JSON.  Exit codes: 0 success, 1 failed identity or stabilization check with
the first counterexample in the report, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from levelbars import circle, dictionary, levelset, morse, sublevel, verify
from levelbars.algebra import PrimeField, StructuralError
from levelbars.bars import serialize_barcode
from levelbars.plcomplex import ValidationError, load


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    handle, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(handle, "w") as stream:
            stream.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_document(path: str):
    try:
        with open(path) as stream:
            return json.load(stream)
    except OSError as err:
        raise ValidationError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise ValidationError(f"{path} is not valid JSON: {err}") from None


def _resolve_field(args, document) -> PrimeField:
    characteristic = args.field
    if characteristic is None:
        characteristic = document.get("field", 2) if isinstance(document, dict) \
            else 2
    if not isinstance(characteristic, int) or isinstance(characteristic, bool):
        raise ValidationError(f"field characteristic {characteristic!r} must "
                              "be an integer")
    try:
        return PrimeField(characteristic)
    except StructuralError as err:
        raise ValidationError(str(err)) from None


def _svg_path(output: str) -> str:
    root, ext = os.path.splitext(output)
    return (root if ext else output) + ".svg"


def _emit(args, payload, figure=None) -> None:
    """Write the canonical report and, if asked, its figure."""
    if args.format in ("svg", "both") and args.output is None:
        raise ValidationError("--format svg requires --output")
    text = canonical_json(payload)
    if args.format in ("json", "both") or args.output is None:
        if args.output is None:
            sys.stdout.write(text)
        else:
            _atomic_write(args.output, text)
    if args.format in ("svg", "both"):
        if figure is None:
            raise ValidationError(
                f"command {args.command!r} has no figure output")
        kind, data = figure
        from levelbars import figures

        target = _svg_path(args.output)
        if kind == "bars":
            figures.render_barcodes(data, target, title=args.command)
        else:
            figures.render_configurations(data, target, title=args.command)


def _counter_payload(counts: dict[int, int]) -> dict[str, int]:
    return {str(d): c for d, c in sorted(counts.items())}


def cmd_sublevel(args) -> int:
    document = _read_document(args.input)
    field = _resolve_field(args, document)
    space = load(document)
    result = sublevel.sublevel_barcodes(space, field)
    payload = {
        "command": "sublevel",
        "field": field.p,
        "infinite": serialize_barcode(result.infinite),
        "finite": serialize_barcode(result.finite),
        "dropped_zero_length": result.dropped_zero_length,
    }
    bars = {}
    for d in result.degrees():
        pool = dict(result.infinite.get(d, {}))
        for bar, m in result.finite.get(d, {}).items():
            pool[bar] = pool.get(bar, 0) + m
        bars[d] = pool
    _emit(args, payload, ("bars", bars))
    return 0


def cmd_level(args) -> int:
    document = _read_document(args.input)
    field = _resolve_field(args, document)
    space = load(document)
    result = levelset.level_barcodes(space, field)
    degenerate = {d: result.degenerate_closed_bars(d) for d in result.degrees()}
    payload = {
        "command": "level",
        "field": field.p,
        "bars": serialize_barcode(result.by_degree),
        "degenerate": serialize_barcode(degenerate),
    }
    _emit(args, payload, ("bars", result.by_degree))
    return 0


def cmd_delta_gamma(args) -> int:
    document = _read_document(args.input)
    field = _resolve_field(args, document)
    space = load(document)
    bars = levelset.level_barcodes(space, field)
    configs = dictionary.configurations(bars)
    payload = {"command": "delta-gamma", "field": field.p}
    for tag in ("delta", "gamma"):
        payload[tag] = {
            str(degree): [{"x": x, "y": y, "multiplicity": m}
                          for (x, y), m in sorted(conf.points.items())]
            for degree, conf in configs[tag].items()
        }
    payload["diagonal_mass"] = {
        str(degree): conf.diagonal_mass()
        for degree, conf in configs["delta"].items() if conf.diagonal_mass()
    }
    _emit(args, payload, ("configurations", configs))
    return 0


def cmd_refine_check(args) -> int:
    if args.input is not None:
        document = _read_document(args.input)
        field = _resolve_field(args, document)
        cases = [verify.CorpusCase("input", load(document), field.p)]
    else:
        cases = verify.fixture_cases() + verify.corpus_cases(
            count=args.seeds, max_vertices=args.max_vertices)
    problems = verify.run_corpus(cases, ("refinement", "duality"))
    payload = {
        "command": "refine-check",
        "cases": len(cases),
        "checks": ["refinement", "duality"],
        "problems": problems,
    }
    _emit(args, payload)
    return 1 if problems else 0


def cmd_morse(args) -> int:
    document = _read_document(args.input)
    field = _resolve_field(args, document)
    payload: dict = {"command": "morse", "field": field.p}
    problems: list[str] = []
    rebuilt = None

    if isinstance(document, dict) and "vertices" in document:
        space = load(document)
        bars = levelset.level_barcodes(space, field)
        counts = morse.counts_from_barcodes(bars)
        payload["counts"] = {
            str(r): {"beta": c.beta, "rho": c.rho, "c": c.c}
            for r, c in sorted(counts.items())
        }
        rebuilt = morse.reconstruct(bars, field)
        payload["thresholds"] = rebuilt.thresholds
        payload["stages"] = [
            {
                "threshold": stage.threshold,
                "dims": {str(d): stage.dim(d) for d in stage.degrees()},
                "homology": _counter_payload(stage.homology),
                "plus": _counter_payload(stage.plus),
                "minus": _counter_payload(stage.minus),
            }
            for stage in rebuilt.stages
        ]
        case = verify.CorpusCase("input", space, field.p)
        problems.extend(verify.check_reconstruction(case))

    chain = None
    if isinstance(document, dict) and "generators" in document:
        chain = morse.load_chain_complex(document, field)
        report = morse.validate(chain)
        payload["chain_valid"] = report.ok
        payload["chain_violations"] = list(report.violations)
        if report.ok:
            summary = morse.hodge(chain)
            payload["hodge"] = {
                str(r): {"c": summary.c[r], "beta": summary.beta[r],
                         "rho": summary.rho[r]}
                for r in summary.degrees()
            }
        else:
            problems.extend(report.violations)

    if chain is not None and rebuilt is not None and payload.get("chain_valid"):
        comparison = morse.compare(chain, rebuilt)
        payload["compare_ok"] = comparison.ok
        problems.extend(comparison.violations)

    if rebuilt is None and chain is None:
        raise ValidationError(
            "morse input must contain 'vertices' (a space), 'generators' "
            "(a chain complex), or both")
    payload["problems"] = problems
    _emit(args, payload)
    return 1 if problems else 0


def cmd_circle(args) -> int:
    document = _read_document(args.input)
    field = _resolve_field(args, document)
    angle_space = circle.load_angle_space(document)
    try:
        result = circle.quotient_barcodes(angle_space, field,
                                          periods=args.periods)
    except circle.StabilizationError as err:
        _emit(args, {"command": "circle", "field": field.p,
                     "error": str(err)})
        return 1
    payload = {
        "command": "circle",
        "field": field.p,
        "periods": result.periods,
        "bars": serialize_barcode(result.bars),
        "unbounded": _counter_payload(result.unbounded),
        "novikov": _counter_payload(circle.novikov_betti(result)),
    }
    _emit(args, payload, ("bars", result.bars))
    return 0


def cmd_check(args) -> int:
    cases = verify.fixture_cases() + verify.corpus_cases(
        count=args.seeds, max_vertices=args.max_vertices)
    problems = verify.run_corpus(cases)
    payload = {
        "command": "check",
        "cases": len(cases),
        "checks": sorted(verify.ALL_CHECKS),
        "problems": problems,
    }
    _emit(args, payload)
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelbars",
        description="Level and sub-level persistence barcodes of piecewise "
                    "linear maps, their refinements, and their chain-complex "
                    "reconstructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="input JSON document")
        else:
            p.add_argument("--input", help="optional input JSON document")
        p.add_argument("--field", type=int, default=None,
                       help="prime field characteristic (default: the "
                            "document's 'field' entry, else 2)")
        p.add_argument("--output", help="write the JSON report here "
                                        "(default: stdout)")
        p.add_argument("--format", choices=("json", "svg", "both"),
                       default="json", help="output format (svg/both render "
                                            "a figure next to the JSON)")

    p = sub.add_parser("sublevel", help="sub-level persistence barcodes")
    common(p)
    p.set_defaults(handler=cmd_sublevel)

    p = sub.add_parser("level", help="level persistence barcodes (four kinds)")
    common(p)
    p.set_defaults(handler=cmd_level)

    p = sub.add_parser("delta-gamma",
                       help="delta/gamma point configurations of the barcode")
    common(p)
    p.set_defaults(handler=cmd_delta_gamma)

    p = sub.add_parser("refine-check",
                       help="check the refinement and duality identities")
    common(p, needs_input=False)
    p.add_argument("--seeds", type=int, default=100,
                   help="number of random corpus cases (default 100)")
    p.add_argument("--max-vertices", type=int, default=None,
                   help="cap on random-space vertex count")
    p.set_defaults(handler=cmd_refine_check)

    p = sub.add_parser("morse",
                       help="barcode counts, filtered-complex reconstruction, "
                            "and chain-complex comparison")
    common(p)
    p.set_defaults(handler=cmd_morse)

    p = sub.add_parser("circle",
                       help="quotient barcodes and Novikov counts of an "
                            "angle-valued map")
    common(p)
    p.add_argument("--periods", type=int, default=None,
                   help="override the cover window size")
    p.set_defaults(handler=cmd_circle)

    p = sub.add_parser("check", help="run the full property suite")
    common(p, needs_input=False)
    p.add_argument("--seeds", type=int, default=100,
                   help="number of random corpus cases (default 100)")
    p.add_argument("--max-vertices", type=int, default=None,
                   help="cap on random-space vertex count")
    p.set_defaults(handler=cmd_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except StructuralError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
