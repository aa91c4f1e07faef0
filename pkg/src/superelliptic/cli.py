"""Command-line interface.

Subcommands: ``list`` (print tables), ``verify`` (re-derive every column),
``classify`` (verdict for one row), ``levels`` (admissible level/branch-point
splittings for a genus), ``row`` (full detail for one row), ``export``
(dataset JSON, per-genus CSV, highlighted-row map, or the deviation
registries).  Output is deterministic unless ``--timestamps`` is given.

Exit codes: 0 success, 1 verification failures, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import tables
from .classify import classify
from .dataset import (Dataset, export_csv, from_json, load_embedded,
                      repair_signature, to_json)
from .family import branch_count, enumerate_levels, normal_form_admissible
from .verify import verify_dataset

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superelliptic",
        description="Classify superelliptic curve families by whether the "
                    "field of moduli is provably a field of definition.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt: bool = True) -> None:
        p.add_argument("--data", metavar="PATH",
                       help="load the dataset from a JSON file instead of the "
                            "embedded tables")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text",
                           help="output format (default: text)")
        p.add_argument("--timestamps", action="store_true",
                       help="include a generation timestamp in the output")

    p_list = sub.add_parser("list", help="print classification tables")
    common(p_list)
    p_list.add_argument("--genus", type=int, help="restrict to one genus")
    p_list.add_argument("--blue-only", action="store_true",
                        help="only rows not provably definable")

    p_verify = sub.add_parser("verify", help="re-derive every column of the tables")
    common(p_verify)
    p_verify.add_argument("--genus", type=int, help="restrict to one genus")
    p_verify.add_argument("--strict", action="store_true",
                          help="treat documented deviations as failures")
    p_verify.add_argument("--verbose", action="store_true",
                          help="also print warnings in text output")

    p_classify = sub.add_parser("classify", help="verdict for a single row")
    common(p_classify)
    p_classify.add_argument("--genus", type=int, required=True)
    p_classify.add_argument("--nr", type=int, required=True)

    p_levels = sub.add_parser("levels",
                              help="admissible level/branch-point splittings")
    common(p_levels)
    p_levels.add_argument("--genus", type=int, required=True)

    p_row = sub.add_parser("row", help="full detail for a single row")
    common(p_row)
    p_row.add_argument("--genus", type=int, required=True)
    p_row.add_argument("--nr", type=int, required=True)

    p_export = sub.add_parser("export", help="machine-readable exports")
    common(p_export, fmt=False)
    p_export.add_argument("--what", choices=("dataset", "csv", "blue", "errata"),
                          default="dataset")
    p_export.add_argument("--genus", type=int, help="genus for --what csv")
    p_export.add_argument("--out", metavar="PATH",
                          help="write to a file instead of stdout")
    return parser


def _load_dataset(args) -> Dataset:
    if getattr(args, "data", None):
        with open(args.data, "r", encoding="utf-8") as fh:
            return from_json(fh.read())
    return load_embedded()


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _emit(text: str, out_path: str | None = None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _row_cells(record) -> list[str]:
    return [
        str(record.number),
        "*" if record.highlighted else "",
        record.reduced_group().describe(),
        record.label_text,
        str(record.group_order()),
        str(record.level),
        "" if record.m is None else str(record.m),
        record.signature.render(),
        str(record.delta),
        record.equation.render(),
    ]


_LIST_HEADER = ["Nr", "", "reduced", "full group", "order", "n", "m",
                "signature", "dim", "equation"]


def _format_table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(r)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _record_summary(record) -> dict:
    resolution = repair_signature(record)
    verdict = classify(record.reduced_group(), resolution.effective, record.delta)
    out = {
        "genus": record.genus,
        "nr": record.number,
        "block": record.block.value,
        "reduced_group": record.reduced_group().describe(),
        "full_group": record.label_text,
        "order": record.group_order(),
        "level": record.level,
        "m": record.m,
        "signature": record.signature.render(),
        "dim": record.delta,
        "equation": record.equation.render(),
        "highlighted": record.highlighted,
    }
    out.update(verdict.to_json_dict())
    if resolution.changed:
        out["effective_signature"] = resolution.effective.render()
        out["signature_status"] = resolution.status
    return out


def _cmd_list(args) -> int:
    ds = _load_dataset(args)
    genera = [args.genus] if args.genus is not None else list(ds.genera)
    records = [r for g in genera for r in ds.genus_rows(g)
               if not args.blue_only or r.highlighted]
    if args.format == "json":
        payload = {"rows": [_record_summary(r) for r in records]}
        if args.timestamps:
            payload["generated_at"] = _timestamp()
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    chunks = []
    if args.timestamps:
        chunks.append(f"# generated {_timestamp()}")
    for genus in genera:
        rows = [r for r in records if r.genus == genus]
        if not rows:
            continue
        chunks.append(f"genus {genus} ({len(rows)} rows; * = possibly not "
                      f"definable over the field of moduli)")
        chunks.append(_format_table([_LIST_HEADER] + [_row_cells(r) for r in rows]))
    _emit("\n".join(chunks) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    ds = _load_dataset(args)
    genera = [args.genus] if args.genus is not None else None
    report = verify_dataset(ds, genera=genera, strict=args.strict)
    if args.format == "json":
        payload = {
            "ok": report.ok,
            "rows_checked": len(report.rows),
            "failures": [f.__dict__ for f in report.failures],
            "warnings": [f.__dict__ for f in report.warnings],
        }
        if args.timestamps:
            payload["generated_at"] = _timestamp()
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        lines = []
        if args.timestamps:
            lines.append(f"# generated {_timestamp()}")
        lines.append(report.render(verbose=args.verbose))
        _emit("\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_classify(args) -> int:
    ds = _load_dataset(args)
    record = ds.get(args.genus, args.nr)
    resolution = repair_signature(record)
    verdict = classify(record.reduced_group(), resolution.effective, record.delta)
    if args.format == "json":
        payload = verdict.to_json_dict()
        if args.timestamps:
            payload["generated_at"] = _timestamp()
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        if verdict.is_definable:
            text = f"definable ({verdict.theorem})"
        else:
            text = f"possibly not definable: {verdict.theorem}"
        _emit(text + "\n")
    return EXIT_OK


def _cmd_levels(args) -> int:
    pairs = enumerate_levels(args.genus)
    rows = [{"level": n, "branch_points": b,
             "normal_form": normal_form_admissible(n, b)} for n, b in pairs]
    if args.format == "json":
        payload = {"genus": args.genus, "levels": rows}
        if args.timestamps:
            payload["generated_at"] = _timestamp()
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        lines = []
        if args.timestamps:
            lines.append(f"# generated {_timestamp()}")
        for row in rows:
            note = "" if row["normal_form"] else "  (no normal form)"
            lines.append(f"level {row['level']}: {row['branch_points']} "
                         f"branch points{note}")
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_row(args) -> int:
    ds = _load_dataset(args)
    record = ds.get(args.genus, args.nr)
    summary = _record_summary(record)
    resolution = repair_signature(record)
    summary["signature_status"] = resolution.status
    summary["effective_signature"] = resolution.effective.render()
    summary["branch_points"] = branch_count(record.level, record.equation)
    summary["parameters"] = record.equation.parameter_count
    if args.format == "json":
        if args.timestamps:
            summary["generated_at"] = _timestamp()
        _emit(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    else:
        lines = []
        if args.timestamps:
            lines.append(f"# generated {_timestamp()}")
        order = ("genus", "nr", "block", "reduced_group", "full_group", "order",
                 "level", "m", "signature", "signature_status",
                 "effective_signature", "branch_points", "dim", "parameters",
                 "equation", "verdict", "reason", "theorem", "highlighted")
        for key in order:
            lines.append(f"{key}: {summary[key]}")
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_export(args, parser: argparse.ArgumentParser) -> int:
    ds = _load_dataset(args)
    if args.what == "csv":
        if args.genus is None:
            parser.error("--what csv requires --genus")
        _emit(export_csv(ds, args.genus), args.out)
        return EXIT_OK
    if args.what == "dataset":
        _emit(to_json(ds), args.out)
        return EXIT_OK
    if args.what == "blue":
        payload = {str(g): list(ds.highlighted_numbers(g)) for g in ds.genera}
        if args.timestamps:
            payload["generated_at"] = _timestamp()
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        return EXIT_OK
    payload = {
        "signature_misprints": sorted(list(k) for k in tables.SIGNATURE_MISPRINTS),
        "manual_signature_corrections": [
            {"genus": g, "nr": n, "corrected": fix, "reason": why}
            for (g, n), (fix, why) in sorted(tables.MANUAL_SIGNATURE_CORRECTIONS.items())],
        "equation_corrections": [
            {"genus": g, "nr": n, "printed": printed, "reason": why}
            for (g, n), (printed, why) in sorted(tables.EQUATION_CORRECTIONS.items())],
        "label_discrepancies": [
            {"genus": g, "nr": n, "reason": why}
            for (g, n), why in sorted(tables.LABEL_DISCREPANCIES.items())],
        "classification_discrepancies": [
            {"genus": g, "nr": n, "reason": why}
            for (g, n), why in sorted(tables.CLASSIFICATION_DISCREPANCIES.items())],
        "cosmetic_notes": [
            {"genus": g, "nr": n, "note": note}
            for g, n, note in sorted(tables.COSMETIC_NOTES)],
        "prose_level_tally": {str(g): {str(k): v for k, v in t.items()}
                              for g, t in tables.PROSE_LEVEL_TALLY.items()},
    }
    if args.timestamps:
        payload["generated_at"] = _timestamp()
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "levels":
            return _cmd_levels(args)
        if args.command == "row":
            return _cmd_row(args)
        if args.command == "export":
            return _cmd_export(args, parser)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: invalid dataset: {exc}", file=sys.stderr)
        return EXIT_IO
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
