"""Command-line entry point.

Subcommands: analyze (one snapshot to stdout), batch (manifest to records plus
summary tables), eval (records vs ground truth to accuracy tables).

Every flag has a CONSENT_AUDIT_* environment mirror; an explicit flag wins.
Exit codes: 0 success, 2 parse error, 3 schema/consistency error, 4 I/O error,
5 empty input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .cmp import (
    default_selectors_path,
    default_tcf_path,
    load_selectors,
    load_tcf,
    market_share,
)
from .compliance import reason_breakdown
from .corpus import OptionCategory, default_corpus_dir, load_corpus_dir
from .errors import (
    ConsentAuditError,
    EmptyInputError,
    InvariantError,
    JoinError,
    ParseError,
    SchemaError,
)
from .evalx import (
    evaluate,
    export_accuracy_csv,
    load_ground_truth,
    prediction_from_dict,
)
from .pipeline import AnalysisContext, analyze
from .prominence import ProminenceConfig
from .report import (
    BinSpec,
    SiteRecord,
    export_breakdown_csv,
    export_label_table_csv,
    export_market_share_csv,
    export_option_scores_csv,
    export_prevalence_csv,
    label_table,
    load_records_jsonl,
    option_scores,
    prevalence,
    write_records_jsonl,
)
from .snapshot import Status, load_snapshot

_ENV_PREFIX = "CONSENT_AUDIT_"
_TRUTHY = {"1", "true", "yes", "on"}


def _env(name: str) -> str | None:
    return os.environ.get(_ENV_PREFIX + name)


def _pick(flag_value, env_name: str, default):
    """Flag beats environment beats default."""
    if flag_value is not None:
        return flag_value
    env_value = _env(env_name)
    if env_value is not None:
        return env_value
    return default


def _build_context(args: argparse.Namespace) -> AnalysisContext:
    corpus_dir = Path(_pick(args.corpus_dir, "CORPUS_DIR", default_corpus_dir()))
    selectors_path = Path(_pick(args.selectors, "SELECTORS", default_selectors_path()))
    tcf_path = Path(_pick(args.tcf, "TCF", default_tcf_path()))
    threshold = float(_pick(args.threshold, "THRESHOLD", 0.5))

    if args.no_negative_filter:
        negative_filter = False
    else:
        env_value = _env("NO_NEGATIVE_FILTER")
        negative_filter = not (
            env_value is not None and env_value.strip().lower() in _TRUTHY
        )

    return AnalysisContext(
        corpus=load_corpus_dir(corpus_dir),
        selectors=load_selectors(selectors_path),
        tcf=load_tcf(tcf_path),
        prominence=ProminenceConfig(equality_threshold=threshold),
        apply_negative_filter=negative_filter,
    )


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(_pick(args.out, "OUT", "out"))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _jobs(args: argparse.Namespace) -> int:
    jobs = int(_pick(args.jobs, "JOBS", 1))
    if jobs < 1:
        raise SchemaError("jobs", "--jobs must be >= 1")
    return jobs


def cmd_analyze(args: argparse.Namespace) -> int:
    context = _build_context(args)
    snapshot = load_snapshot(args.snapshot)
    record = analyze(snapshot, context)
    json.dump(record.to_dict(), sys.stdout, ensure_ascii=False, indent=2)
    sys.stdout.write("\n")
    return 0


def _manifest_rows(path: Path) -> list[dict]:
    rows: list[dict] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"url", "country", "rank", "snapshot_path"}
        missing = required - set(reader.fieldnames or ())
        if missing:
            raise SchemaError(
                sorted(missing)[0], f"{path}: missing columns {sorted(missing)}"
            )
        for row_no, row in enumerate(reader, start=2):
            url = (row.get("url") or "").strip()
            snapshot_path = (row.get("snapshot_path") or "").strip()
            raw_rank = (row.get("rank") or "").strip()
            if not url or not snapshot_path:
                raise SchemaError("url", f"{path}:{row_no}: empty url/snapshot_path")
            try:
                rank = int(raw_rank)
            except ValueError as exc:
                raise SchemaError(
                    "rank", f"{path}:{row_no}: bad rank {raw_rank!r}"
                ) from exc
            if rank < 1:
                raise SchemaError("rank", f"{path}:{row_no}: rank must be >= 1")
            rows.append(
                {
                    "url": url,
                    "country": (row.get("country") or "").strip(),
                    "rank": rank,
                    "snapshot_path": snapshot_path,
                }
            )
    return rows


def _analyze_row(row: dict, base_dir: Path, context: AnalysisContext) -> SiteRecord:
    """One manifest row to one record; failures become unreachable rows so a
    batch never aborts on bad input files."""
    path = Path(row["snapshot_path"])
    if not path.is_absolute():
        path = base_dir / path
    try:
        snapshot = load_snapshot(path)
        return analyze(
            snapshot,
            context,
            url=row["url"],
            country=row["country"],
            rank=row["rank"],
        )
    except (ConsentAuditError, OSError) as exc:
        return SiteRecord(
            url=row["url"],
            country=row["country"],
            rank=row["rank"],
            status=Status.UNREACHABLE,
            diagnostics={"error": f"{type(exc).__name__}: {exc}"},
        )


def cmd_batch(args: argparse.Namespace) -> int:
    context = _build_context(args)
    out = _out_dir(args)
    jobs = _jobs(args)
    manifest_path = Path(args.manifest)
    rows = _manifest_rows(manifest_path)
    if not rows:
        raise EmptyInputError(f"{manifest_path}: manifest has no rows")
    base_dir = manifest_path.parent

    if jobs == 1:
        records = [_analyze_row(row, base_dir, context) for row in rows]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_analyze_row, row, base_dir, context) for row in rows
            ]
            records = [f.result() for f in futures]

    write_records_jsonl(records, out / "records.json")

    bins = BinSpec(bin_size=int(_pick(args.bin_size, "BIN_SIZE", 1000)))
    export_prevalence_csv(prevalence(records, bins), out / "prevalence.csv")

    cmp_pool = [r.cmp for r in records if r.interface is not None]
    if cmp_pool:
        export_market_share_csv(market_share(cmp_pool), out / "market_share.csv")
    else:
        export_market_share_csv([], out / "market_share.csv")

    verdicts = [r.verdict for r in records if r.verdict is not None]
    if verdicts:
        export_breakdown_csv(reason_breakdown(verdicts), out / "breakdown.csv")
    else:
        (out / "breakdown.csv").write_text("kind,reasons,count\n", encoding="utf-8")

    export_option_scores_csv(option_scores(records), out / "option_scores.csv")
    for category in OptionCategory:
        export_label_table_csv(
            label_table(records, category), out / f"labels_{category.value}.csv"
        )
    sys.stderr.write(f"analyzed {len(records)} rows -> {out}\n")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    out = _out_dir(args)
    predictions = [prediction_from_dict(d) for d in load_records_jsonl(args.records)]
    truth = load_ground_truth(args.truth)
    if not truth:
        raise EmptyInputError(f"{args.truth}: ground truth has no rows")
    report = evaluate(predictions, truth)
    export_accuracy_csv(report, out / "accuracy.csv")
    (out / "accuracy.json").write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    sys.stderr.write(f"evaluated {len(truth)} truth rows -> {out}\n")
    return 0


def _add_shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus-dir", help="directory of trigger/label CSVs")
    parser.add_argument("--selectors", help="CMP selector registry CSV")
    parser.add_argument("--tcf", help="TCF cmp_id registry CSV")
    parser.add_argument(
        "--threshold",
        type=float,
        help="prominence equality threshold (default 0.5)",
    )
    parser.add_argument(
        "--no-negative-filter",
        action="store_true",
        help="keep interfaces whose text matches the negative corpus",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="consent-audit",
        description="Detect and audit consent interfaces in page snapshots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one snapshot JSON")
    p_analyze.add_argument("snapshot", help="path to a snapshot JSON file")
    _add_shared_flags(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_batch = sub.add_parser("batch", help="analyze a manifest of snapshots")
    p_batch.add_argument(
        "manifest", help="CSV with columns url,country,rank,snapshot_path"
    )
    _add_shared_flags(p_batch)
    p_batch.add_argument("--jobs", type=int, help="worker count (default 1)")
    p_batch.add_argument("--out", help="output directory (default ./out)")
    p_batch.add_argument(
        "--bin-size",
        type=int,
        choices=(50, 200, 500, 1000),
        help="popularity bin width for prevalence.csv (default 1000)",
    )
    p_batch.set_defaults(func=cmd_batch)

    p_eval = sub.add_parser("eval", help="score records against ground truth")
    p_eval.add_argument("records", help="records.json written by batch")
    p_eval.add_argument("truth", help="ground truth CSV")
    p_eval.add_argument("--out", help="output directory (default ./out)")
    p_eval.set_defaults(func=cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except (SchemaError, InvariantError, JoinError) as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 3
    except EmptyInputError as exc:
        sys.stderr.write(f"empty input: {exc}\n")
        return 5
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
