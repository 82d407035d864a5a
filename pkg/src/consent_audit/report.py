"""Batch aggregation: per-site records, prevalence tables, popularity bins,
label frequencies, and deterministic file export.

Denominator conventions: interface percentages are relative to successfully
retrieved pages; CMP, option, and compliance percentages are relative to pages
with a detected interface. Zero-denominator percentages are undefined and
serialize as empty cells.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass, field
from pathlib import Path

from .cmp import CmpIdentity
from .compliance import ComplianceVerdict, ReasonBreakdown
from .corpus import OptionCategory
from .detector import DetectedInterface
from .errors import EmptyInputError, ParseError
from .options import OptionSet
from .purpose_controls import PurposeSummary
from .snapshot import Status

BIN_SIZES = (50, 200, 500, 1000)


@dataclass(frozen=True)
class SiteRecord:
    url: str
    country: str
    rank: int
    status: Status
    interface: DetectedInterface | None = None
    cmp: CmpIdentity | None = None
    options: OptionSet | None = None
    purposes: PurposeSummary | None = None
    verdict: ComplianceVerdict | None = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if (self.verdict is None) != (self.interface is None):
            raise ValueError("verdict present iff interface present")
        if self.status is not Status.SUCCESS and self.interface is not None:
            raise ValueError("non-success records cannot carry an interface")

    def to_dict(self) -> dict:
        doc: dict = {
            "url": self.url,
            "country": self.country,
            "rank": self.rank,
            "status": self.status.value,
        }
        if self.interface is not None:
            doc["interface"] = self.interface.to_dict()
        if self.cmp is not None:
            doc["cmp"] = self.cmp.to_dict()
        if self.options is not None:
            doc["options"] = self.options.to_dict()
        if self.purposes is not None:
            doc["purposes"] = self.purposes.to_dict()
        if self.verdict is not None:
            doc["verdict"] = self.verdict.to_dict()
        if self.diagnostics:
            doc["diagnostics"] = self.diagnostics
        return doc


@dataclass(frozen=True)
class BinSpec:
    bin_size: int

    def __post_init__(self):
        if self.bin_size not in BIN_SIZES:
            raise ValueError(f"bin_size must be one of {BIN_SIZES}")

    def bin_index(self, rank: int) -> int:
        # Bin k covers ranks [k*size+1, (k+1)*size].
        return (rank - 1) // self.bin_size

    def bin_label(self, index: int) -> str:
        lo = index * self.bin_size + 1
        hi = (index + 1) * self.bin_size
        return f"{lo}-{hi}"


_CATEGORY_ORDER: tuple[OptionCategory, ...] = (
    OptionCategory.ACCEPT,
    OptionCategory.REJECT,
    OptionCategory.SETTINGS,
    OptionCategory.SAVE,
    OptionCategory.PAY,
)


@dataclass(frozen=True)
class GroupStats:
    """Prevalence numbers for one slice (a country, a rank bin, or overall)."""

    group: str
    n_records: int
    n_success: int
    n_interface: int
    n_cmp: int
    n_compliant: int
    option_counts: dict[OptionCategory, int]

    @staticmethod
    def _pct(num: int, den: int) -> float | None:
        return 100.0 * num / den if den else None

    @property
    def interface_pct(self) -> float | None:
        return self._pct(self.n_interface, self.n_success)

    @property
    def cmp_pct(self) -> float | None:
        return self._pct(self.n_cmp, self.n_interface)

    @property
    def compliant_pct(self) -> float | None:
        return self._pct(self.n_compliant, self.n_interface)

    def option_pct(self, category: OptionCategory) -> float | None:
        return self._pct(self.option_counts.get(category, 0), self.n_interface)


@dataclass(frozen=True)
class PrevalenceReport:
    overall: GroupStats
    by_country: list[GroupStats]
    by_bin: list[GroupStats]
    bin_size: int


def _group_stats(group: str, records: list[SiteRecord]) -> GroupStats:
    n_success = sum(1 for r in records if r.status is Status.SUCCESS)
    with_interface = [r for r in records if r.interface is not None]
    option_counts: dict[OptionCategory, int] = {c: 0 for c in _CATEGORY_ORDER}
    for record in with_interface:
        if record.options is None:
            continue
        for category in record.options.by_category:
            option_counts[category] += 1
    return GroupStats(
        group=group,
        n_records=len(records),
        n_success=n_success,
        n_interface=len(with_interface),
        n_cmp=sum(1 for r in with_interface if r.cmp is not None),
        n_compliant=sum(
            1 for r in with_interface if r.verdict is not None and r.verdict.compliant
        ),
        option_counts=option_counts,
    )


def prevalence(records: list[SiteRecord], bins: BinSpec) -> PrevalenceReport:
    if not records:
        raise EmptyInputError("prevalence needs at least one record")
    by_country: dict[str, list[SiteRecord]] = {}
    by_bin: dict[int, list[SiteRecord]] = {}
    for record in records:
        by_country.setdefault(record.country, []).append(record)
        by_bin.setdefault(bins.bin_index(record.rank), []).append(record)
    return PrevalenceReport(
        overall=_group_stats("all", records),
        by_country=[
            _group_stats(country, group)
            for country, group in sorted(by_country.items())
        ],
        by_bin=[
            _group_stats(bins.bin_label(index), group)
            for index, group in sorted(by_bin.items())
        ],
        bin_size=bins.bin_size,
    )


@dataclass(frozen=True)
class LabelRow:
    label: str
    count: int
    percent: float


def label_table(
    records: list[SiteRecord], category: OptionCategory
) -> list[LabelRow]:
    """Frequency of normalized labels for one option category, descending.

    Percentages are relative to all interfaces carrying that category, so the
    column sums to 100 whenever any labels exist.
    """
    if not records:
        raise EmptyInputError("label_table needs at least one record")
    counts: dict[str, int] = {}
    for record in records:
        if record.options is None:
            continue
        option = record.options.by_category.get(category)
        if option is None:
            continue
        counts[option.label_normalized] = counts.get(option.label_normalized, 0) + 1
    total = sum(counts.values())
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [LabelRow(label, count, 100.0 * count / total) for label, count in rows]


@dataclass(frozen=True)
class OptionScoreRow:
    category: OptionCategory
    count: int
    percent: float | None
    prominence_mean: float | None
    prominence_median: float | None


def option_scores(records: list[SiteRecord]) -> list[OptionScoreRow]:
    """Per-category option frequency plus prominence mean/median over the
    interfaces that have the option. Interfaces without the option contribute
    nothing to the score columns (missing scores are skipped, not zeroed)."""
    if not records:
        raise EmptyInputError("option_scores needs at least one record")
    n_interface = sum(1 for r in records if r.interface is not None)
    rows: list[OptionScoreRow] = []
    for category in _CATEGORY_ORDER:
        scores = [
            r.options.by_category[category].prominence
            for r in records
            if r.options is not None and category in r.options.by_category
        ]
        rows.append(
            OptionScoreRow(
                category=category,
                count=len(scores),
                percent=100.0 * len(scores) / n_interface if n_interface else None,
                prominence_mean=statistics.fmean(scores) if scores else None,
                prominence_median=statistics.median(scores) if scores else None,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Export: byte-stable writers (fixed key order, percentages to 2 decimals,
# undefined values as empty cells)


def fmt_pct(value: float | None) -> str:
    return "" if value is None else f"{value:.2f}"


def fmt_score(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"


def _write_csv(path: Path, header: list[str], rows: list[list[str]]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _stats_row(stats: GroupStats) -> list[str]:
    row = [
        stats.group,
        str(stats.n_records),
        str(stats.n_success),
        str(stats.n_interface),
        fmt_pct(stats.interface_pct),
        str(stats.n_cmp),
        fmt_pct(stats.cmp_pct),
    ]
    for category in _CATEGORY_ORDER:
        row.append(str(stats.option_counts.get(category, 0)))
        row.append(fmt_pct(stats.option_pct(category)))
    row.append(str(stats.n_compliant))
    row.append(fmt_pct(stats.compliant_pct))
    return row


_PREVALENCE_HEADER = (
    ["group", "records", "success", "interfaces", "interface_pct", "cmp", "cmp_pct"]
    + [
        col
        for category in _CATEGORY_ORDER
        for col in (category.value, f"{category.value}_pct")
    ]
    + ["compliant", "compliant_pct"]
)


def export_prevalence_csv(report: PrevalenceReport, path: str | Path) -> None:
    rows = [_stats_row(report.overall)]
    rows.extend(_stats_row(s) for s in report.by_country)
    rows.extend(_stats_row(s) for s in report.by_bin)
    _write_csv(Path(path), list(_PREVALENCE_HEADER), rows)


def export_market_share_csv(rows, path: str | Path) -> None:
    body = [
        [str(r.rank), r.provider, str(r.count), fmt_pct(r.percent)] for r in rows
    ]
    _write_csv(Path(path), ["rank", "provider", "count", "percent"], body)


def export_label_table_csv(rows: list[LabelRow], path: str | Path) -> None:
    body = [[r.label, str(r.count), fmt_pct(r.percent)] for r in rows]
    _write_csv(Path(path), ["label", "count", "percent"], body)


def export_option_scores_csv(rows: list[OptionScoreRow], path: str | Path) -> None:
    body = [
        [
            r.category.value,
            str(r.count),
            fmt_pct(r.percent),
            fmt_score(r.prominence_mean),
            fmt_score(r.prominence_median),
        ]
        for r in rows
    ]
    _write_csv(
        Path(path),
        ["category", "count", "percent", "prominence_mean", "prominence_median"],
        body,
    )


def export_breakdown_csv(breakdown: ReasonBreakdown, path: str | Path) -> None:
    body = [["compliant", "", str(breakdown.compliant)]]
    ordered = sorted(
        breakdown.combinations.items(),
        key=lambda kv: (-kv[1], [r.value for r in kv[0]]),
    )
    for combo, count in ordered:
        body.append(["non_compliant", "+".join(r.value for r in combo), str(count)])
    _write_csv(Path(path), ["kind", "reasons", "count"], body)


def write_records_jsonl(records: list[SiteRecord], path: str | Path) -> None:
    """One SiteRecord JSON object per line, key order fixed by to_dict."""
    lines = [
        json.dumps(record.to_dict(), ensure_ascii=False, separators=(",", ":"))
        for record in records
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_records_jsonl(path: str | Path) -> list[dict]:
    """Re-read an exported records file as plain dicts (for evaluation)."""
    docs: list[dict] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}:{line_no}: malformed record: {exc}") from exc
            if not isinstance(doc, dict):
                raise ParseError(f"{path}:{line_no}: record must be an object")
            docs.append(doc)
    return docs
