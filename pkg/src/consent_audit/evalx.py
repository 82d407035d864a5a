"""Accuracy evaluation against hand-labeled ground truth.

Joins engine predictions to a truth CSV on url, builds per-group confusion
counts for eight element types, and reports F1 plus false-positive and
false-negative rates as percentages of the group sample.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .corpus import OptionCategory
from .errors import JoinError, SchemaError
from .report import SiteRecord, _write_csv, fmt_pct

ELEMENTS: tuple[str, ...] = (
    "interface",
    "accept",
    "reject",
    "settings",
    "save",
    "pay",
    "checkbox",
    "prechecked",
)

_BOOL_COLUMNS = tuple(f"has_{e}" for e in ELEMENTS)


@dataclass(frozen=True)
class GroundTruthRecord:
    url: str
    group: str
    has_interface: bool
    has_accept: bool
    has_reject: bool
    has_settings: bool
    has_save: bool
    has_pay: bool
    has_checkbox: bool
    has_prechecked: bool

    def __post_init__(self):
        if self.has_prechecked and not self.has_checkbox:
            raise ValueError("has_prechecked requires has_checkbox")

    def flag(self, element: str) -> bool:
        return getattr(self, f"has_{element}")


@dataclass(frozen=True)
class PredictionRow:
    """Engine output reduced to the eight booleans the truth file labels."""

    url: str
    has_interface: bool
    has_accept: bool
    has_reject: bool
    has_settings: bool
    has_save: bool
    has_pay: bool
    has_checkbox: bool
    has_prechecked: bool

    def flag(self, element: str) -> bool:
        return getattr(self, f"has_{element}")


def prediction_from_record(record: SiteRecord) -> PredictionRow:
    categories = set(record.options.by_category) if record.options else set()
    has_checkbox = bool(record.purposes and record.purposes.controls)
    return PredictionRow(
        url=record.url,
        has_interface=record.interface is not None,
        has_accept=OptionCategory.ACCEPT in categories,
        has_reject=OptionCategory.REJECT in categories,
        has_settings=OptionCategory.SETTINGS in categories,
        has_save=OptionCategory.SAVE in categories,
        has_pay=OptionCategory.PAY in categories,
        has_checkbox=has_checkbox,
        has_prechecked=bool(record.purposes and record.purposes.prechecked_optional),
    )


def prediction_from_dict(doc: dict) -> PredictionRow:
    """Build a prediction row from one records.json line."""
    url = doc.get("url")
    if not isinstance(url, str) or not url:
        raise SchemaError("url", "record missing url")
    options = doc.get("options") or {}
    categories = set((options.get("by_category") or {}).keys())
    purposes = doc.get("purposes") or {}
    return PredictionRow(
        url=url,
        has_interface=doc.get("interface") is not None,
        has_accept="accept" in categories,
        has_reject="reject" in categories,
        has_settings="settings" in categories,
        has_save="save" in categories,
        has_pay="pay" in categories,
        has_checkbox=bool(purposes.get("controls")),
        has_prechecked=bool(purposes.get("prechecked_optional")),
    )


def _parse_bool(raw: str, column: str, where: str) -> bool:
    value = raw.strip()
    if value == "1":
        return True
    if value == "0":
        return False
    raise SchemaError(column, f"{where}: booleans must be 0 or 1, got {raw!r}")


def load_ground_truth(path: str | Path) -> list[GroundTruthRecord]:
    records: list[GroundTruthRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"url", "group", *_BOOL_COLUMNS}
        missing = required - set(reader.fieldnames or ())
        if missing:
            raise SchemaError(
                sorted(missing)[0], f"{path}: missing columns {sorted(missing)}"
            )
        for row_no, row in enumerate(reader, start=2):
            url = (row.get("url") or "").strip()
            if not url:
                raise SchemaError("url", f"{path}:{row_no}: empty url")
            if url in seen:
                raise SchemaError("url", f"{path}:{row_no}: duplicate url {url!r}")
            seen.add(url)
            where = f"{path}:{row_no}"
            flags = {
                col: _parse_bool(row.get(col) or "", col, where)
                for col in _BOOL_COLUMNS
            }
            try:
                records.append(
                    GroundTruthRecord(
                        url=url, group=(row.get("group") or "").strip(), **flags
                    )
                )
            except ValueError as exc:
                raise SchemaError("has_prechecked", f"{where}: {exc}") from exc
    return records


@dataclass(frozen=True)
class AccuracyCell:
    tp: int
    fp: int
    fn: int
    tn: int
    sample_size: int

    def __post_init__(self):
        if self.tp + self.fp + self.fn + self.tn != self.sample_size:
            raise ValueError("confusion counts must sum to the sample size")

    @property
    def f1(self) -> float | None:
        denom = 2 * self.tp + self.fp + self.fn
        return 2 * self.tp / denom if denom else None

    @property
    def fp_pct(self) -> float | None:
        return 100.0 * self.fp / self.sample_size if self.sample_size else None

    @property
    def fn_pct(self) -> float | None:
        return 100.0 * self.fn / self.sample_size if self.sample_size else None


@dataclass(frozen=True)
class AccuracyReport:
    groups: tuple[str, ...]
    cells: dict[tuple[str, str], AccuracyCell]

    def cell(self, group: str, element: str) -> AccuracyCell:
        return self.cells[(group, element)]

    def to_dict(self) -> dict:
        doc: dict = {}
        for group in self.groups:
            row: dict = {}
            for element in ELEMENTS:
                cell = self.cells[(group, element)]
                row[element] = {
                    "tp": cell.tp,
                    "fp": cell.fp,
                    "fn": cell.fn,
                    "tn": cell.tn,
                    "sample_size": cell.sample_size,
                    "f1": cell.f1,
                    "fp_pct": cell.fp_pct,
                    "fn_pct": cell.fn_pct,
                }
            doc[group] = row
        return doc


def _cell_for(pairs: list[tuple[bool, bool]]) -> AccuracyCell:
    tp = sum(1 for truth, pred in pairs if truth and pred)
    fp = sum(1 for truth, pred in pairs if not truth and pred)
    fn = sum(1 for truth, pred in pairs if truth and not pred)
    tn = sum(1 for truth, pred in pairs if not truth and not pred)
    return AccuracyCell(tp=tp, fp=fp, fn=fn, tn=tn, sample_size=len(pairs))


def evaluate(
    predictions: list[PredictionRow], truth: list[GroundTruthRecord]
) -> AccuracyReport:
    by_url: dict[str, PredictionRow] = {}
    for pred in predictions:
        if pred.url in by_url:
            raise SchemaError("url", f"duplicate prediction for {pred.url!r}")
        by_url[pred.url] = pred
    joined: list[tuple[GroundTruthRecord, PredictionRow]] = []
    for record in truth:
        pred = by_url.get(record.url)
        if pred is None:
            raise JoinError(record.url)
        joined.append((record, pred))

    groups: dict[str, list[tuple[GroundTruthRecord, PredictionRow]]] = {}
    for pair in joined:
        groups.setdefault(pair[0].group, []).append(pair)
    if "all" in groups:
        # A literal group named "all" would collide with the synthetic total.
        ordered_groups = sorted(groups)
    else:
        ordered_groups = ["all", *sorted(groups)]
        groups["all"] = joined

    cells: dict[tuple[str, str], AccuracyCell] = {}
    for group in ordered_groups:
        members = groups[group]
        for element in ELEMENTS:
            if element == "prechecked":
                # Scored only where both sides agree a checkbox exists; the
                # cell's sample is that subset, not the whole group.
                pool = [
                    (t, p)
                    for t, p in members
                    if t.has_checkbox and p.has_checkbox
                ]
            else:
                pool = members
            cells[(group, element)] = _cell_for(
                [(t.flag(element), p.flag(element)) for t, p in pool]
            )
    return AccuracyReport(groups=tuple(ordered_groups), cells=cells)


def export_accuracy_csv(report: AccuracyReport, path: str | Path) -> None:
    header = [
        "group",
        "element",
        "tp",
        "fp",
        "fn",
        "tn",
        "sample_size",
        "f1",
        "fp_pct",
        "fn_pct",
    ]
    rows: list[list[str]] = []
    for group in report.groups:
        for element in ELEMENTS:
            cell = report.cells[(group, element)]
            rows.append(
                [
                    group,
                    element,
                    str(cell.tp),
                    str(cell.fp),
                    str(cell.fn),
                    str(cell.tn),
                    str(cell.sample_size),
                    "" if cell.f1 is None else f"{cell.f1:.2f}",
                    fmt_pct(cell.fp_pct),
                    fmt_pct(cell.fn_pct),
                ]
            )
    _write_csv(Path(path), header, rows)
