"""Single-snapshot analysis: detection, option extraction, CMP lookup,
purpose controls, and the compliance verdict rolled into one SiteRecord."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cmp import SelectorRegistry, TcfRegistry, identify
from .compliance import judge
from .corpus import CorpusBundle
from .detector import detect_all
from .options import extract_options
from .prominence import ProminenceConfig
from .purpose_controls import extract_purposes
from .report import SiteRecord
from .snapshot import PageSnapshot, build_index


@dataclass(frozen=True)
class AnalysisContext:
    """Immutable registries shared by every worker in a batch."""

    corpus: CorpusBundle
    selectors: SelectorRegistry
    tcf: TcfRegistry
    prominence: ProminenceConfig = field(default_factory=ProminenceConfig)
    apply_negative_filter: bool = True


def analyze(
    snapshot: PageSnapshot,
    context: AnalysisContext,
    *,
    url: str | None = None,
    country: str = "",
    rank: int = 1,
) -> SiteRecord:
    """Run the full pipeline on one snapshot.

    url defaults to the snapshot's own; country/rank come from the batch
    manifest and default to placeholders for single-page runs.
    """
    record_url = url if url is not None else snapshot.url
    diagnostics: dict = {}

    detections = detect_all(
        snapshot, context.corpus.triggers, context.corpus.negatives
    )
    if context.apply_negative_filter:
        kept = [d for d in detections if not d.negative_hit]
        dropped = [d for d in detections if d.negative_hit]
        if dropped:
            diagnostics["negative_filtered"] = [d.to_dict() for d in dropped]
    else:
        kept = detections

    if not kept:
        return SiteRecord(
            url=record_url,
            country=country,
            rank=rank,
            status=snapshot.status,
            diagnostics=diagnostics,
        )

    interface, *runner_ups = kept
    if runner_ups:
        diagnostics["runner_ups"] = [d.to_dict() for d in runner_ups]

    index = build_index(snapshot)
    options = extract_options(
        interface, snapshot, context.corpus.labels, context.prominence, index=index
    )
    purposes = extract_purposes(interface, snapshot, index=index)
    cmp_identity = identify(
        interface, snapshot, context.selectors, context.tcf, index=index
    )
    verdict = judge(options, purposes, context.prominence)

    return SiteRecord(
        url=record_url,
        country=country,
        rank=rank,
        status=snapshot.status,
        interface=interface,
        cmp=cmp_identity,
        options=options,
        purposes=purposes,
        verdict=verdict,
        diagnostics=diagnostics,
    )
