"""Consent-interface detection and compliance auditing over page snapshots."""

from .cmp import (
    CmpEvidence,
    CmpIdentity,
    SelectorRegistry,
    TcfRegistry,
    identify,
    load_selectors,
    load_tcf,
    market_share,
)
from .compliance import (
    ComplianceVerdict,
    Reason,
    ReasonBreakdown,
    judge,
    reason_breakdown,
)
from .corpus import (
    AmbiguityNote,
    CorpusBundle,
    LabelCorpus,
    LabelMatch,
    NegativeCorpus,
    OptionCategory,
    TriggerCorpus,
    classify_label,
    load_corpus_dir,
    match_negative,
    match_trigger,
    normalize,
)
from .detector import DetectedInterface, detect, detect_all, find_candidates
from .errors import (
    ConsentAuditError,
    EmptyInputError,
    InvariantError,
    JoinError,
    ParseError,
    SchemaError,
)
from .evalx import (
    AccuracyReport,
    GroundTruthRecord,
    PredictionRow,
    evaluate,
    load_ground_truth,
    prediction_from_record,
)
from .options import InteractiveEvidence, OptionSet, UserOption, extract_options
from .pipeline import AnalysisContext, analyze
from .prominence import (
    ProminenceBreakdown,
    ProminenceConfig,
    ProminenceWeights,
    equally_prominent,
    score,
)
from .purpose_controls import PurposeControl, PurposeSummary, extract_purposes
from .report import (
    BinSpec,
    PrevalenceReport,
    SiteRecord,
    label_table,
    prevalence,
    write_records_jsonl,
)
from .snapshot import (
    BBox,
    BlockKind,
    ElementNode,
    Frame,
    PageSnapshot,
    Position,
    RGBA,
    Status,
    StyleProps,
    TcfProbe,
    TextDecoration,
    Viewport,
    load_snapshot,
    loads_snapshot,
    save_snapshot,
    walk,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityNote",
    "AccuracyReport",
    "AnalysisContext",
    "BBox",
    "BinSpec",
    "BlockKind",
    "CmpEvidence",
    "CmpIdentity",
    "ComplianceVerdict",
    "ConsentAuditError",
    "CorpusBundle",
    "DetectedInterface",
    "ElementNode",
    "EmptyInputError",
    "Frame",
    "GroundTruthRecord",
    "InteractiveEvidence",
    "InvariantError",
    "JoinError",
    "LabelCorpus",
    "LabelMatch",
    "NegativeCorpus",
    "OptionCategory",
    "OptionSet",
    "PageSnapshot",
    "ParseError",
    "Position",
    "PredictionRow",
    "PrevalenceReport",
    "ProminenceBreakdown",
    "ProminenceConfig",
    "ProminenceWeights",
    "PurposeControl",
    "PurposeSummary",
    "RGBA",
    "Reason",
    "ReasonBreakdown",
    "SchemaError",
    "SelectorRegistry",
    "SiteRecord",
    "Status",
    "StyleProps",
    "TcfProbe",
    "TcfRegistry",
    "TextDecoration",
    "TriggerCorpus",
    "UserOption",
    "Viewport",
    "analyze",
    "classify_label",
    "detect",
    "detect_all",
    "equally_prominent",
    "evaluate",
    "extract_options",
    "extract_purposes",
    "find_candidates",
    "identify",
    "judge",
    "label_table",
    "load_corpus_dir",
    "load_ground_truth",
    "load_selectors",
    "load_snapshot",
    "load_tcf",
    "loads_snapshot",
    "market_share",
    "match_negative",
    "match_trigger",
    "normalize",
    "prediction_from_record",
    "prevalence",
    "reason_breakdown",
    "save_snapshot",
    "score",
    "walk",
    "write_records_jsonl",
]
