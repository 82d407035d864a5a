"""Minimal-compliance verdicts and reason decomposition.

An interface is minimally compliant when rejecting is as easy as accepting
(both options present, equally prominent), no optional purpose arrives
pre-checked, and granular controls exist (first-layer checkboxes or a
settings option). Everything else yields a non-empty reason set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import OptionCategory
from .errors import EmptyInputError
from .options import OptionSet
from .prominence import ProminenceConfig, equally_prominent_totals
from .purpose_controls import PurposeSummary


class Reason(str, Enum):
    NO_ACCEPT = "no_accept"
    NO_REJECT = "no_reject"
    UNEQUAL_PROMINENCE = "unequal_prominence"
    NO_GRANULAR_CONTROLS = "no_granular_controls"
    PRECHECKED_PURPOSES = "prechecked_purposes"


# Stable display order for exports and breakdown keys.
REASON_ORDER: tuple[Reason, ...] = (
    Reason.NO_ACCEPT,
    Reason.NO_REJECT,
    Reason.UNEQUAL_PROMINENCE,
    Reason.NO_GRANULAR_CONTROLS,
    Reason.PRECHECKED_PURPOSES,
)


@dataclass(frozen=True)
class InputsDigest:
    """What the verdict was computed from, for audit trails."""

    categories_present: tuple[str, ...]
    accept_prominence: float | None
    reject_prominence: float | None
    optional_count: int
    prechecked_optional: bool

    def to_dict(self) -> dict:
        return {
            "categories_present": list(self.categories_present),
            "accept_prominence": self.accept_prominence,
            "reject_prominence": self.reject_prominence,
            "optional_count": self.optional_count,
            "prechecked_optional": self.prechecked_optional,
        }


@dataclass(frozen=True)
class ComplianceVerdict:
    compliant: bool
    reasons: frozenset[Reason]
    inputs_digest: InputsDigest | None = None

    def __post_init__(self):
        if self.compliant != (not self.reasons):
            raise ValueError("compliant must mirror an empty reason set")

    def to_dict(self) -> dict:
        doc: dict = {
            "compliant": self.compliant,
            "reasons": [r.value for r in REASON_ORDER if r in self.reasons],
        }
        if self.inputs_digest is not None:
            doc["inputs"] = self.inputs_digest.to_dict()
        return doc


def judge(
    options: OptionSet,
    purposes: PurposeSummary,
    config: ProminenceConfig | None = None,
) -> ComplianceVerdict:
    config = config or ProminenceConfig()
    accept = options.by_category.get(OptionCategory.ACCEPT)
    reject = options.by_category.get(OptionCategory.REJECT)
    settings = options.by_category.get(OptionCategory.SETTINGS)

    reasons: set[Reason] = set()
    if accept is None:
        reasons.add(Reason.NO_ACCEPT)
    if reject is None:
        reasons.add(Reason.NO_REJECT)
    if (
        accept is not None
        and reject is not None
        and not equally_prominent_totals(accept.prominence, reject.prominence, config)
    ):
        reasons.add(Reason.UNEQUAL_PROMINENCE)
    if purposes.optional_count == 0 and settings is None:
        reasons.add(Reason.NO_GRANULAR_CONTROLS)
    if purposes.prechecked_optional:
        reasons.add(Reason.PRECHECKED_PURPOSES)

    digest = InputsDigest(
        categories_present=tuple(
            c.value for c in sorted(options.by_category, key=lambda c: c.value)
        ),
        accept_prominence=accept.prominence if accept else None,
        reject_prominence=reject.prominence if reject else None,
        optional_count=purposes.optional_count,
        prechecked_optional=purposes.prechecked_optional,
    )
    return ComplianceVerdict(
        compliant=not reasons, reasons=frozenset(reasons), inputs_digest=digest
    )


@dataclass(frozen=True)
class ReasonBreakdown:
    """Exclusive reason-combination counts over a verdict population.

    combinations maps a sorted reason tuple to the number of verdicts with
    exactly that reason set, so the counts partition the non-compliant
    population. per_reason marginals count every verdict containing the
    reason regardless of what else it carries.
    """

    total: int
    compliant: int
    combinations: dict[tuple[Reason, ...], int] = field(default_factory=dict)
    per_reason: dict[Reason, int] = field(default_factory=dict)

    @property
    def non_compliant(self) -> int:
        return self.total - self.compliant

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "compliant": self.compliant,
            "non_compliant": self.non_compliant,
            "combinations": [
                {"reasons": [r.value for r in combo], "count": count}
                for combo, count in sorted(
                    self.combinations.items(),
                    key=lambda kv: (-kv[1], [r.value for r in kv[0]]),
                )
            ],
            "per_reason": {
                r.value: self.per_reason.get(r, 0) for r in REASON_ORDER
            },
        }


def _combo_key(reasons: frozenset[Reason]) -> tuple[Reason, ...]:
    return tuple(r for r in REASON_ORDER if r in reasons)


def reason_breakdown(verdicts: list[ComplianceVerdict]) -> ReasonBreakdown:
    if not verdicts:
        raise EmptyInputError("reason_breakdown needs at least one verdict")
    combinations: dict[tuple[Reason, ...], int] = {}
    per_reason: dict[Reason, int] = {}
    compliant = 0
    for verdict in verdicts:
        if verdict.compliant:
            compliant += 1
            continue
        key = _combo_key(verdict.reasons)
        combinations[key] = combinations.get(key, 0) + 1
        for reason in verdict.reasons:
            per_reason[reason] = per_reason.get(reason, 0) + 1
    return ReasonBreakdown(
        total=len(verdicts),
        compliant=compliant,
        combinations=combinations,
        per_reason=per_reason,
    )
