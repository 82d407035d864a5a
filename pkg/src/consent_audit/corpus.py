"""Multilingual phrase corpora: interface trigger words, negative patterns, and
user-option labels, plus the text normalization and fuzzy matching they share."""

from __future__ import annotations

import csv
import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import ParseError, SchemaError


class OptionCategory(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    SETTINGS = "settings"
    SAVE = "save"
    PAY = "pay"


# Distance-1 ties across categories resolve in this order: rejecting is the
# conservative read for a compliance audit (never over-credits a reject option).
CATEGORY_PRIORITY = (
    OptionCategory.REJECT,
    OptionCategory.ACCEPT,
    OptionCategory.SETTINGS,
    OptionCategory.SAVE,
    OptionCategory.PAY,
)

_CATEGORY_RANK = {category: i for i, category in enumerate(CATEGORY_PRIORITY)}

# Characters in these classes vanish without leaving a word boundary, so marks
# inside words ("naïve") do not split them.
_GLUE_CATEGORIES = {"Cc", "Cf", "Mn", "Mc", "Me"}


def normalize(text: str) -> str:
    """NFKD-decompose, lowercase, drop marks/punctuation/controls, and collapse
    whitespace. Punctuation and separators become word boundaries; combining
    marks and control characters are removed outright. Idempotent.
    """
    decomposed = unicodedata.normalize("NFKD", text).lower()
    # Lowercasing can produce composed characters again (e.g. ligature forms),
    # so decompose once more before filtering.
    decomposed = unicodedata.normalize("NFKD", decomposed)
    out: list[str] = []
    for ch in decomposed:
        if ch.isspace():
            out.append(" ")
            continue
        category = unicodedata.category(ch)
        if category in _GLUE_CATEGORIES:
            continue
        if category[0] in ("Z", "P") or category == "Sk":
            out.append(" ")
            continue
        out.append(ch)
    return " ".join("".join(out).split())


@dataclass(frozen=True)
class TriggerCorpus:
    phrases: frozenset[str]
    per_language_counts: dict[str, int]


@dataclass(frozen=True)
class NegativeCorpus:
    patterns: tuple[re.Pattern[str], ...]


@dataclass(frozen=True)
class AmbiguityNote:
    """A distance-1 label matched corpus entries from different categories."""

    label_normalized: str
    tied_categories: tuple[OptionCategory, ...]
    chosen: OptionCategory

    def to_dict(self) -> dict:
        return {
            "label_normalized": self.label_normalized,
            "tied_categories": [c.value for c in self.tied_categories],
            "chosen": self.chosen.value,
        }


@dataclass(frozen=True)
class LabelMatch:
    category: OptionCategory
    distance: int
    ambiguity: AmbiguityNote | None = None


@dataclass(frozen=True)
class LabelCorpus:
    entries: dict[str, OptionCategory]
    category_counts: dict[OptionCategory, int]
    # Length buckets make the distance-1 scan cheap: a candidate only needs to
    # be compared against entries whose length differs by at most one.
    _by_length: dict[int, tuple[str, ...]] = field(default_factory=dict, repr=False)

    @staticmethod
    def from_entries(entries: dict[str, OptionCategory]) -> "LabelCorpus":
        counts: dict[OptionCategory, int] = {}
        by_length: dict[int, list[str]] = {}
        for key, category in entries.items():
            counts[category] = counts.get(category, 0) + 1
            by_length.setdefault(len(key), []).append(key)
        return LabelCorpus(
            entries=dict(entries),
            category_counts=counts,
            _by_length={n: tuple(keys) for n, keys in by_length.items()},
        )


def match_trigger(text: str, attrs: dict[str, str], corpus: TriggerCorpus) -> list[str]:
    """Every corpus phrase occurring in the element's text or attribute values.

    Phrases shorter than 5 characters must match a whole word so "ok" never
    fires inside "broker"; longer phrases match as plain substrings, which
    keeps deliberate stems like "acept" working.
    """
    haystacks = [normalize(text)]
    haystacks.extend(normalize(value) for value in attrs.values())
    matched = []
    for phrase in sorted(corpus.phrases):
        for haystack in haystacks:
            if _phrase_in(phrase, haystack):
                matched.append(phrase)
                break
    return matched


def _phrase_in(phrase: str, haystack: str) -> bool:
    if not phrase or phrase not in haystack:
        return False
    if len(phrase) >= 5:
        return True
    padded = f" {haystack} "
    return f" {phrase} " in padded


def match_negative(text: str, corpus: NegativeCorpus) -> bool:
    normalized = normalize(text)
    return any(pattern.search(normalized) for pattern in corpus.patterns)


def classify_label(label: str, corpus: LabelCorpus) -> LabelMatch | None:
    """Best corpus match within Levenshtein distance 1, or None.

    Exact matches win outright. Distance-1 ties across categories resolve by
    the fixed priority reject > accept > settings > save > pay and carry an
    AmbiguityNote so the tie stays visible in diagnostics.
    """
    normalized = normalize(label)
    exact = corpus.entries.get(normalized)
    if exact is not None:
        return LabelMatch(exact, 0)
    hit_categories: set[OptionCategory] = set()
    n = len(normalized)
    for length in (n - 1, n, n + 1):
        for entry in corpus._by_length.get(length, ()):
            if _within_distance_one(normalized, entry):
                hit_categories.add(corpus.entries[entry])
    if not hit_categories:
        return None
    chosen = min(hit_categories, key=_CATEGORY_RANK.__getitem__)
    ambiguity = None
    if len(hit_categories) > 1:
        tied = tuple(sorted(hit_categories, key=_CATEGORY_RANK.__getitem__))
        ambiguity = AmbiguityNote(normalized, tied, chosen)
    return LabelMatch(chosen, 1, ambiguity)


def _within_distance_one(a: str, b: str) -> bool:
    """Levenshtein(a, b) ≤ 1, decided without building the DP matrix."""
    if a == b:
        return True
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        return False
    if la == lb:
        # Exactly one substitution allowed.
        diff = 0
        for ca, cb in zip(a, b):
            if ca != cb:
                diff += 1
                if diff > 1:
                    return False
        return True
    if la > lb:
        a, b = b, a
        la, lb = lb, la
    # b is one longer: a must equal b with one character deleted.
    i = 0
    while i < la and a[i] == b[i]:
        i += 1
    return a[i:] == b[i + 1 :]


# ---------------------------------------------------------------------------
# Loading

_CORPUS_COLUMNS = ("language", "category", "phrase")
_LABEL_CATEGORIES = {c.value for c in OptionCategory}


@dataclass(frozen=True)
class CorpusBundle:
    triggers: TriggerCorpus
    negatives: NegativeCorpus
    labels: LabelCorpus


def load_corpus_dir(path: str | Path) -> CorpusBundle:
    """Read every CSV in a corpus directory.

    All files share the columns (language, category, phrase). Rows with
    category "trigger" feed the trigger corpus, "negative" rows are regexes
    for the negative corpus, and rows with an option-category value feed the
    label corpus.
    """
    directory = Path(path)
    files = sorted(directory.glob("*.csv"))
    if not files:
        raise ParseError(f"{directory}: no corpus CSV files found")
    trigger_phrases: set[str] = set()
    language_counts: dict[str, int] = {}
    negative_patterns: list[re.Pattern[str]] = []
    label_entries: dict[str, OptionCategory] = {}
    for file in files:
        for row_no, row in _read_rows(file):
            language = row["language"].strip()
            category = row["category"].strip()
            phrase = row["phrase"]
            where = f"{file.name}:{row_no}"
            if category == "trigger":
                normalized = normalize(phrase)
                if not normalized:
                    raise SchemaError("phrase", f"{where}: trigger normalizes to empty")
                trigger_phrases.add(normalized)
                language_counts[language] = language_counts.get(language, 0) + 1
            elif category == "negative":
                try:
                    negative_patterns.append(re.compile(phrase))
                except re.error as exc:
                    raise SchemaError(
                        "phrase", f"{where}: bad negative pattern: {exc}"
                    ) from exc
            elif category in _LABEL_CATEGORIES:
                normalized = normalize(phrase)
                if not normalized:
                    raise SchemaError("phrase", f"{where}: label normalizes to empty")
                option = OptionCategory(category)
                existing = label_entries.get(normalized)
                if existing is not None and existing is not option:
                    raise SchemaError(
                        "category",
                        f"{where}: label {normalized!r} already mapped to"
                        f" {existing.value}",
                    )
                label_entries[normalized] = option
            else:
                raise SchemaError("category", f"{where}: unknown category {category!r}")
    return CorpusBundle(
        triggers=TriggerCorpus(frozenset(trigger_phrases), language_counts),
        negatives=NegativeCorpus(tuple(negative_patterns)),
        labels=LabelCorpus.from_entries(label_entries),
    )


def _read_rows(file: Path) -> Iterable[tuple[int, dict[str, str]]]:
    with open(file, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in _CORPUS_COLUMNS:
            if column not in header:
                raise SchemaError(column, f"{file.name}: missing column {column!r}")
        for row_no, row in enumerate(reader, start=2):
            if row.get("phrase") is None:
                raise ParseError(f"{file.name}:{row_no}: short row")
            yield row_no, {k: (v if v is not None else "") for k, v in row.items()}


def default_corpus_dir() -> Path:
    return Path(__file__).parent / "data" / "corpus"
