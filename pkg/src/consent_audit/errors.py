"""Error types shared across the analysis pipeline."""

from __future__ import annotations


class ConsentAuditError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ConsentAuditError):
    """A document could not be parsed at all (malformed JSON/CSV)."""


class SchemaError(ConsentAuditError):
    """A parsed document is missing a required field or has a bad type."""

    def __init__(self, field: str, message: str | None = None):
        self.field = field
        super().__init__(message or f"schema violation at field {field!r}")


class InvariantError(ConsentAuditError):
    """A structurally valid document violates a data-model invariant."""

    def __init__(self, field: str, message: str | None = None):
        self.field = field
        super().__init__(message or f"invariant violation at {field!r}")


class EmptyInputError(ConsentAuditError):
    """An aggregation was asked to run over an empty collection."""


class JoinError(ConsentAuditError):
    """Ground truth and predictions could not be joined on url."""

    def __init__(self, url: str):
        self.url = url
        super().__init__(f"no prediction found for ground-truth url {url!r}")
