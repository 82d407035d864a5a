from __future__ import annotations

import pytest

from consent_audit.cmp import (
    default_selectors_path,
    default_tcf_path,
    load_selectors,
    load_tcf,
)
from consent_audit.corpus import default_corpus_dir, load_corpus_dir
from consent_audit.pipeline import AnalysisContext
from consent_audit.prominence import ProminenceConfig


@pytest.fixture(scope="session")
def bundle():
    return load_corpus_dir(default_corpus_dir())


@pytest.fixture(scope="session")
def triggers(bundle):
    return bundle.triggers


@pytest.fixture(scope="session")
def negatives(bundle):
    return bundle.negatives


@pytest.fixture(scope="session")
def labels(bundle):
    return bundle.labels


@pytest.fixture(scope="session")
def selectors():
    return load_selectors(default_selectors_path())


@pytest.fixture(scope="session")
def tcf_registry():
    return load_tcf(default_tcf_path())


@pytest.fixture(scope="session")
def context(bundle, selectors, tcf_registry):
    return AnalysisContext(
        corpus=bundle,
        selectors=selectors,
        tcf=tcf_registry,
        prominence=ProminenceConfig(),
        apply_negative_filter=True,
    )
