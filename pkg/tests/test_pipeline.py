from __future__ import annotations

from dataclasses import replace

from consent_audit.compliance import Reason
from consent_audit.corpus import OptionCategory
from consent_audit.pipeline import analyze
from consent_audit.snapshot import BlockKind, Status, TcfApi, TcfProbe

from helpers import banner, node, page, wrap_page


def _consent_banner(node_id: int = 10, *, attrs=None, text="We use cookies to improve your experience."):
    return banner(
        node_id,
        attrs=attrs,
        children=(
            node(node_id + 1, "p", text=text),
            node(node_id + 2, "button", text="Accept all", background_color=(16, 112, 224)),
            node(node_id + 3, "button", text="Reject all", background_color=(16, 112, 224)),
            node(node_id + 4, "button", text="Settings"),
            node(
                node_id + 5,
                "input",
                attrs={"type": "checkbox", "aria-label": "Marketing"},
            ),
        ),
    )


def test_analyze_full_page(context):
    record = analyze(wrap_page(_consent_banner()), context, url="https://shop.example", country="de", rank=7)
    assert record.url == "https://shop.example"
    assert record.country == "de"
    assert record.rank == 7
    assert record.status is Status.SUCCESS
    assert record.interface is not None
    assert record.interface.root_node_id == 10
    assert set(record.options.by_category) == {
        OptionCategory.ACCEPT,
        OptionCategory.REJECT,
        OptionCategory.SETTINGS,
    }
    assert record.purposes.optional_count == 1
    assert record.verdict.compliant
    assert record.cmp is None


def test_analyze_defaults_url_from_snapshot(context):
    snapshot = wrap_page(_consent_banner())
    record = analyze(snapshot, context)
    assert record.url == snapshot.url
    assert record.country == ""
    assert record.rank == 1


def test_analyze_no_banner(context):
    record = analyze(wrap_page(), context)
    assert record.status is Status.SUCCESS
    assert record.interface is None
    assert record.verdict is None
    assert record.options is None
    assert record.diagnostics == {}


def test_analyze_blocked_page(context):
    snapshot = page(None, status=Status.BLOCKED, block_kind=BlockKind.HTTP_403)
    record = analyze(snapshot, context)
    assert record.status is Status.BLOCKED
    assert record.interface is None


def test_analyze_unreachable_page(context):
    record = analyze(page(None, status=Status.UNREACHABLE), context)
    assert record.status is Status.UNREACHABLE
    assert record.interface is None


def test_cmp_identified_from_selector(context):
    overlay = _consent_banner(attrs={"id": "onetrust-banner-sdk"})
    record = analyze(wrap_page(overlay), context)
    assert record.cmp is not None
    assert record.cmp.provider == "OneTrust"


def test_cmp_identified_from_tcf_probe(context):
    snapshot = wrap_page(_consent_banner())
    probed = replace(snapshot, tcf_result=TcfProbe(api=TcfApi.TCFAPI, cmp_id=28))
    record = analyze(probed, context)
    assert record.cmp is not None
    assert record.cmp.provider == "OneTrust"
    assert record.cmp.tcf_cmp_id == 28


def test_negative_candidate_filtered(context):
    gate = banner(
        40,
        children=(
            node(41, "p", text="You must be 18 years or older to enter. We use cookies."),
            node(42, "button", text="Enter"),
        ),
    )
    record = analyze(wrap_page(gate), context)
    assert record.interface is None
    filtered = record.diagnostics["negative_filtered"]
    assert [d["root_node_id"] for d in filtered] == [40]


def test_negative_filter_promotes_clean_candidate(context):
    gate = banner(
        40,
        z=3000,
        bbox=(0, 0, 1280, 720),
        children=(
            node(41, "p", text="Visitors must be 18 years or older. This site uses cookies."),
            node(42, "button", text="Enter"),
        ),
    )
    clean = _consent_banner(50)
    record = analyze(wrap_page(gate, clean), context)
    assert record.interface is not None
    assert record.interface.root_node_id == 50
    assert record.diagnostics["negative_filtered"]


def test_negative_filter_disabled(context):
    gate = banner(
        40,
        z=3000,
        bbox=(0, 0, 1280, 720),
        children=(
            node(41, "p", text="Only for visitors 18 years or older. We use cookies here to track you."),
            node(42, "button", text="Enter"),
        ),
    )
    unfiltered = replace(context, apply_negative_filter=False)
    record = analyze(wrap_page(gate), unfiltered)
    assert record.interface is not None
    assert record.interface.root_node_id == 40
    assert record.interface.negative_hit


def test_runner_ups_recorded(context):
    primary = _consent_banner(10)
    secondary = banner(
        60,
        z=500,
        bbox=(0, 0, 400, 100),
        children=(node(61, "p", text="Cookie notice"),),
    )
    record = analyze(wrap_page(primary, secondary), context)
    assert record.interface.root_node_id == 10
    runner_ups = record.diagnostics["runner_ups"]
    assert [d["root_node_id"] for d in runner_ups] == [60]


def test_non_compliant_page_reasons(context):
    overlay = banner(
        10,
        children=(
            node(11, "p", text="We use cookies on this site."),
            node(12, "button", text="Accept all"),
        ),
    )
    record = analyze(wrap_page(overlay), context)
    assert not record.verdict.compliant
    assert Reason.NO_REJECT in record.verdict.reasons
    assert Reason.NO_GRANULAR_CONTROLS in record.verdict.reasons


def test_analyze_is_deterministic(context):
    snapshot = wrap_page(_consent_banner(attrs={"id": "onetrust-banner-sdk"}))
    first = analyze(snapshot, context, url="https://a.example", country="de", rank=3)
    second = analyze(snapshot, context, url="https://a.example", country="de", rank=3)
    assert first.to_dict() == second.to_dict()
