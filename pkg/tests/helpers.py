"""Builders for snapshot trees used across the test modules."""

from __future__ import annotations

from consent_audit.snapshot import (
    BBox,
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
)

VIEWPORT = Viewport(1280, 720)


def style(**kw) -> StyleProps:
    if isinstance(kw.get("position"), str):
        kw["position"] = Position(kw["position"])
    if isinstance(kw.get("text_decoration"), str):
        kw["text_decoration"] = TextDecoration(kw["text_decoration"])
    for key in ("color", "background_color", "border_color"):
        value = kw.get(key)
        if isinstance(value, tuple) and not isinstance(value, RGBA):
            kw[key] = RGBA(*value)
    return StyleProps(**kw)


def node(
    node_id: int,
    tag: str = "div",
    *,
    text: str = "",
    attrs: dict[str, str] | None = None,
    children: tuple[ElementNode, ...] | list[ElementNode] = (),
    bbox: tuple[float, float, float, float] | None = None,
    has_listener: bool = False,
    shadow_host: bool = False,
    **style_kw,
) -> ElementNode:
    return ElementNode(
        node_id=node_id,
        tag=tag,
        attributes=dict(attrs or {}),
        text=text,
        style=style(**style_kw),
        bbox=BBox(*bbox) if bbox is not None else None,
        has_listener=has_listener,
        shadow_host=shadow_host,
        children=tuple(children),
    )


def banner(node_id: int, children=(), *, text: str = "", z: int = 1000, **kw) -> ElementNode:
    """A fixed overlay that satisfies the candidate predicate."""
    kw.setdefault("bbox", (0, 400, 1280, 300))
    return node(
        node_id,
        text=text,
        children=children,
        position="fixed",
        z_index=z,
        **kw,
    )


def page(
    root: ElementNode | None,
    *,
    frames: tuple[Frame, ...] = (),
    status: Status = Status.SUCCESS,
    url: str = "https://example.test/",
    tcf: TcfProbe | None = None,
    viewport: Viewport = VIEWPORT,
    block_kind=None,
) -> PageSnapshot:
    return PageSnapshot(
        url=url,
        captured_at="2026-08-20T12:00:00Z",
        status=status,
        viewport=viewport,
        root=root,
        frames=frames,
        block_kind=block_kind,
        tcf_result=tcf,
    )


def wrap_page(*banners: ElementNode, filler_id: int = 900) -> PageSnapshot:
    """A minimal page whose body holds the given subtrees plus filler text."""
    body = node(
        filler_id + 1,
        "body",
        children=(
            node(filler_id + 2, "p", text="Plain page content."),
            *banners,
        ),
    )
    return page(node(filler_id, "html", children=(body,)))
