"""Visual prominence scoring.

Each feature lands in [-1,1] with 0 reserved for missing data, and the total is
a weighted sum: saturation 1.5, background contrast 1.0, border and text
contrast 0.5 each, border saturation contrast and text decoration 0.2 each.
Two elements are equally prominent when their totals differ by less than the
threshold (default 0.5, strict).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, SchemaError
from .snapshot import (
    RGBA,
    ElementNode,
    SnapshotIndex,
    StyleProps,
    TextDecoration,
)

WHITE = RGBA(255, 255, 255, 1.0)

# WCAG 2.1 contrast ratios span [1,21]; 4.5 is the readability midpoint, so the
# signed transform maps CR=4.5 to 0 and CR=21 to +1.
_CR_MIDPOINT = 4.5
_CR_SPAN = 16.5


@dataclass(frozen=True)
class ProminenceWeights:
    saturation: float = 1.5
    bg_contrast: float = 1.0
    border_contrast: float = 0.5
    text_contrast: float = 0.5
    border_sat_contrast: float = 0.2
    text_decoration: float = 0.2


@dataclass(frozen=True)
class ProminenceConfig:
    equality_threshold: float = 0.5
    weights: ProminenceWeights = ProminenceWeights()

    def __post_init__(self):
        if self.equality_threshold <= 0:
            raise ValueError("equality_threshold must be > 0")


@dataclass(frozen=True)
class ProminenceBreakdown:
    saturation: float
    bg_contrast: float
    border_contrast: float
    text_contrast: float
    border_sat_contrast: float
    text_decoration: float
    total: float

    def to_dict(self) -> dict:
        return {
            "saturation": self.saturation,
            "bg_contrast": self.bg_contrast,
            "border_contrast": self.border_contrast,
            "text_contrast": self.text_contrast,
            "border_sat_contrast": self.border_sat_contrast,
            "text_decoration": self.text_decoration,
            "total": self.total,
        }


# ---------------------------------------------------------------------------
# Color math


def composite_over(fg: RGBA, bg: RGBA) -> RGBA:
    """Source-over alpha compositing against an opaque background."""
    a = fg.a
    return RGBA(
        round(fg.r * a + bg.r * (1 - a)),
        round(fg.g * a + bg.g * (1 - a)),
        round(fg.b * a + bg.b * (1 - a)),
        1.0,
    )


def hsv_saturation(color: RGBA) -> float:
    high = max(color.r, color.g, color.b)
    if high == 0:
        return 0.0
    low = min(color.r, color.g, color.b)
    return (high - low) / high


def relative_luminance(color: RGBA) -> float:
    def linearize(channel: int) -> float:
        c = channel / 255.0
        if c <= 0.03928:
            return c / 12.92
        return ((c + 0.055) / 1.055) ** 2.4

    return (
        0.2126 * linearize(color.r)
        + 0.7152 * linearize(color.g)
        + 0.0722 * linearize(color.b)
    )


def contrast_ratio(a: RGBA, b: RGBA) -> float:
    la, lb = relative_luminance(a), relative_luminance(b)
    lighter, darker = max(la, lb), min(la, lb)
    return (lighter + 0.05) / (darker + 0.05)


def _clamp(value: float, low: float = -1.0, high: float = 1.0) -> float:
    return max(low, min(high, value))


def _signed_contrast(a: RGBA, b: RGBA) -> float:
    return _clamp((contrast_ratio(a, b) - _CR_MIDPOINT) / _CR_SPAN)


# ---------------------------------------------------------------------------
# Scoring


def resolve_background(index: SnapshotIndex, node_id: int) -> RGBA:
    """Nearest effective background behind an element: walk ancestors
    compositing translucent layers until an opaque one, else white."""
    layers: list[RGBA] = []
    for ancestor in index.ancestors(node_id):
        bg = ancestor.style.background_color
        if bg is None or bg.a == 0:
            continue
        layers.append(bg)
        if bg.a >= 1.0:
            break
    result = WHITE
    for layer in reversed(layers):
        result = composite_over(layer, result)
    return result


def score(
    element: ElementNode,
    parent_background: RGBA,
    config: ProminenceConfig | None = None,
) -> ProminenceBreakdown:
    """Score one element against its resolved parent background.

    A feature is 0 whenever its inputs are missing: no usable background kills
    saturation and every contrast against the element background, a zero-width
    or colorless border kills both border features.
    """
    config = config or ProminenceConfig()
    style = element.style

    elem_bg: RGBA | None = None
    raw_bg = style.background_color
    if raw_bg is not None and raw_bg.a > 0:
        elem_bg = composite_over(raw_bg, parent_background)

    saturation = 0.0
    bg_contrast = 0.0
    if elem_bg is not None:
        saturation = 2.0 * hsv_saturation(elem_bg) - 1.0
        bg_contrast = _signed_contrast(elem_bg, parent_background)

    text_contrast = 0.0
    if elem_bg is not None and style.color is not None and style.color.a > 0:
        text_color = composite_over(style.color, elem_bg)
        text_contrast = _signed_contrast(text_color, elem_bg)

    border_contrast = 0.0
    border_sat_contrast = 0.0
    border = _effective_border(style, elem_bg, parent_background)
    if border is not None and elem_bg is not None:
        border_contrast = _signed_contrast(border, elem_bg)
        border_sat_contrast = _clamp(hsv_saturation(border) - hsv_saturation(elem_bg))

    text_decoration = 1.0 if style.text_decoration is TextDecoration.UNDERLINE else 0.0

    w = config.weights
    total = (
        w.saturation * saturation
        + w.bg_contrast * bg_contrast
        + w.border_contrast * border_contrast
        + w.text_contrast * text_contrast
        + w.border_sat_contrast * border_sat_contrast
        + w.text_decoration * text_decoration
    )
    return ProminenceBreakdown(
        saturation=saturation,
        bg_contrast=bg_contrast,
        border_contrast=border_contrast,
        text_contrast=text_contrast,
        border_sat_contrast=border_sat_contrast,
        text_decoration=text_decoration,
        total=total,
    )


def _effective_border(
    style: StyleProps, elem_bg: RGBA | None, parent_background: RGBA
) -> RGBA | None:
    if not style.border_width_px or style.border_width_px <= 0:
        return None
    if style.border_color is None or style.border_color.a == 0:
        return None
    backdrop = elem_bg if elem_bg is not None else parent_background
    return composite_over(style.border_color, backdrop)


def equally_prominent(
    a: ProminenceBreakdown, b: ProminenceBreakdown, config: ProminenceConfig | None = None
) -> bool:
    return equally_prominent_totals(a.total, b.total, config)


def equally_prominent_totals(
    a: float, b: float, config: ProminenceConfig | None = None
) -> bool:
    """Strict comparison: a gap of exactly the threshold is unequal."""
    config = config or ProminenceConfig()
    return abs(a - b) < config.equality_threshold


# ---------------------------------------------------------------------------
# Config file support (JSON key-value overrides for weights and threshold)


def load_config(path: str | Path) -> ProminenceConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed config: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("config", "prominence config must be a JSON object")
    defaults = ProminenceWeights()
    weight_fields = {}
    for name in (
        "saturation",
        "bg_contrast",
        "border_contrast",
        "text_contrast",
        "border_sat_contrast",
        "text_decoration",
    ):
        value = doc.get(name, getattr(defaults, name))
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SchemaError(name)
        weight_fields[name] = float(value)
    threshold = doc.get("equality_threshold", 0.5)
    if not isinstance(threshold, (int, float)) or isinstance(threshold, bool):
        raise SchemaError("equality_threshold")
    return ProminenceConfig(
        equality_threshold=float(threshold),
        weights=ProminenceWeights(**weight_fields),
    )
