/**
 * Page-world script sources.
 *
 * These run inside the page, so they are shipped as strings rather than as
 * typed functions: nothing here may close over Node.js state, and everything
 * returned must survive structured cloning. Keep the code ES2020-ish and
 * defensive; pages redefine builtins more often than you would hope.
 */

/** Event types that make an element count as interactive. */
export const INTERACTION_EVENTS = [
  "click",
  "dblclick",
  "mousedown",
  "mouseup",
  "pointerdown",
  "pointerup",
  "touchstart",
  "touchend",
  "keydown",
  "keyup",
] as const;

// ---------------------------------------------------------------------------
// Pre-navigation patches

/**
 * Installed via evaluateOnNewDocument so it runs before any page script in
 * every frame. Two patches:
 *
 *  - attachShadow is forced to open mode, so closed shadow roots stay
 *    reachable from the extraction script (the page still gets a working
 *    ShadowRoot back and almost never notices).
 *  - addEventListener stamps a marker property on element targets for
 *    interaction events. The marker, not the listener list, is what the
 *    extraction script reads.
 */
export const PRE_NAVIGATION_SCRIPT = `
(() => {
  if (window.__caPatched) return;
  window.__caPatched = true;
  const INTERACTION = new Set(${JSON.stringify(INTERACTION_EVENTS)});
  try {
    const origAdd = EventTarget.prototype.addEventListener;
    EventTarget.prototype.addEventListener = function (type, listener, options) {
      try {
        if (this && this.nodeType === 1 && INTERACTION.has(String(type))) {
          this.__caHasListener = true;
        }
      } catch (err) { /* never break the page over bookkeeping */ }
      return origAdd.call(this, type, listener, options);
    };
  } catch (err) { /* leave the original in place */ }
  try {
    const origAttach = Element.prototype.attachShadow;
    Element.prototype.attachShadow = function (init) {
      const forced = Object.assign({}, init, { mode: 'open' });
      return origAttach.call(this, forced);
    };
  } catch (err) { /* closed roots stay closed; extraction just sees less */ }
})();
`;

// ---------------------------------------------------------------------------
// DOM extraction

/**
 * Serializes the frame's element tree into the RawNode shape. Evaluated once
 * per frame after the settle wait. Shadow subtrees are appended after the
 * light children of their host; iframe content is NOT descended into here,
 * each frame is extracted separately and stitched together host-side.
 */
export const EXTRACT_SCRIPT = `
(() => {
  const SKIP_TAGS = new Set(['script', 'style', 'noscript', 'template', 'meta', 'link', 'base', 'title', 'head']);
  const MAX_DEPTH = 256;

  const COLOR_RE = /^rgba?\\(([\\d.]+),\\s*([\\d.]+),\\s*([\\d.]+)(?:,\\s*([\\d.]+))?\\)$/;
  function parseColor(value) {
    // Computed colors are rgb()/rgba() for everything authored in legacy
    // spaces; anything else (oklch, color()) is dropped rather than guessed.
    const m = COLOR_RE.exec(value || '');
    if (!m) return null;
    const clampByte = (s) => Math.max(0, Math.min(255, Math.round(parseFloat(s))));
    const rgb = [clampByte(m[1]), clampByte(m[2]), clampByte(m[3])];
    if (m[4] === undefined) return rgb;
    const alpha = Math.max(0, Math.min(1, parseFloat(m[4])));
    return [rgb[0], rgb[1], rgb[2], alpha];
  }

  function parsePx(value) {
    if (typeof value !== 'string' || value.endsWith('%')) return null;
    const n = parseFloat(value);
    return Number.isFinite(n) ? n : null;
  }

  function round2(n) {
    return Math.round(n * 100) / 100;
  }

  function styleOf(el) {
    const cs = getComputedStyle(el);
    const zRaw = cs.zIndex;
    let zIndex = null;
    if (zRaw !== 'auto') {
      const z = parseInt(zRaw, 10);
      if (Number.isFinite(z)) zIndex = z;
    }
    const deco = cs.textDecorationLine || 'none';
    const opacity = Math.max(0, Math.min(1, parseFloat(cs.opacity) || 0));
    return {
      z_index: zIndex,
      position: cs.position || 'static',
      color: parseColor(cs.color),
      background_color: parseColor(cs.backgroundColor),
      border_width_px: parsePx(cs.borderTopWidth),
      border_color: parseColor(cs.borderTopColor),
      border_radius_px: parsePx(cs.borderTopLeftRadius),
      text_decoration: deco.includes('underline') ? 'underline' : (deco === 'none' ? 'none' : 'other'),
      display: cs.display,
      visibility: cs.visibility,
      opacity: opacity,
    };
  }

  function ownText(el) {
    let text = '';
    for (const child of el.childNodes) {
      if (child.nodeType === Node.TEXT_NODE) text += child.textContent;
    }
    return text.replace(/\\s+/g, ' ').trim();
  }

  function serialize(el, depth) {
    const tag = el.tagName.toLowerCase();
    if (SKIP_TAGS.has(tag) || depth > MAX_DEPTH) return null;

    const attributes = {};
    for (const name of el.getAttributeNames()) {
      attributes[name] = el.getAttribute(name) ?? '';
    }

    const rect = el.getBoundingClientRect();
    const children = [];
    for (const child of el.children) {
      const node = serialize(child, depth + 1);
      if (node) children.push(node);
    }
    const shadow = el.shadowRoot;
    if (shadow) {
      for (const child of shadow.children) {
        const node = serialize(child, depth + 1);
        if (node) children.push(node);
      }
    }

    return {
      tag: tag,
      attributes: attributes,
      text: ownText(el),
      style: styleOf(el),
      bbox: {
        x: round2(rect.x),
        y: round2(rect.y),
        w: round2(Math.max(0, rect.width)),
        h: round2(Math.max(0, rect.height)),
      },
      has_listener: el.__caHasListener === true || typeof el.onclick === 'function',
      shadow_host: !!shadow,
      children: children,
    };
  }

  return serialize(document.documentElement, 0);
})()
`;

// ---------------------------------------------------------------------------
// Consent API probe

/**
 * Detects the IAB consent API. Presence of the function is the signal; the
 * ping callback merely upgrades it with a CMP id when one is offered. The
 * internal timeout keeps a broken CMP stub from stalling the capture.
 */
export const TCF_PROBE_SCRIPT = `
new Promise((resolve) => {
  let settled = false;
  const once = (api, cmpId) => {
    if (settled) return;
    settled = true;
    const id = typeof cmpId === 'number' && Number.isInteger(cmpId) ? cmpId : null;
    resolve({ api: api, cmp_id: id });
  };
  try {
    if (typeof window.__tcfapi === 'function') {
      setTimeout(() => once('tcfapi', null), 1500);
      window.__tcfapi('ping', 2, (data) => once('tcfapi', data && data.cmpId));
      return;
    }
    if (typeof window.__cmp === 'function') {
      setTimeout(() => once('cmp', null), 1500);
      window.__cmp('ping', null, (data) => once('cmp', data && data.cmpId));
      return;
    }
  } catch (err) {
    if (typeof window.__tcfapi === 'function') { once('tcfapi', null); return; }
    if (typeof window.__cmp === 'function') { once('cmp', null); return; }
  }
  once('none', null);
})
`;
