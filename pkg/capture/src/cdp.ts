/**
 * Listener discovery over the devtools protocol. Complements the
 * addEventListener patch from scripts.ts: the patch only sees registrations
 * made after document start in the page world, while the protocol query also
 * returns listeners attached from other worlds or before the patch landed.
 * Either source marks the element; the extraction script reads the marker.
 */

import type { Page, Protocol } from "puppeteer-core";

import { INTERACTION_EVENTS } from "./scripts";

// Protocol round-trips are per element, so bound the walk. Pages bigger than
// this keep the patch-based flags only.
const MAX_QUERIED_NODES = 4000;

const INTERACTION = new Set<string>(INTERACTION_EVENTS);

function collectElements(root: Protocol.DOM.Node, out: Protocol.DOM.Node[]): void {
  if (out.length >= MAX_QUERIED_NODES) return;
  if (root.nodeType === 1) out.push(root);
  for (const child of root.children ?? []) collectElements(child, out);
  for (const shadow of root.shadowRoots ?? []) collectElements(shadow, out);
  if (root.contentDocument) collectElements(root.contentDocument, out);
}

/**
 * Stamp `__caHasListener` on every element that has an interaction listener
 * according to DOMDebugger.getEventListeners. Individual node failures are
 * expected (nodes detach mid-walk) and skipped.
 */
export async function markListenerTargets(page: Page): Promise<number> {
  const session = await page.createCDPSession();
  let marked = 0;
  try {
    const { root } = await session.send("DOM.getDocument", { depth: -1, pierce: true });
    const elements: Protocol.DOM.Node[] = [];
    collectElements(root, elements);

    for (const element of elements) {
      let objectId: string | undefined;
      try {
        const { object } = await session.send("DOM.resolveNode", {
          backendNodeId: element.backendNodeId,
        });
        objectId = object.objectId;
        if (!objectId) continue;
        const { listeners } = await session.send("DOMDebugger.getEventListeners", {
          objectId,
        });
        if (listeners.some((listener) => INTERACTION.has(listener.type))) {
          await session.send("Runtime.callFunctionOn", {
            objectId,
            functionDeclaration: "function () { this.__caHasListener = true; }",
          });
          marked += 1;
        }
      } catch {
        continue;
      } finally {
        if (objectId) {
          session.send("Runtime.releaseObject", { objectId }).catch(() => {});
        }
      }
    }
  } finally {
    await session.detach().catch(() => {});
  }
  return marked;
}
