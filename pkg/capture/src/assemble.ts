/**
 * Builds analyzer-ready snapshot documents out of raw extraction payloads.
 * Node ids are assigned here, not in the page, so one counter can span the
 * main document and every frame (the analyzer rejects duplicate ids).
 */

import type {
  BlockKind,
  FrameDoc,
  NodeDoc,
  RawNode,
  SnapshotDoc,
  TcfResultDoc,
} from "./types";

export interface ViewportPx {
  width_px: number;
  height_px: number;
}

function numberTree(raw: RawNode, counter: { next: number }): NodeDoc {
  const nodeId = counter.next++;
  return {
    node_id: nodeId,
    tag: raw.tag,
    attributes: raw.attributes,
    text: raw.text,
    style: raw.style,
    bbox: raw.bbox,
    has_listener: raw.has_listener,
    shadow_host: raw.shadow_host,
    children: raw.children.map((child) => numberTree(child, counter)),
  };
}

export function assembleSuccess(
  url: string,
  capturedAt: string,
  viewport: ViewportPx,
  mainTree: RawNode,
  frameTrees: { frame_id: string; tree: RawNode }[],
  tcf: TcfResultDoc,
  note?: string,
): SnapshotDoc {
  const counter = { next: 1 };
  const root = numberTree(mainTree, counter);
  const frames: FrameDoc[] = frameTrees.map((entry) => ({
    frame_id: entry.frame_id,
    root: numberTree(entry.tree, counter),
  }));
  const doc: SnapshotDoc = {
    url,
    captured_at: capturedAt,
    status: "success",
    viewport,
    root,
    frames,
    tcf_result: tcf,
  };
  if (note) doc.note = note;
  return doc;
}

export function assembleBlocked(
  url: string,
  capturedAt: string,
  viewport: ViewportPx,
  kind: BlockKind,
  note?: string,
): SnapshotDoc {
  const doc: SnapshotDoc = {
    url,
    captured_at: capturedAt,
    status: "blocked",
    viewport,
    root: null,
    frames: [],
    block_kind: kind,
    tcf_result: null,
  };
  if (note) doc.note = note;
  return doc;
}

export function assembleUnreachable(
  url: string,
  capturedAt: string,
  viewport: ViewportPx,
  note?: string,
): SnapshotDoc {
  const doc: SnapshotDoc = {
    url,
    captured_at: capturedAt,
    status: "unreachable",
    viewport,
    root: null,
    frames: [],
    tcf_result: null,
  };
  if (note) doc.note = note;
  return doc;
}

/**
 * Local re-statement of the analyzer's structural invariants. Runs before a
 * document is written so a capture bug fails the job loudly instead of
 * producing a file the analyzer will bounce later.
 */
export function checkSnapshotDoc(doc: SnapshotDoc): void {
  if ((doc.status === "success") !== (doc.root !== null)) {
    throw new Error(`invariant: status=${doc.status} with root ${doc.root ? "present" : "absent"}`);
  }
  if ((doc.status === "blocked") !== (doc.block_kind !== undefined)) {
    throw new Error(`invariant: status=${doc.status} with block_kind ${doc.block_kind ?? "absent"}`);
  }
  if (doc.tcf_result && doc.tcf_result.cmp_id !== null && doc.tcf_result.api === "none") {
    throw new Error("invariant: cmp_id present with api=none");
  }
  const frameIds = new Set<string>();
  for (const frame of doc.frames) {
    if (frameIds.has(frame.frame_id)) {
      throw new Error(`invariant: duplicate frame_id ${frame.frame_id}`);
    }
    frameIds.add(frame.frame_id);
  }
  const seen = new Set<number>();
  const visit = (node: NodeDoc): void => {
    if (seen.has(node.node_id)) {
      throw new Error(`invariant: duplicate node_id ${node.node_id}`);
    }
    seen.add(node.node_id);
    if (node.style.opacity < 0 || node.style.opacity > 1) {
      throw new Error(`invariant: opacity ${node.style.opacity} outside [0,1]`);
    }
    if (node.bbox && (node.bbox.w < 0 || node.bbox.h < 0)) {
      throw new Error("invariant: negative bbox extent");
    }
    node.children.forEach(visit);
  };
  if (doc.root) visit(doc.root);
  doc.frames.forEach((frame) => visit(frame.root));
}
