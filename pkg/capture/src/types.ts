/**
 * Wire-format types for the snapshot JSON documents the analyzer consumes.
 *
 * Field names are snake_case because these interfaces describe the on-disk
 * JSON, not an in-memory API. The analyzer validates every document it
 * loads, so anything emitted here has to satisfy its invariants:
 *
 *   - status "success"  <=> root present
 *   - status "blocked"  <=> block_kind present
 *   - node_id unique across the main tree and every frame tree
 *   - frame_id unique within a snapshot
 *   - tcf_result.cmp_id non-null implies api != "none"
 *   - opacity in [0,1], color channels in [0,255], bbox w/h >= 0
 */

export type SnapshotStatus = "success" | "unreachable" | "blocked";

export type BlockKind = "captcha" | "challenge" | "http_403";

export type TcfApiKind = "tcfapi" | "cmp" | "none";

/** [r, g, b] or [r, g, b, a]; channels 0-255, alpha 0-1. */
export type ColorTuple = [number, number, number] | [number, number, number, number];

export interface StyleDoc {
  z_index: number | null;
  position: string;
  color: ColorTuple | null;
  background_color: ColorTuple | null;
  border_width_px: number | null;
  border_color: ColorTuple | null;
  border_radius_px: number | null;
  text_decoration: string;
  display: string;
  visibility: string;
  opacity: number;
}

export interface BBoxDoc {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface NodeDoc {
  node_id: number;
  tag: string;
  attributes: Record<string, string>;
  text: string;
  style: StyleDoc;
  bbox: BBoxDoc | null;
  has_listener: boolean;
  shadow_host: boolean;
  children: NodeDoc[];
}

export interface FrameDoc {
  frame_id: string;
  root: NodeDoc;
}

export interface TcfResultDoc {
  api: TcfApiKind;
  cmp_id: number | null;
}

export interface SnapshotDoc {
  url: string;
  captured_at: string;
  status: SnapshotStatus;
  viewport: { width_px: number; height_px: number };
  root: NodeDoc | null;
  frames: FrameDoc[];
  block_kind?: BlockKind;
  tcf_result: TcfResultDoc | null;
  /** Free-form capture note (timeouts, partial frames). Ignored by the analyzer. */
  note?: string;
}

/**
 * A raw element tree as returned by the in-page extraction script: the same
 * shape as NodeDoc minus node_id, which is assigned host-side so ids stay
 * unique across the main document and all frames.
 */
export interface RawNode {
  tag: string;
  attributes: Record<string, string>;
  text: string;
  style: StyleDoc;
  bbox: BBoxDoc | null;
  has_listener: boolean;
  shadow_host: boolean;
  children: RawNode[];
}

/** One capture request. Waits and the mouse walk are tunable per job. */
export interface CaptureJob {
  url: string;
  /** Manifest passthrough; defaults to "". */
  country?: string;
  /** Manifest passthrough; defaults to the 1-based queue position. */
  rank?: number;
  /** Hard per-job budget in seconds. Default 120. */
  timeout_s?: number;
  /** Pause after DOMContentLoaded so late banners can render. Default 10. */
  settle_wait_s?: number;
  /** Move the mouse in a short random walk before serializing. Default true. */
  simulate_mouse?: boolean;
}

export type ResolvedJob = Required<CaptureJob>;

/** Outcome of one job inside a queue run. */
export interface CaptureResult {
  url: string;
  country: string;
  rank: number;
  status: SnapshotStatus;
  block_kind: BlockKind | null;
  /** Snapshot filename relative to the output directory. */
  snapshot_path: string;
  note: string | null;
  /**
   * Set when the capture itself broke (serializer bug, disk error), as
   * opposed to the page being down or blocked. The queue records it and
   * keeps going; the CLI exits nonzero if any result carries one.
   */
  error: string | null;
}
