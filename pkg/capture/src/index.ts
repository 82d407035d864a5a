export {
  capture,
  captureSnapshot,
  resolveJob,
  runQueue,
  snapshotFileName,
  DEFAULT_CONCURRENCY,
  DEFAULT_SETTLE_WAIT_S,
  DEFAULT_TIMEOUT_S,
  VIEWPORT,
} from "./capture";
export type { RunQueueOptions, RunQueueOutcome } from "./capture";
export { classifyBlock } from "./blocked";
export type { BlockVerdict } from "./blocked";
export {
  assembleBlocked,
  assembleSuccess,
  assembleUnreachable,
  checkSnapshotDoc,
} from "./assemble";
export { launchBrowser } from "./browser";
export { manifestCsv, writeManifest } from "./manifest";
export { mapWithConcurrency } from "./queue";
export { parseUrlsFile } from "./urls";
export { markListenerTargets } from "./cdp";
export type {
  BlockKind,
  CaptureJob,
  CaptureResult,
  NodeDoc,
  RawNode,
  ResolvedJob,
  SnapshotDoc,
  SnapshotStatus,
  TcfResultDoc,
} from "./types";
