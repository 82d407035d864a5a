/**
 * Capture orchestration: one isolated browser context per job, a hard time
 * budget, and a snapshot file out the other end no matter what the page did.
 *
 * Failure taxonomy mirrors the analyzer's status enum. Navigation errors and
 * budget overruns become status=unreachable documents; block interstitials
 * become status=blocked; only internal faults (extractor broke, disk full)
 * surface as errors on the queue result.
 */

import { mkdir, writeFile } from "node:fs/promises";
import * as path from "node:path";

import type { Browser, Page } from "puppeteer-core";

import {
  assembleBlocked,
  assembleSuccess,
  assembleUnreachable,
  checkSnapshotDoc,
  ViewportPx,
} from "./assemble";
import { classifyBlock } from "./blocked";
import { launchBrowser } from "./browser";
import { markListenerTargets } from "./cdp";
import { writeManifest } from "./manifest";
import { mapWithConcurrency } from "./queue";
import { EXTRACT_SCRIPT, PRE_NAVIGATION_SCRIPT, TCF_PROBE_SCRIPT } from "./scripts";
import type {
  CaptureJob,
  CaptureResult,
  RawNode,
  ResolvedJob,
  SnapshotDoc,
  TcfResultDoc,
} from "./types";

export const DEFAULT_TIMEOUT_S = 120;
export const DEFAULT_SETTLE_WAIT_S = 10;
export const DEFAULT_CONCURRENCY = 4;

export const VIEWPORT = { width: 1366, height: 768 } as const;

const VIEWPORT_DOC: ViewportPx = {
  width_px: VIEWPORT.width,
  height_px: VIEWPORT.height,
};

// Body text beyond this cannot plausibly change a block verdict.
const BLOCK_SCAN_LIMIT = 200_000;

class DeadlineExceeded extends Error {}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, Math.max(0, ms)));
}

function message(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

async function withDeadline<T>(work: Promise<T>, ms: number): Promise<T> {
  let timer: NodeJS.Timeout | undefined;
  const bomb = new Promise<never>((_, reject) => {
    timer = setTimeout(() => reject(new DeadlineExceeded()), Math.max(0, ms));
  });
  try {
    return await Promise.race([work, bomb]);
  } finally {
    clearTimeout(timer);
  }
}

/**
 * Apply defaults and validate one job. `position` is the 1-based queue slot,
 * used as the default rank. Throws on config errors; those are caller bugs,
 * not per-job capture failures.
 */
export function resolveJob(job: CaptureJob, position: number): ResolvedJob {
  if (!job.url) throw new TypeError("job.url must be a non-empty string");
  try {
    new URL(job.url);
  } catch {
    throw new TypeError(`job.url is not a valid URL: ${job.url}`);
  }
  const resolved: ResolvedJob = {
    url: job.url,
    country: job.country ?? "",
    rank: job.rank ?? position,
    timeout_s: job.timeout_s ?? DEFAULT_TIMEOUT_S,
    settle_wait_s: job.settle_wait_s ?? DEFAULT_SETTLE_WAIT_S,
    simulate_mouse: job.simulate_mouse ?? true,
  };
  if (!Number.isInteger(resolved.rank) || resolved.rank < 1) {
    throw new RangeError(`rank must be an integer >= 1, got ${resolved.rank}`);
  }
  if (!(resolved.settle_wait_s > 0) || !(resolved.timeout_s > resolved.settle_wait_s)) {
    throw new RangeError(
      `need timeout_s > settle_wait_s > 0, got ${resolved.timeout_s}/${resolved.settle_wait_s}`,
    );
  }
  return resolved;
}

/**
 * Short random mouse walk across the viewport. Some banners only mount after
 * a first input event. Coordinates are random and unrecorded; nothing about
 * the walk ends up in the snapshot, so this nondeterminism cannot leak into
 * analyzer output.
 */
async function mouseWalk(page: Page): Promise<void> {
  for (let i = 0; i < 6; i++) {
    const x = Math.floor(Math.random() * VIEWPORT.width);
    const y = Math.floor(Math.random() * VIEWPORT.height);
    await page.mouse.move(x, y, { steps: 3 });
    await sleep(40);
  }
}

async function captureOnPage(page: Page, job: ResolvedJob, capturedAt: string): Promise<SnapshotDoc> {
  const notes: string[] = [];

  const response = await page
    .goto(job.url, { waitUntil: "domcontentloaded", timeout: job.timeout_s * 1000 })
    .catch((err) => {
      throw new NavigationFailed(message(err));
    });

  await sleep(job.settle_wait_s * 1000);
  if (job.simulate_mouse) {
    await mouseWalk(page).catch((err) => notes.push(`mouse walk failed: ${message(err)}`));
  }

  const httpStatus = response ? response.status() : null;
  const title = await page.title().catch(() => "");
  const bodyText = (await page
    .evaluate("document.body ? document.body.innerText : ''")
    .catch(() => "")) as string;
  const block = classifyBlock(httpStatus, title, bodyText.slice(0, BLOCK_SCAN_LIMIT));
  if (block) {
    return assembleBlocked(job.url, capturedAt, VIEWPORT_DOC, block.kind, block.evidence);
  }

  await markListenerTargets(page).catch((err) =>
    notes.push(`listener query failed: ${message(err)}`),
  );

  const tcf = (await page
    .evaluate(TCF_PROBE_SCRIPT)
    .catch(() => ({ api: "none", cmp_id: null }))) as TcfResultDoc;

  const mainTree = (await page.mainFrame().evaluate(EXTRACT_SCRIPT)) as RawNode | null;
  if (!mainTree) {
    throw new Error("extraction returned no tree for the main document");
  }
  const frameTrees: { frame_id: string; tree: RawNode }[] = [];
  let frameSeq = 0;
  for (const frame of page.frames()) {
    if (frame === page.mainFrame()) continue;
    frameSeq += 1;
    const frameId = `frame-${frameSeq}`;
    try {
      const tree = (await frame.evaluate(EXTRACT_SCRIPT)) as RawNode | null;
      if (tree) frameTrees.push({ frame_id: frameId, tree });
    } catch (err) {
      // Frames detach or navigate mid-capture; record and move on.
      notes.push(`${frameId} (${frame.url()}): extraction failed: ${message(err)}`);
    }
  }

  return assembleSuccess(
    job.url,
    capturedAt,
    VIEWPORT_DOC,
    mainTree,
    frameTrees,
    tcf,
    notes.length ? notes.join("; ") : undefined,
  );
}

class NavigationFailed extends Error {}

/**
 * Capture one page in a fresh, isolated browser context. Always resolves
 * with a schema-valid document unless the capture machinery itself failed,
 * in which case it throws and the caller decides how loud to be.
 */
export async function captureSnapshot(browser: Browser, job: ResolvedJob): Promise<SnapshotDoc> {
  const capturedAt = new Date().toISOString();
  const context = await browser.createBrowserContext();
  try {
    const page = await context.newPage();
    await page.setViewport({ ...VIEWPORT });
    await page.evaluateOnNewDocument(PRE_NAVIGATION_SCRIPT);

    let doc: SnapshotDoc;
    try {
      doc = await withDeadline(captureOnPage(page, job, capturedAt), job.timeout_s * 1000);
    } catch (err) {
      if (err instanceof DeadlineExceeded) {
        doc = assembleUnreachable(
          job.url,
          capturedAt,
          VIEWPORT_DOC,
          `capture timed out after ${job.timeout_s}s`,
        );
      } else if (err instanceof NavigationFailed) {
        doc = assembleUnreachable(
          job.url,
          capturedAt,
          VIEWPORT_DOC,
          `navigation failed: ${err.message}`,
        );
      } else {
        throw err;
      }
    }
    checkSnapshotDoc(doc);
    return doc;
  } finally {
    await context.close().catch(() => {});
  }
}

/** Derive a stable, filesystem-safe snapshot filename for queue slot `index`. */
export function snapshotFileName(index: number, url: string): string {
  let slug = "page";
  try {
    const parsed = new URL(url);
    slug = (parsed.host + parsed.pathname)
      .toLowerCase()
      .replace(/[^a-z0-9]+/g, "-")
      .replace(/^-+|-+$/g, "")
      .slice(0, 60) || "page";
  } catch {
    // keep the fallback
  }
  return `${String(index + 1).padStart(4, "0")}-${slug}.json`;
}

export interface RunQueueOptions {
  outDir: string;
  /** Max jobs in flight at once. Default 4. */
  concurrency?: number;
  /** Reuse an already-launched browser (tests). Owned by the caller then. */
  browser?: Browser;
  onResult?: (result: CaptureResult, index: number, total: number) => void;
}

export interface RunQueueOutcome {
  results: CaptureResult[];
  manifestPath: string;
}

/**
 * Capture every job with bounded concurrency and write the snapshot files
 * plus a manifest the analyzer's batch command accepts as-is. Per-job
 * failures of any kind are recorded on the result, never thrown; config
 * errors (bad job fields, bad concurrency) throw before any capture starts.
 */
export async function runQueue(
  jobs: readonly CaptureJob[],
  options: RunQueueOptions,
): Promise<RunQueueOutcome> {
  const concurrency = options.concurrency ?? DEFAULT_CONCURRENCY;
  const resolved = jobs.map((job, i) => resolveJob(job, i + 1));
  await mkdir(options.outDir, { recursive: true });

  const browser = options.browser ?? (await launchBrowser());
  const ownsBrowser = options.browser === undefined;
  try {
    const results = await mapWithConcurrency(resolved, concurrency, async (job, index) => {
      const fileName = snapshotFileName(index, job.url);
      let doc: SnapshotDoc;
      let error: string | null = null;
      try {
        doc = await captureSnapshot(browser, job);
      } catch (err) {
        error = message(err);
        doc = assembleUnreachable(
          job.url,
          new Date().toISOString(),
          VIEWPORT_DOC,
          `capture error: ${error}`,
        );
      }
      try {
        await writeFile(path.join(options.outDir, fileName), JSON.stringify(doc) + "\n", "utf-8");
      } catch (err) {
        error = error ?? message(err);
      }
      const result: CaptureResult = {
        url: job.url,
        country: job.country,
        rank: job.rank,
        status: doc.status,
        block_kind: doc.block_kind ?? null,
        snapshot_path: fileName,
        note: doc.note ?? null,
        error,
      };
      options.onResult?.(result, index, jobs.length);
      return result;
    });

    const manifestPath = path.join(options.outDir, "manifest.csv");
    await writeManifest(manifestPath, results);
    return { results, manifestPath };
  } finally {
    if (ownsBrowser) await browser.close().catch(() => {});
  }
}

/** One-shot convenience: launch, capture one page, write the file, close. */
export async function capture(job: CaptureJob, outFile: string): Promise<SnapshotDoc> {
  const resolved = resolveJob(job, 1);
  const browser = await launchBrowser();
  try {
    const doc = await captureSnapshot(browser, resolved);
    await writeFile(outFile, JSON.stringify(doc) + "\n", "utf-8");
    return doc;
  } finally {
    await browser.close().catch(() => {});
  }
}
