#!/usr/bin/env node
/**
 * consent-capture: capture page snapshots for the consent-audit analyzer.
 *
 *   consent-capture --urls urls.txt --out snapshots/ --jobs 4 --timeout 120
 *
 * The urls file has one entry per line: a URL, optionally followed by
 * ",country" and ",rank". Blank lines and #-comments are skipped. Output is
 * one snapshot JSON per entry plus manifest.csv, ready for
 * `consent-audit batch --manifest <out>/manifest.csv`.
 *
 * Exit codes: 0 all jobs captured (including pages that were down or
 * blocked), 1 at least one job hit an internal capture or serialization
 * error, 2 usage errors (bad flags, unreadable or empty urls file).
 */

import { readFile } from "node:fs/promises";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { DEFAULT_CONCURRENCY, DEFAULT_SETTLE_WAIT_S, DEFAULT_TIMEOUT_S, runQueue } from "./capture";
import { parseUrlsFile } from "./urls";
import type { CaptureJob } from "./types";

async function main(): Promise<number> {
  const argv = await yargs(hideBin(process.argv))
    .scriptName("consent-capture")
    .option("urls", {
      type: "string",
      demandOption: true,
      describe: "File with one url[,country[,rank]] per line",
    })
    .option("out", {
      type: "string",
      demandOption: true,
      describe: "Output directory for snapshots and manifest.csv",
    })
    .option("jobs", {
      type: "number",
      default: DEFAULT_CONCURRENCY,
      describe: "Max captures in flight",
    })
    .option("timeout", {
      type: "number",
      default: DEFAULT_TIMEOUT_S,
      describe: "Per-job budget in seconds",
    })
    .option("settle", {
      type: "number",
      default: DEFAULT_SETTLE_WAIT_S,
      describe: "Wait after DOMContentLoaded in seconds",
    })
    .option("mouse", {
      type: "boolean",
      default: true,
      describe: "Simulate a short mouse walk before serializing",
    })
    .strict()
    .parse();

  let content: string;
  try {
    content = await readFile(argv.urls, "utf-8");
  } catch (err) {
    process.stderr.write(`cannot read ${argv.urls}: ${(err as Error).message}\n`);
    return 2;
  }

  let jobs: CaptureJob[];
  try {
    jobs = parseUrlsFile(content).map((job) => ({
      ...job,
      timeout_s: argv.timeout,
      settle_wait_s: argv.settle,
      simulate_mouse: argv.mouse,
    }));
  } catch (err) {
    process.stderr.write(`${argv.urls}: ${(err as Error).message}\n`);
    return 2;
  }
  if (jobs.length === 0) {
    process.stderr.write(`${argv.urls}: no urls\n`);
    return 2;
  }

  let outcome;
  try {
    outcome = await runQueue(jobs, {
      outDir: argv.out,
      concurrency: argv.jobs,
      onResult: (result, index, total) => {
        const label = result.error ? `error (${result.error})` : result.status;
        process.stderr.write(
          `[${index + 1}/${total}] ${label} ${result.url} -> ${result.snapshot_path}\n`,
        );
      },
    });
  } catch (err) {
    process.stderr.write(`${(err as Error).message}\n`);
    return 2;
  }

  const failures = outcome.results.filter((result) => result.error !== null);
  process.stderr.write(
    `captured ${outcome.results.length} pages, ${failures.length} internal failures, ` +
      `manifest: ${outcome.manifestPath}\n`,
  );
  return failures.length > 0 ? 1 : 0;
}

if (require.main === module) {
  main().then(
    (code) => process.exit(code),
    (err) => {
      process.stderr.write(`${err instanceof Error ? err.stack ?? err.message : err}\n`);
      process.exit(1);
    },
  );
}
