import { writeFile } from "node:fs/promises";

import type { CaptureResult } from "./types";

// Column order matters: the analyzer's batch command requires url, country,
// rank and snapshot_path and ignores extras, so status and note ride along
// for humans without breaking that contract.
const HEADER = ["url", "country", "rank", "snapshot_path", "status", "note"];

function csvField(value: string): string {
  if (/[",\r\n]/.test(value)) {
    return '"' + value.replace(/"/g, '""') + '"';
  }
  return value;
}

export function manifestCsv(results: readonly CaptureResult[]): string {
  const lines = [HEADER.join(",")];
  for (const result of results) {
    lines.push(
      [
        result.url,
        result.country,
        String(result.rank),
        result.snapshot_path,
        result.status,
        result.note ?? "",
      ]
        .map(csvField)
        .join(","),
    );
  }
  return lines.join("\n") + "\n";
}

export async function writeManifest(
  path: string,
  results: readonly CaptureResult[],
): Promise<void> {
  await writeFile(path, manifestCsv(results), "utf-8");
}
