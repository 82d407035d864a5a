import type { CaptureJob } from "./types";

/**
 * Parse a urls file: one `url[,country[,rank]]` entry per line. Blank lines
 * and #-comments are skipped. Ranks must be integers >= 1; URL validity is
 * left to job resolution so both paths report errors the same way.
 */
export function parseUrlsFile(content: string): CaptureJob[] {
  const jobs: CaptureJob[] = [];
  for (const rawLine of content.split(/\r?\n/)) {
    const line = rawLine.trim();
    if (!line || line.startsWith("#")) continue;
    const [url, country, rank] = line.split(",").map((part) => part.trim());
    const job: CaptureJob = { url };
    if (country) job.country = country;
    if (rank) {
      const parsed = Number(rank);
      if (!Number.isInteger(parsed) || parsed < 1) {
        throw new RangeError(`bad rank ${JSON.stringify(rank)}`);
      }
      job.rank = parsed;
    }
    jobs.push(job);
  }
  return jobs;
}
