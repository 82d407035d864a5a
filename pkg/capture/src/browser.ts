import chromium from "@sparticuz/chromium";
import puppeteer, { Browser } from "puppeteer-core";

// The bundled chromium ships serverless-tuned defaults. Single-process mode
// is built for one short-lived page; the queue runs several isolated
// contexts at once, so restore the normal process model.
const DROP_ARGS = new Set(["--single-process", "--in-process-gpu", "--no-zygote"]);

/**
 * Launch the bundled headless Chromium. CONSENT_CAPTURE_EXECUTABLE overrides
 * the binary path when a system Chrome should be used instead.
 */
export async function launchBrowser(): Promise<Browser> {
  const executablePath =
    process.env.CONSENT_CAPTURE_EXECUTABLE || (await chromium.executablePath());
  return puppeteer.launch({
    args: chromium.args.filter((arg) => !DROP_ARGS.has(arg)),
    executablePath,
    headless: true,
  });
}
