import type { BlockKind } from "./types";

// Fixed phrase lists checked against the page title and body text after the
// settle wait. Interstitial vendors rotate markup but keep their wording, so
// plain substrings over the rendered text are enough; the lists stay short
// and verbatim on purpose so a verdict is always explainable.
const CAPTCHA_PHRASES = [
  "captcha",
  "are you a robot",
  "i am not a robot",
  "i'm not a robot",
  "select all images with",
  "enter the characters you see",
];

const CHALLENGE_PHRASES = [
  "checking your browser",
  "just a moment",
  "verifying you are human",
  "verify you are human",
  "attention required",
  "ddos protection by",
  "one more step",
  "security check to access",
];

function findPhrase(haystack: string, phrases: string[]): string | null {
  for (const phrase of phrases) {
    if (haystack.includes(phrase)) return phrase;
  }
  return null;
}

export interface BlockVerdict {
  kind: BlockKind;
  /** Matched phrase, or "http 403" when only the status code fired. */
  evidence: string;
}

/**
 * Classify a loaded page as a block interstitial, or null for a real page.
 *
 * Content patterns win over the status code: hosting a captcha on a 403
 * response is common and the captcha is the more actionable label.
 */
export function classifyBlock(
  httpStatus: number | null,
  title: string,
  bodyText: string,
): BlockVerdict | null {
  const haystack = (title + "\n" + bodyText).toLowerCase();

  const captcha = findPhrase(haystack, CAPTCHA_PHRASES);
  if (captcha !== null) return { kind: "captcha", evidence: captcha };

  const challenge = findPhrase(haystack, CHALLENGE_PHRASES);
  if (challenge !== null) return { kind: "challenge", evidence: challenge };

  if (httpStatus === 403) return { kind: "http_403", evidence: "http 403" };
  return null;
}
