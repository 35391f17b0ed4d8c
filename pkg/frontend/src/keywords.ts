import type { Paper } from "./types";

export type KeywordSummary = [keyword: string, count: number][];

/**
 * Papers-containing-keyword counts over a selection, mirroring the
 * generator's aggregation exactly: keywords lowercased and trimmed,
 * each paper counts a keyword once, counts descending with ties broken
 * by keyword ascending, truncated to topK.
 */
export function aggregateKeywords(papers: Paper[], topK = 15): KeywordSummary {
  if (topK < 1) {
    throw new Error("topK must be at least 1");
  }
  const counts = new Map<string, number>();
  for (const paper of papers) {
    const seen = new Set<string>();
    for (const raw of paper.keywords) {
      const kw = raw.trim().toLowerCase();
      if (kw !== "") {
        seen.add(kw);
      }
    }
    for (const kw of seen) {
      counts.set(kw, (counts.get(kw) ?? 0) + 1);
    }
  }
  const ranked: KeywordSummary = [...counts.entries()];
  ranked.sort(([ka, ca], [kb, cb]) =>
    ca !== cb ? cb - ca : ka < kb ? -1 : ka > kb ? 1 : 0,
  );
  return ranked.slice(0, topK);
}
