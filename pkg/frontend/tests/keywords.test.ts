import { describe, expect, it } from "vitest";

import { aggregateKeywords } from "../src/keywords";
import type { Paper } from "../src/types";
import { loadFixture, papers } from "./helpers";

interface OracleCase {
  selection: string;
  uids: string[];
  top_k: number;
  summary: [string, number][];
}

const oracle = loadFixture<OracleCase[]>("keywords_oracle.json");
const corpus = papers();

function select(uids: string[]): Paper[] {
  const wanted = new Set(uids);
  return corpus.filter((p) => wanted.has(p.uid));
}

describe("aggregateKeywords", () => {
  it.each(oracle.map((c) => [`${c.selection} top_k=${c.top_k}`, c] as const))(
    "matches the generator's aggregation for %s",
    (_label, c) => {
      expect(aggregateKeywords(select(c.uids), c.top_k)).toEqual(c.summary);
    },
  );

  it("returns [] for an empty selection", () => {
    expect(aggregateKeywords([], 15)).toEqual([]);
  });

  it("counts each keyword once per paper after trimming and lowercasing", () => {
    const paper = {
      uid: "x",
      title: "t",
      authors: [],
      abstract: "",
      keywords: ["GAN", " gan ", "gan"],
      session_uids: [],
      pdf_url: null,
      video_url: null,
      image_path: null,
      chat_channel: "paper-x",
    } as Paper;
    expect(aggregateKeywords([paper])).toEqual([["gan", 1]]);
  });

  it("breaks count ties by keyword ascending", () => {
    const mk = (uid: string, keywords: string[]) =>
      ({ ...corpus[0], uid, keywords }) as Paper;
    const summary = aggregateKeywords([
      mk("a", ["zebra", "apple"]),
      mk("b", ["zebra", "apple", "mango"]),
    ]);
    expect(summary).toEqual([
      ["apple", 2],
      ["zebra", 2],
      ["mango", 1],
    ]);
  });

  it("rejects topK below 1", () => {
    expect(() => aggregateKeywords(corpus, 0)).toThrow();
  });
});
