import { describe, expect, it } from "vitest";

import { filterPapers } from "../src/filter";
import type { Facet } from "../src/types";
import { loadFixture, papers } from "./helpers";

interface FilterCase {
  query: string;
  facet: Facet;
  uids: string[];
}

describe("filterPapers", () => {
  const all = papers();

  it("matches the generator's oracle fixtures entry-for-entry", () => {
    for (const { query, facet, uids } of loadFixture<FilterCase[]>(
      "filter_oracle.json",
    )) {
      const got = filterPapers(all, query, facet);
      expect([...got].sort(), `${facet}:${query}`).toEqual([...uids].sort());
    }
  });

  it("empty query matches everything", () => {
    expect(filterPapers(all, "", "keyword").size).toBe(all.length);
  });

  it("is case-insensitive", () => {
    expect(filterPapers(all, "GAN", "keyword")).toEqual(
      filterPapers(all, "gan", "keyword"),
    );
  });

  it("returns an empty set when nothing matches", () => {
    expect(filterPapers(all, "zzz-not-a-thing", "all").size).toBe(0);
  });

  it("is independent of paper order", () => {
    const reversed = [...all].reverse();
    expect(filterPapers(reversed, "adversarial", "keyword")).toEqual(
      filterPapers(all, "adversarial", "keyword"),
    );
  });
});
