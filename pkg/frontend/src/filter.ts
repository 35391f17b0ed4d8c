import type { Facet, Paper } from "./types";

/**
 * Case-insensitive substring match against the faceted field(s).
 * Empty query matches everything; facet "all" matches any of the three.
 */
export function filterPapers(
  papers: Paper[],
  query: string,
  facet: Facet,
): Set<string> {
  const q = query.toLowerCase();
  const result = new Set<string>();
  for (const paper of papers) {
    if (q === "" || matches(paper, q, facet)) {
      result.add(paper.uid);
    }
  }
  return result;
}

function matches(paper: Paper, q: string, facet: Facet): boolean {
  const inTitle = () => paper.title.toLowerCase().includes(q);
  const inAuthor = () => paper.authors.some((a) => a.toLowerCase().includes(q));
  const inKeyword = () => paper.keywords.some((k) => k.toLowerCase().includes(q));
  switch (facet) {
    case "title":
      return inTitle();
    case "author":
      return inAuthor();
    case "keyword":
      return inKeyword();
    case "all":
      return inTitle() || inAuthor() || inKeyword();
  }
}
