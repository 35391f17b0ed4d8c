import { renderCards, type CardState } from "./cards";
import { filterPapers } from "./filter";
import { newSeed, shuffleOrder } from "./shuffle";
import { loadVisited, markVisited, unmarkVisited } from "./storage";
import type { DetailLevel, Facet, Paper } from "./types";

// currentScript is only set during synchronous evaluation; capture it now
const script = document.currentScript as HTMLScriptElement | null;

async function loadPapers(root: string): Promise<Paper[]> {
  const resp = await fetch(`${root}data/papers.json`);
  return (await resp.json()) as Paper[];
}

function initBrowse(root: string, papers: Paper[]): void {
  const container = document.getElementById("paper-cards");
  const search = document.getElementById("search-box") as HTMLInputElement | null;
  const facetSel = document.getElementById("facet-select") as HTMLSelectElement | null;
  const detailSel = document.getElementById("detail-select") as HTMLSelectElement | null;
  const shuffleBtn = document.getElementById("shuffle-button");
  if (container === null || search === null || facetSel === null ||
      detailSel === null) {
    return; // not the browse page
  }

  const state: CardState = {
    detail: (detailSel.value as DetailLevel) || "compact",
    matching: filterPapers(papers, "", "all"),
    order: shuffleOrder(papers.length, newSeed()),
    visited: loadVisited(window.localStorage),
  };

  const redraw = () => renderCards(container, papers, state, root);

  search.addEventListener("input", () => {
    state.matching = filterPapers(papers, search.value, facetSel.value as Facet);
    redraw();
  });
  facetSel.addEventListener("change", () => {
    state.matching = filterPapers(papers, search.value, facetSel.value as Facet);
    redraw();
  });
  detailSel.addEventListener("change", () => {
    state.detail = detailSel.value as DetailLevel;
    redraw();
  });
  shuffleBtn?.addEventListener("click", () => {
    state.order = shuffleOrder(papers.length, newSeed());
    redraw();
  });
  container.addEventListener("change", (ev) => {
    const target = ev.target as HTMLInputElement;
    if (target.type === "checkbox" && target.dataset.uid !== undefined) {
      state.visited = target.checked
        ? markVisited(window.localStorage, target.dataset.uid)
        : unmarkVisited(window.localStorage, target.dataset.uid);
      redraw();
    }
  });

  redraw();
}

async function main(): Promise<void> {
  const root = script?.dataset.root ?? "";
  // on a paper detail page: record the visit, no card list to build
  const visitUid = script?.dataset.visit;
  if (visitUid !== undefined) {
    markVisited(window.localStorage, visitUid);
    return;
  }
  initBrowse(root, await loadPapers(root));
}

main().catch((err) => console.error("browse init failed:", err));
