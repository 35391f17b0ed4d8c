import type { DetailLevel, Paper } from "./types";

export interface CardState {
  detail: DetailLevel;
  matching: Set<string>; // uids passing the current filter
  order: number[]; // permutation of paper indices
  visited: Set<string>;
}

const PLACEHOLDER = "static/placeholder.png";

/**
 * Rebuild the card list: shuffled order, filtered papers hidden, detail
 * level controlling which fields appear, visited papers checkmarked.
 */
export function renderCards(
  container: HTMLElement,
  papers: Paper[],
  state: CardState,
  root = "",
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  let shown = 0;
  for (const index of state.order) {
    const paper = papers[index];
    if (!state.matching.has(paper.uid)) {
      continue;
    }
    shown += 1;
    const card = doc.createElement("article");
    card.className = "paper-card";
    card.dataset.uid = paper.uid;
    if (state.visited.has(paper.uid)) {
      card.classList.add("visited");
    }

    const h2 = doc.createElement("h2");
    const link = doc.createElement("a");
    link.href = `${root}papers/${paper.uid}.html`;
    link.textContent = paper.title;
    h2.appendChild(link);
    card.appendChild(h2);

    const authors = doc.createElement("p");
    authors.className = "authors";
    authors.textContent = paper.authors.join(", ");
    card.appendChild(authors);

    if (state.detail === "compact" || state.detail === "details") {
      const img = doc.createElement("img");
      img.src = root + (paper.image_path ?? PLACEHOLDER);
      img.alt = "";
      img.onerror = () => {
        img.onerror = null;
        img.src = root + PLACEHOLDER;
      };
      card.appendChild(img);
    }

    if (state.detail === "details") {
      const abstract = doc.createElement("p");
      abstract.className = "abstract";
      abstract.textContent = paper.abstract;
      card.appendChild(abstract);
      if (paper.keywords.length > 0) {
        const list = doc.createElement("ul");
        list.className = "keywords";
        for (const kw of paper.keywords) {
          const item = doc.createElement("li");
          item.textContent = kw;
          list.appendChild(item);
        }
        card.appendChild(list);
      }
    }

    const mark = doc.createElement("label");
    mark.className = "visited-toggle";
    const box = doc.createElement("input");
    box.type = "checkbox";
    box.checked = state.visited.has(paper.uid);
    box.dataset.uid = paper.uid;
    mark.appendChild(box);
    mark.appendChild(doc.createTextNode(" visited"));
    card.appendChild(mark);

    container.appendChild(card);
  }
  if (shown === 0) {
    const empty = doc.createElement("p");
    empty.className = "empty-state";
    empty.textContent =
      container.dataset.emptyMessage ?? "No papers match your search.";
    container.appendChild(empty);
  }
}
