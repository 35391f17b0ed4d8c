import { filterPapers } from "./filter";
import {
  defaultView,
  drawMap,
  fromCanvas,
  hitTest,
  selectInRect,
  selectionSummary,
  type MapState,
  type Rect,
  type View,
} from "./map";
import type { Facet, LayoutEntry, Paper } from "./types";

const script = document.currentScript as HTMLScriptElement | null;

function renderPanel(
  panel: HTMLElement,
  papers: Paper[],
  selected: Set<string>,
): void {
  panel.textContent = "";
  const doc = panel.ownerDocument;
  if (selected.size === 0) {
    const empty = doc.createElement("p");
    empty.className = "empty-state";
    empty.textContent = panel.dataset.emptyMessage ?? "No papers selected.";
    panel.appendChild(empty);
    return;
  }
  const heading = doc.createElement("h2");
  heading.textContent = `${selected.size} papers selected`;
  panel.appendChild(heading);
  const list = doc.createElement("ol");
  list.className = "keyword-summary";
  for (const [keyword, count] of selectionSummary(papers, selected)) {
    const item = doc.createElement("li");
    item.textContent = `${keyword} (${count})`;
    list.appendChild(item);
  }
  panel.appendChild(list);
}

function renderHoverCard(
  card: HTMLElement,
  paper: Paper,
  root: string,
  px: number,
  py: number,
): void {
  card.textContent = "";
  const doc = card.ownerDocument;
  const title = doc.createElement("strong");
  title.textContent = paper.title;
  card.appendChild(title);
  const authors = doc.createElement("p");
  authors.className = "authors";
  authors.textContent = paper.authors.join(", ");
  card.appendChild(authors);
  const img = doc.createElement("img");
  img.src = root + (paper.image_path ?? "static/placeholder.png");
  img.alt = "";
  img.onerror = () => {
    img.onerror = null;
    img.src = `${root}static/placeholder.png`;
  };
  card.appendChild(img);
  const abstract = doc.createElement("p");
  abstract.className = "abstract";
  abstract.textContent = paper.abstract;
  card.appendChild(abstract);
  if (paper.keywords.length > 0) {
    const kws = doc.createElement("p");
    kws.className = "keywords";
    kws.textContent = paper.keywords.join(", ");
    card.appendChild(kws);
  }
  card.style.left = `${px + 14}px`;
  card.style.top = `${py + 14}px`;
  card.hidden = false;
}

async function main(): Promise<void> {
  const root = script?.dataset.root ?? "";
  const canvas = document.getElementById("paper-map") as HTMLCanvasElement | null;
  const panel = document.getElementById("selection-panel");
  const hoverCard = document.getElementById("hover-card");
  const search = document.getElementById("vis-search-box") as HTMLInputElement | null;
  const facetSel = document.getElementById("vis-facet-select") as HTMLSelectElement | null;
  const clearBtn = document.getElementById("clear-selection");
  if (canvas === null || panel === null) {
    return;
  }
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    return;
  }

  const [papers, layout] = (await Promise.all([
    fetch(`${root}data/papers.json`).then((r) => r.json()),
    fetch(`${root}data/layout.json`).then((r) => r.json()),
  ])) as [Paper[], LayoutEntry[]];
  const byUid = new Map(papers.map((p) => [p.uid, p]));

  const view: View = defaultView(canvas.width, canvas.height);
  const state: MapState = {
    highlight: new Set(),
    selection: null,
    hovered: null,
  };
  let dragStart: [number, number] | null = null;
  let panning = false;

  const redraw = () => drawMap(ctx, layout, view, state);

  const applyFilter = () => {
    const query = search?.value ?? "";
    state.highlight = query
      ? filterPapers(papers, query, (facetSel?.value ?? "all") as Facet)
      : new Set();
    redraw();
  };
  search?.addEventListener("input", applyFilter);
  facetSel?.addEventListener("change", applyFilter);

  clearBtn?.addEventListener("click", () => {
    state.selection = null;
    renderPanel(panel, papers, new Set());
    redraw();
  });

  canvas.addEventListener("mousedown", (ev) => {
    const bounds = canvas.getBoundingClientRect();
    const px = ev.clientX - bounds.left;
    const py = ev.clientY - bounds.top;
    if (ev.shiftKey) {
      panning = true;
    } else {
      const [x, y] = fromCanvas(view, px, py);
      dragStart = [x, y];
    }
  });

  canvas.addEventListener("mousemove", (ev) => {
    const bounds = canvas.getBoundingClientRect();
    const px = ev.clientX - bounds.left;
    const py = ev.clientY - bounds.top;
    if (panning) {
      view.offsetX += ev.movementX;
      view.offsetY += ev.movementY;
      redraw();
      return;
    }
    if (dragStart !== null) {
      const [x, y] = fromCanvas(view, px, py);
      state.selection = { x0: dragStart[0], y0: dragStart[1], x1: x, y1: y };
      redraw();
      return;
    }
    const uid = hitTest(layout, view, px, py);
    if (uid !== state.hovered) {
      state.hovered = uid;
      redraw();
    }
    if (uid !== null && hoverCard !== null) {
      const paper = byUid.get(uid);
      if (paper !== undefined) {
        renderHoverCard(hoverCard, paper, root, ev.clientX, ev.clientY);
      }
    } else if (hoverCard !== null) {
      hoverCard.hidden = true;
    }
  });

  canvas.addEventListener("mouseup", () => {
    panning = false;
    if (dragStart !== null && state.selection !== null) {
      renderPanel(panel, papers, selectInRect(layout, state.selection));
    }
    dragStart = null;
  });

  canvas.addEventListener("mouseleave", () => {
    state.hovered = null;
    panning = false;
    dragStart = null;
    if (hoverCard !== null) {
      hoverCard.hidden = true;
    }
    redraw();
  });

  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const factor = ev.deltaY < 0 ? 1.15 : 1 / 1.15;
    const bounds = canvas.getBoundingClientRect();
    const px = ev.clientX - bounds.left;
    const py = ev.clientY - bounds.top;
    // keep the point under the cursor fixed while zooming
    view.offsetX = px - (px - view.offsetX) * factor;
    view.offsetY = py - (py - view.offsetY) * factor;
    view.zoom *= factor;
    redraw();
  });

  renderPanel(panel, papers, new Set());
  redraw();
}

main().catch((err) => console.error("visualization init failed:", err));
