"use strict";
(() => {
  // src/filter.ts
  function filterPapers(papers, query, facet) {
    const q = query.toLowerCase();
    const result = /* @__PURE__ */ new Set();
    for (const paper of papers) {
      if (q === "" || matches(paper, q, facet)) {
        result.add(paper.uid);
      }
    }
    return result;
  }
  function matches(paper, q, facet) {
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

  // src/keywords.ts
  function aggregateKeywords(papers, topK = 15) {
    if (topK < 1) {
      throw new Error("topK must be at least 1");
    }
    const counts = /* @__PURE__ */ new Map();
    for (const paper of papers) {
      const seen = /* @__PURE__ */ new Set();
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
    const ranked = [...counts.entries()];
    ranked.sort(
      ([ka, ca], [kb, cb]) => ca !== cb ? cb - ca : ka < kb ? -1 : ka > kb ? 1 : 0
    );
    return ranked.slice(0, topK);
  }

  // src/map.ts
  var HIT_RADIUS_PX = 8;
  var MARGIN = 20;
  function defaultView(width, height) {
    return {
      scale: Math.min(width, height) - 2 * MARGIN,
      zoom: 1,
      offsetX: MARGIN,
      offsetY: MARGIN
    };
  }
  function toCanvas(view, x, y) {
    return [
      x * view.scale * view.zoom + view.offsetX,
      y * view.scale * view.zoom + view.offsetY
    ];
  }
  function fromCanvas(view, px, py) {
    return [
      (px - view.offsetX) / (view.scale * view.zoom),
      (py - view.offsetY) / (view.scale * view.zoom)
    ];
  }
  function hitTest(layout, view, px, py) {
    let best = null;
    let bestDist = HIT_RADIUS_PX;
    for (const entry of layout) {
      const [ex, ey] = toCanvas(view, entry.x, entry.y);
      const dist = Math.hypot(ex - px, ey - py);
      if (dist <= bestDist) {
        best = entry.uid;
        bestDist = dist;
      }
    }
    return best;
  }
  function normalizeRect(rect) {
    return {
      x0: Math.min(rect.x0, rect.x1),
      y0: Math.min(rect.y0, rect.y1),
      x1: Math.max(rect.x0, rect.x1),
      y1: Math.max(rect.y0, rect.y1)
    };
  }
  function selectInRect(layout, rect) {
    const r = normalizeRect(rect);
    const selected = /* @__PURE__ */ new Set();
    for (const entry of layout) {
      if (entry.x >= r.x0 && entry.x <= r.x1 && entry.y >= r.y0 && entry.y <= r.y1) {
        selected.add(entry.uid);
      }
    }
    return selected;
  }
  function selectionSummary(papers, selected, topK = 15) {
    return aggregateKeywords(
      papers.filter((p) => selected.has(p.uid)),
      topK
    );
  }
  var BASE_COLOR = "#7a7a7a";
  var HIGHLIGHT_COLOR = "#d02020";
  var DOT_RADIUS = 4;
  function drawMap(ctx, layout, view, state) {
    ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
    const passes = [
      [false, BASE_COLOR],
      [true, HIGHLIGHT_COLOR]
    ];
    for (const [highlighted, color] of passes) {
      ctx.fillStyle = color;
      for (const entry of layout) {
        if (state.highlight.has(entry.uid) !== highlighted) {
          continue;
        }
        const [px, py] = toCanvas(view, entry.x, entry.y);
        const radius = entry.uid === state.hovered ? DOT_RADIUS * 1.8 : DOT_RADIUS;
        ctx.beginPath();
        ctx.arc(px, py, radius, 0, 2 * Math.PI);
        ctx.fill();
      }
    }
    if (state.selection !== null) {
      const r = normalizeRect(state.selection);
      const [x0, y0] = toCanvas(view, r.x0, r.y0);
      const [x1, y1] = toCanvas(view, r.x1, r.y1);
      ctx.strokeStyle = HIGHLIGHT_COLOR;
      ctx.setLineDash([4, 3]);
      ctx.strokeRect(x0, y0, x1 - x0, y1 - y0);
      ctx.setLineDash([]);
    }
  }

  // src/vis_main.ts
  var script = document.currentScript;
  function renderPanel(panel, papers, selected) {
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
  function renderHoverCard(card, paper, root, px, py) {
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
  async function main() {
    const root = script?.dataset.root ?? "";
    const canvas = document.getElementById("paper-map");
    const panel = document.getElementById("selection-panel");
    const hoverCard = document.getElementById("hover-card");
    const search = document.getElementById("vis-search-box");
    const facetSel = document.getElementById("vis-facet-select");
    const clearBtn = document.getElementById("clear-selection");
    if (canvas === null || panel === null) {
      return;
    }
    const ctx = canvas.getContext("2d");
    if (ctx === null) {
      return;
    }
    const [papers, layout] = await Promise.all([
      fetch(`${root}data/papers.json`).then((r) => r.json()),
      fetch(`${root}data/layout.json`).then((r) => r.json())
    ]);
    const byUid = new Map(papers.map((p) => [p.uid, p]));
    const view = defaultView(canvas.width, canvas.height);
    const state = {
      highlight: /* @__PURE__ */ new Set(),
      selection: null,
      hovered: null
    };
    let dragStart = null;
    let panning = false;
    const redraw = () => drawMap(ctx, layout, view, state);
    const applyFilter = () => {
      const query = search?.value ?? "";
      state.highlight = query ? filterPapers(papers, query, facetSel?.value ?? "all") : /* @__PURE__ */ new Set();
      redraw();
    };
    search?.addEventListener("input", applyFilter);
    facetSel?.addEventListener("change", applyFilter);
    clearBtn?.addEventListener("click", () => {
      state.selection = null;
      renderPanel(panel, papers, /* @__PURE__ */ new Set());
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
        if (paper !== void 0) {
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
      view.offsetX = px - (px - view.offsetX) * factor;
      view.offsetY = py - (py - view.offsetY) * factor;
      view.zoom *= factor;
      redraw();
    });
    renderPanel(panel, papers, /* @__PURE__ */ new Set());
    redraw();
  }
  main().catch((err) => console.error("visualization init failed:", err));
})();
