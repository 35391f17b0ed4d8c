"use strict";
(() => {
  // src/cards.ts
  var PLACEHOLDER = "static/placeholder.png";
  function renderCards(container, papers, state, root = "") {
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
      empty.textContent = container.dataset.emptyMessage ?? "No papers match your search.";
      container.appendChild(empty);
    }
  }

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

  // src/shuffle.ts
  function mulberry32(seed) {
    let state = seed >>> 0;
    return () => {
      state = state + 1831565813 >>> 0;
      let t = state;
      t = Math.imul(t ^ t >>> 15, t | 1);
      t ^= t + Math.imul(t ^ t >>> 7, t | 61);
      return ((t ^ t >>> 14) >>> 0) / 4294967296;
    };
  }
  function shuffleOrder(n, seed) {
    const order = Array.from({ length: n }, (_, i) => i);
    const rand = mulberry32(seed);
    for (let i = n - 1; i > 0; i--) {
      const j = Math.floor(rand() * (i + 1));
      [order[i], order[j]] = [order[j], order[i]];
    }
    return order;
  }
  function newSeed() {
    return (Date.now() ^ Math.random() * 4294967295) >>> 0;
  }

  // src/storage.ts
  var VISITED_KEY = "visited";
  function loadVisited(storage) {
    try {
      const raw = storage.getItem(VISITED_KEY);
      const parsed = raw === null ? [] : JSON.parse(raw);
      return new Set(Array.isArray(parsed) ? parsed : []);
    } catch {
      return /* @__PURE__ */ new Set();
    }
  }
  function saveVisited(storage, visited) {
    storage.setItem(VISITED_KEY, JSON.stringify([...visited].sort()));
  }
  function markVisited(storage, uid) {
    const visited = loadVisited(storage);
    visited.add(uid);
    saveVisited(storage, visited);
    return visited;
  }
  function unmarkVisited(storage, uid) {
    const visited = loadVisited(storage);
    visited.delete(uid);
    saveVisited(storage, visited);
    return visited;
  }

  // src/browse_main.ts
  var script = document.currentScript;
  async function loadPapers(root) {
    const resp = await fetch(`${root}data/papers.json`);
    return await resp.json();
  }
  function initBrowse(root, papers) {
    const container = document.getElementById("paper-cards");
    const search = document.getElementById("search-box");
    const facetSel = document.getElementById("facet-select");
    const detailSel = document.getElementById("detail-select");
    const shuffleBtn = document.getElementById("shuffle-button");
    if (container === null || search === null || facetSel === null || detailSel === null) {
      return;
    }
    const state = {
      detail: detailSel.value || "compact",
      matching: filterPapers(papers, "", "all"),
      order: shuffleOrder(papers.length, newSeed()),
      visited: loadVisited(window.localStorage)
    };
    const redraw = () => renderCards(container, papers, state, root);
    search.addEventListener("input", () => {
      state.matching = filterPapers(papers, search.value, facetSel.value);
      redraw();
    });
    facetSel.addEventListener("change", () => {
      state.matching = filterPapers(papers, search.value, facetSel.value);
      redraw();
    });
    detailSel.addEventListener("change", () => {
      state.detail = detailSel.value;
      redraw();
    });
    shuffleBtn?.addEventListener("click", () => {
      state.order = shuffleOrder(papers.length, newSeed());
      redraw();
    });
    container.addEventListener("change", (ev) => {
      const target = ev.target;
      if (target.type === "checkbox" && target.dataset.uid !== void 0) {
        state.visited = target.checked ? markVisited(window.localStorage, target.dataset.uid) : unmarkVisited(window.localStorage, target.dataset.uid);
        redraw();
      }
    });
    redraw();
  }
  async function main() {
    const root = script?.dataset.root ?? "";
    const visitUid = script?.dataset.visit;
    if (visitUid !== void 0) {
      markVisited(window.localStorage, visitUid);
      return;
    }
    initBrowse(root, await loadPapers(root));
  }
  main().catch((err) => console.error("browse init failed:", err));
})();
