#!/usr/bin/env python3
"""Generate oracle fixtures the frontend test suite must match entry-for-entry.

Writes frontend/tests/fixtures/:
  site/        data bundles from a seeded build of the 12-paper fixture
  calendar_oracle.json   day grouping + ordering for several zones
  filter_oracle.json     query/facet -> expected uid lists (enumeration)
  keywords_oracle.json   selections -> ranked keyword summaries
  scenario.json          the two-cluster exploration scenario (boxes, query)
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from confsite import embedding  # noqa: E402
from confsite.images import attach_images  # noqa: E402
from confsite.ingest import load_conference  # noqa: E402
from confsite.keywords import aggregate_keywords  # noqa: E402
from confsite.projection import TsneParams, project_corpus  # noqa: E402
from confsite.render import scale_layout  # noqa: E402
from confsite.schedule import localize_schedule  # noqa: E402

FIXTURE = ROOT / "tests" / "fixtures" / "conf12"
OUT = ROOT / "frontend" / "tests" / "fixtures"

SEED = 7
PERPLEXITY = 4.0
ZONES = ["UTC", "America/New_York", "Asia/Tokyo", "Australia/Adelaide"]

QUERIES = [
    ("", "all"),
    ("gan", "keyword"),
    ("adversarial", "keyword"),
    ("robustness", "keyword"),
    ("GAN", "title"),
    ("Faces", "title"),
    ("tanaka", "author"),
    ("mensah", "author"),
    ("style", "all"),
    ("certified", "all"),
    ("nomatch-zzz", "all"),
]


def write(path: Path, obj) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, ensure_ascii=False, indent=2) + "\n",
                    encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def matches(paper, query: str, facet: str) -> bool:
    """Plain enumeration of the substring-match contract."""
    q = query.lower()
    if not q:
        return True
    in_title = q in paper.title.lower()
    in_author = any(q in a.lower() for a in paper.authors)
    in_keyword = any(q in k.lower() for k in paper.keywords)
    return {"title": in_title, "author": in_author, "keyword": in_keyword,
            "all": in_title or in_author or in_keyword}[facet]


def main() -> None:
    bundle = attach_images(load_conference(FIXTURE), FIXTURE)
    table = embedding.load_word_vectors(FIXTURE / "wordvecs.txt")
    layout = project_corpus(embedding.embed_corpus(bundle, table),
                            TsneParams(perplexity=PERPLEXITY, seed=SEED))
    scaled = scale_layout(layout, [p.uid for p in bundle.papers])

    write(OUT / "site" / "papers.json", [{
        "uid": p.uid, "title": p.title, "authors": p.authors,
        "abstract": p.abstract, "keywords": p.keywords,
        "session_uids": p.session_uids, "pdf_url": p.pdf_url,
        "video_url": p.video_url, "image_path": p.image_path,
        "chat_channel": p.chat_channel} for p in bundle.papers])
    write(OUT / "site" / "events.json", [{
        "uid": e.uid, "title": e.title, "kind": e.kind,
        "start_utc": e.start_utc.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "end_utc": e.end_utc.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "link_url": e.link_url} for e in bundle.events])
    write(OUT / "site" / "layout.json", scaled)
    write(OUT / "site" / "config.json", {
        "name": bundle.config.name,
        "default_timezone": bundle.config.default_timezone,
        "chat_server_url": bundle.config.chat_server_url,
        "page_toggles": bundle.config.page_toggles})

    calendar = {}
    for zone in ZONES:
        daily = localize_schedule(bundle.events, zone)
        calendar[zone] = [{
            "day": day.isoformat(),
            "events": [{
                "uid": le.event.uid,
                "local_start": le.local_start.strftime("%Y-%m-%dT%H:%M"),
                "local_end": le.local_end.strftime("%Y-%m-%dT%H:%M"),
            } for le in items],
        } for day, items in daily.days]
    write(OUT / "calendar_oracle.json", calendar)

    write(OUT / "filter_oracle.json", [{
        "query": query, "facet": facet,
        "uids": [p.uid for p in bundle.papers if matches(p, query, facet)],
    } for query, facet in QUERIES])

    by_session = {}
    for p in bundle.papers:
        for s in p.session_uids:
            by_session.setdefault(s, []).append(p)
    selections = {
        "all": [p.uid for p in bundle.papers],
        "gans": [p.uid for p in by_session["session-gans"]],
        "robustness": [p.uid for p in by_session["session-robustness"]],
        "mixed": [p.uid for p in bundle.papers[::3]],
        "empty": [],
    }
    keyword_oracle = []
    by_uid = {p.uid: p for p in bundle.papers}
    for name, uids in selections.items():
        for top_k in (3, 15):
            summary = aggregate_keywords([by_uid[u] for u in uids], top_k)
            keyword_oracle.append({
                "selection": name, "uids": uids, "top_k": top_k,
                "summary": [[kw, count] for kw, count in summary]})
    write(OUT / "keywords_oracle.json", keyword_oracle)

    # two-cluster scenario: bounding boxes in normalized layout space
    pos = {e["uid"]: (e["x"], e["y"]) for e in scaled}
    boxes = {}
    for name in ("gans", "robustness"):
        pts = [pos[u] for u in selections[name]]
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        boxes[name] = {"x0": min(xs), "y0": min(ys), "x1": max(xs), "y1": max(ys)}
    ga, rb = boxes["gans"], boxes["robustness"]
    disjoint = (ga["x1"] < rb["x0"] or rb["x1"] < ga["x0"]
                or ga["y1"] < rb["y0"] or rb["y1"] < ga["y0"])
    if not disjoint:
        raise SystemExit("cluster bounding boxes overlap; pick another seed")
    write(OUT / "scenario.json", {
        "query": "adversarial", "facet": "keyword",
        "clusters": {name: {"box": boxes[name], "uids": selections[name]}
                     for name in ("gans", "robustness")}})


if __name__ == "__main__":
    main()
