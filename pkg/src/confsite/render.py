"""Emit the static site: pages, JSON data bundles, and assets.

Everything the frontend consumes is written here; output bytes are
deterministic for identical inputs so deployments can be diffed.
"""

from __future__ import annotations

import json
import logging
import shutil
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
from jinja2 import Environment, PackageLoader, StrictUndefined, select_autoescape

from .bundle import ConferenceBundle
from .projection import Layout
from .schedule import export_ical, localize_schedule

log = logging.getLogger(__name__)

PAGES = ("calendar", "papers", "visualization")


@dataclass
class ManifestEntry:
    path: str
    kind: str  # page | data | asset
    source: str


@dataclass
class SiteManifest:
    entries: list[ManifestEntry] = field(default_factory=list)

    def add(self, path: str, kind: str, source: str) -> None:
        self.entries.append(ManifestEntry(path, kind, source))

    def paths(self) -> list[str]:
        return [e.path for e in self.entries]


def _environment() -> Environment:
    env = Environment(
        loader=PackageLoader("confsite", "templates"),
        autoescape=select_autoescape(default=True),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
    )
    return env


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def scale_layout(layout: Layout, uids: list[str]) -> list[dict]:
    """Fit coordinates into [0,1]^2 preserving aspect ratio.

    Both axes share one scale (the larger range); a degenerate axis maps
    to 0.5.
    """
    if layout.n != len(uids):
        raise ValueError(f"layout has {layout.n} rows for {len(uids)} papers")
    if layout.n == 0:
        return []
    y = np.asarray(layout.y, dtype=np.float64)
    mins = y.min(axis=0)
    ranges = y.max(axis=0) - mins
    scale = float(ranges.max())
    out = []
    for uid, row in zip(uids, y):
        coords = []
        for axis in range(2):
            if ranges[axis] == 0.0 or scale == 0.0:
                coords.append(0.5)
            else:
                coords.append(float((row[axis] - mins[axis]) / scale))
        out.append({"uid": uid, "x": coords[0], "y": coords[1]})
    return out


def emit_data_bundles(bundle: ConferenceBundle, layout: Layout,
                      outdir: str | Path) -> list[str]:
    """Write data/papers.json, events.json, layout.json, config.json."""
    data_dir = Path(outdir) / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    papers = [{
        "uid": p.uid,
        "title": p.title,
        "authors": p.authors,
        "abstract": p.abstract,
        "keywords": p.keywords,
        "session_uids": p.session_uids,
        "pdf_url": p.pdf_url,
        "video_url": p.video_url,
        "image_path": p.image_path,
        "chat_channel": p.chat_channel,
    } for p in bundle.papers]

    events = [{
        "uid": e.uid,
        "title": e.title,
        "kind": e.kind,
        "start_utc": e.start_utc.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "end_utc": e.end_utc.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "link_url": e.link_url,
    } for e in bundle.events]

    config = {
        "name": bundle.config.name,
        "default_timezone": bundle.config.default_timezone,
        "chat_server_url": bundle.config.chat_server_url,
        "page_toggles": bundle.config.page_toggles,
    }

    files = {
        "papers.json": papers,
        "events.json": events,
        "layout.json": scale_layout(layout, [p.uid for p in bundle.papers]),
        "config.json": config,
    }
    written = []
    for name, obj in files.items():
        (data_dir / name).write_bytes(_json_bytes(obj))
        written.append(f"data/{name}")
    return written


def _copy_static(outdir: Path, manifest: SiteManifest) -> None:
    static_dir = outdir / "static"
    static_dir.mkdir(parents=True, exist_ok=True)
    src = resources.files("confsite") / "static"
    for entry in sorted(src.iterdir(), key=lambda e: e.name):
        if entry.is_file():
            (static_dir / entry.name).write_bytes(entry.read_bytes())
            manifest.add(f"static/{entry.name}", "asset", "generator static assets")


def _copy_images(bundle: ConferenceBundle, input_dir: Path | None,
                 outdir: Path, manifest: SiteManifest) -> None:
    if input_dir is None:
        return
    copied = set()
    for paper in bundle.papers:
        rel = paper.image_path
        if not rel or rel.startswith("static/") or rel in copied:
            continue
        src = input_dir / rel
        if not src.is_file():
            continue
        dst = outdir / rel
        dst.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(src, dst)
        manifest.add(rel, "asset", "conference images")
        copied.add(rel)


def render_site(bundle: ConferenceBundle, layout: Layout, outdir: str | Path,
                input_dir: str | Path | None = None) -> SiteManifest:
    """Render every page, data bundle, and asset into outdir.

    Pages disabled via config page_toggles are skipped along with their
    nav links. Raises if the layout row count does not match the paper
    count.
    """
    if layout.n != len(bundle.papers):
        raise ValueError(
            f"layout has {layout.n} rows but the bundle has {len(bundle.papers)} papers")
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    env = _environment()
    manifest = SiteManifest()
    cfg = bundle.config

    nav = [("index.html", "Home")]
    if cfg.page_enabled("calendar"):
        nav.append(("calendar.html", "Calendar"))
    if cfg.page_enabled("papers"):
        nav.append(("papers.html", "Papers"))
    if cfg.page_enabled("visualization"):
        nav.append(("visualization.html", "Paper Map"))

    def render_page(template: str, path: str, **ctx) -> None:
        depth = path.count("/")
        root = "../" * depth
        html = env.get_template(template).render(
            config=cfg, nav=nav, root=root, **ctx)
        target = out / path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(html, encoding="utf-8")
        manifest.add(path, "page", template)

    render_page("index.html", "index.html",
                has_chat=bool(cfg.chat_server_url))

    if cfg.page_enabled("calendar"):
        daily = localize_schedule(bundle.events, cfg.default_timezone)
        render_page("calendar.html", "calendar.html", daily=daily,
                    events=bundle.events)

    if cfg.page_enabled("papers"):
        render_page("papers.html", "papers.html", papers=bundle.papers)

    if cfg.page_enabled("visualization"):
        render_page("visualization.html", "visualization.html",
                    paper_count=len(bundle.papers))

    for paper in bundle.papers:
        sessions = [e for e in bundle.events if e.uid in paper.session_uids]
        embed_url = None
        if cfg.chat_embed_template:
            embed_url = cfg.chat_embed_template.replace("{channel}", paper.chat_channel)
        render_page("paper_detail.html", f"papers/{paper.uid}.html",
                    paper=paper, sessions=sessions, embed_url=embed_url)

    for event in bundle.events:
        if event.kind == "paper-session":
            continue
        render_page("event_detail.html", f"events/{event.uid}.html", event=event)

    (out / "conference.ics").write_bytes(export_ical(bundle).encode("utf-8"))
    manifest.add("conference.ics", "data", "ICS export")

    for path in emit_data_bundles(bundle, layout, out):
        manifest.add(path, "data", "data bundles")

    _copy_static(out, manifest)
    _copy_images(bundle, Path(input_dir) if input_dir else None, out, manifest)

    manifest.entries.sort(key=lambda e: e.path)
    paths = manifest.paths()
    if len(set(paths)) != len(paths):
        raise RuntimeError("duplicate output paths in site manifest")
    log.info("rendered %d files into %s", len(paths), out)
    return manifest
