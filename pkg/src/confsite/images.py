"""Attach a card image to each paper from a mapping file or directory convention."""

from __future__ import annotations

import csv
import logging
from dataclasses import replace
from pathlib import Path

from .bundle import ConferenceBundle

log = logging.getLogger(__name__)

IMAGE_MAP_FILE = "image_map.csv"
IMAGES_DIR = "images"
PLACEHOLDER_PATH = "static/placeholder.png"
IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg")


class ImageMapError(Exception):
    pass


def _load_image_map(input_dir: Path) -> dict[str, str]:
    path = input_dir / IMAGE_MAP_FILE
    if not path.exists():
        return {}
    mapping: dict[str, str] = {}
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"uid", "image_path"} <= set(reader.fieldnames):
            raise ImageMapError(f"{IMAGE_MAP_FILE} needs columns uid,image_path")
        for lineno, row in enumerate(reader, start=2):
            uid = (row.get("uid") or "").strip()
            rel = (row.get("image_path") or "").strip()
            if not uid or not rel:
                raise ImageMapError(f"{IMAGE_MAP_FILE}:{lineno}: empty uid or image_path")
            target = input_dir / rel
            if not target.is_file():
                raise ImageMapError(
                    f"{IMAGE_MAP_FILE}:{lineno}: mapped file {rel!r} does not exist")
            if target.suffix.lower() not in IMAGE_EXTENSIONS:
                raise ImageMapError(
                    f"{IMAGE_MAP_FILE}:{lineno}: {rel!r} is not a PNG or JPEG")
            mapping[uid] = rel
    return mapping


def attach_images(bundle: ConferenceBundle, input_dir: str | Path) -> ConferenceBundle:
    """Resolve each paper's image: map entry, then images/<uid>.png|.jpg, then placeholder.

    Idempotent and pure given a filesystem snapshot; every paper leaves with
    a non-empty image_path.
    """
    root = Path(input_dir)
    mapping = _load_image_map(root)
    counts = {"map": 0, "convention": 0, "placeholder": 0}
    papers = []
    for paper in bundle.papers:
        if paper.uid in mapping:
            path = mapping[paper.uid]
            counts["map"] += 1
        else:
            for ext in (".png", ".jpg"):
                candidate = root / IMAGES_DIR / f"{paper.uid}{ext}"
                if candidate.is_file():
                    path = f"{IMAGES_DIR}/{paper.uid}{ext}"
                    counts["convention"] += 1
                    break
            else:
                path = PLACEHOLDER_PATH
                counts["placeholder"] += 1
        papers.append(replace(paper, image_path=path))
    log.info("image attachment: map=%d convention=%d placeholder=%d",
             counts["map"], counts["convention"], counts["placeholder"])
    return ConferenceBundle(config=bundle.config, papers=papers, events=bundle.events)
