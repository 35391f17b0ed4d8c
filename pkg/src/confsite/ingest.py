"""Flat-file ingestion: conference.yml + papers.csv + events.csv -> ConferenceBundle.

All errors for a given input set are collected into one ValidationReport;
a bundle is only handed downstream when the report carries zero errors.
"""

from __future__ import annotations

import csv
import logging
from datetime import datetime, timezone
from pathlib import Path
from zoneinfo import ZoneInfo, ZoneInfoNotFoundError

import yaml

from .bundle import (
    EVENT_KINDS,
    SLUG_RE,
    ConferenceBundle,
    ConferenceConfig,
    EventRecord,
    Organizer,
    PaperRecord,
    ValidationReport,
)
from .chat import channel_name

log = logging.getLogger(__name__)

CONFIG_FILE = "conference.yml"
PAPERS_FILE = "papers.csv"
EVENTS_FILE = "events.csv"

PAPER_COLUMNS = ["uid", "title", "authors", "abstract", "keywords", "session_uids"]
PAPER_OPTIONAL = ["pdf_url", "video_url"]
EVENT_COLUMNS = ["uid", "title", "kind", "start", "end"]
EVENT_OPTIONAL = ["link_url", "description"]

LIST_SEP = "|"


class IngestError(Exception):
    """Raised when the input directory cannot yield a valid bundle."""

    def __init__(self, report: ValidationReport):
        self.report = report
        lines = [str(e) for e in report.errors]
        super().__init__("invalid conference inputs:\n" + "\n".join(lines))


def _split_list(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(LIST_SEP) if part.strip()]


def _parse_instant(raw: str) -> datetime:
    """Parse an ISO-8601 timestamp with explicit offset; normalize to UTC."""
    text = raw.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        raise ValueError(f"timestamp {raw!r} has no UTC offset")
    return dt.astimezone(timezone.utc)


def _read_csv(path: Path, required: list[str], optional: list[str],
              report: ValidationReport) -> list[dict[str, str]]:
    name = path.name
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        report.error(name, "-", "file is missing")
        return []
    except UnicodeDecodeError as exc:
        report.error(name, "-", f"not valid UTF-8: {exc}")
        return []
    rows: list[dict[str, str]] = []
    reader = csv.DictReader(text.splitlines())
    header = reader.fieldnames
    if header is None:
        report.error(name, "1", "missing header row")
        return []
    known = set(required) | set(optional)
    for col in required:
        if col not in header:
            report.error(name, "1", f"missing required column {col!r}")
    for col in header:
        if col not in known:
            report.warn(name, "1", f"unknown column {col!r} ignored")
    if not report.ok:
        return []
    for lineno, row in enumerate(reader, start=2):
        if row.get(None):
            report.error(name, str(lineno), "row has more cells than the header")
            continue
        rows.append({k: (v or "").strip() for k, v in row.items() if k in known}
                    | {"_line": str(lineno)})
    return rows


def _load_config(path: Path, report: ValidationReport) -> ConferenceConfig | None:
    name = path.name
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        report.error(name, "-", "file is missing")
        return None
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = str(mark.line + 1) if mark else "-"
        report.error(name, where, f"YAML parse error: {exc}")
        return None
    if not isinstance(raw, dict):
        report.error(name, "-", "top level must be a mapping")
        return None

    cfg_name = str(raw.get("name", "") or "")
    if not cfg_name.strip():
        report.error(name, "name", "conference name is required and non-empty")

    tz = str(raw.get("default_timezone", "UTC") or "UTC")
    try:
        ZoneInfo(tz)
    except (ZoneInfoNotFoundError, ValueError):
        report.error(name, "default_timezone", f"unknown IANA timezone {tz!r}")

    embed = raw.get("chat_embed_template")
    if embed is not None:
        embed = str(embed)
        if "{channel}" not in embed:
            report.error(name, "chat_embed_template",
                         "must contain the literal placeholder '{channel}'")

    toggles = raw.get("page_toggles") or {}
    if not isinstance(toggles, dict):
        report.error(name, "page_toggles", "must be a mapping of page -> bool")
        toggles = {}

    organizers = []
    for i, org in enumerate(raw.get("organizers") or []):
        if not isinstance(org, dict) or not org.get("name"):
            report.error(name, f"organizers[{i}]", "organizer needs a name")
            continue
        organizers.append(Organizer(name=str(org["name"]),
                                    affiliation=str(org.get("affiliation", "") or ""),
                                    url=str(org.get("url", "") or "")))

    chat_url = raw.get("chat_server_url")
    video_url = raw.get("welcome_video_url")
    return ConferenceConfig(
        name=cfg_name,
        tagline=str(raw.get("tagline", "") or ""),
        default_timezone=tz,
        base_url=str(raw.get("base_url", "") or ""),
        chat_server_url=str(chat_url) if chat_url else None,
        chat_embed_template=embed,
        page_toggles={str(k): bool(v) for k, v in toggles.items()},
        organizers=organizers,
        welcome_video_url=str(video_url) if video_url else None,
    )


def _load_papers(path: Path, report: ValidationReport) -> list[PaperRecord]:
    rows = _read_csv(path, PAPER_COLUMNS, PAPER_OPTIONAL, report)
    papers: list[PaperRecord] = []
    seen: dict[str, str] = {}
    for row in rows:
        line = row["_line"]
        uid = row["uid"]
        if not SLUG_RE.match(uid):
            report.error(path.name, line,
                         f"uid {uid!r} is not a slug ([a-z0-9_-]+)")
            continue
        if uid in seen:
            report.error(path.name, line,
                         f"duplicate uid {uid!r} (first seen at row {seen[uid]})")
            continue
        seen[uid] = line
        if not row["title"]:
            report.error(path.name, line, f"paper {uid!r} has an empty title")
        authors = _split_list(row["authors"])
        if not authors:
            report.error(path.name, line, f"paper {uid!r} has no authors")
        papers.append(PaperRecord(
            uid=uid,
            title=row["title"],
            authors=authors,
            abstract=row["abstract"],
            keywords=_split_list(row["keywords"]),
            session_uids=_split_list(row["session_uids"]),
            pdf_url=row.get("pdf_url") or None,
            video_url=row.get("video_url") or None,
            chat_channel=channel_name(uid),
        ))
    return papers


def _load_events(path: Path, report: ValidationReport) -> list[EventRecord]:
    rows = _read_csv(path, EVENT_COLUMNS, EVENT_OPTIONAL, report)
    events: list[EventRecord] = []
    seen: dict[str, str] = {}
    for row in rows:
        line = row["_line"]
        uid = row["uid"]
        if not SLUG_RE.match(uid):
            report.error(path.name, line,
                         f"uid {uid!r} is not a slug ([a-z0-9_-]+)")
            continue
        if uid in seen:
            report.error(path.name, line,
                         f"duplicate uid {uid!r} (first seen at row {seen[uid]})")
            continue
        seen[uid] = line
        kind = row["kind"]
        if kind not in EVENT_KINDS:
            report.error(path.name, line,
                         f"unknown event kind {kind!r} (expected one of {', '.join(EVENT_KINDS)})")
            continue
        try:
            start = _parse_instant(row["start"])
            end = _parse_instant(row["end"])
        except ValueError as exc:
            report.error(path.name, line, f"malformed timestamp: {exc}")
            continue
        if not start < end:
            report.error(path.name, line,
                         f"event {uid!r} start must be strictly before end")
            continue
        events.append(EventRecord(
            uid=uid,
            title=row["title"],
            kind=kind,
            start_utc=start,
            end_utc=end,
            link_url=row.get("link_url") or None,
            description=row.get("description") or None,
        ))
    return events


def load_with_report(input_dir: str | Path) -> tuple[ConferenceBundle | None, ValidationReport]:
    """Parse every input file, returning a bundle only if the report is clean."""
    root = Path(input_dir)
    report = ValidationReport()
    config = _load_config(root / CONFIG_FILE, report)
    papers = _load_papers(root / PAPERS_FILE, report)
    events = _load_events(root / EVENTS_FILE, report)
    if config is None or not report.ok:
        return None, report
    bundle = ConferenceBundle(config=config, papers=papers, events=events)
    cross = validate(bundle)
    report.errors.extend(cross.errors)
    report.warnings.extend(cross.warnings)
    if not report.ok:
        return None, report
    return bundle, report


def load_conference(input_dir: str | Path) -> ConferenceBundle:
    """Load and validate; raises IngestError carrying the full report on any error."""
    bundle, report = load_with_report(input_dir)
    for w in report.warnings:
        log.warning("%s", w)
    if bundle is None:
        raise IngestError(report)
    return bundle


def validate(bundle: ConferenceBundle) -> ValidationReport:
    """Check every cross-reference and record-level invariant; list all violations."""
    report = ValidationReport()
    if not bundle.config.name.strip():
        report.error(CONFIG_FILE, "name", "conference name is empty")
    sessions = {e.uid for e in bundle.events if e.kind == "paper-session"}
    seen_papers: set[str] = set()
    for paper in bundle.papers:
        if paper.uid in seen_papers:
            report.error(PAPERS_FILE, paper.uid, f"duplicate uid {paper.uid!r}")
        seen_papers.add(paper.uid)
        if not paper.title:
            report.error(PAPERS_FILE, paper.uid, "empty title")
        if not paper.authors:
            report.error(PAPERS_FILE, paper.uid, "no authors")
        for ref in paper.session_uids:
            if ref not in sessions:
                report.error(PAPERS_FILE, paper.uid,
                             f"paper {paper.uid!r} references unknown session {ref!r}")
        if not paper.pdf_url and not paper.video_url:
            report.warn(PAPERS_FILE, paper.uid,
                        f"paper {paper.uid!r} has neither pdf_url nor video_url")
    seen_events: set[str] = set()
    for event in bundle.events:
        if event.uid in seen_events:
            report.error(EVENTS_FILE, event.uid, f"duplicate uid {event.uid!r}")
        seen_events.add(event.uid)
        if not event.start_utc < event.end_utc:
            report.error(EVENTS_FILE, event.uid, "start must be strictly before end")
    return report
