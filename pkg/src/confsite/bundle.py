"""Core domain types shared by every pipeline stage."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime

SLUG_RE = re.compile(r"^[a-z0-9_-]+$")

EVENT_KINDS = ("keynote", "social", "paper-session", "qa")


@dataclass
class Organizer:
    name: str
    affiliation: str = ""
    url: str = ""


@dataclass
class ConferenceConfig:
    name: str
    tagline: str = ""
    default_timezone: str = "UTC"
    base_url: str = ""
    chat_server_url: str | None = None
    chat_embed_template: str | None = None
    page_toggles: dict[str, bool] = field(default_factory=dict)
    organizers: list[Organizer] = field(default_factory=list)
    welcome_video_url: str | None = None

    def page_enabled(self, page: str) -> bool:
        return self.page_toggles.get(page, True)


@dataclass
class PaperRecord:
    uid: str
    title: str
    authors: list[str]
    abstract: str = ""
    keywords: list[str] = field(default_factory=list)
    session_uids: list[str] = field(default_factory=list)
    pdf_url: str | None = None
    video_url: str | None = None
    image_path: str | None = None
    chat_channel: str = ""


@dataclass
class EventRecord:
    uid: str
    title: str
    kind: str
    start_utc: datetime
    end_utc: datetime
    link_url: str | None = None
    description: str | None = None


@dataclass
class ConferenceBundle:
    config: ConferenceConfig
    papers: list[PaperRecord]
    events: list[EventRecord]

    def paper_sessions(self) -> list[EventRecord]:
        return [e for e in self.events if e.kind == "paper-session"]


@dataclass
class Issue:
    file: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.where}: {self.message}"


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    def error(self, file: str, where: str, message: str) -> None:
        self.errors.append(Issue(file, where, message))

    def warn(self, file: str, where: str, message: str) -> None:
        self.warnings.append(Issue(file, where, message))

    @property
    def ok(self) -> bool:
        return not self.errors
