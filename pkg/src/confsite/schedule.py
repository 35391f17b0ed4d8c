"""Timezone-localized daily schedules and the RFC 5545 ICS export."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime
from urllib.parse import urlparse
from zoneinfo import ZoneInfo

from .bundle import ConferenceBundle, EventRecord

PRODID = "-//confsite//static conference generator//EN"

CRLF = "\r\n"
MAX_LINE_OCTETS = 75


@dataclass
class LocalizedEvent:
    event: EventRecord
    local_start: datetime
    local_end: datetime
    day_key: date


@dataclass
class DailySchedule:
    days: list[tuple[date, list[LocalizedEvent]]]


def localize_schedule(events: list[EventRecord], zone: str) -> DailySchedule:
    """Group events into local calendar days for the given IANA zone.

    Days ascend; within a day events are ordered by local start time with
    ties broken by uid. Every event appears exactly once.
    """
    tz = ZoneInfo(zone)  # raises for unknown zones
    localized = []
    for event in events:
        start = event.start_utc.astimezone(tz)
        end = event.end_utc.astimezone(tz)
        localized.append(LocalizedEvent(event, start, end, start.date()))
    localized.sort(key=lambda le: (le.day_key, le.local_start, le.event.uid))
    days: list[tuple[date, list[LocalizedEvent]]] = []
    for le in localized:
        if not days or days[-1][0] != le.day_key:
            days.append((le.day_key, []))
        days[-1][1].append(le)
    return DailySchedule(days=days)


def _escape_text(value: str) -> str:
    return (value.replace("\\", "\\\\")
                 .replace(";", "\\;")
                 .replace(",", "\\,")
                 .replace("\r\n", "\\n")
                 .replace("\n", "\\n"))


def _fold(line: str) -> list[str]:
    """Fold a content line at 75 octets; continuations start with one space."""
    data = line.encode("utf-8")
    if len(data) <= MAX_LINE_OCTETS:
        return [line]
    parts = []
    limit = MAX_LINE_OCTETS
    while data:
        cut = min(limit, len(data))
        # never split inside a UTF-8 multi-byte sequence
        while cut < len(data) and (data[cut] & 0xC0) == 0x80:
            cut -= 1
        parts.append(data[:cut].decode("utf-8"))
        data = data[cut:]
        if data:
            data = b" " + data
        limit = MAX_LINE_OCTETS
    return parts


def _format_utc(dt: datetime) -> str:
    return dt.strftime("%Y%m%dT%H%M%SZ")


def export_ical(bundle: ConferenceBundle) -> str:
    """Serialize every event as a VEVENT in one VCALENDAR, UTC instants only.

    Deterministic: events are emitted in uid-ascending order and DTSTAMP
    reuses the event start so identical inputs give identical bytes.
    """
    host = urlparse(bundle.config.base_url).hostname or "localhost"
    lines = [
        "BEGIN:VCALENDAR",
        "VERSION:2.0",
        f"PRODID:{PRODID}",
        "CALSCALE:GREGORIAN",
    ]
    for event in sorted(bundle.events, key=lambda e: e.uid):
        lines.append("BEGIN:VEVENT")
        lines.append(f"UID:{event.uid}@{host}")
        lines.append(f"DTSTAMP:{_format_utc(event.start_utc)}")
        lines.append(f"DTSTART:{_format_utc(event.start_utc)}")
        lines.append(f"DTEND:{_format_utc(event.end_utc)}")
        lines.append(f"SUMMARY:{_escape_text(event.title)}")
        if event.description:
            lines.append(f"DESCRIPTION:{_escape_text(event.description)}")
        if event.link_url:
            lines.append(f"URL:{event.link_url}")
        lines.append("END:VEVENT")
    lines.append("END:VCALENDAR")
    folded: list[str] = []
    for line in lines:
        folded.extend(_fold(line))
    return CRLF.join(folded) + CRLF
