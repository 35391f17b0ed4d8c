from datetime import datetime, timezone
from pathlib import Path

import pytest

from confsite.bundle import (ConferenceBundle, ConferenceConfig, EventRecord,
                             PaperRecord)
from confsite.chat import channel_name

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def conf12_dir() -> Path:
    return FIXTURES / "conf12"


@pytest.fixture
def conf_small_dir() -> Path:
    return FIXTURES / "conf_small"


def utc(*args) -> datetime:
    return datetime(*args, tzinfo=timezone.utc)


def make_paper(uid, title="A Paper", authors=("Someone",), abstract="",
               keywords=(), session_uids=(), **kwargs) -> PaperRecord:
    return PaperRecord(uid=uid, title=title, authors=list(authors),
                       abstract=abstract, keywords=list(keywords),
                       session_uids=list(session_uids),
                       chat_channel=channel_name(uid), **kwargs)


def make_event(uid, title="An Event", kind="keynote",
               start=utc(2026, 9, 14, 13), end=utc(2026, 9, 14, 14),
               **kwargs) -> EventRecord:
    return EventRecord(uid=uid, title=title, kind=kind,
                       start_utc=start, end_utc=end, **kwargs)


def make_bundle(papers=(), events=(), **config_kwargs) -> ConferenceBundle:
    config = ConferenceConfig(name="TestConf",
                              base_url="https://conf.example.org",
                              **config_kwargs)
    return ConferenceBundle(config=config, papers=list(papers),
                            events=list(events))
