"""Chat-server channel provisioning over a minimal HTTP contract.

One channel per paper, created idempotently before the conference opens:
POST <base_url>/api/channels.create with body {"name": <channel>} and a
bearer token. A body error code of "duplicate_channel" means the channel
already exists and is not a failure.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field

import requests

log = logging.getLogger(__name__)

CREATE_PATH = "/api/channels.create"
DUPLICATE_ERROR_CODE = "duplicate_channel"
TOKEN_ENV_VAR = "CHAT_TOKEN"


def channel_name(paper_uid: str) -> str:
    """Deterministic channel name for a paper; uid slugs are valid names as-is."""
    return f"paper-{paper_uid}"


class AuthenticationError(Exception):
    """Server rejected our credentials; provisioning aborts immediately."""


@dataclass
class ChatServerClient:
    base_url: str
    auth_token: str = ""
    timeout: float = 10.0
    max_retries: int = 3
    backoff_base: float = 0.5  # seconds; doubled per retry

    @classmethod
    def from_env(cls, base_url: str, **kwargs) -> "ChatServerClient":
        return cls(base_url=base_url, auth_token=os.environ.get(TOKEN_ENV_VAR, ""),
                   **kwargs)


@dataclass
class ProvisionReport:
    created: list[str] = field(default_factory=list)
    already_existed: list[str] = field(default_factory=list)
    failed: list[tuple[str, str]] = field(default_factory=list)

    def summary(self) -> str:
        return (f"created={len(self.created)} existing={len(self.already_existed)} "
                f"failed={len(self.failed)}")


def _create_channel(session: requests.Session, client: ChatServerClient,
                    name: str) -> str:
    """Returns 'created' or 'exists'; raises on auth failure or exhausted retries."""
    url = client.base_url.rstrip("/") + CREATE_PATH
    headers = {"Authorization": f"Bearer {client.auth_token}"}
    attempts = 1 + client.max_retries
    last_error = "no attempt made"
    for attempt in range(attempts):
        if attempt:
            time.sleep(client.backoff_base * (2 ** (attempt - 1)))
        try:
            resp = session.post(url, json={"name": name}, headers=headers,
                                timeout=client.timeout)
        except requests.RequestException as exc:
            last_error = f"request failed: {exc}"
            continue
        if resp.status_code in (401, 403):
            raise AuthenticationError(
                f"server rejected credentials (HTTP {resp.status_code}) "
                f"while creating {name!r}")
        if resp.status_code >= 500:
            last_error = f"HTTP {resp.status_code}"
            continue
        try:
            body = resp.json()
        except ValueError:
            body = {}
        if resp.ok and body.get("success", True):
            return "created"
        if body.get("error") == DUPLICATE_ERROR_CODE:
            return "exists"
        raise RuntimeError(f"HTTP {resp.status_code}: {body.get('error', resp.text)}")
    raise RuntimeError(f"gave up after {attempts} attempts: {last_error}")


def provision_channels(papers, client: ChatServerClient) -> ProvisionReport:
    """Create one channel per paper; the report partitions the requested set.

    Transient failures (connection errors, timeouts, 5xx) are retried with
    exponential backoff up to max_retries per channel. Authentication
    rejection aborts the whole run. Other per-channel failures are recorded
    and the remaining channels are still attempted.
    """
    report = ProvisionReport()
    with requests.Session() as session:
        for paper in papers:
            name = channel_name(paper.uid)
            try:
                outcome = _create_channel(session, client, name)
            except AuthenticationError:
                raise
            except RuntimeError as exc:
                log.warning("channel %s failed: %s", name, exc)
                report.failed.append((name, str(exc)))
                continue
            if outcome == "created":
                report.created.append(name)
            else:
                report.already_existed.append(name)
    log.info("chat provisioning: %s", report.summary())
    return report
