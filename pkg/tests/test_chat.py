import pytest

from confsite.chat import (AuthenticationError, ChatServerClient,
                           channel_name, provision_channels)

from conftest import make_paper
from mock_chat import MockChatServer


def client_for(server, **kwargs):
    kwargs.setdefault("backoff_base", 0.0)  # no real sleeping in tests
    kwargs.setdefault("timeout", 5.0)
    return ChatServerClient(base_url=server.url, auth_token="secret", **kwargs)


def papers(n):
    return [make_paper(f"paper{i}") for i in range(n)]


def test_channel_name_simple():
    assert channel_name("gan-paper") == "paper-gan-paper"
    assert channel_name("a1") == "paper-a1"


def test_channel_names_injective():
    names = {channel_name(p.uid) for p in papers(10)}
    assert len(names) == 10


def test_zero_papers_sends_nothing():
    with MockChatServer() as server:
        report = provision_channels([], client_for(server))
    assert report.created == []
    assert report.already_existed == []
    assert report.failed == []
    assert server.requests == []


def test_all_new_channels():
    with MockChatServer() as server:
        report = provision_channels(papers(5), client_for(server))
        assert sorted(report.created) == [f"paper-paper{i}" for i in range(5)]
        assert report.already_existed == []
        assert report.failed == []
        assert len(server.create_calls()) == 5


def test_preexisting_channel_classified_not_failed():
    with MockChatServer(existing=["paper-paper3"]) as server:
        report = provision_channels(papers(5), client_for(server))
    assert len(report.created) == 4
    assert report.already_existed == ["paper-paper3"]
    assert report.failed == []


def test_idempotent_second_run_creates_nothing():
    with MockChatServer() as server:
        client = client_for(server)
        first = provision_channels(papers(4), client)
        second = provision_channels(papers(4), client)
    assert len(first.created) == 4
    assert second.created == []
    assert len(second.already_existed) == 4
    assert second.failed == []


def test_transient_5xx_retried_then_succeeds():
    with MockChatServer(fail_first=2) as server:
        report = provision_channels(papers(1), client_for(server, max_retries=3))
        assert report.created == ["paper-paper0"]
        assert report.failed == []
        assert len(server.create_calls()) == 3  # 2 failures + 1 success


def test_retry_ceiling_respected():
    with MockChatServer(fail_names={"paper-paper0": 99}) as server:
        report = provision_channels(papers(2), client_for(server, max_retries=2))
        calls = server.create_calls()
    assert [name for name, _ in report.failed] == ["paper-paper0"]
    assert calls.count("paper-paper0") == 3  # 1 attempt + 2 retries, never more
    assert report.created == ["paper-paper1"]  # run continues past the failure


def test_report_partitions_requests():
    with MockChatServer(existing=["paper-paper1"],
                        fail_names={"paper-paper2": 99}) as server:
        report = provision_channels(papers(4), client_for(server, max_retries=1))
    names = (set(report.created) | set(report.already_existed)
             | {n for n, _ in report.failed})
    assert names == {f"paper-paper{i}" for i in range(4)}
    total = len(report.created) + len(report.already_existed) + len(report.failed)
    assert total == 4


def test_auth_rejection_aborts():
    with MockChatServer(require_token="other-token") as server:
        with pytest.raises(AuthenticationError, match="paper-paper0"):
            provision_channels(papers(3), client_for(server))
        # aborted on the first request; no further channels attempted
        assert len(server.create_calls()) == 1


def test_unreachable_server_fails_every_channel():
    client = ChatServerClient(base_url="http://127.0.0.1:1",  # nothing listens
                              auth_token="x", timeout=0.2, max_retries=1,
                              backoff_base=0.0)
    report = provision_channels(papers(2), client)
    assert report.created == []
    assert len(report.failed) == 2
