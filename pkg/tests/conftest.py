import sys

import pytest

import entromark as em

# frozen host seeds for the five-image evaluation set
HOST_SEEDS = (1, 7, 10, 11, 12)


@pytest.fixture(scope="session")
def logo():
    return em.logo_watermark()


@pytest.fixture(scope="session")
def hosts():
    return [em.host_image(512, seed) for seed in HOST_SEEDS]


@pytest.fixture(scope="session")
def embeddings(hosts, logo):
    """One default-parameter embedding per host, shared across tests."""
    return [em.embed(host, logo) for host in hosts]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results):
        ok, detail = results[name]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict} [{detail}]")
