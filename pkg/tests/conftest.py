import numpy as np
import pytest

from algbfs import _backend, corpus
from algbfs.graph import build_csr

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture(params=_backend.available())
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def path5():
    g = corpus.labelled_path5()
    return g, build_csr(g)


@pytest.fixture(scope="session")
def small_corpus():
    """200 mixed graphs (n <= 96) with their matrices, shared by the unit tests."""
    return [(c, build_csr(c.graph)) for c in corpus.corpus(200, seed=7, max_n=96)]


def pick_sources(n: int, k: int, rng: np.random.Generator) -> list[int]:
    if n <= k:
        return list(range(n))
    return sorted(int(v) for v in rng.choice(n, size=k, replace=False))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE[number] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] AC{number:<2} {title}")
