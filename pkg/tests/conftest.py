import sys
import functools

import pytest

from lhomology.corpus import full_corpus, named_corpus


@functools.lru_cache(maxsize=None)
def _corpus():
    return tuple(full_corpus())


@pytest.fixture(scope="session")
def corpus():
    return list(_corpus())


@pytest.fixture(scope="session")
def named():
    return dict(named_corpus())


def corpus_params(small=False):
    items = list(_corpus())
    if small:
        items = [(n, K) for n, K in items if K.nvertices <= 6 and len(K) <= 64]
    return pytest.mark.parametrize("name,K", items, ids=[n for n, _ in items])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
