import random

import pytest
from hypothesis import settings, strategies as st

from skein4.laurent import HalfLaurent
from skein4.skeinfree import GENERATORS, SkeinElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

laurents = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=4).map(HalfLaurent)

words = st.lists(st.sampled_from(GENERATORS), max_size=3).map(tuple)

elements = st.lists(st.tuples(words, laurents), max_size=3).map(SkeinElement)


def random_word(rng: random.Random, maxlen: int) -> tuple:
    return tuple(rng.choice(GENERATORS) for _ in range(rng.randint(1, maxlen)))


@pytest.fixture
def rng():
    return random.Random(20240611)


_CRITERIA: list = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or rep.failed):
        _CRITERIA.append((mark.args[0], mark.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok, secs in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f}s)")
