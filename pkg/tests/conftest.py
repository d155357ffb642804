import pytest

from kayada import fixtures
from kayada.markov import build_matrix
from kayada.notation import Composition, load_theme, tokenize
from kayada.rules import extract_ruleset

ACCEPTANCE_LINES = []


def seq(text):
    return tuple(tokenize(text))


@pytest.fixture(scope="session")
def theme_spec():
    return load_theme(fixtures.data_path("theme_fig3.txt"))


@pytest.fixture(scope="session")
def theme(theme_spec):
    return theme_spec.composition


@pytest.fixture(scope="session")
def ruleset(theme_spec):
    return extract_ruleset(theme_spec.composition, theme_spec.seeds, theme_spec.highlighted)


@pytest.fixture(scope="session")
def matrix(theme):
    return build_matrix(theme.bhari, theme.cyclic)


@pytest.fixture
def figure():
    def get(n):
        b, k = fixtures.FIGURES[n]
        return Composition(seq(b), seq(k))
    return get


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
