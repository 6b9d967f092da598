import pytest

from divmonoid import Monoid, Presentation

SAMPLES = {
    "free2": Presentation.from_names("xy", []),
    "N2": Presentation.from_names("xy", [("x y", "y x")]),
    "K": Presentation.from_names("xy", [("x x", "y y")]),
    "M1": Presentation.from_names("xyz", [("x y", "y z"), ("y x", "z y")]),
    "M2": Presentation.from_names("xyz", [("x z", "y x"), ("y z", "z x")]),
    "DIV1": Presentation.from_names("xyz", [("x y", "y z")]),
    "M35": Presentation.from_names("xyz", [("x x", "y z"), ("y y", "z x"), ("z z", "x y")]),
}

# not a divisibility monoid: the divisors of xxx fail distributivity
NONDIST = Presentation.from_names("xyz", [("x x", "y z"), ("x y", "z z")])


@pytest.fixture
def samples():
    return SAMPLES


@pytest.fixture
def mono():
    def make(name, greedy=False):
        return Monoid(SAMPLES[name], greedy=greedy)

    return make


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
