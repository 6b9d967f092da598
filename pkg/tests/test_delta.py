import pytest

from conftest import SAMPLES
from divmonoid import Monoid, Presentation, is_quasi_central, local_delta, quasi_center, upsilon_iteration


def stage_names(M, trace):
    fmt = M.presentation.format_word
    return [sorted(fmt(w) for w in s) for s in trace.stages]


@pytest.mark.parametrize("greedy", [False, True])
def test_upsilon_cube(greedy):
    M = Monoid(SAMPLES["M35"], greedy=greedy)
    t = upsilon_iteration(M, "x")
    assert stage_names(M, t) == [["x"], ["1", "x", "z"], ["1", "x", "y", "z"]]
    assert t.failure is None and t.fixpoint == t.stages[-1]


def test_upsilon_failure_witness(mono):
    M = mono("M2")
    t = upsilon_iteration(M, "y")
    assert stage_names(M, t)[1] == ["1", "x", "y", "z"]
    c, b = t.failure
    assert {M.presentation.format_word(c), M.presentation.format_word(b)} == {"x", "z"}
    assert t.fixpoint is None


def test_upsilon_identity(mono):
    t = upsilon_iteration(mono("M1"), "1")
    assert t.stages == [frozenset({()})]


def test_local_deltas(mono):
    M = mono("M35")
    for g in "xyz":
        assert str(local_delta(M, g).delta) == "x x x"
    M1 = mono("M1")
    assert str(local_delta(M1, "y").delta) == "y"
    assert not local_delta(M1, "x").exists and not local_delta(M1, "z").exists
    for g in "xyz":
        assert not local_delta(mono("M2"), g).exists


def test_local_delta_outcome_dict(mono):
    d = local_delta(mono("M2"), "y").to_dict()
    assert d["exists"] is False and "does not exist" in d["failure"]["message"]


def test_quasi_centrality(mono):
    M1 = mono("M1")
    assert is_quasi_central(M1, "1") == (True, {"x": "x", "y": "y", "z": "z"})
    ok, perm = is_quasi_central(M1, "y")
    assert ok and perm == {"x": "z", "y": "y", "z": "x"}
    assert is_quasi_central(M1, "x") == (False, None)


def test_quasi_centers(mono):
    assert [str(g) for g in quasi_center(mono("M1")).generators] == ["y"]
    assert quasi_center(mono("M2")).rank == 0
    qc = quasi_center(mono("M35"))
    assert qc.rank == 1 and str(qc.generators[0]) == "x x x"
    N3 = Monoid(Presentation.from_names("xyz", [("x y", "y x"), ("x z", "z x"), ("y z", "z y")]))
    assert [str(g) for g in quasi_center(N3).generators] == ["x", "y", "z"]
    assert quasi_center(mono("N2")).to_dict()["structure"] == "N^2"
