import json

import pytest

from conftest import NONDIST, SAMPLES
from divmonoid import (
    DivisorLattice,
    FiniteLattice,
    LatticeError,
    Monoid,
    export_hasse,
    height,
    is_distributive,
    is_hypercube,
    is_lattice,
)

SQUARE = FiniteLattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
DIAMOND = FiniteLattice(["0", "a", "b", "c", "1"], [("0", k) for k in "abc"] + [(k, "1") for k in "abc"])
CHAIN2 = FiniteLattice(["1", "x", "xx"], [("1", "x"), ("x", "xx")])
CUBE = FiniteLattice(
    [frozenset(s) for s in ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))],
    [
        (frozenset(a), frozenset(a) | {i})
        for a in ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2))
        for i in range(3)
        if i not in a
    ],
)


def test_structural_validation():
    with pytest.raises(LatticeError):
        FiniteLattice(["a", "b"], [])  # no unique bottom
    with pytest.raises(LatticeError):
        FiniteLattice(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(LatticeError):
        FiniteLattice(["a"], [("a", "q")])
    with pytest.raises(LatticeError):
        FiniteLattice([], [])


def test_is_lattice():
    assert is_lattice(SQUARE)
    # two incomparable elements under one top with two bottoms below both
    bowtie = FiniteLattice(
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
    )
    check = is_lattice(bowtie)
    assert not check and set(check.witness[:2]) == {"a", "b"}


def test_distributivity():
    assert is_distributive(CUBE) and is_distributive(SQUARE)
    check = is_distributive(DIAMOND)
    assert not check and len(check.witness) == 3


def test_hypercube():
    assert is_hypercube(SQUARE) and is_hypercube(CUBE)
    assert is_hypercube(FiniteLattice(["1", "x"], [("1", "x")]))
    assert not is_hypercube(CHAIN2)
    assert not is_hypercube(DIAMOND)


def test_height():
    assert height(CUBE) == 3 and height(CHAIN2) == 2


def test_divisor_lattice_square():
    L = DivisorLattice(Monoid(SAMPLES["N2"]), "x y")
    assert len(L) == 4 and is_hypercube(L) and height(L) == 2


def test_divisor_lattice_nondistributive():
    L = DivisorLattice(Monoid(NONDIST), "x x x")
    assert is_lattice(L) and not is_distributive(L)


def test_divisor_lattice_cube():
    L = DivisorLattice(Monoid(SAMPLES["M35"]), "x x x")
    assert len(L) == 8 and is_hypercube(L) and is_distributive(L)


def test_export_dot_square():
    dot = export_hasse(DivisorLattice(Monoid(SAMPLES["N2"]), "x y"), "dot")
    assert dot.count("->") == 4 and dot.count("label=") == 4
    assert dot == export_hasse(DivisorLattice(Monoid(SAMPLES["N2"]), "y x"), "dot")


def test_export_cube_counts():
    d = json.loads(export_hasse(DivisorLattice(Monoid(SAMPLES["M35"]), "x x x"), "json"))
    assert len(d["elements"]) == 8 and len(d["covers"]) == 12


def test_export_unknown_format():
    with pytest.raises(ValueError):
        export_hasse(SQUARE, "svg")


def test_json_round_trip():
    L = DivisorLattice(Monoid(SAMPLES["M35"]), "x x x")
    L2 = FiniteLattice.from_json(export_hasse(L, "json"))
    assert len(L2) == len(L) and height(L2) == height(L) and is_hypercube(L2)
    names = [L.node_name(e) for e in L.elements]
    for i, u in enumerate(names):
        for j, v in enumerate(names):
            assert L.leq[i][j] == L2.leq[L2.index[u]][L2.index[v]]
