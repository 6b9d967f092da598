import pytest

from divmonoid import NotGarside, garside_divisor_properties, is_garside, minimal_garside_element


def test_cube_is_garside(mono):
    r = is_garside(mono("M35"))
    assert r.to_dict() == {"is_garside": True, "delta": "x x x", "simple_elements": 8, "hypercube": True}
    assert r.hasse_dot().count("->") == 12


def test_free_and_m1_not_garside(mono):
    assert [str(e) for e in is_garside(mono("free2")).witness] == ["x", "y"]
    assert [str(e) for e in is_garside(mono("M1")).witness] == ["x", "z"]
    assert is_garside(mono("M1")).hasse_dot() is None


@pytest.mark.parametrize("name, delta", [("N2", "x y"), ("K", "x x"), ("M35", "x x x")])
def test_minimal_garside_element(mono, name, delta):
    assert str(minimal_garside_element(mono(name))) == delta


def test_minimal_garside_element_missing(mono):
    with pytest.raises(NotGarside):
        minimal_garside_element(mono("M2"))


@pytest.mark.parametrize("name", ["N2", "K", "M35"])
def test_divisor_properties(mono, name):
    M = mono(name, greedy=True)
    p = garside_divisor_properties(M)
    assert p.coincide and p.generates
    assert len(p.left_divisors) == 2**M.rank
