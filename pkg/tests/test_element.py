from itertools import product

import pytest

from conftest import SAMPLES
from divmonoid import BudgetExceeded, ClassBudget, ForeignElementError, Monoid, NotADivisor


def words(M, *texts):
    return [M.element(t) for t in texts]


def test_congruence_class(mono):
    N2 = mono("N2")
    assert N2.congruence_class("x y x") == frozenset({(0, 1, 0), (1, 0, 0), (0, 0, 1)})
    M = mono("M35")
    assert M.congruence_class("y z") == frozenset({(1, 2), (0, 0)})
    assert M.congruence_class("x") == frozenset({(0,)})


def test_normal_forms(mono):
    assert str(mono("M35").normal_form("y z")) == "x x"
    assert mono("N2").normal_form("1").is_identity
    assert str(mono("N2").normal_form("y x")) == "x y"


def test_multiply(mono):
    K, N2 = mono("K"), mono("N2")
    assert str(K.multiply("y", "y")) == "x x"
    assert N2.multiply("x", "y") == N2.multiply("y", "x")
    a = N2.element("x y y")
    assert N2.identity * a == a
    assert len(K.multiply("x", "y", "y")) == 3


def test_divisibility(mono):
    M = mono("M35")
    assert not M.left_divides("y", "x y")
    assert M.left_divides("z", "x y") and M.right_divides("z", "x y")
    assert M.left_divides("x", "x y z")


def test_quotients(mono):
    assert str(mono("free2").left_quotient("x", "x y")) == "y"
    assert str(mono("K").left_quotient("y", "x x")) == "y"
    with pytest.raises(NotADivisor):
        mono("free2").left_quotient("y", "x")
    assert str(mono("N2").right_quotient("x y", "x")) == "y"


def test_divisor_sets(mono):
    assert [str(e) for e in mono("N2").left_divisors("x y")] == ["1", "x", "y", "x y"]
    assert [str(e) for e in mono("K").left_divisors("x x")] == ["1", "x", "y", "x x"]
    for name in SAMPLES:
        assert [str(e) for e in mono(name).left_divisors("x")] == ["1", "x"]


def test_gcd(mono):
    assert mono("N2").left_gcd("x y", "1").is_identity
    assert mono("N2").left_gcd("x", "y").is_identity
    assert str(mono("K").left_gcd("x x", "y y")) == "x x"


def test_lcm_and_residue(mono):
    assert str(mono("N2").right_lcm("x", "y")) == "x y"
    assert str(mono("K").right_lcm("x", "y")) == "x x"
    assert mono("M2").right_lcm("x", "z") is None
    assert mono("M2").residue("x", "z") is None
    K = mono("K")
    assert K.residue("x y", "1").is_identity
    assert str(K.residue("1", "x y")) == "x y"
    assert str(K.residue("x", "y")) == "x"
    assert str(mono("M1").residue("y", "x")) == "z"


def test_join_meet_all(mono):
    M = mono("M35")
    assert str(M.join_all(["1", "x", "y", "z"])) == "x x x"
    assert M.meet_all(["x", "y"]).is_identity


def test_elements_of_length(mono):
    assert len(mono("free2").elements_of_length(3)) == 8
    assert len(mono("N2").elements_of_length(3)) == 4
    N2 = mono("N2")
    assert N2.elements_of_length(0) == [N2.identity]


def test_foreign_elements_rejected(mono):
    a, b = mono("N2"), mono("N2")
    with pytest.raises(ForeignElementError):
        a.multiply(b.element("x"))


def test_budget_enforced():
    M = Monoid(SAMPLES["N2"], ClassBudget(max_class_size=10))
    with pytest.raises(BudgetExceeded):
        M.normal_form("x x x y y y")


@pytest.mark.parametrize("name", ["free2", "N2", "K", "M1", "M2", "DIV1", "M35"])
def test_greedy_agrees_with_enumeration(name):
    slow, fast = Monoid(SAMPLES[name]), Monoid(SAMPLES[name], greedy=True)
    rank = slow.rank
    for n in range(7):
        for w in product(range(rank), repeat=n):
            assert slow._normal(w) == fast._normal(w), w
    for n in range(4):
        for w in product(range(rank), repeat=n):
            assert slow._divisor_map(slow._normal(w)) == fast._divisor_map(fast._normal(w)), w
