from conftest import SAMPLES
from divmonoid import Monoid
from divmonoid.properties import SamplingPlan, check_properties


def test_small_plan_is_clean():
    plan = SamplingPlan(exhaustive_length=3, random_samples=30, random_pairs=30, random_triples=20)
    for name in ("N2", "K", "M1", "M35"):
        report = check_properties(Monoid(SAMPLES[name], greedy=True), plan)
        assert report.ok, report.to_text()
        assert report.checked["lcm-left-distributive"] > 0


def test_seed_is_reproducible():
    plan = SamplingPlan(exhaustive_length=2, random_samples=20, random_pairs=20, random_triples=10, seed=7)
    a = check_properties(Monoid(SAMPLES["DIV1"], greedy=True), plan).to_json()
    b = check_properties(Monoid(SAMPLES["DIV1"], greedy=True), plan).to_json()
    assert a == b


def test_violations_are_reported():
    # a deliberately broken gcd must show up as violations
    M = Monoid(SAMPLES["N2"], greedy=True)
    M._left_gcd = lambda a, b: ()
    plan = SamplingPlan(exhaustive_length=1, random_samples=0, random_pairs=0, random_triples=0)
    report = check_properties(M, plan)
    assert not report.ok
    assert any(v["property"] == "gcd-idempotent" for v in report.violations)
