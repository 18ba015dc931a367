"""Randomized suites: seeding, retraction of images and reporting."""
from puretop.suites import (
    DEFAULT_SEED, SuiteResult, descent_suite, retraction_suite, suite_seed,
)


def test_seed_from_environment(monkeypatch):
    monkeypatch.delenv("PURETOP_SEED", raising=False)
    assert suite_seed() == DEFAULT_SEED
    monkeypatch.setenv("PURETOP_SEED", "7")
    assert suite_seed() == 7
    assert suite_seed(3) == 3


def test_retraction_suite():
    res = retraction_suite(20)
    assert res.ok and res.instances == 20


def test_suites_are_reproducible():
    a = descent_suite(10, 5, seed=11)
    b = descent_suite(10, 5, seed=11)
    assert a.ok and b.ok
    assert a.counts == b.counts


def test_result_line():
    r = SuiteResult("demo", 3, ["boom"], 0.5, {"k": 1})
    assert not r.ok
    assert r.line() == "demo: 3 instances, 1 failures, k=1, 0.50s"
