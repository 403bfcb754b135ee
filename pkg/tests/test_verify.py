from zhat import verify
from zhat.config import Config


def test_every_suite_passes_on_the_default_config():
    results = verify.run_all(Config())
    assert [r.suite for r in results] == list(verify.SUITES)
    assert all(r.passed for r in results), [r.to_json() for r in results if not r.passed]


def test_exceptions_inside_a_suite_become_failures(monkeypatch):
    def broken(res, cfg, rng, **_):
        raise ArithmeticError("boom")

    monkeypatch.setitem(verify.SUITES, "broken", ("always fails", broken))
    result = verify.run_suite("broken", Config())
    assert not result.passed and result.to_json()["error"] == "ArithmeticError: boom"


def test_suites_are_seeded_independently():
    a = verify.run_suite("division-witness", Config(seed=1), samples=20).to_json()
    b = verify.run_suite("division-witness", Config(seed=1), samples=20).to_json()
    assert a == b
