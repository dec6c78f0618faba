import pytest

from semiinf import verify
from semiinf.rootsystem import UsageError

# small windows so that every sweep runs in a few seconds
SMALL = {
    "samples": 40,
    "max_length": 4,
}
HEAVY = {"decomp": {"samples": 3, "max_length": 3}, "int": {"samples": 1},
         "cadm": {"samples": 10}, "semiinf": {"samples": 10}, "ineq": {"max_length": 4},
         "thm-sch": {"max_length": 4}, "sch-b": {"max_length": 8}, "finite": {"samples": 20, "max_length": 6}}


def small_window(name):
    defaults = verify.REGISTRY[name]["defaults"]
    win = {k: v for k, v in SMALL.items() if k in defaults}
    win.update(HEAVY.get(name, {}))
    return win


@pytest.mark.parametrize("name", sorted(verify.REGISTRY))
@pytest.mark.parametrize("t", ["A1", "A2"])
def test_every_sweep_passes_on_small_windows(name, t):
    rep = verify.run(t, name, small_window(name), seed=1)
    assert rep["failures"] == [], rep["failures"][:3]
    assert rep["cases"] >= rep["applicable"]


def test_report_shape_and_determinism():
    a = verify.run("A2", "order", {"samples": 30}, seed=4, jobs=1)
    b = verify.run("A2", "order", {"samples": 30}, seed=4, jobs=3)
    assert verify.canonical(a) == verify.canonical(b)
    assert a["schema"] == verify.SCHEMA_VERSION and a["lemma"] == "order" and a["type"] == "A2"
    c = verify.run("A2", "order", {"samples": 30}, seed=5)
    assert c["seed"] == 5


def test_window_validation():
    with pytest.raises(UsageError):
        verify.window_for("nope")
    with pytest.raises(UsageError):
        verify.window_for("order", {"depth": 3})
    with pytest.raises(UsageError):
        verify.window_for("order", {"samples": 0})
    assert verify.window_for("order", {"samples": 7})["samples"] == 7


def test_failures_are_reported():
    """A check that always fails surfaces every case as a failure, in canonical order."""
    def cases(rs, win, rng):
        return [[3], [1], [2]]

    def check(rs, case, win):
        return {"case": case[0]}

    verify.sweep("always-fails", {}, "test double")((cases, check))
    try:
        rep = verify.run("A1", "always-fails")
        assert [f["case"] for f in rep["failures"]] == [1, 2, 3]
    finally:
        del verify.REGISTRY["always-fails"]
