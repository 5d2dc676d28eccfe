import pytest

from grundyb.errors import UnknownSuite
from grundyb.verify import SUITES, run_verification, suite_defaults

SMALL = {
    "prop1": {"mmax": 3, "nmax": 2},
    "prop2": {"mmax": 3},
    "prop4": {"kmax": 8},
    "prop5": {"kmax": 5},
    "cor1": {"trials": 20},
    "lemma1": {"trials": 10},
    "thm-cactus": {"trials": 10},
    "thm-k4e": {},
    "thm-girth6": {"trials": 10},
    "gt-sharp": {"tmax": 3},
    "chain-sharp": {},
    "gamma-2m": {"trials": 30},
    "fig2": {},
}


def test_every_suite_is_listed():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite):
    report = run_verification(suite, SMALL[suite])
    assert report.passed, report.to_text()
    assert report.cases and not report.failures()


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes_at_defaults(suite):
    report = run_verification(suite)
    assert report.passed, report.to_text()


def test_report_text_is_reproducible():
    a = run_verification("cor1", {"trials": 15, "seed": 4})
    b = run_verification("cor1", {"trials": 15, "seed": 4})
    assert a.to_text() == b.to_text()
    assert a.to_text().splitlines()[0] == "suite cor1 nmax=14 seed=4 trials=15"
    assert run_verification("cor1", {"trials": 15, "seed": 5}).to_text() != a.to_text()


def test_unknown_suite_and_parameter():
    with pytest.raises(UnknownSuite):
        run_verification("nope")
    with pytest.raises(UnknownSuite):
        run_verification("fig2", {"x": 1})
    with pytest.raises(UnknownSuite):
        suite_defaults("nope")
    assert suite_defaults("prop4") == {"kmax": 14}
