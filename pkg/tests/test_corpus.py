# tests/test_corpus.py
import pytest

from skeintail import corpus
from skeintail.config import DEFAULT_LIMITS
from skeintail.selftest import CHECKS, run_selftest


def test_every_diagram_has_a_manifest_entry():
    assert set(corpus.names()) == set(corpus.manifest()["diagrams"])


def test_unknown_name():
    with pytest.raises(KeyError):
        corpus.read_text("no-such-diagram")


def test_select_and_by_link():
    assert corpus.select(A_adequate=False, B_adequate=False) == ["trefoil-r2", "unlink-clasp"]
    assert "unknot-kink-neg2" in corpus.by_link("unknot")
    assert corpus.related_pairs("R2") == [("trefoil-std", "trefoil-r2")]
    assert corpus.select(A_adequate=True, B_adequate=True, components=1) == ["figure8-std", "trefoil-std", "unknot-0"]


@pytest.mark.slow
def test_quick_selftest_passes():
    report = run_selftest(quick=True)
    assert len(report.checks) == len(CHECKS)
    assert report.passed, [c.as_dict() for c in report.checks if not c.passed]
    assert "state-decomposition" in [c.name for c in report.checks]
    assert report.as_dict()["limits"] == DEFAULT_LIMITS.as_dict()
