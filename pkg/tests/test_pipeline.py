import pytest

from zvkcert.pipeline import ASSUMPTIONS, SECTIONS, run_paper_certificate


@pytest.fixture(scope="module")
def report():
    return run_paper_certificate(20)


def test_default_run_passes(report):
    assert report.verdict == "PASS" and report.first_failure is None
    text = report.render()
    assert text.endswith("VERDICT PASS\n")
    assert "at least 21 pairwise distinct cosets" in text
    assert "infinitely many components" in text


def test_sections_and_assumptions(report):
    assert [name for name, _ in report.sections] == list(SECTIONS)
    text = report.render()
    assert sum(ln.startswith("ASSUMPTION ") for ln in text.splitlines()) == len(ASSUMPTIONS) == 3
    for line in text.splitlines():
        if line and not line.startswith(("==", "certificate", "VERDICT")):
            assert line.startswith(("CHECK-PASS ", "CHECK-FAIL ", "ASSUMPTION "))


def test_n_max_one():
    rep = run_paper_certificate(1)
    assert rep.verdict == "PASS"
    assert "at least 2 pairwise distinct cosets" in rep.render()


def test_n_max_must_be_positive():
    with pytest.raises(ValueError):
        run_paper_certificate(0)


def test_mirrored_convention_fails_at_monodromy():
    rep = run_paper_certificate(20, _mirror=True)
    assert rep.verdict == "FAIL"
    assert rep.first_failure[0] == "MONODROMY"
    assert rep.render().rstrip().splitlines()[-1].startswith("first failure in MONODROMY")


def test_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run_paper_certificate(20, a)
    run_paper_certificate(20, b)
    assert a.read_bytes() == b.read_bytes()
