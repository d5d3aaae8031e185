import io
import math

import pytest

from fiedlerkit import checks
from fiedlerkit import families as fam
from fiedlerkit.checks import CheckReport, SweepRow
from fiedlerkit.graph import vertex_connectivity
from fiedlerkit.spectra import fiedler_value


class TestCheckReport:
    def test_pass_with_slack(self):
        assert CheckReport("x", "g", 1.0 + 5e-9, 1.0).passed
        assert not CheckReport("x", "g", 1.0 + 2e-8, 1.0).passed

    def test_format(self):
        line = CheckReport("planar<=4", "complete:4", 4.0, 4.0).format()
        assert line.startswith("PASS") and "complete:4" in line


class TestPredicates:
    def test_fiedler_bound_doublewheel10(self):
        G = fam.doublewheel(10)
        lam = fiedler_value(G)
        assert lam == pytest.approx(4 - 2 * math.cos(math.pi / 5), abs=1e-10)
        assert round(lam, 4) == 2.3820
        assert lam <= 2 * G.m / (G.n - 1) == pytest.approx(60 / 11)

    def test_fan6_connectivity(self):
        G = fam.fan(6)
        assert vertex_connectivity(G) == 2
        assert fiedler_value(G) <= 2

    def test_degree_cut_bound_value(self):
        # N = 8, k = 3
        assert checks.degree_cut_bound(8, 3) == pytest.approx(8 + 64 + 16 - 8)

    def test_corpus_has_no_duplicates(self):
        names = [name for name, _ in checks.planar_corpus()]
        assert len(names) == len(set(names))


@pytest.fixture(scope="module")
def all_rows():
    return checks.run_checks()


class TestRunChecks:
    def test_no_failures(self, all_rows):
        assert [r.format() for r in all_rows if not r.passed] == []

    def test_every_check_present(self, all_rows):
        assert {r.check for r in all_rows} >= {"fiedler-2m/n-1", "planar<=4", "8Delta/n", "connectivity", "degree-cut", "bipartite<=2", "K2n=2"}

    def test_planar_equality(self, all_rows):
        assert checks.planar_equality_rows(all_rows) == ["complete:4", "doublewheel:4"]

    def test_selector(self):
        rows = checks.run_checks("degree-cut")
        assert rows and {r.check for r in rows} == {"degree-cut"}

    def test_unknown_selector(self):
        with pytest.raises(ValueError, match="unknown"):
            checks.run_checks("nope")


class TestSweep:
    def test_doublewheel(self):
        rows = checks.sweep("doublewheel", range(4, 61))
        assert [r.n for r in rows] == list(range(4, 61, 2))
        assert max(r.abs_gap for r in rows) <= 1e-8

    def test_quadrangulation_n4_flagged(self):
        rows = checks.sweep("quadrangulation", range(4, 61, 2))
        assert rows[0].n == 4 and rows[0].closed_form is None and rows[0].abs_gap is None
        assert max(r.abs_gap for r in rows[1:]) <= 1e-8

    def test_fan_scaled_gap(self):
        rows = checks.sweep("fan", range(2, 61))
        assert rows[-1].n == 60
        assert rows[-1].scaled_gap == pytest.approx(math.pi**2, rel=0.01)

    def test_kh(self):
        rows = checks.sweep("kh:5", range(1, 20))
        assert rows[0].n == 6 and all(r.abs_gap <= 1e-8 for r in rows)

    def test_unsupported(self):
        with pytest.raises(fam.FamilyError):
            checks.sweep("grid:3", range(3, 5))

    def test_parallel_matches_serial(self):
        a = checks.sweep("fan", range(2, 30), jobs=1)
        b = checks.sweep("fan", range(2, 30), jobs=3)
        assert a == b

    def test_csv_roundtrip(self):
        rows = checks.sweep("quadrangulation", range(4, 20, 2))
        text = checks.sweep_csv_text(rows)
        assert text.splitlines()[0] == "family,n,lambda2,closed_form,abs_gap,scaled_gap"
        assert checks.read_sweep_csv(io.StringIO(text)) == rows

    def test_csv_deterministic(self):
        assert checks.sweep_csv_text(checks.sweep("doublewheel", range(4, 30))) == checks.sweep_csv_text(
            checks.sweep("doublewheel", range(4, 30))
        )

    def test_bad_header(self):
        with pytest.raises(ValueError):
            checks.read_sweep_csv(io.StringIO("a,b\n"))

    def test_row_invariant(self):
        r = checks.sweep_row("doublewheel", 12)
        assert isinstance(r, SweepRow)
        assert r.abs_gap == abs(r.lambda2 - r.closed_form)
        assert r.scaled_gap == (r.lambda2 - 2) * 144
