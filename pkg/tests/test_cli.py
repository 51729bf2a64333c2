import json

import pytest
from click.testing import CliRunner

from tangency.cli import main


@pytest.fixture
def runner():
    return CliRunner()


class TestGen:
    def test_grid_rational(self, runner, tmp_path):
        out = tmp_path / "g.tsv"
        result = runner.invoke(main, ["gen", "grid", "--m", "3", "--field", "rational", "-o", str(out)])
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "# field=rational"
        assert len(lines) == 1 + 81

    def test_random_stdout(self, runner):
        result = runner.invoke(main, ["gen", "random", "--field", "p:7", "--n", "10", "--seed", "1"])
        assert result.exit_code == 0
        assert result.stdout.startswith("# field=p:7\n")

    def test_pencil_bad_direction(self, runner):
        result = runner.invoke(
            main, ["gen", "pencil", "--field", "rational", "--dir", "1,0,0,2"]
        )
        assert result.exit_code == 1

    def test_plane_points(self, runner):
        result = runner.invoke(main, ["gen", "plane_points", "--field", "p:7"])
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 1 + 49


class TestPencils:
    def test_grid_report(self, runner, tmp_path):
        out = tmp_path / "g.tsv"
        runner.invoke(main, ["gen", "grid", "--m", "3", "--field", "rational", "-o", str(out)])
        result = runner.invoke(main, ["pencils", str(out)])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert list(payload) == ["n", "field", "contact_pairs", "histogram", "warnings", "runtime_ms"]
        assert payload["n"] == 81
        assert payload["runtime_ms"] == 0
        assert sum(
            int(k) * (int(k) - 1) // 2 * v for k, v in payload["histogram"].items()
        ) == payload["contact_pairs"]

    def test_tsv_output(self, runner, tmp_path):
        out = tmp_path / "g.tsv"
        runner.invoke(main, ["gen", "grid", "--m", "2", "--field", "p:7", "-o", str(out)])
        result = runner.invoke(main, ["pencils", str(out), "--tsv"])
        assert result.exit_code == 0
        assert "contact_pairs\t24" in result.stdout

    def test_plot(self, runner, tmp_path):
        out = tmp_path / "g.tsv"
        fig = tmp_path / "hist.png"
        runner.invoke(main, ["gen", "grid", "--m", "2", "--field", "p:7", "-o", str(out)])
        result = runner.invoke(main, ["pencils", str(out), "--plot", str(fig)])
        assert result.exit_code == 0
        assert fig.exists() and fig.stat().st_size > 0

    def test_malformed_input(self, runner, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("1\t2\t3\t4\n")
        result = runner.invoke(main, ["pencils", str(bad)])
        assert result.exit_code == 1


class TestOtherSubcommands:
    def test_distances(self, runner, tmp_path):
        pts = tmp_path / "p.tsv"
        pts.write_text("# field=rational\n0\t0\t0\n1\t0\t0\n2\t0\t0\n")
        result = runner.invoke(main, ["distances", str(pts), "--r", "1"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["pairs"] == 2

    def test_distances_zero_r(self, runner, tmp_path):
        pts = tmp_path / "p.tsv"
        pts.write_text("# field=rational\n0\t0\t0\n")
        result = runner.invoke(main, ["distances", str(pts), "--r", "0"])
        assert result.exit_code == 1

    def test_incidences(self, runner, tmp_path):
        pts = tmp_path / "p.tsv"
        pts.write_text("# field=rational\n0\t0\t1\n0\t0\t2\n")
        sph = tmp_path / "s.tsv"
        sph.write_text("# field=rational\n0\t0\t0\t1\n")
        result = runner.invoke(main, ["incidences", "--points", str(pts), "--spheres", str(sph)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["incidences"] == 1

    def test_bichromatic(self, runner, tmp_path):
        red = tmp_path / "r.tsv"
        red.write_text("# field=rational\n0\t0\t0\t1\n")
        blue = tmp_path / "b.tsv"
        blue.write_text("# field=rational\n0\t0\t2\t-1\n")
        result = runner.invoke(main, ["bichromatic", "--red", str(red), "--blue", str(blue)])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["points"] == 1

    def test_conics(self, runner, tmp_path):
        sph = tmp_path / "c.tsv"
        gen = runner.invoke(main, ["gen", "conic_pair", "--field", "p:11", "--seed", "0", "-o", str(sph)])
        assert gen.exit_code == 0
        result = runner.invoke(main, ["conics", str(sph), "--threshold", "3"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["pairs"]

    def test_eta(self, runner, tmp_path):
        pts = tmp_path / "p.tsv"
        pts.write_text("# field=rational\n1\t0\t0\n-1\t0\t0\n0\t1\t0\n0\t-1\t0\n0\t0\t1\n")
        result = runner.invoke(main, ["eta", str(pts), "--sphere", "0,0,0,1"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert (payload["incident"], payload["max_coplanar"]) == (5, 4)


class TestVerify:
    def test_passes(self, runner):
        result = runner.invoke(main, ["verify", "--field", "p:7", "--fast"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["all_passed"] is True

    def test_rejects_1_mod_4_prime(self, runner):
        result = runner.invoke(main, ["verify", "--field", "p:13", "--fast"])
        assert result.exit_code == 1

    def test_rejects_bad_spec(self, runner):
        result = runner.invoke(main, ["verify", "--field", "banana", "--fast"])
        assert result.exit_code == 1
