import json

import pytest
from typer.testing import CliRunner

from permtab.cli import app

runner = CliRunner()

WORKED_TEXT = "11 5\n6,6,5,3,1\n011001\n000111\n00001\n011\n1\n"


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "worked.txt"
    path.write_text(WORKED_TEXT)
    return path


class TestStatCommand:
    def test_selected_statistics(self):
        result = runner.invoke(app, ["stat", "593721684", "--name", "wnm,rlm"])

        assert result.exit_code == 0
        assert result.stdout == "wnm=2\nrlm=3\n"

    def test_all(self):
        result = runner.invoke(app, ["stat", "1", "--all"])

        assert result.exit_code == 0
        assert "wnm=1" in result.stdout
        assert "rlm=0" in result.stdout
        assert "WNM={1}" in result.stdout

    def test_blocks(self):
        result = runner.invoke(app, ["stat", "312", "--name", "des", "--blocks"])

        assert result.exit_code == 0
        assert "3 1 | 2" in result.stdout

    def test_invalid_permutation(self):
        result = runner.invoke(app, ["stat", "1 1 2"])
        assert result.exit_code == 2

    def test_unknown_statistic(self):
        result = runner.invoke(app, ["stat", "12", "--name", "nope"])
        assert result.exit_code == 2


class TestMapCommand:
    def test_chi321(self):
        result = runner.invoke(app, ["map", "chi321", "231"])

        assert result.exit_code == 0
        assert result.stdout.strip() == "3 1 2"

    def test_chi321_refuses_worked_input(self):
        result = runner.invoke(app, ["map", "chi321", "123468759"])

        assert result.exit_code == 2
        assert "321-avoiding" in result.output

    def test_domain_violation(self):
        result = runner.invoke(app, ["map", "chi321", "321"])

        assert result.exit_code == 2
        assert "321-avoiding" in result.output

    def test_rho_needs_n_last(self):
        result = runner.invoke(app, ["map", "rho", "21"])
        assert result.exit_code == 2

    def test_code_with_trace(self):
        result = runner.invoke(app, ["map", "b", "24135", "--trace"])
        lines = result.stdout.splitlines()

        assert result.exit_code == 0
        assert lines[0] == "U0: [0,5]^0"
        assert lines[1] == "U1: [3,5]^0 [0,1]^1"
        assert lines[-1] == "00210"

    def test_inverse_code(self):
        result = runner.invoke(app, ["map", "b-inv", "00102"])
        assert result.stdout.strip() == "1 4 3 5 2"

    def test_gamma(self):
        result = runner.invoke(app, ["map", "gamma", "00210"])
        assert result.stdout.strip() == "00102"

    def test_alpha_trace(self):
        result = runner.invoke(app, ["map", "alpha", "35241", "--trace"])
        lines = result.stdout.splitlines()

        assert lines[2] == "b: 00210"
        assert lines[-1] == "5 1 3 4 2"

    def test_phi_swap_on_one_letter(self):
        result = runner.invoke(app, ["map", "phi_swap", "1"])

        assert result.exit_code == 0
        assert result.stdout.strip() == "1"

    def test_tableau_input(self, worked_file):
        result = runner.invoke(app, ["map", "Phi", str(worked_file)])
        assert result.stdout.strip() == "8 6 1 5 3 4 9 2 7 11 10"

    def test_unknown_map(self):
        result = runner.invoke(app, ["map", "zeta", "12"])
        assert result.exit_code == 2


class TestTableauCommands:
    def test_enum_count(self):
        result = runner.invoke(app, ["tableau", "enum", "3", "--count"])
        assert result.stdout.strip() == "6"

    def test_enum_listing(self):
        result = runner.invoke(app, ["tableau", "enum", "2"])

        assert result.exit_code == 0
        assert result.stdout.count("--\n") == 2
        assert result.stdout.startswith("2 1\n1\n1\n--\n")

    def test_enum_bounds(self):
        result = runner.invoke(app, ["tableau", "enum", "20"])
        assert result.exit_code == 2

    def test_alt(self, worked_file):
        result = runner.invoke(app, ["tableau", "alt", str(worked_file)])
        assert result.stdout == "11 5\n6,6,5,3,1\n.UU..U\n..LUU.\n...L.\n...\nU\n"

    def test_to_perm_gamma(self, worked_file):
        result = runner.invoke(app, ["tableau", "to-perm", str(worked_file), "--via", "gamma"])
        assert result.stdout.strip() == "9 4 6 5 2 8 3 1 7 11 10"

    def test_to_perm_stats(self, worked_file):
        result = runner.invoke(app, ["tableau", "to-perm", str(worked_file), "--via", "stats"])

        assert "urr=3" in result.stdout
        assert "topone=3" in result.stdout
        assert "row labels=1,2,4,7,10" in result.stdout

    def test_invalid_tableau(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3 1\n2\n10\n")

        result = runner.invoke(app, ["tableau", "alt", str(path)])

        assert result.exit_code == 2
        assert "empty column" in result.output


class TestDistCommand:
    def test_csv(self):
        result = runner.invoke(app, ["dist", "3", "--domain", "S", "--stats", "wnm,rlm", "--out", "csv"])

        assert result.exit_code == 0
        assert result.stdout == "wnm,rlm,count\n1,1,1\n1,2,1\n2,0,1\n2,1,2\n3,0,1\n"

    def test_json_to_file(self, tmp_path):
        target = tmp_path / "out" / "dist.json"

        result = runner.invoke(
            app, ["dist", "4", "--domain", "PT", "--stats", "urr-1,topone", "--file", str(target)]
        )

        assert result.exit_code == 0
        document = json.loads(target.read_text())
        assert document["total"] == 24
        assert document["domain"] == "PT"

    def test_unknown_statistic(self):
        result = runner.invoke(app, ["dist", "3", "--stats", "nope"])
        assert result.exit_code == 2

    def test_unknown_domain(self):
        result = runner.invoke(app, ["dist", "3", "--domain", "Q", "--stats", "des"])
        assert result.exit_code == 2


class TestVerifyCommand:
    def test_golden_passes(self):
        result = runner.invoke(app, ["verify", "golden", "--max-n", "3"])

        assert result.exit_code == 0
        assert "PASS" in result.stdout

    def test_json_report(self):
        result = runner.invoke(app, ["verify", "thm13", "--max-n", "4", "--json"])
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["status"] == "PASS"
        assert report["suite"] == "thm13"
        assert {check["n"] for check in report["checks"]} == {1, 2, 3, 4}

    def test_unknown_suite(self):
        result = runner.invoke(app, ["verify", "nope"])
        assert result.exit_code == 2

    def test_bad_max_n(self):
        result = runner.invoke(app, ["verify", "gf", "--max-n", "0"])
        assert result.exit_code == 2

    def test_archive(self, tmp_path):
        db_path = tmp_path / "reports.db"

        result = runner.invoke(app, ["verify", "gf", "--max-n", "3", "--db", str(db_path)])

        assert result.exit_code == 0
        assert db_path.exists()

    def test_all_reports_every_suite(self):
        result = runner.invoke(app, ["verify", "all", "--max-n", "3", "--json"])
        report = json.loads(result.stdout)

        assert result.exit_code == 0
        assert report["checks"][0]["name"].startswith("golden: ")
        assert any(check["name"].startswith("conjecture: ") for check in report["checks"])


class TestStatsCommand:
    def test_lists_tableau_statistics(self):
        result = runner.invoke(app, ["stats", "--domain", "PT"])
        assert result.stdout.split() == ["urr", "topone"]
