"""End-to-end tests for the liegrowth command line."""

import json

from lie_growth.cli.main import app

from .conftest import DATA_DIR, TABLE1_D


def _json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# ── Counting commands ────────────────────────────────────────────────


class TestWitt:
    def test_csv(self, runner, tmp_config):
        result = runner.invoke(app, ["witt", "--rank", "2", "-n", "6", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.strip().splitlines()[-1] == "6,9,23"

    def test_graded_alphabet(self, runner, tmp_config):
        result = runner.invoke(app, ["witt", "-a", "b:1,a:2", "-n", "5", "-f", "json"])
        assert result.exit_code == 0
        assert [row["d"] for row in _json_lines(result.stdout)] == [1, 1, 1, 1, 2]

    def test_count_words_agrees(self, runner, tmp_config):
        args = ["witt", "-a", "y:1,x:1", "-n", "8", "-f", "csv"]
        formula = runner.invoke(app, args)
        counted = runner.invoke(app, [*args, "--count-words"])
        assert counted.exit_code == 0
        assert counted.stdout == formula.stdout

    def test_bad_alphabet(self, runner, tmp_config):
        result = runner.invoke(app, ["witt", "--alphabet", "x:0"])
        assert result.exit_code == 2


class TestLyndon:
    def test_degree_three(self, runner, tmp_config):
        result = runner.invoke(app, ["lyndon", "-n", "3", "-f", "json"])
        assert result.exit_code == 0
        rows = _json_lines(result.stdout)
        assert [row["word"] for row in rows] == ["x", "y", "xy", "xxy", "xyy"]
        assert rows[3]["commutator"] == "[x,[x,y]]"


class TestAvoid:
    def test_counts(self, runner, tmp_config):
        result = runner.invoke(app, ["avoid", "--word", "xx", "-n", "5", "-f", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "n,d,g"
        assert [int(line.split(",")[1]) for line in lines[1:]] == [1, 2, 3, 5, 8, 13]

    def test_rate(self, runner, tmp_config):
        result = runner.invoke(app, ["avoid", "--word", "xx", "--rate", "-f", "json"])
        assert result.exit_code == 0
        assert abs(json.loads(result.stdout)["rate"] - 1.6180339887) < 1e-6

    def test_word_required(self, runner, tmp_config):
        result = runner.invoke(app, ["avoid"])
        assert result.exit_code == 2


# ── Exponential bases ────────────────────────────────────────────────


class TestBase:
    def test_golden_ratio(self, runner, tmp_config):
        result = runner.invoke(app, ["base", "--degrees", "1,1", "-f", "json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert abs(report["z0"] - 1.6180339887) < 1e-9
        assert report["sign_changes"] == 1
        # a finite histogram with k_2 > 0 ends in a gap
        assert report["condition_g"] is False
        assert report["poly"] == [1, -1, -1]

    def test_exact(self, runner, tmp_config):
        result = runner.invoke(app, ["base", "-d", "2", "-f", "json"])
        report = json.loads(result.stdout)
        assert report["exact"] is True
        assert report["hi"] == 2

    def test_greedy(self, runner, tmp_config):
        result = runner.invoke(app, ["base", "--greedy", "1.5", "--length", "3", "-f", "json"])
        assert result.exit_code == 0
        assert [row["k"] for row in _json_lines(result.stdout)] == [1, 0, 1]

    def test_needs_one_source(self, runner, tmp_config):
        assert runner.invoke(app, ["base"]).exit_code == 2
        assert runner.invoke(app, ["base", "-d", "1,1", "--greedy", "1.5"]).exit_code == 2

    def test_bad_histogram(self, runner, tmp_config):
        assert runner.invoke(app, ["base", "-d", "1,a"]).exit_code == 2

    def test_greedy_out_of_range(self, runner, tmp_config):
        assert runner.invoke(app, ["base", "--greedy", "3"]).exit_code == 2


# ── Subalgebras and subideals ────────────────────────────────────────


class TestGrowth:
    def test_inline_generators(self, runner, tmp_config):
        result = runner.invoke(
            app, ["growth", "--generators-inline", "x; [x,y]", "-n", "5", "-f", "csv"]
        )
        assert result.exit_code == 0
        assert result.stdout.strip().splitlines()[-1] == "5,2,6"

    def test_generator_file(self, runner, tmp_config, tmp_path):
        path = tmp_path / "gens.txt"
        path.write_text("# one commutator\n[x,y]\n")
        result = runner.invoke(app, ["growth", "-g", str(path), "-n", "3", "-f", "json"])
        assert result.exit_code == 0
        assert [row["d"] for row in _json_lines(result.stdout)] == [0, 1, 0]

    def test_prime_stamp(self, runner, tmp_config):
        result = runner.invoke(
            app,
            ["growth", "--generators-inline", "x", "-n", "2", "--field-mode", "prime", "-f", "csv"],
        )
        assert result.exit_code == 0
        assert result.stdout.startswith(f"# field=prime p={tmp_config.prime}\n")

    def test_parse_error(self, runner, tmp_config):
        result = runner.invoke(app, ["growth", "--generators-inline", "[x,"])
        assert result.exit_code == 1

    def test_both_generator_sources(self, runner, tmp_config, tmp_path):
        path = tmp_path / "gens.txt"
        path.write_text("x\n")
        result = runner.invoke(app, ["growth", "-g", str(path), "--generators-inline", "x"])
        assert result.exit_code == 2

    def test_no_generators(self, runner, tmp_config):
        assert runner.invoke(app, ["growth"]).exit_code == 2

    def test_degree_cap(self, runner, tmp_config):
        result = runner.invoke(app, ["growth", "--generators-inline", "x", "-n", "13"])
        assert result.exit_code == 1


class TestCogrowth:
    def test_formula_matches_reference_table(self, runner, tmp_config):
        result = runner.invoke(
            app,
            [
                "cogrowth",
                "--generators-inline",
                "x",
                "--level",
                "2",
                "--engine",
                "formula",
                "-n",
                "20",
                "-f",
                "csv",
            ],
        )
        assert result.exit_code == 0
        assert result.stdout == (DATA_DIR / "table1.csv").read_text()

    def test_linear_engine(self, runner, tmp_config):
        result = runner.invoke(
            app, ["cogrowth", "--generators-inline", "x", "-l", "2", "-n", "7", "-f", "json"]
        )
        assert result.exit_code == 0
        assert [row["d"] for row in _json_lines(result.stdout)] == TABLE1_D[:7]

    def test_formula_guard(self, runner, tmp_config):
        result = runner.invoke(
            app, ["cogrowth", "--generators-inline", "y", "-l", "2", "-e", "formula"]
        )
        assert result.exit_code == 1


class TestComplement:
    def test_rows(self, runner, tmp_config):
        result = runner.invoke(
            app, ["complement", "--generators-inline", "[x,y]", "-n", "3", "-f", "json"]
        )
        assert result.exit_code == 0
        rows = [line for line in result.stdout.splitlines() if line.startswith("{")]
        records = [json.loads(line) for line in rows]
        assert [r["codim"] for r in records] == [2, 0, 0]
        assert records[2]["added"] == ["[x,[x,y]]", "[[x,y],y]"]

    def test_reducible(self, runner, tmp_config):
        result = runner.invoke(app, ["complement", "--generators-inline", "x; y; [x,y]"])
        assert result.exit_code == 1


# ── Derivations ──────────────────────────────────────────────────────


class TestDerive:
    def test_escape(self, runner, tmp_config):
        result = runner.invoke(app, ["derive", "-x", "[x1,x2]", "-k", "2", "-f", "json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["found"] is True
        assert report["exponent"] == 4
        assert report["element"] == "-[x2,x1]"

    def test_bound(self, runner, tmp_config):
        result = runner.invoke(app, ["derive", "-x", "[x1,x2]", "--bound", "-f", "json"])
        assert json.loads(result.stdout)["bound"] == 8

    def test_families(self, runner, tmp_config):
        result = runner.invoke(
            app, ["derive", "-x", "[x1_1,x2_1]", "--families", "2", "-f", "json"]
        )
        assert json.loads(result.stdout)["exponent"] == 2

    def test_not_found(self, runner, tmp_config):
        result = runner.invoke(app, ["derive", "-x", "[x1,x2]", "-k", "2", "-s", "3", "-f", "json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout.splitlines()[-1])
        assert report["found"] is False
        assert report["exponent"] is None


# ── Global options ───────────────────────────────────────────────────


class TestGlobalOptions:
    def test_version(self, runner, tmp_config):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "lie-growth v" in result.stdout

    def test_config_file_sets_defaults(self, runner, tmp_config, tmp_path):
        path = tmp_path / "liegrowth.conf"
        path.write_text("max-degree=3\nformat=csv\n")
        result = runner.invoke(app, ["--config", str(path), "witt"])
        assert result.exit_code == 0
        assert result.stdout.strip().splitlines() == ["n,d,g", "1,2,2", "2,1,3", "3,2,5"]

    def test_flags_override_config_file(self, runner, tmp_config, tmp_path):
        path = tmp_path / "liegrowth.conf"
        path.write_text("max-degree=3\nformat=csv\n")
        result = runner.invoke(app, ["--config", str(path), "witt", "-n", "2"])
        assert result.stdout.strip().splitlines()[-1] == "2,1,3"

    def test_default_config_location(self, runner, tmp_config):
        tmp_config.config_path.write_text("format=csv\nmax-degree=1\n")
        result = runner.invoke(app, ["witt"])
        assert result.stdout.strip().splitlines() == ["n,d,g", "1,2,2"]

    def test_bad_config_file(self, runner, tmp_config, tmp_path):
        path = tmp_path / "liegrowth.conf"
        path.write_text("no equals sign\n")
        result = runner.invoke(app, ["--config", str(path), "witt"])
        assert result.exit_code == 2
