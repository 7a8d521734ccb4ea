# tests/test_cli.py
import json

import pytest
from click.testing import CliRunner

from skeintail import cli


def test_version_flag_exits_cleanly():
    """click's version option prints and leaves through SystemExit."""
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--version"])
    assert excinfo.value.code in (0, None)


def test_resolve_diagram_path(tmp_path):
    f = tmp_path / "k.pd"
    f.write_text("X 1 1 2 2\n", encoding="utf-8")
    assert cli._resolve_diagram_path(str(f)) == f
    assert cli._resolve_diagram_path(str(tmp_path / "missing.pd")) is None


def test_file_wins_over_the_corpus(tmp_path):
    f = tmp_path / "trefoil-std.pd"
    f.write_text("X 1 1 2 2\n", encoding="utf-8")
    assert cli._load_diagram(str(f)).crossing_count == 1
    assert cli._load_diagram("trefoil-std").crossing_count == 3
    assert cli._load_diagram("trefoil-std.pd").crossing_count == 3


def test_parse_levels():
    assert cli._parse_levels("2..4") == [2, 3, 4]
    assert cli._parse_levels("3") == [3]
    assert cli._parse_levels("2,5") == [2, 5]


def test_adequacy_output():
    result = CliRunner().invoke(cli.cli, ["adequacy", "trefoil-std"])
    assert result.exit_code == 0, result.output
    assert "A-adequate: yes, B-adequate: yes, c^ℓ = 0" in result.output
    assert "|s_A| = 3, |s_B| = 2" in result.output


def test_adequacy_json():
    result = CliRunner().invoke(cli.cli, ["adequacy", "unlink-clasp", "--json"])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["loop_crossings"] == [0, 1]
    assert body["A_adequate"] is False


def test_bracket_command():
    result = CliRunner().invoke(cli.cli, ["bracket", "unknot-0"])
    assert result.exit_code == 0, result.output
    assert "-q^-1 - q" in result.output


def test_jones_json():
    result = CliRunner().invoke(cli.cli, ["jones", "unknot-kink-neg", "--n", "2", "--json"])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["q_form"] == "q^-2 + 1 + q^2"
    assert body["writhe"] == -1
    assert body["d_n"] == "-2"


def test_jw_verify():
    result = CliRunner().invoke(cli.cli, ["jw", "--n", "3", "--verify"])
    assert result.exit_code == 0, result.output
    assert "jw(3): 5 basis terms" in result.output
    assert "verification: pass" in result.output


def test_jw_max_raises_the_ceiling():
    result = CliRunner().invoke(cli.cli, ["jw", "--n", "4", "--jw-max", "4", "--json"])
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)["terms"]) == 14


def test_states_command():
    result = CliRunner().invoke(cli.cli, ["states", "unknot-kink-neg", "--n", "2"])
    assert result.exit_code == 0, result.output
    assert "16 states over all cabled crossings" in result.output
    assert "sum matches bracket: yes" in result.output


def test_states_json_with_a_loop_crossing():
    result = CliRunner().invoke(cli.cli, ["states", "unlink-clasp", "--n", "2", "--loop", "0", "--json"])
    assert result.exit_code == 0, result.output
    body = json.loads(result.output)
    assert body["states"] == 16
    assert body["loop_crossing"] == 0
    assert body["consistent"] is True
    assert body["vanishing"] + body["surviving"] == 16


def test_adequacy_json_exports_graphs():
    body = json.loads(CliRunner().invoke(cli.cli, ["adequacy", "unknot-kink-neg", "--json"]).output)
    assert body["graphs"]["A"]["edges"] == [{"crossing": 0, "src": 0, "dst": 0}]


def test_tail_command():
    result = CliRunner().invoke(cli.cli, ["tail", "trefoil-std", "--n-max", "3", "--window", "2"])
    assert result.exit_code == 0, result.output
    assert "stabilization: pass" in result.output


def test_bounds_command():
    result = CliRunner().invoke(cli.cli, ["bounds", "unlink-clasp", "--n", "2..3", "--json"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["passed"] is True


@pytest.mark.parametrize(
    "args",
    [
        ["adequacy", "no-such-diagram"],
        ["bounds", "unlink-clasp", "--n", "1"],
        ["bounds", "unlink-clasp", "--n", "two"],
        ["jw", "--n", "0"],
        ["jw", "--n", "9"],
        ["jw", "--n", "4", "--jw-max", "3"],
        ["jones", "trefoil-std", "--n", "3", "--jw-max", "2"],
        ["states", "unlink-clasp", "--loop", "7"],
        ["jones", "trefoil-std", "--n", "2", "--width-cap", "2"],
    ],
)
def test_usage_and_evaluation_errors_exit_2(args):
    result = CliRunner().invoke(cli.cli, args)
    assert result.exit_code == 2, result.output


def test_malformed_file_exits_2(tmp_path):
    f = tmp_path / "bad.pd"
    f.write_text("X 1 2 3\n", encoding="utf-8")
    result = CliRunner().invoke(cli.cli, ["adequacy", str(f)])
    assert result.exit_code == 2
    assert "MalformedLine" in result.output


def test_bounds_on_adequate_diagram_reports_sharpness():
    result = CliRunner().invoke(cli.cli, ["bounds", "trefoil-std", "--n", "2"])
    assert result.exit_code == 0, result.output
    assert "sharp yes" in result.output


@pytest.mark.slow
def test_quick_selftest_is_deterministic():
    runner = CliRunner()
    first = runner.invoke(cli.cli, ["selftest", "--quick", "--json"])
    second = runner.invoke(cli.cli, ["selftest", "--quick", "--json"])
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    assert json.loads(first.output)["passed"] is True
    assert json.loads(first.output)["limits"]["jw_max"] == 8
