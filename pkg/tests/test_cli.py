import json
from fractions import Fraction

from qhgrass import cli


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_json_and_table_agree(capsys):
    commands = [
        ["betti", "--type", "E6", "--node", "2"],
        ["screen", "--type", "F4", "--node", "4"],
        ["screen", "--section", "--k", "3", "--n", "6"],
        ["exceptional-table"],
        ["core-search", "--k", "3", "--n", "9"],
        ["snow", "--k", "3", "--n", "9", "--p", "12", "--twist", "3"],
        ["hodge", "--k", "3", "--n", "6", "--section"],
        ["qh", "charpoly", "--k", "3", "--n", "7", "--power", "7"],
        ["qh", "presentation", "--k", "2", "--n", "5"],
        ["qh", "lefschetz", "--n", "7"],
        ["qh", "semisimple", "--k", "2", "--n", "4"],
    ]
    for argv in commands:
        code, table_out, _ = run_cli(capsys, *argv, "--format", "table")
        assert code == 0, argv
        code, json_out, _ = run_cli(capsys, *argv, "--format", "json")
        assert code == 0, argv
        doc = json.loads(json_out)
        assert doc["schema_version"] == "1"
        assert cli.render_table(doc) == table_out, argv


def test_screen_json_payload(capsys):
    code, out, _ = run_cli(
        capsys, "screen", "--type", "E7", "--node", "6", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["outcome"] == "Witness"
    w = doc["results"]["witness"]
    assert w["lhs"] > w["rhs"]
    assert w["lhs"] == 58  # tilde_b(1) of E7/P6


def test_exceptional_table_json(capsys):
    code, out, _ = run_cli(capsys, "exceptional-table", "--format", "json")
    doc = json.loads(out)
    rows = doc["results"]["rows"]
    assert len(rows) == 13
    first, last = rows[0], rows[-1]
    assert (first["label"], first["dim"], first["index"]) == ("E6/P2", 21, 11)
    assert (first["tilde_b"], first["tilde_b_neg"]) == (6, 7)
    assert (last["label"], last["tilde_b"], last["tilde_b_neg"]) == ("F4/P4", 3, 2)


def test_hodge_section_output(capsys):
    code, out, _ = run_cli(
        capsys, "hodge", "--k", "3", "--n", "9", "--section", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["chi_y"] == [
        1, -1, 2, -3, 4, -5, 7, -7, 6, -6, 7, -7, 5, -4, 3, -2, 1, -1,
    ]
    assert doc["results"]["hodge_tate"] is False
    assert {"p": 8, "q": 9, "h": 2} in doc["results"]["middle_off_diagonal"]


def test_qh_charpoly_section(capsys):
    code, out, _ = run_cli(
        capsys, "qh", "charpoly", "--k", "3", "--n", "7", "--section",
        "--power", "6", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["charpoly"] == [128, -7309, -36250, 3828, -302, 1]


def test_qh_semisimple_section(capsys):
    code, out, _ = run_cli(
        capsys, "qh", "semisimple", "--k", "3", "--n", "6", "--section",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["results"]["semisimple"] is False
    assert doc["results"]["method"] == "betti-screen"


def test_invalid_inputs_exit_2(capsys):
    code, _, err = run_cli(capsys, "core-search", "--k", "2", "--n", "6")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "screen", "--section", "--k", "3", "--n", "9")
    assert code == 2
    code, _, err = run_cli(capsys, "screen")  # missing both selectors
    assert code == 2
    code, _, err = run_cli(capsys, "betti", "--type", "Q9", "--node", "1")
    assert code == 2


def test_unknown_command_exits_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "qh", "nonsense")[0] == 2


def test_internal_failure_exits_1(capsys, monkeypatch):
    from qhgrass.errors import InternalConsistencyError

    def broken(args):
        raise InternalConsistencyError("synthetic")

    # the parser binds handlers by module-global name at build time, and run()
    # rebuilds the parser, so patching the module attribute is enough
    monkeypatch.setattr(cli, "_cmd_exceptional_table", broken)
    code = cli.run(["exceptional-table"])
    _, err = capsys.readouterr()
    assert code == 1
    assert "internal consistency failure" in err


def test_determinism_same_seed(capsys):
    a = run_cli(capsys, "hodge", "--k", "2", "--n", "5", "--section", "--seed", "5")
    b = run_cli(capsys, "hodge", "--k", "2", "--n", "5", "--section", "--seed", "5")
    assert a == b


def test_rational_serialization():
    assert cli._rat(Fraction(3, 2)) == "3/2"
    assert cli._rat(Fraction(4, 2)) == 2
    assert cli._rat(7) == 7


def test_help_exits_zero(capsys):
    assert cli.run(["--help"]) == 0
    capsys.readouterr()
