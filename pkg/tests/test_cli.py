import json

import pytest

from quivertex.cli import main

FIG_JSON = json.dumps({
    "n": 4, "affine": False, "v": [1, 3, 2, 1], "w": [0, 1, 1, 0],
    "partitions": [{"vertex": 1, "parts": [2, 2]},
                   {"vertex": 2, "parts": [2, 1]}],
})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_zfun_routes_identical_json(capsys):
    outputs = []
    for route in ("product", "sum", "raw", "macdonald"):
        code, out = run(capsys, "zfun", "--lambda", "2,1", "--degree", "3",
                        "--route", route, "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["route"] == route
        outputs.append(json.dumps(obj["series"], sort_keys=True))
    assert len(set(outputs)) == 1


def test_zfun_empty_partition(capsys):
    code, out = run(capsys, "zfun", "--lambda", "", "--degree", "5", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["series"]["terms"] == [{"z": {}, "coeff": "1"}]


def test_zfun_single_box_first_coefficient(capsys):
    code, out = run(capsys, "zfun", "--lambda", "1", "--degree", "3", "--json",
                    "--hbar", "2/3", "--q", "1/5")
    obj = json.loads(out)
    # (1 - 2/3) / (1 - 1/5) = 5/12
    assert {"z": {"0": 1}, "coeff": "5/12"} in obj["series"]["terms"]


def test_byte_determinism(capsys):
    args = ("zfun", "--lambda", "3,1", "--degree", "3", "--route", "sum",
            "--json", "--seed", "7")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2


def test_degenerate_config_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["zfun", "--lambda", "1", "--hbar", "1/4", "--q", "1/2"])


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["zfun", "--route", "bogus"])
    assert err.value.code == 2


def test_verify_lemma_passes(capsys):
    code, out = run(capsys, "verify", "lemma", "--max-size", "3",
                    "--max-entry", "2")
    assert code == 0
    assert "PASS" in out


def test_verify_hook_vacuous(capsys):
    code, out = run(capsys, "verify", "hook", "--max-size", "0", "--json")
    assert code == 0
    assert json.loads(out) == []


def test_verify_json_report(capsys):
    code, out = run(capsys, "verify", "dim", "--max-size", "6", "--json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)


def test_verify_json_byte_deterministic(capsys):
    args = ("verify", "hook", "--max-size", "2", "--degree", "2", "--json",
            "--seed", "3")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2


def test_anvertex_oracle_match(capsys):
    code, out = run(capsys, "anvertex", "--point", FIG_JSON, "--chamber",
                    "0,1", "--degree", "2", "--oracle", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True
    assert obj["series"] == obj["oracle"]


def test_anvertex_rejects_bad_point(capsys):
    bad = json.dumps({"n": 2, "partitions": [{"vertex": 0, "parts": [2]}]})
    code = main(["anvertex", "--point", bad])
    assert code == 2


def test_mirror_single_box(capsys):
    point = json.dumps({"n": 1, "partitions": [{"vertex": 0, "parts": [1]}]})
    code, out = run(capsys, "mirror", "--point", point, "--json")
    assert code == 0
    assert json.loads(out)["character"] == ["z_0^-1", "z_0"]


def test_mirror_figure_point(capsys):
    code, out = run(capsys, "mirror", "--point", FIG_JSON, "--json")
    assert code == 0
    assert len(json.loads(out)["character"]) == 14
