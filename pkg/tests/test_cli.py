import json
import subprocess
import sys

import jsonschema
import pytest

from pythagorean.cli import RunConfig, main, run, schema_path

ARGS = {
    "means": ["--input", "temps.csv"],
    "hyperrect": ["--input", "pair.csv"],
    "attraction": ["--input", "grades.csv", "--kernel", "weighted-gaussian"],
    "velocity": ["--x", "0.7", "--points", "20"],
    "predict": ["--input", "noshows.csv"],
    "index": ["--input", "cpi2017.csv"],
    "ellipse": ["--input", "cloud.csv", "--boundary-points", "64"],
}


def invoke(capsys, fixtures, *args):
    argv = [str(fixtures / a) if a.endswith(".csv") else a for a in args]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def as_json(capsys, fixtures, *args):
    code, out, err = invoke(capsys, fixtures, *args, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_means_temperatures(capsys, fixtures):
    r = as_json(capsys, fixtures, "means", "--input", "temps.csv")
    assert r["summary"]["arithmetic"] == 209
    assert r["summary"]["harmonic"] == pytest.approx(13.36, abs=0.005)
    code, out, _ = invoke(capsys, fixtures, "means", "--input", "temps.csv")
    assert "209.00" in out and "13.36" in out


def test_predict_reciprocal(capsys, fixtures):
    r = as_json(capsys, fixtures, "predict", "--input", "noshows.csv", "--transform", "reciprocal")
    assert r["summary"]["x_star"] == pytest.approx(1.83, abs=0.005)
    assert r["summary"]["return_star"] == pytest.approx(996.27, abs=0.005)


def test_index(capsys, fixtures):
    r = as_json(capsys, fixtures, "index", "--input", "cpi2017.csv")
    got = {row[0]: row[1] for row in r["table"]["rows"]}
    assert got == pytest.approx({"arithmetic": 130.20, "geometric": 129.40, "harmonic": 128.50}, abs=0.01)


def test_mean_subset(capsys, fixtures):
    r = as_json(capsys, fixtures, "means", "--input", "temps.csv", "--means", "gm,hm")
    assert set(r["summary"]) == {"n", "geometric", "harmonic"}


def test_attraction_default_grid(capsys, fixtures):
    r = as_json(capsys, fixtures, "attraction")
    assert r["summary"]["n"] == 1000
    assert r["summary"]["mu_arithmetic"] == pytest.approx(5.05)


@pytest.mark.parametrize("cmd", list(ARGS))
def test_json_schema(capsys, fixtures, cmd):
    r = as_json(capsys, fixtures, cmd, *ARGS[cmd])
    schema = json.loads(schema_path(cmd).read_text())
    jsonschema.validate(r, schema)


@pytest.mark.parametrize("cmd", list(ARGS))
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_deterministic(capsys, fixtures, cmd, fmt):
    outs = [invoke(capsys, fixtures, cmd, *ARGS[cmd], "--format", fmt)[1] for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]


def test_csv_output(capsys, fixtures):
    _, out, _ = invoke(capsys, fixtures, "predict", "--input", "noshows.csv", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "transform,mean,x_star,return_star"
    assert lines[1].startswith("identity,arithmetic,3.0,")


@pytest.mark.parametrize(
    "args",
    [
        ["bogus"],
        ["means"],
        ["means", "--input", "missing.csv"],
        ["means", "--input", "temps.csv", "--format", "xml"],
        ["means", "--input", "temps.csv", "--means", "median"],
        ["velocity", "--x", "1.5"],
        ["ellipse", "--input", "cloud.csv", "--scale", "-1"],
        ["attraction", "--grid", "0.1", "10", "many"],
        ["attraction", "--kernel", "weighted-cauchy"],
        ["hyperrect", "--input", "temps.csv", "--plot", "x.svg"],
    ],
)
def test_usage_errors(capsys, fixtures, tmp_path, args):
    args = [str(tmp_path / a) if a in ("missing.csv", "x.svg") else a for a in args]
    code, _, err = invoke(capsys, fixtures, *args)
    assert code == 1
    assert "error" in err


@pytest.mark.parametrize(
    "cmd,text,fragment",
    [
        ("means", "value,weight\n1,1\n2,-3\n", ":3:"),
        ("means", "value\n-1\n2\n", "-1.0"),
        ("predict", "value,probability\n1,0.3\n2,0.3\n", "sum"),
        ("ellipse", "x,y\n1,1\n2,2\n3,3\n", "collinear"),
    ],
)
def test_data_errors(capsys, tmp_path, cmd, text, fragment):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    code = main([cmd, "--input", str(p)])
    _, err = capsys.readouterr()
    assert code == 2
    assert fragment in err


def test_plots(capsys, fixtures, tmp_path):
    for cmd, extra in [
        ("ellipse", ["--input", "cloud.csv"]),
        ("hyperrect", ["--input", "pair.csv"]),
        ("velocity", []),
        ("attraction", ["--grid", "0.1", "10", "50"]),
        ("predict", ["--input", "noshows.csv"]),
    ]:
        out = tmp_path / f"{cmd}.svg"
        code, _, err = invoke(capsys, fixtures, cmd, *extra, "--plot", str(out))
        assert code == 0, err
        svg = out.read_text()
        assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    ellipse = (tmp_path / "ellipse.svg").read_text()
    assert ellipse.count("<polyline") == 3
    assert 'stroke-dasharray="8,3,2,3"' in ellipse and 'stroke-dasharray="2,3"' in ellipse


def test_run_api(fixtures):
    res = run(RunConfig("index", input_path=fixtures / "cpi2017.csv", output_format="json"))
    assert res.status == 0
    assert res.report["summary"]["spread_pct"] == pytest.approx(1.3, abs=0.1)


def test_console_entry_point(fixtures):
    proc = subprocess.run(
        [sys.executable, "-m", "pythagorean.cli", "means", "--input", str(fixtures / "temps.csv")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "arithmetic" in proc.stdout
