"""Measure-document round trips, CLI behavior, exit codes, and artifacts."""
import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import zenoscale as z
from zenoscale import cli


# -------------------------------------------------------- document round trip

ROUND_TRIP = [
    z.pure_point([(0.0, 0.5), (1.0, 0.5)]),
    z.pure_point([(-2.5, 0.125), (0.0, 0.375), (1.0 / 3.0, 0.5)]),
    z.gaussian(0.7, 1.3),
    z.lorentzian(-0.2, 0.05),
    z.uniform(-1.0, 2.0),
    z.tabulated([0.0, 1.0, 2.0], [0.0, 1.0, 0.0]),
    z.cantor(),
    z.cantor(offset=-1.0, scale=3.0, depth=25),
    z.mixture([(0.25, z.GaussianMeasure(0.0, 1.0)),
               (0.75, z.PurePointMeasure((z.EnergyAtom(0.0, 0.5),
                                          z.EnergyAtom(1.0, 0.5))))]),
]


@pytest.mark.parametrize("measure", ROUND_TRIP, ids=lambda m: type(m).__name__)
def test_emit_parse_round_trip(measure):
    assert z.parse_measure_spec(z.emit_measure_spec(measure)) == measure


@given(st.lists(st.tuples(st.floats(min_value=-100.0, max_value=100.0),
                          st.integers(min_value=1, max_value=9)),
                min_size=1, max_size=5, unique_by=lambda p: round(p[0], 6)))
def test_round_trip_random_pure_point(pairs):
    total = sum(w for _, w in pairs)
    measure = z.pure_point([(e, w / total) for e, w in pairs])
    assert z.parse_measure_spec(z.emit_measure_spec(measure)) == measure


@pytest.mark.parametrize("doc, field", [
    ('{"type": "pp"}', "atoms"),
    ('{"type": "pp", "atoms": [[0, 0.5], [1, 0.5]], "x": 1}', "x"),
    ('{"type": "ac", "family": "gaussian", "mean": 0}', "sigma"),
    ('{"type": "ac", "family": "gaussian", "mean": 0, "sigma": 1, "gamma": 2}', "gamma"),
    ('{"type": "ac", "family": "triangular", "a": 0, "b": 1}', "family"),
    ('{"type": "wavelet"}', "type"),
    ('{"type": "pp", "atoms": [[0, 0.5], [1]]}', "atoms[1]"),
    ('{"type": "pp", "atoms": [[0, true], [1, 0.5]]}', "atoms[0]"),
    ('{"type": "cantor", "depth": 2.5}', "depth"),
    ('{"type": "mixture", "components": [{"weight": 1.0}]}', "components[0].measure"),
    ('{"type": "mixture", "components": [{"weight": 1.0, "measure": {"type": "ac", "family": "gaussian", "mean": 0, "sigma": "wide"}}]}',
     "components[0].measure.sigma"),
])
def test_schema_errors_name_the_field(doc, field):
    with pytest.raises(z.SchemaError) as exc:
        z.parse_measure_spec(doc)
    assert exc.value.field == field


def test_schema_error_reports_json_line():
    with pytest.raises(z.SchemaError) as exc:
        z.parse_measure_spec('{"type": "pp",\n  "atoms": [[0, 0.5],]\n}')
    assert exc.value.line == 2


def test_parse_rejects_non_object():
    with pytest.raises(z.SchemaError):
        z.parse_measure_spec('[1, 2, 3]')


def test_parse_validates_semantics():
    with pytest.raises(z.NonNormalized):
        z.parse_measure_spec('{"type": "pp", "atoms": [[0, 0.7]]}')


def test_cantor_defaults_fill_in():
    m = z.parse_measure_spec('{"type": "cantor"}')
    assert m == z.cantor()
    assert m.depth == 40


# ------------------------------------------------------------- CLI plumbing

@pytest.fixture
def qubit_file(tmp_path):
    path = tmp_path / "qubit.json"
    path.write_text('{"type": "pp", "atoms": [[0, 0.5], [1, 0.5]]}')
    return str(path)


@pytest.fixture
def three_atom_file(tmp_path):
    w = 1.0 / 3.0
    path = tmp_path / "three.json"
    path.write_text(json.dumps(
        {"type": "pp", "atoms": [[0.0, w], [2.0, w], [6.0, w]]}))
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_gaussian_threshold(qubit_file, capsys):
    code, out, _ = run_cli(capsys, "eval", "--measure", qubit_file,
                           "--alpha", "1/2", "--tau", "2.0", "--n", "1000000")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == pytest.approx(math.exp(-1.0), abs=1e-3)
    assert payload["prediction"]["regime"] == "gaussian"
    assert payload["alpha"] == "1/2"
    assert payload["alpha_value"] == 0.5


def test_eval_eigenstate_is_one(tmp_path, capsys):
    path = tmp_path / "eigen.json"
    path.write_text('{"type": "pp", "atoms": [[3.5, 1.0]]}')
    code, out, _ = run_cli(capsys, "eval", "--measure", str(path),
                           "--alpha", "0.9", "--tau", "7.0", "--n", "12345")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 1.0
    assert payload["log_p"] == 0.0


def test_eval_recurrent_subsequence_member(three_atom_file, capsys):
    code, out, _ = run_cli(capsys, "eval", "--measure", three_atom_file,
                           "--alpha", "3/2", "--tau", str(math.pi), "--n", "9")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == pytest.approx(1.0, abs=1e-12)
    assert payload["prediction"]["regime"] == "recurrent"
    assert payload["prediction"]["subsequence_power"] == 2


def test_classify_inapplicable(tmp_path, capsys):
    path = tmp_path / "lor.json"
    path.write_text('{"type": "ac", "family": "lorentzian", "center": 0, "gamma": 1}')
    code, out, _ = run_cli(capsys, "classify", "--measure", str(path),
                           "--alpha", "0.3", "--tau", "1.0")
    assert code == 0
    payload = json.loads(out)
    assert payload["regime"] == "inapplicable"
    assert payload["limit"] is None


def test_classify_writes_out_file(qubit_file, tmp_path, capsys):
    out_path = tmp_path / "pred.json"
    code, out, _ = run_cli(capsys, "classify", "--measure", qubit_file,
                           "--alpha", "0.3", "--tau", "1.0", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == out


def test_sweep_csv_shape_and_order(qubit_file, tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0.3,1/2", "--tau-grid", "0.5:1.5:2",
                         "--n-schedule", "10,100", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "alpha,tau,N,p,log_p,predicted,regime"
    assert len(lines) == 1 + 2 * 2 * 2
    first = lines[1].split(",")
    assert float(first[0]) == 0.3
    assert float(first[1]) == 0.5
    assert int(first[2]) == 10
    # alpha-major, then tau, then N
    key = [(float(r.split(",")[0]), float(r.split(",")[1]), int(r.split(",")[2]))
           for r in lines[1:]]
    assert key == sorted(key)


def test_sweep_floats_round_trip_17g(qubit_file, tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    run_cli(capsys, "sweep", "--measure", qubit_file, "--alpha", "0.3",
            "--tau", "1.0", "--n", "1000", "--out", str(out_path))
    row = out_path.read_text().splitlines()[1].split(",")
    qubit = z.pure_point([(0.0, 0.5), (1.0, 0.5)])
    lp = z.scaled_zeno_product(qubit, z.ZenoParams(N=1000, alpha=0.3, tau=1.0))
    assert float(row[3]) == lp.p
    assert float(row[4]) == lp.log_p


def test_sweep_deterministic_bytes(qubit_file, tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["sweep", "--measure", qubit_file, "--alpha", "0,0.4,1/2,0.8,1/1,1.3",
            "--tau", "1.0", "--n-schedule", "10,1000"]
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_sweep_lattice_rows_stay_at_one(three_atom_file, tmp_path, capsys):
    out_path = tmp_path / "lattice.csv"
    code, _, _ = run_cli(capsys, "sweep", "--measure", three_atom_file,
                         "--alpha", "1/1", "--tau", str(math.pi),
                         "--n-schedule", "10,100", "--out", str(out_path))
    assert code == 0
    for line in out_path.read_text().splitlines()[1:]:
        parts = line.split(",")
        assert float(parts[3]) == pytest.approx(1.0, abs=1e-9)
        assert parts[6] == "lattice"
        assert float(parts[5]) == 1.0


def test_sweep_recurrent_rows_tag_no_limit(three_atom_file, tmp_path, capsys):
    out_path = tmp_path / "rec.csv"
    code, _, _ = run_cli(capsys, "sweep", "--measure", three_atom_file,
                         "--alpha", "3/2", "--tau", str(math.pi),
                         "--n", "9", "--out", str(out_path))
    assert code == 0
    parts = out_path.read_text().splitlines()[1].split(",")
    assert parts[5] == "none"
    assert parts[6] == "recurrent"


def test_sweep_empty_tau_grid_exits_2(qubit_file, tmp_path, capsys):
    out_path = tmp_path / "never.csv"
    code, _, err = run_cli(capsys, "sweep", "--measure", qubit_file,
                           "--alpha", "0.3", "--tau-grid", "1:2:0",
                           "--n", "10", "--out", str(out_path))
    assert code == 2
    assert not out_path.exists()
    assert "tau grid" in err


def test_sweep_missing_tau_exits_2(qubit_file, tmp_path, capsys):
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0.3", "--n", "10",
                         "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_sweep_unwritable_path_exits_3_without_partials(qubit_file, tmp_path, capsys):
    target = tmp_path / "missing-dir" / "out.csv"
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0.3", "--tau", "1.0", "--n", "10",
                         "--out", str(target))
    assert code == 3
    assert not target.exists()
    assert list(tmp_path.iterdir()) == [tmp_path / "qubit.json"] or \
        not (tmp_path / "missing-dir").exists()


def test_sweep_figure_artifact(qubit_file, tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    fig_path = tmp_path / "sweep.png"
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0,1/2,1/1", "--tau-grid", "0.5:2:2",
                         "--n", "1000", "--out", str(out_path),
                         "--fig", str(fig_path))
    assert code == 0
    blob = fig_path.read_bytes()
    assert blob[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(blob) > 1000


def test_bad_measure_file_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"type": "pp", "atoms": [[0, 0.7]]}')
    code, _, err = run_cli(capsys, "eval", "--measure", str(path),
                           "--alpha", "0.3", "--tau", "1.0", "--n", "10")
    assert code == 2
    assert "0.7" in err


def test_missing_measure_file_exits_2(capsys):
    code, _, _ = run_cli(capsys, "eval", "--measure", "/no/such/file.json",
                         "--alpha", "0.3", "--tau", "1.0", "--n", "10")
    assert code == 2


def test_bad_alpha_token_exits_2(qubit_file, capsys):
    code, _, _ = run_cli(capsys, "eval", "--measure", qubit_file,
                         "--alpha", "half", "--tau", "1.0", "--n", "10")
    assert code == 2


def test_both_tau_flags_exit_2(qubit_file, tmp_path, capsys):
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0.3", "--tau", "1.0", "--tau-grid", "0:1:2",
                         "--n", "10", "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_decreasing_schedule_exits_2(qubit_file, tmp_path, capsys):
    code, _, _ = run_cli(capsys, "sweep", "--measure", qubit_file,
                         "--alpha", "0.3", "--tau", "1.0",
                         "--n-schedule", "100,10", "--out", str(tmp_path / "x.csv"))
    assert code == 2


def test_missing_subcommand_exits_2(capsys):
    assert cli.main([]) == 2
    capsys.readouterr()


def test_verify_convolution_report(capsys):
    code, out, _ = run_cli(capsys, "verify", "convolution", "--seed", "42")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "convolution"
    assert report["seed"] == 42
    assert len(report["checks"]) == 50
    for check in report["checks"]:
        assert set(check) == {"name", "pass", "measured", "bound"}
        assert check["pass"] is True
        assert check["measured"] <= 1e-10


@pytest.mark.parametrize("suite", ["thresholds", "lattice", "recurrence", "taylor"])
def test_verify_suites_pass(suite, capsys):
    code, out, _ = run_cli(capsys, "verify", suite)
    assert code == 0
    report = json.loads(out)
    assert all(c["pass"] for c in report["checks"])


def test_verify_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert cli.main(["verify", "lattice", "--seed", "5", "--out", str(a)]) == 0
    assert cli.main(["verify", "lattice", "--seed", "5", "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_verify_failing_check_exits_1(monkeypatch, capsys):
    monkeypatch.setitem(cli._SUITES, "lattice", lambda seed: [
        {"name": "forced", "pass": False, "measured": 1.0, "bound": 0.0}])
    code, out, _ = run_cli(capsys, "verify", "lattice")
    assert code == 1
    assert json.loads(out)["checks"][0]["pass"] is False


def test_module_help_runs():
    proc = subprocess.run([sys.executable, "-m", "zenoscale", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "sweep" in proc.stdout


def test_console_script_help_runs():
    proc = subprocess.run(["zenoscale", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "classify" in proc.stdout
