import json
import logging

import pytest

import cli.checks
import cli.commands
import lattice.tamari
from cli.cache import source_digest
from cli.commands import cmd_verify
from cli.options import RunConfig
from config import EXIT_CAP, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, MAX_SERIES_ORDER
from errors import ResourceCapExceeded
from main import main
from reports import CheckReport


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_intervals(capsys, cache_dir):
    code, out = run(capsys, "intervals", "--m", "1", "--n", "3")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert [r["labelled"] for r in rows] == [1, 1, 4, 32]
    assert rows[3]["unlabelled_closed"] == 13


def test_intervals_with_q(capsys, cache_dir):
    code, out = run(capsys, "intervals", "--m", "1", "--n", "2", "--with-q")
    assert code == EXIT_OK
    assert json.loads(out)["q_table"][2]["coefficients"] == ["3", "1"]


def test_cache_hit_is_byte_identical(capsys, cache_dir):
    first = run(capsys, "intervals", "--m", "2", "--n", "2")
    assert len(list(cache_dir.glob("intervals-*.json"))) == 1
    second = run(capsys, "intervals", "--m", "2", "--n", "2")
    assert first == second


def test_corrupt_cache_entry_is_recomputed(capsys, cache_dir, caplog):
    first = run(capsys, "series", "--m", "1", "--order", "3")
    for entry in cache_dir.glob("series-*.json"):
        entry.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        second = run(capsys, "series", "--m", "1", "--order", "3")
    assert first == second
    assert "corrupt cache entry" in caplog.text


def test_no_cache(capsys, cache_dir):
    code, _ = run(capsys, "intervals", "--n", "2", "--no-cache")
    assert code == EXIT_OK
    assert not cache_dir.exists()


def test_cache_dir_option_beats_environment(capsys, cache_dir, tmp_path):
    explicit = tmp_path / "explicit"
    run(capsys, "intervals", "--n", "1", "--cache-dir", str(explicit))
    assert list(explicit.glob("*.json"))
    assert not cache_dir.exists()


def test_series(capsys, cache_dir):
    code, out = run(capsys, "series", "--m", "2", "--order", "1")
    assert code == EXIT_OK
    dump = json.loads(out)
    assert dump["var"] == "t"
    assert dump["coeffs"][1] == {"x^2*y": "1"}


def test_series_csv(capsys, cache_dir):
    code, out = run(capsys, "series", "--m", "1", "--order", "1", "--y-one", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "coeff,order"


def test_series_in_z(capsys, cache_dir):
    code, out = run(capsys, "series", "--m", "1", "--order", "0", "--z")
    assert code == EXIT_OK
    assert json.loads(out)["coeffs"] == [{"1": "1", "u": "1"}]


def test_series_in_z_rejects_q(capsys, cache_dir):
    code, _ = run(capsys, "series", "--z", "--with-q", "--order", "2")
    assert code == EXIT_INVALID


def test_series_order_cap(capsys, cache_dir):
    code, _ = run(capsys, "series", "--order", str(MAX_SERIES_ORDER + 1), "--no-cache")
    assert code == EXIT_CAP


def test_lattice_dot(capsys):
    code, out = run(capsys, "lattice", "--m", "1", "--n", "3", "--format", "dot")
    assert code == EXIT_OK
    assert out.startswith("digraph")
    assert out.count("->") == 5


def test_lattice_json(capsys):
    code, out = run(capsys, "lattice", "--m", "2", "--n", "3")
    assert code == EXIT_OK
    assert len(json.loads(out)["vertices"]) == 12


def test_lattice_cap(capsys):
    assert run(capsys, "lattice", "--n", "6", "--cap", "10")[0] == EXIT_CAP


@pytest.mark.parametrize("argv", [
    ["lattice", "--m", "0"],
    ["frobnicate"],
    ["series", "--format", "dot"],
    ["bijection"],
    ["bijection", "--path", "NENE"],
    ["bijection", "--parking", "3"],
    ["verify", "--check", "no-such-check"],
])
def test_invalid_input(capsys, cache_dir, argv):
    assert run(capsys, *argv)[0] == EXIT_INVALID


def test_verify_list(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == EXIT_OK
    names = out.split()
    assert "combi-lin" in names
    assert names[0] == "sublattice"


def test_verify_single_check(capsys):
    code, out = run(capsys, "verify", "--check", "lagrange")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "pass"
    assert [c["check"] for c in report["checks"]] == ["lagrange"]


def test_verify_skipped_check(capsys):
    code, out = run(capsys, "verify", "--check", "theorem-m1", "--m", "2", "--order", "2")
    assert code == EXIT_OK
    assert json.loads(out)["checks"][0]["status"] == "skipped"


def test_verify_mismatch_exit_code(monkeypatch):
    registry = {"broken": lambda cfg: CheckReport.failed("broken", cfg.m, cfg.order, "forced")}
    monkeypatch.setattr(cli.commands, "get_all_checks", lambda: registry)
    monkeypatch.setattr(cli.checks, "get_all_checks", lambda: registry)
    text, code = cmd_verify(RunConfig(command="verify", checks=["broken"]))
    assert code == EXIT_MISMATCH
    assert json.loads(text)["first_failure"] == "broken"


def test_bijection_from_labelled_path(capsys):
    code, out = run(capsys, "bijection", "--labelled", "N1EN2E")
    assert code == EXIT_OK
    assert json.loads(out)["parking"]["values"] == [1, 2]


def test_bijection_from_parking_function(capsys):
    code, out = run(capsys, "bijection", "--parking", "1", "1")
    assert code == EXIT_OK
    assert json.loads(out)["pretty"] == "N₁N₂EE"


def test_bijection_from_path_and_labels(capsys):
    code, out = run(capsys, "bijection", "--m", "2", "--path", "NEENEE", "--labels", "2", "1")
    assert code == EXIT_OK
    assert json.loads(out)["parking"]["values"] == [3, 1]


def test_lattice_of_size_zero(capsys):
    code, out = run(capsys, "lattice", "--n", "0")
    assert code == EXIT_OK
    assert json.loads(out)["vertices"] == [""]


def test_cached_counts_are_rechecked(capsys, cache_dir):
    assert run(capsys, "intervals", "--m", "1", "--n", "3")[0] == EXIT_OK
    (entry,) = cache_dir.glob("intervals-*.json")
    stored = json.loads(entry.read_text())
    stored["payload"]["rows"][3]["unlabelled"] = 14
    entry.write_text(json.dumps(stored))
    assert run(capsys, "intervals", "--m", "1", "--n", "3")[0] == EXIT_MISMATCH


@pytest.mark.parametrize("relative", ["cli/commands.py", "reports.py", "lattice/tamari.py"])
def test_source_digest_tracks_edits(tmp_path, relative):
    for name in ("lattice/tamari.py", "cli/commands.py", "reports.py", "config.py"):
        source = tmp_path / name
        source.parent.mkdir(parents=True, exist_ok=True)
        source.write_text("x = 1\n")
    before = source_digest(tmp_path)
    (tmp_path / relative).write_text("x = 2\n")
    assert source_digest(tmp_path) != before


def test_lattice_order_matrix_budget(capsys, monkeypatch):
    monkeypatch.setattr(lattice.tamari, "MAX_ORDER_MATRIX_CELLS", 100)
    assert run(capsys, "lattice", "--n", "4")[0] == EXIT_CAP


def test_verify_decomposition_cap(capsys, cache_dir):
    code, out = run(capsys, "verify", "--check", "decomposition", "--n", "4", "--cap", "10")
    assert code == EXIT_CAP
    report = json.loads(out)
    assert report["checks"][0]["cap_exceeded"]
    assert "above the cap of 10" in report["checks"][0]["detail"]


def _capped(cfg):
    raise ResourceCapExceeded("T_9^(1)", 4862, 10)


def _use_registry(monkeypatch, registry):
    monkeypatch.setattr(cli.commands, "get_all_checks", lambda: registry)
    monkeypatch.setattr(cli.checks, "get_all_checks", lambda: registry)


def test_verify_continues_after_cap(monkeypatch):
    _use_registry(monkeypatch, {"capped": _capped, "fine": lambda cfg: CheckReport.passed("fine", cfg.m)})
    text, code = cmd_verify(RunConfig(command="verify", checks=["capped", "fine"]))
    assert code == EXIT_CAP
    checks = json.loads(text)["checks"]
    assert [c["status"] for c in checks] == ["fail", "pass"]
    assert checks[0]["cap_exceeded"] and not checks[1]["cap_exceeded"]


def test_verify_mismatch_outranks_cap(monkeypatch):
    _use_registry(monkeypatch, {
        "capped": _capped,
        "broken": lambda cfg: CheckReport.failed("broken", cfg.m, cfg.order, "forced"),
    })
    text, code = cmd_verify(RunConfig(command="verify", checks=["capped", "broken"]))
    assert code == EXIT_MISMATCH
    assert json.loads(text)["first_failure"] == "capped"
