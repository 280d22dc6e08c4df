import json

from hadamard_rect.serialize import (build_report, fmt17, report_to_json,
                                     rows_to_csv, run_timestamp)


def test_fmt17_round_trips_doubles():
    for v in (0.1, 1.0 / 3.0, 1e-300, 123456789.123456789, -0.0):
        assert float(fmt17(v)) == v
    assert fmt17(True) == "true"
    assert fmt17(False) == "false"
    assert fmt17(7) == "7"
    assert fmt17("x") == "x"


def test_timestamp_follows_source_date_epoch(monkeypatch):
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)
    assert run_timestamp() is None
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    assert run_timestamp() == "1970-01-01T00:00:00+00:00"


def test_report_shape_and_json_bytes(monkeypatch):
    monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)
    rep = build_report("0.1.0", "lemma", {"s": 1.0}, [{"ok": True}],
                       {"n": 1}, ["note"])
    assert list(rep) == ["tool", "version", "timestamp", "command", "config",
                         "results", "summary", "notes"]
    assert rep["tool"] == "hadamard-rect"
    text = report_to_json(rep)
    assert text.endswith("\n")
    assert json.loads(text)["timestamp"] is None


def test_csv_uses_lf_and_full_precision():
    text = rows_to_csv(["a", "b"], [[0.1, True], [2, "z"]])
    assert text == "a,b\n0.10000000000000001,true\n2,z\n"
    assert "\r" not in text
