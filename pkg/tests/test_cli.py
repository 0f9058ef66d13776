"""Suite runner: exit codes, report shape, and golden files."""

import json
import os

import pytest

from awfslab import cli
from awfslab.cli import SuiteConfig, diff_goldens, emit_goldens, main, run


def test_fast_suites_pass():
    for suite in ("sset-cells", "sset-trough", "mates"):
        status, report = run(suite, SuiteConfig())
        assert status == 0, report
        assert report["suite"] == suite
        assert all(c["status"] == "pass" for c in report["checks"])


def test_cat_folk_suite_passes_with_expected_divergence_note():
    status, report = run("cat-folk", SuiteConfig())
    assert status == 0, report
    ids = {c["id"]: c for c in report["checks"]}
    note = ids["cat-folk/comparison-mult-pentagon"]
    assert note["law"] == "expected divergence"
    assert note["witness"]["diverging"] > 0


def test_cap_forces_resource_exit():
    status, report = run("cat-folk", SuiteConfig(cap=3))
    assert status == 2
    assert any(c["status"] == "cap-exceeded" for c in report["checks"])


def test_invalid_config_is_rejected():
    with pytest.raises(ValueError):
        run("mates", SuiteConfig(corpus_size=0))
    with pytest.raises(ValueError):
        run("nonsense", SuiteConfig())


def test_main_writes_json_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    status = main(["run", "mates", "--json-out", str(out)])
    assert status == 0
    report = json.loads(out.read_text())
    assert report["suite"] == "mates"
    assert report["seed"] == 0
    capsys.readouterr()


def test_goldens_roundtrip_drift_and_missing(tmp_path):
    path = str(tmp_path / "goldens")
    rep = emit_goldens(path)
    assert rep["ok"]
    rep = diff_goldens(path)
    assert rep["ok"], rep
    assert set(rep["files"].values()) == {"match"}

    # perturb one stored certificate step: exactly that file drifts
    fname = os.path.join(path, "anodyne_certificates.json")
    with open(fname) as fh:
        payload = json.load(fh)
    payload["1,0,1"][0]["k"] = 9
    with open(fname, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
    rep = diff_goldens(path)
    assert not rep["ok"]
    assert rep["drift"] == ["anodyne_certificates.json"]

    os.remove(fname)
    rep = diff_goldens(path)
    assert rep["files"]["anodyne_certificates.json"] == "missing-file"


def test_shipped_goldens_match():
    here = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(here, "goldens")
    if not os.path.isdir(path):
        pytest.skip("no shipped goldens directory")
    rep = diff_goldens(path)
    assert rep["ok"], rep["drift"]
