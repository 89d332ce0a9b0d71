import os
import pathlib

import pytest

import gonal

DATA = pathlib.Path(os.environ.get("GONAL_TEST_DATA", pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"))


def read(name):
    return (DATA / name).read_text()


def test_stage_names():
    assert gonal.stage_names()[0] == "parse"
    assert "radical" in gonal.stage_names()


def test_fnv1a_reference_values():
    assert gonal.fnv1a_hex("") == "cbf29ce484222325"
    assert gonal.fnv1a_hex("foobar") == "85944171f73967e8"


def test_classify_genus5_net():
    report = gonal.classify(read("genus5_net.txt"))
    assert report["schema_version"] == gonal.SCHEMA_VERSION
    assert report["stratum"] == "Genus5Generic"
    assert report["input_hash"] == "fnv1a64:" + gonal.fnv1a_hex(read("genus5_net.txt"))
    assert "error" not in report


def test_betti_table():
    report = gonal.betti(read("genus5_net.txt"))
    assert report["stages"]["betti"]["compact"] == "1; 3; 3; 1"


def test_stage_error_is_recorded():
    report = gonal.classify(read("genus5_net.txt"), field="GF(2)")
    assert report["error"]["stage"] == "parse"


def test_bad_job_raises():
    with pytest.raises(gonal.Error):
        gonal.run("nonsense", read("genus5_net.txt"))
    with pytest.raises(ValueError):
        gonal.run("full", read("genus5_net.txt"), patch="0123,4")


def test_plane_radical_with_parameter():
    report = gonal.run("radical", read("x0_58_plane.txt"), parameter=("3*X^2 + Y^2 - 6*Y + 3", "X*Y - Y^2 + 3*X + 4*Y"))
    rad = report["stages"]["radical"]
    assert rad["degree"] == 4
    assert rad["numeric"]["ok"]


def test_render_text_mentions_stratum():
    report = gonal.classify(read("genus5_net.txt"))
    assert "Genus5Generic" in gonal.render_text(report)
