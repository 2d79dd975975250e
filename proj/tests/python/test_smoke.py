"""Smoke tests for the _tevelev extension module.

Run via ctest (which puts the built module on PYTHONPATH), or point
PYTHONPATH at the build directory containing _tevelev*.so yourself.
"""

import json
import os
import subprocess

import pytest

_tevelev = pytest.importorskip("_tevelev")


def test_partitions():
    assert _tevelev.make_partition([3, 1, 0, 0]) == (3, 1)
    assert _tevelev.conjugate([3, 1]) == (2, 1, 1)
    assert _tevelev.complement([3, 1], 2, 4) == (3, 1)
    with pytest.raises(ValueError):
        _tevelev.make_partition([1, 2])


def test_tableaux():
    assert _tevelev.count_ssyt([2, 1], 3) == 8
    assert len(_tevelev.enumerate_ssyt([2, 1], 3)) == 8
    assert _tevelev.count_stripless([2], 1, 3) == 3
    assert _tevelev.has_strip([[1, 1], [2, 2]], 2, 1, 2)
    assert _tevelev.content_counts([[1, 2], [2]], 3) == [1, 2, 0]
    assert _tevelev.count_grid_fillings(1, 1, 4, 2) == 2


def test_degrees():
    assert _tevelev.tev_pr(1, 3, 6, 4) == 8
    assert _tevelev.tev_pr(2, 3, 4, 4) == 1
    assert _tevelev.tev_p1_closed(4, 3) == 2
    assert _tevelev.castelnuovo(2, 6) == 5
    assert _tevelev.count_p2(3, 4, 0, 4) == 1
    # exactness well past 64 bits
    assert _tevelev.virtual_tev(1, 200) == 2**200


def test_classes():
    cls = _tevelev.gamma_class_points(1, 5, 4)
    assert cls == [((2,), 3), ((1, 1), 1)]
    assert _tevelev.orbit_closure_class(1, 4) == [((1,), 2)]
    assert _tevelev.klyachko_coefficient(1, 5, [2]) == 3
    assert _tevelev.lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    assert _tevelev.schubert_product(2, 4, [1], [1]) == [((2,), 1), ((1, 1), 1)]


def test_verification():
    report = _tevelev.verify_klyachko_vs_stripless(2, 7)
    assert report["passed"]
    assert report["cases_run"] > 0
    assert _tevelev.verify_p2_components(4, 7)["passed"]
    assert _tevelev.verify_grid_oracle(1, 2, 5, 3)["passed"]


def test_cli_roundtrip():
    cli = os.environ.get("TEVELEV_CLI")
    if not cli:
        pytest.skip("TEVELEV_CLI not set")
    out = subprocess.run([cli, "tev", "--r", "1", "--g", "3", "--d", "4"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "8"
    out = subprocess.run(
        [cli, "gamma", "--r", "1", "--n", "5", "--d", "4", "--format", "json"],
        capture_output=True, text=True, check=True)
    envelope = json.loads(out.stdout)
    assert envelope["result"] == [
        {"partition": "2", "coeff": "3"},
        {"partition": "1,1", "coeff": "1"},
    ]
    assert envelope["command"] == "gamma"
