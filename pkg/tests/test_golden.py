"""Frozen reference documents.

The check-Taft documents were produced from ``check_taft`` and agree with the
partial dual of the hat-Taft datum pulled back along psi; both routes are
compared to the frozen text here.
"""
import json
from pathlib import Path

import pytest

from hopfdual.catalog import check_taft, taft_dual_comparison
from hopfdual.hopfcore import pull_back, verify_hopf
from hopfdual.serialize import load, save

from conftest import TAFT_PARAMS, taft_dualized

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return json.loads((GOLDEN / f"{name}.json").read_text())


@pytest.mark.parametrize("p", TAFT_PARAMS, ids=lambda p: "_".join(map(str, p)))
def test_check_taft_matches_golden(p):
    assert save(check_taft(*p)) == golden("check_taft_" + "_".join(map(str, p)))


@pytest.mark.parametrize("p", TAFT_PARAMS, ids=lambda p: "_".join(map(str, p)))
def test_partial_dual_pulled_back_matches_golden(p):
    _, r = taft_dualized(*p)
    psi, rep, _ = taft_dual_comparison(*p, result=r)
    assert rep.ok
    T = load(golden("check_taft_" + "_".join(map(str, p))))
    assert save(pull_back(psi, r.rH, T)) == save(T)


@pytest.mark.parametrize("name", ["hat_taft_4_2_2", "taft_3", "group_algebra_S3"])
def test_golden_hopf_algebras_verify(name):
    assert verify_hopf(load(golden(name))).ok
