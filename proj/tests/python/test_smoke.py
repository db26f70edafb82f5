# Copyright 2026 The ppzeta Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python module and the command-line tool."""

import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

ppzeta = pytest.importorskip("ppzeta")

F = Fraction


def test_words():
    assert ppzeta.shuffle("x", "y") == {"xy": 1, "yx": 1}
    assert ppzeta.stuffle("y", "y") == {"xy": 1, "yy": 2}
    assert ppzeta.shuffle_regularize("yxy") == "-2 Z(2,1)"
    assert ppzeta.star_regularize("yy") == "-1/2 Z(2)"
    assert [ppzeta.sh_basis_dim(n) for n in range(2, 7)] == [1, 2, 4, 8, 16]
    assert ppzeta.fz_quotient_dim(4) == 1
    assert len(ppzeta.ds_solve(5)) == 1


def test_weight_12():
    assert ppzeta.matrix("A", 12) == [
        [1, 6, 15, 28],
        [0, 1, 15, 42],
        [0, 0, -14, -42],
        [0, -6, -15, -27],
    ]
    assert ppzeta.kernel("A", 12) == [[1, -3, 3, -1]]
    assert ppzeta.kernel("A", 12, transpose=True) == [[0, 84, 75, 14]]
    assert ppzeta.ek_basis(12) == [[1, -3, 3, -1]]
    assert ppzeta.matrix("D", 12)[1][1] == F(1, 210)


def test_relations_and_report():
    (bracket,) = ppzeta.relations(12)
    assert [int(t["coeff"]) for t in bracket["terms"]] == [1, -3]
    (zeta,) = ppzeta.relations(12, "zeta")
    assert zeta["kind"] == "double_zeta"
    assert [int(t["coeff"]) for t in zeta["terms"]] == [14, 75, 84, 0]
    assert ppzeta.relations(14, "zeta") == []
    rep = ppzeta.report(24)
    assert rep["all_passed"] is True
    assert rep["dims"]["ek"] == 2


def test_numerics():
    z2 = ppzeta.zeta_single(2, 30)
    assert z2.startswith("1.644934066848226436472415166646")
    assert abs(float(z2) - math.pi**2 / 6) < 1e-15
    assert ppzeta.zeta_double(2, 1, 20) == ppzeta.zeta_single(3, 20)
    rel = {
        "weight": 12,
        "kind": "double_zeta",
        "terms": [
            {"r": 9, "s": 3, "coeff": "28"},
            {"r": 7, "s": 5, "coeff": "150"},
            {"r": 5, "s": 7, "coeff": "168"},
            {"r": 3, "s": 9, "coeff": "0"},
        ],
        "scalar_estimate": None,
    }
    scalar, residual, _ = ppzeta.verify_relation(rel, 30)
    assert scalar == F(5197, 691)
    assert float(residual) < 1e-25


def test_cli_in_process():
    code, out, err = ppzeta.run_cli("relations", "--weight", 12, "--kind", "zeta")
    assert code == 0
    assert out == "14 Z(9,3) + 75 Z(7,5) + 84 Z(5,7) ≡ 0 (mod Z(12))\n"
    code, out, err = ppzeta.run_cli("nonsense")
    assert code == 2 and out == "" and err


@pytest.mark.skipif("PPZETA_CLI" not in os.environ, reason="tool path not provided")
def test_cli_binary():
    exe = os.environ["PPZETA_CLI"]
    res = subprocess.run(
        [exe, "relations", "--weight", "16", "--kind", "zeta", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    (rel,) = json.loads(res.stdout)
    assert rel["weight"] == 16
    res = subprocess.run([exe, "check", "--weight", "12"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "5197/1382" in res.stdout
