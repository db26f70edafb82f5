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
"""Python bindings for the ppzeta library.

Exact values come back as :class:`fractions.Fraction`; decimals as strings
with the requested number of digits.
"""

import json
from fractions import Fraction

from . import _ppzeta

__all__ = [
    "shuffle",
    "stuffle",
    "shuffle_regularize",
    "star_regularize",
    "fz_quotient_dim",
    "sh_basis_dim",
    "ds_solve",
    "ek_dim_formula",
    "ek_basis",
    "matrix",
    "kernel",
    "relations",
    "report",
    "zeta_single",
    "zeta_double",
    "verify_relation",
    "run_cli",
]

shuffle_regularize = _ppzeta.shuffle_regularize
star_regularize = _ppzeta.star_regularize
fz_quotient_dim = _ppzeta.fz_quotient_dim
sh_basis_dim = _ppzeta.sh_basis_dim
ds_solve = _ppzeta.ds_solve
ek_dim_formula = _ppzeta.ek_dim_formula
zeta_single = _ppzeta.zeta_single
zeta_double = _ppzeta.zeta_double


def _poly(terms):
    return {w: Fraction(c) for w, c in terms.items()}


def shuffle(u, v):
    """Shuffle product of two words as {word: Fraction}."""
    return _poly(_ppzeta.shuffle(u, v))


def stuffle(u, v):
    """Stuffle product of two words ending in y as {word: Fraction}."""
    return _poly(_ppzeta.stuffle(u, v))


def ek_basis(k):
    """Basis of E_k; entry i is the coefficient of X^(2i+2)."""
    return [[Fraction(c) for c in row] for row in _ppzeta.ek_basis(k)]


def matrix(which, k):
    """One of A, Asym, M, S, T, D, B, tADB at weight k."""
    return [[Fraction(c) for c in row] for row in _ppzeta.matrix(which, k)]


def kernel(which, k, transpose=False):
    return [[Fraction(c) for c in row] for row in _ppzeta.kernel(which, k, transpose)]


def relations(k, kind="bracket"):
    """Relations as dicts following the JSON schema; kind is bracket or zeta."""
    return json.loads(_ppzeta.relations_json(k, kind))


def report(k):
    return json.loads(_ppzeta.report_json(k))[0]


def verify_relation(relation, digits=30):
    """Returns (scalar, residual, value) for a double_zeta relation dict."""
    scalar, residual, value = _ppzeta.verify_relation_json(json.dumps(relation), digits)
    return Fraction(scalar), residual, value


def run_cli(*args):
    """Runs the command-line front end; returns (exit_code, stdout, stderr)."""
    return _ppzeta.run_cli([str(a) for a in args])
