# Copyright 2026 The minss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact min-entropy secret sharing: schemes, entropies and verification."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Error,
    InvalidArgumentError,
    NotQualifiedError,
    ParseError,
    UnsupportedOrderError,
)

__all__ = [
    "Error",
    "InvalidArgumentError",
    "NotQualifiedError",
    "ParseError",
    "UnsupportedOrderError",
    "combine",
    "cond_entropy",
    "distribution_table",
    "entropy",
    "ideality",
    "joint",
    "non_perfect_witness",
    "security",
    "share",
    "share_bounds",
    "construction_check",
]


def _rational(value):
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def _params(params):
    out = dict(params)
    if "p" in out and not isinstance(out["p"], dict):
        out["p"] = _rational(out["p"])
    return json.dumps(out)


def _dist(dist):
    if isinstance(dist, dict) and "entries" in dist:
        return json.dumps(dist)
    entries = [
        {"tuple": list(k) if isinstance(k, tuple) else [k], **_rational(v)}
        for k, v in dist.items()
    ]
    arity = len(entries[0]["tuple"]) if entries else 1
    names = ["X"] if arity == 1 else [f"X{i + 1}" for i in range(arity)]
    return json.dumps({"variables": names, "entries": entries})


def _with_fraction(report):
    if "prelog" in report:
        report["prelog"] = Fraction(report["prelog"])
    return report


def share(scheme, params, secret, seed):
    """Split `secret` under `scheme` ("pi1", "pi2", "general"); returns the bundle dict."""
    return json.loads(_core.share(scheme, _params(params), secret, seed))


def combine(bundle, parties=None):
    """Reconstruct the secret, optionally from a subset of parties."""
    return _core.combine(json.dumps(bundle), parties)


def entropy(dist, order, target=""):
    """Renyi entropy in bits; `dist` is a file-format dict or {outcome: mass}."""
    return _with_fraction(json.loads(_core.entropy(_dist(dist), str(order), target)))


def cond_entropy(dist, target, given, order, measure="arimoto"):
    return _with_fraction(
        json.loads(_core.cond_entropy(_dist(dist), list(target), list(given), str(order), measure))
    )


def joint(scheme, params):
    return json.loads(_core.joint(scheme, _params(params)))


def distribution_table(t, k, n, reduced=False):
    return _core.table(t, k, n, reduced)


def security(scheme, params, order):
    return json.loads(_core.security(scheme, _params(params), str(order)))


def share_bounds(scheme, params, order):
    return json.loads(_core.share_bounds(scheme, _params(params), str(order)))


def ideality(scheme, params):
    return json.loads(_core.ideality(scheme, _params(params)))


def construction_check(scheme, params):
    """Exact claims of the scheme's construction, with the quantities they were decided on."""
    return json.loads(_core.construction_check(scheme, _params(params)))


def non_perfect_witness(scheme, params):
    """Forbidden party list that leaks Shannon information, or None if perfect."""
    return _core.non_perfect_witness(scheme, _params(params))
