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

import math
from fractions import Fraction

import pytest

import minss


def test_uniform_entropy():
    r = minss.entropy({0: "1/4", 1: "1/4", 2: "1/4", 3: "1/4"}, 2)
    assert r["bits"] == pytest.approx(2.0, abs=1e-12)
    assert r["prelog"] == Fraction(1, 4)


def test_pi1_conditional_min_entropy():
    joint = minss.joint("pi1", {"n": 2, "p": "3/4"})
    avg = minss.cond_entropy(joint, ["S"], ["V2"], "inf")
    assert avg["prelog"] == Fraction(3, 4)
    assert avg["bits"] == pytest.approx(math.log2(4 / 3), abs=1e-12)
    worst = minss.cond_entropy(joint, ["S"], ["V2"], "inf", measure="worst")
    assert worst["prelog"] == Fraction(9, 10)


def test_order_zero_conditional_rejected():
    joint = minss.joint("pi1", {"n": 2, "p": "3/4"})
    with pytest.raises(minss.UnsupportedOrderError):
        minss.cond_entropy(joint, ["S"], ["V2"], "0")


def test_share_combine_round_trips():
    for seed in range(10):
        for s in range(2):
            b = minss.share("pi1", {"n": 3, "p": Fraction(3, 4)}, s, seed)
            assert minss.combine(b) == s
    b = minss.share("pi2", {"t": 5, "k": 2, "n": 3, "p": "3/8"}, 3, 7)
    assert minss.combine(b, [1, 3]) == 3
    g = {"n": 3, "min_qualified": [[1, 2], [1, 3], [2, 3]], "p": "3/4"}
    b = minss.share("general", g, 1, 1)
    assert minss.combine(b, [2, 3]) == 1
    with pytest.raises(minss.NotQualifiedError):
        minss.combine(b, [2])


def test_share_is_deterministic():
    params = {"t": 5, "k": 2, "n": 3, "p": "1/2"}
    assert minss.share("pi2", params, 4, 99) == minss.share("pi2", params, 4, 99)


def test_bad_params():
    with pytest.raises(minss.InvalidArgumentError):
        minss.share("pi1", {"n": 3, "p": "1/2"}, 0, 1)
    with pytest.raises(minss.Error):
        minss.share("pi2", {"t": 3, "k": 2, "n": 3, "p": "1/2"}, 0, 1)


def test_distribution_table():
    assert minss.distribution_table(2, 2, 2, reduced=True) == [[0, 0, 0], [0, 1, 0], [1, 1, 1], [1, 0, 1]]
    assert len(minss.distribution_table(5, 2, 3)) == 25


def test_verification_reports():
    assert minss.security("pi1", {"n": 3, "p": "3/4"}, "inf")["epsilon"] == 0.0
    assert minss.non_perfect_witness("pi1", {"n": 3, "p": "3/4"}) == [3]
    assert minss.non_perfect_witness("pi2", {"t": 5, "k": 2, "n": 3, "p": "1/25"}) is None
    assert minss.ideality("pi2", {"t": 5, "k": 2, "n": 3, "p": "3/8"})["ideal"]
    assert minss.construction_check("pi2", {"t": 5, "k": 2, "n": 4, "p": "1/5"})["pass"]
    assert minss.construction_check("general", {"n": 3, "min_qualified": [[1, 2], [1, 3], [2, 3]], "p": "3/4"})["pass"]
    assert minss.share_bounds("pi1", {"n": 3, "p": "3/4"}, "2")["pass"]
