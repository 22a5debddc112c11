# Copyright 2026 The cwsenum Authors
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

"""Exact weight enumerators of codeword stabilized quantum codes.

Polynomials are returned as lists of ``fractions.Fraction`` coefficients,
lowest degree first.
"""

import json
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import _core
from ._core import Code, CodeError, catalog_names

__all__ = [
    "Code",
    "CodeError",
    "catalog_names",
    "enumerator_A",
    "enumerator_B",
    "pairwise_B",
    "oracle",
    "macwilliams",
    "quantum_distance",
    "verify",
]

Polynomial = List[Fraction]


def _to_fractions(pairs) -> Polynomial:
    return [Fraction(int(num), int(den)) for num, den in pairs]


def _to_pairs(coefficients: Sequence) -> List[Tuple[str, str]]:
    out = []
    for c in coefficients:
        f = Fraction(c)
        out.append((str(f.numerator), str(f.denominator)))
    return out


def enumerator_A(code: Code) -> Polynomial:
    return _to_fractions(_core.enumerator_A(code))


def enumerator_B(code: Code) -> Polynomial:
    return _to_fractions(_core.enumerator_B(code))


def pairwise_B(code: Code) -> Polynomial:
    return _to_fractions(_core.pairwise_B(code))


def oracle(code: Code, max_n: Optional[int] = None) -> Tuple[Polynomial, Polynomial, float]:
    a, b, deviation = _core.oracle(code, max_n)
    return _to_fractions(a), _to_fractions(b), deviation


def macwilliams(coefficients: Sequence, n: int, M, q: int = 2) -> Polynomial:
    f = Fraction(M)
    return _to_fractions(_core.macwilliams(_to_pairs(coefficients), n, (str(f.numerator), str(f.denominator)), q))


def quantum_distance(A: Sequence, B: Sequence) -> Optional[int]:
    return _core.quantum_distance(_to_pairs(A), _to_pairs(B))


def verify(code: Code, max_n: Optional[int] = None) -> dict:
    return json.loads(_core.verify_json(code, max_n))
