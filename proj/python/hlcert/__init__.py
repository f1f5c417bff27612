# Copyright 2026 The Authors.
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

"""Exact hard Lefschetz / Hodge-Riemann certificates for PSD Hermitian forms.

Matrices are nested lists whose entries are ints, Fractions, "p/q" strings or
(re, im) pairs of those. Rational results come back as Fractions.
"""

import json
from fractions import Fraction

from hlcert import _hlcert

ParseError = _hlcert.ParseError
SchemaError = _hlcert.SchemaError


def _rational(x):
  if isinstance(x, bool):
    raise TypeError("booleans are not matrix entries")
  if isinstance(x, int):
    return str(x)
  if isinstance(x, Fraction):
    return f"{x.numerator}/{x.denominator}"
  if isinstance(x, str):
    return x
  raise TypeError(f"unsupported entry {x!r}; floats are not accepted")


def _entry(x):
  if isinstance(x, tuple):
    re, im = x
    return {"re": _rational(re), "im": _rational(im)}
  return {"re": _rational(x), "im": "0"}


def _matrix(m):
  return [[_entry(x) for x in row] for row in m]


def _matrix_json(m):
  return json.dumps(_matrix(m))


def _matrices_json(mats):
  return json.dumps([_matrix(m) for m in mats])


def _fraction(s):
  return Fraction(s)


def rank(m):
  return _hlcert.rank(_matrix_json(m))


def is_psd(m):
  return _hlcert.is_psd(_matrix_json(m))


def char_poly(m):
  """Returns (e_1, ..., e_n), det(tI - M) = sum_k (-1)^k e_k t^(n-k)."""
  return [_fraction(s) for s in json.loads(_hlcert.char_poly(_matrix_json(m)))]


def mixed_discriminant(mats):
  return _fraction(_hlcert.mixed_discriminant(_matrices_json(mats)))


def intersection_number(mats):
  return _fraction(_hlcert.intersection_number(_matrices_json(mats)))


def criterion_hl(mats, n, p, q):
  return json.loads(_hlcert.criterion_hl(_matrices_json(mats), n, p, q))


def direct_hl(mats, n, p, q):
  return json.loads(_hlcert.direct_hl(_matrices_json(mats), n, p, q))


def hr_certify(mats, n, p, q, eta):
  return json.loads(_hlcert.hr_certify(_matrices_json(mats), n, p, q, _matrix_json(eta)))


def lorentzian_signature(mats, n):
  return _hlcert.lorentzian_signature(_matrices_json(mats), n)


def rank_table(mats, offset=0):
  return json.loads(_hlcert.rank_table(_matrices_json(mats), offset))


def check_axioms(table):
  return json.loads(_hlcert.check_axioms(json.dumps(table)))


def enumerate_points(table):
  return [tuple(p) for p in _hlcert.enumerate_points(json.dumps(table))]


def hl_support(mats):
  return [tuple(p) for p in _hlcert.hl_support(_matrices_json(mats))]


def run(instance):
  """Runs an instance (dict or JSON text); returns (report, exit_code)."""
  text = instance if isinstance(instance, str) else json.dumps(instance)
  report, code = _hlcert.run(text)
  return json.loads(report), code


def generate(seed, n, ranks, entry_bound=2):
  return json.loads(_hlcert.generate(seed, n, list(ranks), entry_bound))
