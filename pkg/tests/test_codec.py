import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from starmat import codec
from starmat.errors import DecodeError
from starmat.group import hn_decompose
from starmat.hyperbolic import HypRotation, Motion, Vec2, phi_real, psi
from starmat.matrix import Matrix
from starmat.report import CheckReport

ENTRY = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 100)


def square(n):
    return st.lists(ENTRY, min_size=n * n, max_size=n * n).map(lambda e: Matrix.from_flat(n, e))


def test_matrix_schema():
    m = Matrix([[1, 2], [3, 4]])
    assert codec.dumps(m) == '{"type":"matrix","n":2,"entries":[["1","2"],["3","4"]]}'
    assert codec.loads(codec.dumps(m)) == m


def test_scalar_encodings():
    assert codec.encode_value(F(-3, 7)) == "-3/7"
    assert codec.encode_value(0.25) == 0.25
    assert codec.loads('"-3/7"') == F(-3, 7)
    assert isinstance(codec.loads("0.25"), float)


def test_motion_and_rotation_schema():
    t = Motion(HypRotation(F(5, 4), F(3, 4)), Vec2(1, 1))
    assert codec.dumps(t) == '{"rot":{"c":"5/4","s":"3/4"},"u":["1","1"]}'
    assert codec.loads(codec.dumps(t)) == t
    assert codec.loads(codec.dumps(phi_real(1.5))) == phi_real(1.5)


def test_factorization_schema():
    f = hn_decompose(Matrix([[2, 6], [8, 4]]))
    obj = codec.encode_value(f)
    assert set(obj) == {"h", "n"}
    assert codec.decode_value(obj) == f


def test_report_roundtrip():
    r = CheckReport("assoc2", "rational", 10, 3, "random",
                    [{"trial": 4, "detail": "x", "inputs": {}}], 1.23456)
    obj = json.loads(codec.dumps(r))
    assert obj["passed"] is False and obj["elapsed_ms"] == 1.235
    back = codec.loads(codec.dumps(r))
    assert (back.property, back.seed, back.failures) == (r.property, r.seed, r.failures)


@pytest.mark.parametrize("text,path", [
    ('{"type":"matrix","n":2,"entries":[["1"]]}', "$.entries"),
    ('{"type":"matrix","n":2,"entries":[["1","2"],["3"]]}', "$.entries[1]"),
    ('{"type":"matrix","n":1,"entries":[["1/0"]]}', "$.entries[0][0]"),
    ('{"type":"matrix","n":0,"entries":[]}', "$.n"),
    ('{"rot":{"c":"1","s":"1"},"u":["0","0"]}', "$.rot"),
    ('{"rot":{"c":"1","s":"0"},"u":["0"]}', "$.u"),
    ('{"what":1}', "$"),
    ("[1, 2", "$"),
    ("null", "$"),
])
def test_decode_errors(text, path):
    with pytest.raises(DecodeError) as info:
        codec.loads(text)
    assert info.value.path == path


values = st.one_of(
    ENTRY, st.integers(1, 4).flatmap(square),
    st.tuples(ENTRY, ENTRY).map(lambda t: Vec2(*t)),
    st.fractions(min_value=F(1, 10), max_value=10, max_denominator=10).map(psi),
    st.tuples(st.fractions(min_value=1, max_value=5, max_denominator=5), ENTRY, ENTRY)
      .map(lambda t: Motion(psi(t[0]), Vec2(t[1], t[2]))),
    st.booleans(),
)


@given(values)
def test_decode_encode_identity(v):
    assert codec.loads(codec.dumps(v)) == v
