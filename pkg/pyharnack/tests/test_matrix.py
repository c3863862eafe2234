# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest

from pyharnack import ComplexMatrix, ParseError


def test_construction():
    a = ComplexMatrix([[0, 0.1], [0, 0]])
    assert a.n == 2
    assert len(a) == 2
    assert a[0, 1] == 0.1
    assert a.asarray().dtype == complex
    assert np.array(a).shape == (2, 2)

    with pytest.raises(ValueError):
        ComplexMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        ComplexMatrix(np.zeros((0, 0)))
    with pytest.raises(ValueError):
        ComplexMatrix([[np.nan]])
    with pytest.raises(ValueError):
        ComplexMatrix([[1, np.inf], [0, 1]])
    with pytest.raises(TypeError):
        ComplexMatrix([['a']])


def test_immutable():
    data = np.eye(2, dtype=complex)
    a = ComplexMatrix(data)
    data[0, 0] = 5
    assert a[0, 0] == 1
    with pytest.raises(TypeError):
        a[0, 0] = 2
    # asarray is a private copy
    arr = a.asarray()
    arr[0, 0] = 7
    assert a[0, 0] == 1


def test_arithmetic():
    a = ComplexMatrix([[1, 2j], [0, 1]])
    i = ComplexMatrix.identity(2)
    assert (a + i) == ComplexMatrix([[2, 2j], [0, 2]])
    assert (a - i) == ComplexMatrix([[0, 2j], [0, 0]])
    assert (i - a) == -(a - i)
    assert (a @ i) == a
    assert (2 * a) == (a * 2)
    assert (a / 2).allclose([[0.5, 1j], [0, 0.5]])
    assert (np.eye(2) - a) == (i - a)
    assert (np.eye(2) @ a) == a
    assert a.H == ComplexMatrix([[1, 0], [-2j, 1]])
    with pytest.raises(ValueError):
        a + ComplexMatrix.identity(3)
    assert hash(a) == hash(ComplexMatrix(a))


def test_norms_and_predicates():
    a = ComplexMatrix([[3, 0], [0, 4j]])
    assert a.norm() == 5
    assert a.norm('max') == 4
    with pytest.raises(ValueError):
        a.norm('nuclear')
    assert not a.is_hermitian()
    assert ComplexMatrix([[1, 1j], [-1j, 2]]).is_hermitian()
    assert ComplexMatrix.diag([1, 2]) == ComplexMatrix([[1, 0], [0, 2]])
    assert ComplexMatrix.zeros(3).norm() == 0


def test_json(tmp_path):
    real = ComplexMatrix([[0.5, 0], [0, 0.2]])
    d = real.to_dict()
    assert d == {'n': 2, 're': [[0.5, 0.0], [0.0, 0.2]]}
    cplx = ComplexMatrix([[1j]])
    assert cplx.to_dict() == {'n': 1, 're': [[0.0]], 'im': [[1.0]]}
    assert ComplexMatrix.from_json(cplx.to_json()) == cplx

    path = tmp_path / 'a.json'
    real.save(str(path))
    assert ComplexMatrix.load(str(path)) == real
    assert json.loads(path.read_text())['n'] == 2

    # "n" is optional
    assert ComplexMatrix.from_dict({'re': [[0.5]]}).n == 1


@pytest.mark.parametrize('text', [
    'not json',
    '[1, 2]',
    '{"im": [[1]]}',
    '{"re": [[1, 2]]}',
    '{"re": [[1]], "im": [[1, 2]]}',
    '{"n": 3, "re": [[1]]}',
    '{"re": [["x"]]}',
    '{"re": [[1e999]]}',
])
def test_json_errors(text):
    with pytest.raises(ParseError):
        ComplexMatrix.from_json(text)


def test_load_missing(tmp_path):
    with pytest.raises(ParseError):
        ComplexMatrix.load(str(tmp_path / 'missing.json'))
