# -*- coding: utf-8 -*-
import pytest

from pyharnack.base_object import BaseObject
from pyharnack.errors import InvalidSpec


class Spec(BaseObject):
    _bounds_error = InvalidSpec

    def __init__(self, trials):
        self.trials = trials


def test_arg_checks():
    o = BaseObject()
    x = 1
    y = 0.2
    z = "asd"
    w = None
    o._check_args(x=int, y=float, z=str, o=BaseObject, w=(int, type(None)))
    o._check_args(x=(type(None), BaseObject, float), y=float)
    o._check_args(x=float)

    with pytest.raises(TypeError):
        o._check_args(x=str)
    with pytest.raises(TypeError):
        o._check_args(y=int)
    with pytest.raises(TypeError):
        o._check_args(y=type(None))
    with pytest.raises(TypeError):
        o._check_args(x=float, y=int, z=(BaseObject, int))

    flag = True
    with pytest.raises(TypeError):
        o._check_args(flag=int)
    o._check_args(flag=bool)

    o._check_bounds(x='> 0', y=('< 100', '>= 0'))

    with pytest.raises(ValueError):
        o._check_bounds(x='< 1')
    with pytest.raises(ValueError):
        o._check_bounds(y=('< 100', '> 1'))
    with pytest.raises(SyntaxError):
        o._check_bounds(x='~ 1')
    with pytest.raises(NameError):
        o._check_bounds(undefined='> 0')


def test_attribute_lookup():
    s = Spec(5)
    s._check_args(trials=int)
    s._check_bounds(trials='>= 1')
    s.trials = 0
    with pytest.raises(InvalidSpec):
        s._check_bounds(trials='>= 1')
    # InvalidSpec is still a ValueError
    with pytest.raises(ValueError):
        s._check_bounds(trials=('>= 1', '< 10'))
