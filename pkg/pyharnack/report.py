# -*- coding: utf-8 -*-
"""Report records and their JSON / table rendering.
"""
import dataclasses
import enum
import json
import math
import numbers
import time
from fractions import Fraction

import numpy as np


def to_jsonable(obj):
    """Convert reports, matrices and numpy values into JSON-compatible data.

    Complex numbers become {"re": x, "im": y}; non-finite floats become the
    strings "inf", "-inf" and "nan" so the output stays strict JSON;
    Fractions become floats.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if hasattr(obj, 'to_dict'):
        return to_jsonable(obj.to_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj) if not f.name.startswith('_')}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, numbers.Integral):
        return int(obj)
    if isinstance(obj, (Fraction, numbers.Real)):
        x = float(obj)
        if math.isnan(x):
            return 'nan'
        if math.isinf(x):
            return 'inf' if x > 0 else '-inf'
        return x
    if isinstance(obj, numbers.Complex):
        return {'re': to_jsonable(obj.real), 'im': to_jsonable(obj.imag)}
    raise TypeError("Cannot serialize %s to JSON." % type(obj).__name__)


def dumps(obj):
    """Deterministic JSON text (sorted keys, 2-space indent).
    """
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)


@dataclasses.dataclass
class Check(object):
    """One named comparison in a RunReport.

    relation is one of '<=', '>=', '==' (equal within tolerance), '<', '>'
    (strict) or 'is' (boolean flag that must equal *expected*).
    """
    name: str
    computed: object
    expected: object
    tolerance: float
    passed: bool
    relation: str = '=='
    note: str = ''

    @classmethod
    def compare(cls, name, computed, expected, tolerance, relation='==', note=''):
        """Build a Check by evaluating *relation* with absolute *tolerance*.
        """
        if relation == 'is':
            passed = bool(computed) == bool(expected)
        elif computed is None:
            passed = False
        elif relation == '==':
            passed = abs(computed - expected) <= tolerance
        elif relation == '<=':
            passed = computed <= expected + tolerance
        elif relation == '>=':
            passed = computed >= expected - tolerance
        elif relation == '<':
            passed = computed < expected
        elif relation == '>':
            passed = computed > expected
        else:
            raise ValueError("Unknown relation %r." % relation)
        return cls(name, computed, expected, tolerance, bool(passed), relation, note)

    @classmethod
    def failure(cls, name, note):
        """A Check that did not run because an operation raised.
        """
        return cls(name, None, None, 0.0, False, 'error', note)


@dataclasses.dataclass
class RunReport(object):
    """Outcome of one CLI command: its echo, every check, and the verdict.
    """
    command: dict
    checks: list = dataclasses.field(default_factory=list)
    duration: float = 0.0
    extra: dict = dataclasses.field(default_factory=dict)
    _started: float = dataclasses.field(default_factory=time.perf_counter,
                                        repr=False)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    def finish(self):
        self.duration = time.perf_counter() - self._started
        return self

    def to_dict(self):
        return {
            'command': self.command,
            'checks': [to_jsonable(c) for c in self.checks],
            'passed': self.passed,
            'n_checks': len(self.checks),
            'n_failed': len(self.failures),
            'duration': self.duration,
            'extra': self.extra,
        }

    @classmethod
    def from_dict(cls, obj):
        checks = [Check(**c) for c in obj['checks']]
        return cls(command=obj['command'], checks=checks,
                   duration=obj.get('duration', 0.0), extra=obj.get('extra', {}))

    def to_json(self):
        return dumps(self)

    def render_table(self):
        """Plain-text table with one row per check.
        """
        rows = [('check', 'computed', 'rel', 'expected', 'tol', 'ok')]
        for c in self.checks:
            rows.append((c.name, format_value(c.computed), c.relation,
                         format_value(c.expected), '%.0e' % c.tolerance if c.tolerance else '-',
                         'PASS' if c.passed else 'FAIL'))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = []
        for i, row in enumerate(rows):
            lines.append('  '.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
            if i == 0:
                lines.append('  '.join('-' * w for w in widths))
        verdict = 'PASS' if self.passed else 'FAIL (%d of %d checks)' % (
            len(self.failures), len(self.checks))
        lines.append('')
        lines.append('%s: %s in %.3f s' % (self.command.get('command', 'run'),
                                            verdict, self.duration))
        return '\n'.join(lines)


def format_value(value):
    """Compact text form used in tables (shares to_jsonable's conventions).
    """
    value = to_jsonable(value)
    if value is None:
        return '-'
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return '%.10g' % value
    if isinstance(value, dict) and set(value) == {'re', 'im'}:
        return '%.6g%+.6gi' % (value['re'], value['im'])
    return str(value)
