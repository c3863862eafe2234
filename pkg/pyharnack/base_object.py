# -*- coding: utf-8 -*-
import inspect
import numbers
import operator


_COMPARISONS = {
    '>=': operator.ge,
    '<=': operator.le,
    '>': operator.gt,
    '<': operator.lt,
    '==': operator.eq,
    '!=': operator.ne,
}


class BaseObject(object):
    # Input checking shared by configuration objects, specs and records.

    # Exception class raised by _check_bounds; subclasses narrow this.
    _bounds_error = ValueError

    def _lookup(self, kwd, frame_locals):
        # Values come from the caller's scope first, then from attributes on
        # self (dataclass __post_init__ has only `self` in scope).
        if kwd in frame_locals:
            return frame_locals[kwd]
        try:
            return getattr(self, kwd)
        except AttributeError:
            raise NameError("Cannot check unknown argument %r." % kwd)

    def _check_args(self, **kwds):
        """Basic input type-checking.

        Keyword arguments are the names of variables to check in the
        caller's scope (or attributes of self). Argument values give a type or
        tuple of types allowed. If float or int types are given, any real
        number (but not bool) is accepted.

        Example::

            self._check_args(
                n=int,                    # must be an integer
                max_norm=float,           # any real number
                prescribed=(list, tuple, type(None)))

        """
        # Danger: accessing locals creates a hidden cache of references
        # https://bugs.python.org/issue6116
        caller_locals = inspect.currentframe().f_back.f_locals
        for kwd, types in kwds.items():
            if not isinstance(types, tuple):
                types = (types,)

            val = self._lookup(kwd, caller_locals)
            if self._type_matches(val, types):
                continue

            names = tuple([typ.__name__ for typ in types])
            if len(names) > 2:
                names = ', '.join(names[:-1]) + ', or ' + names[-1]
            else:
                names = ' or '.join(names)
            raise TypeError("Argument %s must be %s (got %s)." %
                            (kwd, names, type(val).__name__))

    @staticmethod
    def _type_matches(val, types):
        if isinstance(val, types):
            # bool is an int subclass; never accept it as a number
            return not (isinstance(val, bool) and bool not in types)
        if isinstance(val, bool):
            return False
        if float in types and isinstance(val, numbers.Real):
            return True
        if int in types and isinstance(val, numbers.Integral):
            return True
        return False

    def _check_bounds(self, **kwds):
        """Input boundary checking.

        Keyword arguments are the names of variables to check in the
        caller's scope (or attributes of self). Argument values give one
        comparison string or a tuple of them; each is an operator followed
        by a number.

        Example::

            self._check_bounds(
                margin=("> 0", "< 1"),
                trials=">= 1")
        """
        caller_locals = inspect.currentframe().f_back.f_locals
        for kwd, bounds in kwds.items():
            if not isinstance(bounds, tuple):
                bounds = (bounds,)
            val = self._lookup(kwd, caller_locals)
            for check in bounds:
                op, limit = self._parse_bound(check)
                if not op(val, limit):
                    bounds = [b.strip() for b in bounds]
                    if len(bounds) < 3:
                        cond = ' and '.join(bounds)
                    else:
                        cond = ', '.join(bounds[:-1]) + ', and ' + bounds[-1]
                    raise self._bounds_error("Argument %s must be %s (got %s)." %
                                             (kwd, cond, val))

    @staticmethod
    def _parse_bound(check):
        check = check.strip()
        for symbol in ('>=', '<=', '==', '!=', '>', '<'):
            if check.startswith(symbol):
                return _COMPARISONS[symbol], float(check[len(symbol):])
        raise SyntaxError("Cannot parse bound %r." % check)
