# -*- coding: utf-8 -*-
import itertools
import math
from dataclasses import dataclass

from .base_object import BaseObject
from .errors import InvalidIndexSet, ParseError


# Index sets are enumerated exhaustively up to this dimension.
EXHAUSTIVE_MAX_N = 5
SAMPLES_PER_K = 50


@dataclass(frozen=True)
class IndexSet(BaseObject):
    """A strictly increasing sequence 1 <= i_1 < ... < i_k <= n (1-based).

    Parameters
    ----------
    indices : sequence of int
        The (1-based) indices.
    n : int, optional
        When given, the indices are validated against [1, n].
    """
    indices: tuple
    n: int = None

    _bounds_error = InvalidIndexSet

    def __post_init__(self):
        try:
            values = tuple(int(i) for i in self.indices)
        except (TypeError, ValueError):
            raise InvalidIndexSet("Index set must contain integers (got %r)." %
                                  (self.indices,))
        object.__setattr__(self, 'indices', values)
        if len(values) == 0:
            raise InvalidIndexSet("Index set must not be empty.")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise InvalidIndexSet("Index set must be strictly increasing (got %s)."
                                  % (values,))
        if values[0] < 1:
            raise InvalidIndexSet("Indices are 1-based (got %s)." % (values,))
        if self.n is not None:
            self.validate(self.n)

    @property
    def k(self):
        return len(self.indices)

    @classmethod
    def coerce(cls, s, n):
        """An IndexSet from *s* (an IndexSet or a sequence), validated against n.
        """
        if not isinstance(s, cls):
            s = cls(tuple(s))
        return s.validate(n)

    def validate(self, n):
        """Raise InvalidIndexSet unless every index lies in [1, n].
        """
        if self.indices[-1] > n:
            raise InvalidIndexSet("Index %d exceeds the dimension %d." %
                                  (self.indices[-1], n))
        return self

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return self.k

    @classmethod
    def parse(cls, text, n=None):
        """Parse "1,3,4" into an IndexSet.
        """
        try:
            values = [int(tok) for tok in str(text).replace(' ', '').split(',') if tok]
        except ValueError:
            raise ParseError("Cannot parse index list %r." % text)
        return cls(tuple(values), n=n)

    def to_dict(self):
        return {'k': self.k, 'indices': list(self.indices)}

    def __str__(self):
        return '(%s)' % ','.join(str(i) for i in self.indices)


def all_index_sets(n, k=None):
    """Every index set of [1, n] (of size k when given), in lexicographic order.
    """
    sizes = [k] if k is not None else range(1, n + 1)
    for size in sizes:
        for combo in itertools.combinations(range(1, n + 1), size):
            yield IndexSet(combo)


def sample_index_sets(n, k, count, rng):
    """*count* distinct random index sets of size k (all of them if fewer exist).
    """
    if math.comb(n, k) <= count:
        return list(all_index_sets(n, k))
    seen = set()
    while len(seen) < count:
        pick = rng.choice(n, size=k, replace=False)
        seen.add(tuple(sorted(int(i) + 1 for i in pick)))
    return [IndexSet(c) for c in sorted(seen)]


def index_sets(n, rng=None, k=None, exhaustive_max=EXHAUSTIVE_MAX_N,
               per_k=SAMPLES_PER_K):
    """Index sets to check for an n x n matrix.

    Exhaustive for n <= exhaustive_max; otherwise *per_k* seeded samples for
    every k (requires *rng*).
    """
    if n <= exhaustive_max:
        return list(all_index_sets(n, k))
    if rng is None:
        raise ValueError("Sampling index sets for n=%d requires an rng." % n)
    sizes = [k] if k is not None else range(1, n + 1)
    out = []
    for size in sizes:
        out.extend(sample_index_sets(n, size, per_k, rng))
    return out
