# -*- coding: utf-8 -*-

import functools
import numbers

from twofactor.errors import InvalidArgumentError


@functools.total_ordering
class ExtendedValue(object):
    """
    A degree-sum value: a finite nonnegative integer, or
    :data:`ExtendedValue.INFINITY` when there is no independent set of
    the size asked about.  Compares totally with integers, fractions
    and other extended values; infinity is greater than all of them.

    >>> ExtendedValue(6) >= 6
    True
    >>> ExtendedValue.INFINITY >= 10 ** 9
    True
    >>> ExtendedValue(6) < ExtendedValue.INFINITY
    True
    >>> str(ExtendedValue.INFINITY)
    '+inf'
    """

    __slots__ = ('value',)

    INFINITY = None  # filled in below

    def __init__(self, value):
        if value is not None:
            if not isinstance(value, numbers.Integral) or value < 0:
                raise InvalidArgumentError('expected nonnegative integer but got %r' % (value,))
            value = int(value)
        self.value = value

    @property
    def is_finite(self):
        return self.value is not None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    @staticmethod
    def _other_key(other):
        if isinstance(other, ExtendedValue):
            return other._key()
        if isinstance(other, numbers.Real):
            return (0, other)
        return None

    def __eq__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() == key

    def __lt__(self, other):
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() < key

    def __hash__(self):
        return hash(self.value) if self.value is not None else hash('+inf')

    def to_json(self):
        return self.value if self.is_finite else '+inf'

    def __str__(self):
        return '%d' % self.value if self.is_finite else '+inf'

    def __repr__(self):
        if self.is_finite:
            return 'ExtendedValue(%d)' % self.value
        return 'ExtendedValue.INFINITY'


ExtendedValue.INFINITY = ExtendedValue(None)
