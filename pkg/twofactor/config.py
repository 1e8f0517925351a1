# -*- coding: utf-8 -*-

import collections
import os

from twofactor.errors import InvalidArgumentError


class Limits(collections.namedtuple('_Limits',
                                    'max_two_factor_order max_packing_order'
                                    ' max_enumeration_order max_labeled_enumeration_order'
                                    ' crossing_fallback_order')):
    """
    Size limits for the exponential parts of the library.  Solvers raise
    :class:`twofactor.errors.CapacityError` rather than run on graphs
    of larger order.

    >>> DEFAULT_LIMITS.max_two_factor_order
    16
    >>> DEFAULT_LIMITS._replace(max_packing_order=20).max_packing_order
    20
    """

    env_prefix = 'TWOFACTOR_'

    @classmethod
    def from_environment(cls, environ=None, base=None):
        """
        Return a copy of ``base`` (default :data:`DEFAULT_LIMITS`) with
        each field overridden by the environment variable
        ``TWOFACTOR_<FIELD>`` when that is set.
        """
        environ = os.environ if environ is None else environ
        base = DEFAULT_LIMITS if base is None else base
        overrides = {}
        for field in cls._fields:
            key = cls.env_prefix + field.upper()
            if key not in environ:
                continue
            try:
                overrides[field] = int(environ[key])
            except ValueError:
                raise InvalidArgumentError('could not parse "%.40s" as integer' % environ[key],
                                           where=key)
        return base._replace(**overrides)

    def with_solver_order(self, order):
        return self._replace(max_two_factor_order=order, max_packing_order=order)


DEFAULT_LIMITS = Limits(max_two_factor_order=16,
                        max_packing_order=14,
                        max_enumeration_order=9,
                        max_labeled_enumeration_order=7,
                        crossing_fallback_order=14)
