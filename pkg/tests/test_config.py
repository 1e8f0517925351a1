# -*- coding: utf-8  -*-

import pytest

from twofactor.config import DEFAULT_LIMITS, Limits
from twofactor.errors import InvalidArgumentError


class TestLimits(object):
    def test_defaults(self):
        assert DEFAULT_LIMITS == Limits(16, 14, 9, 7, 14)

    def test_environment_overrides(self):
        environ = {'TWOFACTOR_MAX_ENUMERATION_ORDER': '10', 'UNRELATED': 'x'}
        limits = Limits.from_environment(environ)
        assert limits.max_enumeration_order == 10
        assert limits.max_two_factor_order == 16

    def test_environment_base(self):
        base = DEFAULT_LIMITS._replace(max_packing_order=3)
        limits = Limits.from_environment({}, base=base)
        assert limits.max_packing_order == 3

    def test_bad_value(self):
        environ = {'TWOFACTOR_CROSSING_FALLBACK_ORDER': 'twelve'}
        with pytest.raises(InvalidArgumentError,
                           match='"twelve" as integer at TWOFACTOR_CROSSING_FALLBACK_ORDER'):
            Limits.from_environment(environ)

    def test_solver_order(self):
        limits = DEFAULT_LIMITS.with_solver_order(20)
        assert (limits.max_two_factor_order, limits.max_packing_order) == (20, 20)
        assert limits.max_enumeration_order == DEFAULT_LIMITS.max_enumeration_order
