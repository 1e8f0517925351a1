# -*- coding: utf-8  -*-

import pytest

from twofactor.cycles import ValidationReport
from twofactor.errors import (CapacityError, ContextUnavailableError, EdgeListParseError,
                              Graph6ParseError, InternalInvariantError, InvalidArgumentError,
                              PreconditionViolation, SystemValidationError, TwoFactorError)


class TestMessages(object):
    @pytest.mark.parametrize(
        'error, text',
        [(TwoFactorError('oops'), 'oops'),
         (TwoFactorError('oops', where='graph Bw'), 'oops at graph Bw'),
         (Graph6ParseError('bad byte', offset=3), 'bad byte at byte 3'),
         (EdgeListParseError('bad line', line=2), 'bad line at line 2'),
         (PreconditionViolation('not insertible', vertex=5), 'not insertible at vertex 5'),
         (CapacityError('too big', order=20, limit=16), 'too big (order 20 exceeds limit 16)'),
         (CapacityError('too big', order=20, limit=16, where='Bw'),
          'too big at Bw (order 20 exceeds limit 16)'),
         (ContextUnavailableError('few', attachment_counts=(1, 0)),
          'few; attachments per cycle: [1, 0]'),
         (SystemValidationError('invalid', report=ValidationReport(
             False, 'missing-edge', 0, None, (1, 3), 'member 0 uses non-edge (1, 3)')),
          'invalid: member 0 uses non-edge (1, 3)')],
        ids=['plain', 'where', 'graph6', 'edge-list', 'precondition', 'capacity',
             'capacity-where', 'context', 'validation'])
    #
    def test_str(self, error, text):
        assert str(error) == text

    @pytest.mark.parametrize(
        'cls',
        [Graph6ParseError, EdgeListParseError, InvalidArgumentError, CapacityError,
         PreconditionViolation, ContextUnavailableError, SystemValidationError,
         InternalInvariantError],
        ids=lambda cls: cls.__name__)
    #
    def test_hierarchy(self, cls):
        assert issubclass(cls, TwoFactorError)
        assert issubclass(cls, ValueError)

    def test_attributes(self):
        e = Graph6ParseError('bad byte', offset=3)
        assert (e.message, e.offset, e.where) == ('bad byte', 3, 'byte 3')
