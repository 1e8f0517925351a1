# -*- coding: utf-8 -*-

class TwoFactorError(ValueError):
    """
    Base class for errors raised by :mod:`twofactor`.  The ``where``
    keyword names the object (graph, vertex, byte offset, ...) the
    problem was found in, and is appended to the message.
    """

    def __init__(self, *args, **kwargs):
        self.args = args
        self.message = args[0]
        self.where = kwargs.pop('where', None)

    def __str__(self):
        base_str = ValueError.__str__(self)
        if self.where is None:
            return base_str
        return '%s at %s' % (base_str, self.where)


class Graph6ParseError(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.offset = kwargs.pop('offset')
        TwoFactorError.__init__(self, *args, where='byte %d' % self.offset)


class EdgeListParseError(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.line = kwargs.pop('line')
        TwoFactorError.__init__(self, *args, where='line %d' % self.line)


class InvalidArgumentError(TwoFactorError):
    pass


class CapacityError(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.order = kwargs.pop('order')
        self.limit = kwargs.pop('limit')
        TwoFactorError.__init__(self, *args, **kwargs)

    def __str__(self):
        return '%s (order %d exceeds limit %d)' % (TwoFactorError.__str__(self),
                                                    self.order, self.limit)


class PreconditionViolation(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.vertex = kwargs.pop('vertex')
        TwoFactorError.__init__(self, *args, where='vertex %d' % self.vertex)


class ContextUnavailableError(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.attachment_counts = kwargs.pop('attachment_counts')
        TwoFactorError.__init__(self, *args, **kwargs)

    def __str__(self):
        return '%s; attachments per cycle: %s' % (TwoFactorError.__str__(self),
                                                  list(self.attachment_counts))


class SystemValidationError(TwoFactorError):
    def __init__(self, *args, **kwargs):
        self.report = kwargs.pop('report')
        TwoFactorError.__init__(self, *args, **kwargs)

    def __str__(self):
        return '%s: %s' % (TwoFactorError.__str__(self), self.report.message)


class InternalInvariantError(TwoFactorError):
    pass
