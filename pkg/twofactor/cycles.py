# -*- coding: utf-8 -*-

"""
Oriented cycles and paths, and systems of disjoint ones inside a host
graph.

For a vertex ``x`` of an oriented member, ``successor(x)`` and
``predecessor(x)`` are its neighbours along and against the
orientation; ``segment(a, b)`` is the path from ``a`` to ``b`` along the
orientation.
"""

import collections

from twofactor.errors import InvalidArgumentError


def _check_distinct(vertices, what):
    if len(set(vertices)) != len(vertices):
        seen = set()
        for v in vertices:
            if v in seen:
                raise InvalidArgumentError('vertex %d repeated in %s' % (v, what))
            seen.add(v)


class OrientedPath(object):
    """
    A sequence of distinct vertices, read first to last.  Single-vertex
    paths are allowed.

    >>> p = OrientedPath([4, 2, 7])
    >>> p.successor(2), p.predecessor(2), p.successor(7)
    (7, 4, None)
    """

    __slots__ = ('vertices', '_index')

    kind = 'P'

    def __init__(self, vertices):
        vertices = tuple(vertices)
        if not vertices:
            raise InvalidArgumentError('path needs at least one vertex')
        _check_distinct(vertices, 'path')
        self.vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}

    @property
    def first(self):
        return self.vertices[0]

    @property
    def last(self):
        return self.vertices[-1]

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise InvalidArgumentError('vertex %d not on %r' % (v, self))

    def successor(self, v):
        i = self.index(v)
        return self.vertices[i + 1] if i + 1 < len(self.vertices) else None

    def predecessor(self, v):
        i = self.index(v)
        return self.vertices[i - 1] if i > 0 else None

    def segment(self, start, stop):
        """Subpath from ``start`` to ``stop``; ``stop`` must not precede ``start``."""
        i, j = self.index(start), self.index(stop)
        if j < i:
            raise InvalidArgumentError('vertex %d precedes %d on %r' % (stop, start, self))
        return OrientedPath(self.vertices[i:j + 1])

    def reversed(self):
        return OrientedPath(self.vertices[::-1])

    def edges(self):
        """Consecutive pairs ``(w, w+)`` in orientation order."""
        return list(zip(self.vertices, self.vertices[1:]))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        if not isinstance(other, OrientedPath):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(('P', self.vertices))

    def __repr__(self):
        return 'OrientedPath(%r)' % (list(self.vertices),)


class OrientedCycle(object):
    """
    A cyclic sequence of at least three distinct vertices.  The stored
    sequence is rotated to start at its smallest vertex; the orientation
    is kept as given, so a cycle and its reverse are different values.

    >>> c = OrientedCycle([3, 4, 5, 1, 2])
    >>> c.vertices
    (1, 2, 3, 4, 5)
    >>> c.segment(4, 2).vertices
    (4, 5, 1, 2)
    >>> c.reversed().vertices
    (1, 5, 4, 3, 2)
    """

    __slots__ = ('vertices', '_index')

    kind = 'C'

    def __init__(self, vertices):
        vertices = tuple(vertices)
        if len(vertices) < 3:
            raise InvalidArgumentError('cycle needs at least 3 vertices but got %d'
                                       % len(vertices))
        _check_distinct(vertices, 'cycle')
        start = vertices.index(min(vertices))
        self.vertices = vertices[start:] + vertices[:start]
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise InvalidArgumentError('vertex %d not on %r' % (v, self))

    def successor(self, v):
        return self.vertices[(self.index(v) + 1) % len(self.vertices)]

    def predecessor(self, v):
        return self.vertices[self.index(v) - 1]

    def starting_at(self, v):
        """The vertex sequence rotated to begin at ``v``."""
        i = self.index(v)
        return self.vertices[i:] + self.vertices[:i]

    def segment(self, start, stop):
        """
        The path from ``start`` to ``stop`` along the orientation,
        wrapping past the end as needed; the single vertex when
        ``start == stop``.
        """
        rotated = self.starting_at(start)
        return OrientedPath(rotated[:rotated.index(stop) + 1])

    def reversed(self):
        return OrientedCycle(self.vertices[::-1])

    def edges(self):
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        if not isinstance(other, OrientedCycle):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(('C', self.vertices))

    def __repr__(self):
        return 'OrientedCycle(%r)' % (list(self.vertices),)


def segment(c, start, stop):
    return c.segment(start, stop)


def reverse(c):
    return c.reversed()


class ValidationReport(collections.namedtuple('ValidationReport',
                                              'ok kind member vertex edge message')):
    """
    Outcome of :meth:`CycleSystem.validate`.  Truthy exactly when the
    system is valid; otherwise ``kind`` is one of ``'vertex-range'``,
    ``'shared-vertex'`` or ``'missing-edge'`` and ``vertex`` / ``edge``
    name the first offence found.
    """

    def __bool__(self):
        return self.ok


VALID = ValidationReport(True, None, None, None, None, 'ok')


Remainder = collections.namedtuple('Remainder', 'vertices components')


class CycleSystem(object):
    """
    Pairwise disjoint oriented cycles and paths (the *members*) in a
    host graph.  Construction does not check validity; call
    :meth:`validate`.

    >>> from twofactor.generators import complete_graph
    >>> sys = CycleSystem(complete_graph(7), [OrientedCycle([0, 1, 2]),
    ...                                       OrientedCycle([3, 4, 5])])
    >>> bool(sys.validate()), sys.total_order(), sorted(sys.remainder().vertices)
    (True, 6, [6])
    """

    __slots__ = ('host', 'members', '_owner')

    def __init__(self, host, members):
        self.host = host
        self.members = tuple(members)
        owner = {}
        for i, member in enumerate(self.members):
            for v in member:
                owner.setdefault(v, i)
        self._owner = owner

    @property
    def cycles(self):
        return [m for m in self.members if m.kind == 'C']

    @property
    def paths(self):
        return [m for m in self.members if m.kind == 'P']

    def owner(self, v):
        """Index of the member holding ``v``, or ``None``."""
        return self._owner.get(v)

    def covered(self):
        return frozenset(self._owner)

    def total_order(self):
        return sum(len(m) for m in self.members)

    def remainder(self):
        """
        The vertices of the host on no member, and the connected
        components of the subgraph they induce.
        """
        rest = frozenset(v for v in self.host.vertices if v not in self._owner)
        return Remainder(rest, self.host.components(rest))

    def is_spanning(self):
        return len(self._owner) == self.host.n

    def with_members(self, replacements):
        """Copy with ``members[i]`` replaced for each ``i -> member`` in ``replacements``."""
        members = list(self.members)
        for i, member in replacements.items():
            members[i] = member
        return CycleSystem(self.host, members)

    def without_member(self, i):
        return CycleSystem(self.host, self.members[:i] + self.members[i + 1:])

    def validate(self):
        n = self.host.n
        seen = {}
        for i, member in enumerate(self.members):
            for v in member:
                if not 0 <= v < n:
                    return ValidationReport(False, 'vertex-range', i, v, None,
                                            'vertex %d out of range for %d vertices' % (v, n))
                if v in seen:
                    return ValidationReport(False, 'shared-vertex', i, v, None,
                                            'vertex %d on members %d and %d' % (v, seen[v], i))
                seen[v] = i
            for w, w_next in member.edges():
                if not self.host.adjacent(w, w_next):
                    return ValidationReport(False, 'missing-edge', i, None, (w, w_next),
                                            'member %d uses non-edge (%d, %d)'
                                            % (i, w, w_next))
        return VALID

    def dump(self):
        """One line per member: ``C: v1 v2 ...`` or ``P: v1 v2 ...``."""
        return ''.join('%s: %s\n' % (m.kind, ' '.join(map(str, m))) for m in self.members)

    def __eq__(self, other):
        if not isinstance(other, CycleSystem):
            return NotImplemented
        return self.host == other.host and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return 'CycleSystem(%r)' % (list(self.members),)
