# -*- coding: utf-8 -*-

from collections import deque
import itertools

import numpy as np

from twofactor.errors import InvalidArgumentError, EdgeListParseError


def bits_of(mask):
    """
    Yield the positions of the set bits of ``mask``, lowest first.

    >>> list(bits_of(0b10110))
    [1, 2, 4]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph(object):
    """
    Immutable undirected simple graph on the vertices ``0 .. n-1``.

    The adjacency relation is held twice: as a read-only boolean
    ``numpy`` matrix (used for degree arithmetic and graph6 packing) and
    as one integer bitmask per vertex (used by the search code, where
    membership tests and set operations on vertex sets are the inner
    loop).

    :param int n: number of vertices
    :param edges: pairs ``(u, v)`` with ``u != v``; duplicates are ignored

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.adjacent(0, 1), g.adjacent(0, 2)
    (True, False)
    >>> g.degree(1)
    2
    >>> sorted(g.edges())
    [(0, 1), (1, 2)]
    """

    __slots__ = ('n', 'adjacency', 'masks', '_neighbours', '_degrees', '_hash')

    def __init__(self, n, edges=()):
        if n < 0:
            raise InvalidArgumentError('vertex count must be nonnegative but got %d' % n)
        adjacency = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError('edge (%d, %d) out of range for %d vertices'
                                           % (u, v, n))
            if u == v:
                raise InvalidArgumentError('self-loop at vertex %d' % u)
            adjacency[u, v] = adjacency[v, u] = True
        self._init_from_matrix(n, adjacency)

    def _init_from_matrix(self, n, adjacency):
        adjacency.setflags(write=False)
        self.n = n
        self.adjacency = adjacency
        self._neighbours = tuple(frozenset(np.flatnonzero(adjacency[v]).tolist())
                                 for v in range(n))
        self.masks = tuple(mask_of(nbrs) for nbrs in self._neighbours)
        self._degrees = adjacency.sum(axis=1).astype(np.int64)
        self._degrees.setflags(write=False)
        self._hash = None

    @classmethod
    def from_adjacency_matrix(cls, adjacency):
        """
        Construct from a square symmetric boolean (or 0/1) matrix with
        zero diagonal.
        """
        adjacency = np.array(adjacency, dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise InvalidArgumentError('expected square matrix but got shape %s'
                                       % (adjacency.shape,))
        if adjacency.diagonal().any():
            raise InvalidArgumentError('adjacency matrix has nonzero diagonal')
        if not (adjacency == adjacency.T).all():
            raise InvalidArgumentError('adjacency matrix is not symmetric')
        g = cls.__new__(cls)
        g._init_from_matrix(adjacency.shape[0], adjacency)
        return g

    # Basic queries

    def adjacent(self, u, v):
        return bool(self.masks[u] >> v & 1)

    def neighbours(self, v):
        return self._neighbours[v]

    def degree(self, v):
        return int(self._degrees[v])

    @property
    def degrees(self):
        """Read-only ``numpy`` vector of vertex degrees."""
        return self._degrees

    def degree_into(self, v, vertices):
        """Number of neighbours of ``v`` in ``vertices``."""
        return len(self._neighbours[v].intersection(vertices))

    def min_degree(self):
        return int(self._degrees.min()) if self.n else 0

    @property
    def vertices(self):
        return range(self.n)

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self._neighbours[u]):
                if u < v:
                    yield (u, v)

    def n_edges(self):
        return int(self._degrees.sum()) // 2

    def is_independent(self, vertices):
        vertices = list(vertices)
        vmask = mask_of(vertices)
        return all(self.masks[v] & vmask == 0 for v in vertices)

    # Components and connectivity

    def components(self, vertices=None):
        """
        Connected components of the subgraph induced by ``vertices``
        (default: all vertices), each as a sorted tuple, ordered by
        their minimum vertex.
        """
        todo = set(self.vertices if vertices is None else vertices)
        result = []
        while todo:
            start = min(todo)
            todo.discard(start)
            component = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._neighbours[u]:
                    if w in todo:
                        todo.discard(w)
                        component.append(w)
                        queue.append(w)
            result.append(tuple(sorted(component)))
        return result

    def is_connected(self):
        return len(self.components()) <= 1

    def shortest_path(self, sources, targets, within):
        """
        Shortest path (as a list) from some vertex of ``sources`` to some
        vertex of ``targets`` whose every vertex lies in ``within``, or
        ``None``.  Ties are broken towards smaller vertex indices.
        """
        within = set(within)
        targets = set(targets)
        parent = {}
        queue = deque()
        for s in sorted(sources):
            if s in within and s not in parent:
                parent[s] = None
                queue.append(s)
        while queue:
            u = queue.popleft()
            if u in targets:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in sorted(self._neighbours[u]):
                if w in within and w not in parent:
                    parent[w] = u
                    queue.append(w)
        return None

    # Derived graphs

    def with_edge(self, u, v):
        return Graph(self.n, itertools.chain(self.edges(), [(u, v)]))

    def induced_subgraph(self, vertices):
        """
        Return ``(subgraph, labels)`` where ``subgraph`` is the induced
        subgraph relabelled to ``0 .. len(vertices)-1`` and ``labels[i]``
        is the original vertex that became ``i``.
        """
        labels = tuple(sorted(vertices))
        sub = self.adjacency[np.ix_(labels, labels)].copy()
        return Graph.from_adjacency_matrix(sub), labels

    def relabelled(self, order):
        """Graph in which vertex ``i`` is the old vertex ``order[i]``."""
        order = list(order)
        return Graph.from_adjacency_matrix(self.adjacency[np.ix_(order, order)].copy())

    def to_networkx(self):
        import networkx as nx
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # Value semantics

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __getstate__(self):
        return (self.n, np.array(self.adjacency))

    def __setstate__(self, state):
        n, adjacency = state
        self._init_from_matrix(n, adjacency)

    def __repr__(self):
        return 'Graph(%d, %r)' % (self.n, list(self.edges()))


def read_edge_list(text):
    """
    Parse the adjacency-list text format: one ``u v`` edge per line,
    0-based.  An optional first line holding a single integer gives the
    vertex count (needed for isolated vertices); otherwise the count is
    one more than the largest vertex mentioned.  ``#`` starts a comment.

    >>> read_edge_list('3\\n0 1\\n# comment\\n1 2\\n')
    Graph(3, [(0, 1), (1, 2)])
    """
    n = None
    edges = []
    seen_content = False
    for i_line, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            numbers = [int(f) for f in fields]
        except ValueError:
            raise EdgeListParseError('could not parse "%.40s" as integers' % line, line=i_line)
        if any(x < 0 for x in numbers):
            raise EdgeListParseError('negative vertex index', line=i_line)
        if len(numbers) == 1 and not seen_content:
            n = numbers[0]
        elif len(numbers) == 2:
            edges.append(tuple(numbers))
        else:
            raise EdgeListParseError('expected "u v" but got %d fields' % len(numbers),
                                     line=i_line)
        seen_content = True
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def write_edge_list(g):
    lines = ['%d' % g.n] + ['%d %d' % e for e in g.edges()]
    return '\n'.join(lines) + '\n'
