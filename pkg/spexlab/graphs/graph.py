import networkx as nx
import numpy as np

from spexlab.utils.bits import full_mask, iter_bits, popcount, to_mask


class Graph(object):
    """A finite simple undirected graph on the vertices ``0..n-1``.

    The neighborhood of each vertex is stored as an integer bitset, i.e. bit `u` of ``adj[v]`` is
    set iff `u` and `v` are adjacent. Graphs are immutable: every operation which changes the edge
    set returns a new graph.
    """

    __slots__ = ('_n', '_adj', '_hash')

    def __init__(self, n, adj=None):
        """
        Parameters
        ----------
        n : int
            Number of vertices.
        adj : sequence of int, default=None
            Neighborhood bitsets, one per vertex. If None, the graph has no edges.

        Raises
        ------
        ValueError
            If the adjacency is not symmetric, contains a self-loop, or refers to vertices >= n.
        """
        if n < 0:
            raise ValueError(f'Vertex count must be non-negative: {n}')
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise ValueError(f'Expected {n} neighborhoods, got {len(adj)}')
        self._n = n
        self._adj = adj
        self._hash = None
        self._validate()

    def _validate(self):
        limit = full_mask(self._n)
        for v, row in enumerate(self._adj):
            if row & ~limit or row < 0:
                raise ValueError(f'Neighborhood of vertex {v} refers to vertices outside 0..n-1')
            if row >> v & 1:
                raise ValueError(f'Self-loop at vertex {v}')
            for u in iter_bits(row):
                if not self._adj[u] >> v & 1:
                    raise ValueError(f'Adjacency is not symmetric for edge {v}-{u}')

    @classmethod
    def _trusted(cls, n, adj):
        # skips validation; callers guarantee a symmetric, loop-free adjacency
        graph = cls.__new__(cls)
        graph._n = n
        graph._adj = tuple(adj)
        graph._hash = None
        return graph

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f'Self-loop at vertex {u}')
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f'Edge {u}-{v} refers to vertices outside 0..{n - 1}')
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, nx_graph):
        """Converts a networkx graph; vertices are relabelled ``0..n-1`` in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()
                                           if u != v])

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        return self._adj

    @property
    def num_edges(self):
        return sum(popcount(row) for row in self._adj) // 2

    def __len__(self):
        return self._n

    def edges(self):
        """Returns the edges as sorted pairs ``(u, v)`` with ``u < v``."""
        return [(v, u) for v, row in enumerate(self._adj)
                for u in iter_bits(row >> v + 1 << v + 1)]

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v):
        return list(iter_bits(self._adj[v]))

    def degree(self, v):
        return popcount(self._adj[v])

    def degrees(self):
        return np.array([popcount(row) for row in self._adj], dtype=int)

    @property
    def max_degree(self):
        return max((popcount(row) for row in self._adj), default=0)

    def sphere(self, v, i):
        """Returns N_i(v), the vertices at distance exactly `i` from `v`, as a bitset."""
        seen = 1 << v
        frontier = 1 << v
        for _ in range(i):
            reached = 0
            for u in iter_bits(frontier):
                reached |= self._adj[u]
            frontier = reached & ~seen
            seen |= frontier
        return frontier

    def edges_within(self, mask):
        """Returns e(U) for the vertex set U given as a bitset."""
        return sum(popcount(self._adj[v] & mask) for v in iter_bits(mask)) // 2

    def edges_between(self, mask, other):
        """Returns e(U, W): the number of edges with one end in U and the other end in W."""
        if mask & other:
            raise ValueError('Vertex sets must be disjoint')
        return sum(popcount(self._adj[v] & other) for v in iter_bits(mask))

    def add_edge(self, u, v):
        if u == v:
            raise ValueError(f'Self-loop at vertex {u}')
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self._n, adj)

    def non_edges(self):
        limit = full_mask(self._n)
        return [(v, u) for v, row in enumerate(self._adj)
                for u in iter_bits(~row & limit & ~full_mask(v + 1))]

    def induced_subgraph(self, vertices):
        """Returns the subgraph induced by `vertices` (an iterable or a bitset).

        Vertices are relabelled in ascending order of their original labels.
        """
        if isinstance(vertices, int):
            vertices = list(iter_bits(vertices))
        else:
            vertices = sorted(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        mask = to_mask(vertices)
        adj = [0] * len(vertices)
        for v in vertices:
            adj[index[v]] = to_mask(index[u] for u in iter_bits(self._adj[v] & mask))
        return Graph._trusted(len(vertices), adj)

    def remove_vertex(self, v):
        return self.induced_subgraph(full_mask(self._n) & ~(1 << v))

    def contract_edge(self, u, v):
        """Returns the graph with the edge uv contracted into `u`.

        Vertex `v` disappears and the vertices above it shift down by one.
        """
        if not self.has_edge(u, v):
            raise ValueError(f'No edge {u}-{v} to contract')
        adj = list(self._adj)
        for w in iter_bits(adj[v] & ~(1 << u)):
            adj[w] |= 1 << u
            adj[u] |= 1 << w
        return Graph._trusted(self._n, adj).remove_vertex(v)

    def relabel(self, perm):
        """Returns the graph with vertex `v` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError('perm must be a permutation of 0..n-1')
        adj = [0] * self._n
        for v, row in enumerate(self._adj):
            adj[perm[v]] = to_mask(perm[u] for u in iter_bits(row))
        return Graph._trusted(self._n, adj)

    def complement(self):
        limit = full_mask(self._n)
        return Graph._trusted(self._n, [~row & limit & ~(1 << v)
                                        for v, row in enumerate(self._adj)])

    def union(self, other):
        """Disjoint union; the vertices of `other` follow the vertices of this graph."""
        shift = self._n
        return Graph._trusted(self._n + other.n,
                              self._adj + tuple(row << shift for row in other.adj))

    def join(self, other):
        """Join: the disjoint union plus all edges between the two sides.

        The left operand's vertices come first.
        """
        left = full_mask(self._n)
        right = full_mask(other.n) << self._n
        adj = tuple(row | right for row in self._adj) \
            + tuple(row << self._n | left for row in other.adj)
        return Graph._trusted(self._n + other.n, adj)

    def repeat(self, times):
        """Returns the disjoint union of `times` copies."""
        if times < 0:
            raise ValueError(f'Repetition count must be non-negative: {times}')
        result = Graph(0)
        for _ in range(times):
            result = result.union(self)
        return result

    def components(self):
        """Returns the component vertex sets as bitsets, ordered by their least vertex."""
        remaining = full_mask(self._n)
        components = []
        while remaining:
            low = remaining & -remaining
            seen = low
            frontier = low
            while frontier:
                reached = 0
                for u in iter_bits(frontier):
                    reached |= self._adj[u]
                frontier = reached & ~seen
                seen |= frontier
            components.append(seen)
            remaining &= ~seen
        return components

    def is_connected(self):
        return self._n <= 1 or len(self.components()) == 1

    def is_connected_within(self, mask):
        """True iff the subgraph induced by the nonempty bitset `mask` is connected."""
        low = mask & -mask
        seen = low
        frontier = low
        while frontier:
            reached = 0
            for u in iter_bits(frontier):
                reached |= self._adj[u]
            frontier = reached & mask & ~seen
            seen |= frontier
        return seen == mask

    def adjacency_matrix(self, dtype=float):
        matrix = np.zeros((self._n, self._n), dtype=dtype)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __getstate__(self):
        return self._n, self._adj

    def __setstate__(self, state):
        self._n, self._adj = state
        self._hash = None

    def __repr__(self):
        return f'Graph(n={self._n}, edges={self.edges()})'
