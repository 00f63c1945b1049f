''' Immutable compact storage for simple undirected graphs and its builder. '''
from dataclasses import dataclass, field
from functools import cached_property
import logging
from typing import Dict, List, Tuple
import numpy as np
import pandas as pd
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order
from .errors import SelfLoop, VertexOutOfRange

logger = logging.getLogger(__name__)

VERTEX_DTYPE = np.int64

@dataclass(frozen=True)
class DegreeTable:
    ''' Rows (degree, count) sorted by degree descending, counts positive. '''
    rows: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> 'DegreeTable':
        '''
        Build a table from a degree -> count mapping, dropping empty rows.

        :param counts: Number of vertices per degree; equal degrees must already be summed.

        '''
        rows = tuple((int(k), int(c)) for k, c in sorted(counts.items(), reverse=True) if c > 0)
        return cls(rows)

    @property
    def order(self) -> int:
        ''' Number of vertices the table accounts for. '''
        return sum(count for _, count in self.rows)

    @property
    def weighted_sum(self) -> int:
        ''' Sum of degree * count, twice the number of edges. '''
        return sum(k * count for k, count in self.rows)

    def to_frame(self) -> pd.DataFrame:
        ''' Table as a DataFrame with columns degree and count. '''
        return pd.DataFrame(list(self.rows), columns=['degree', 'count'])

@dataclass(frozen=True, eq=False)
class Graph:
    '''
    Simple undirected graph in compressed sparse row layout.

    Neighbors of v are targets[offsets[v]:offsets[v + 1]], strictly increasing.
    Both arrays are read-only, so a Graph can be shared between threads.

    '''
    n: int
    m: int
    offsets: np.ndarray = field(repr=False)
    targets: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.offsets.flags.writeable = False
        self.targets.flags.writeable = False

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.m == other.m \
               and np.array_equal(self.offsets, other.offsets) \
               and np.array_equal(self.targets, other.targets)

    __hash__ = None

    def _check(self, v: int):
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)

    def degree(self, v: int) -> int:
        '''
        Degree of a vertex.

        :param v: Vertex id.

        '''
        self._check(v)
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors(self, v: int) -> np.ndarray:
        '''
        Sorted neighbor ids of a vertex (read-only view).

        :param v: Vertex id.

        '''
        self._check(v)
        return self.targets[self.offsets[v]:self.offsets[v + 1]]

    def degrees(self) -> np.ndarray:
        ''' Degree of every vertex. '''
        return np.diff(self.offsets)

    def edges(self) -> Tuple[np.ndarray, np.ndarray]:
        ''' Edge endpoints (u, v) with u < v, sorted lexicographically. '''
        sources = np.repeat(np.arange(self.n, dtype=VERTEX_DTYPE), self.degrees())
        upper = sources < self.targets
        return sources[upper], self.targets[upper]

    @cached_property
    def matrix(self) -> csr_matrix:
        ''' The adjacency as a scipy CSR matrix, used by the traversal kernels. '''
        # csgraph kernels index with int32
        index_dtype = np.int32 if len(self.targets) < 2**31 else np.int64
        data = np.ones(len(self.targets), dtype=np.float64)
        return csr_matrix((data, self.targets.astype(index_dtype), self.offsets.astype(index_dtype)),
                          shape=(self.n, self.n))

class GraphBuilder:
    ''' Single-owner accumulator of undirected edges for a fixed vertex count. '''
    def __init__(self, vertex_count: int):
        self.vertex_count = vertex_count
        self._sources: List[np.ndarray] = []
        self._targets: List[np.ndarray] = []
        self._pending: List[Tuple[int, int]] = []

    def add_edge(self, u: int, v: int) -> 'GraphBuilder':
        '''
        Record the unordered pair {u, v}; repeats are merged by finalize.

        :param u: First endpoint.

        :param v: Second endpoint.

        '''
        for x in (u, v):
            if not 0 <= x < self.vertex_count:
                raise VertexOutOfRange(x, self.vertex_count)
        if u == v:
            raise SelfLoop(u)
        self._pending.append((u, v))
        return self

    def add_edges(self, us: np.ndarray, vs: np.ndarray) -> 'GraphBuilder':
        '''
        Record many pairs at once.

        :param us: First endpoints.

        :param vs: Second endpoints, same length as us.

        '''
        us = np.asarray(us, dtype=VERTEX_DTYPE)
        vs = np.asarray(vs, dtype=VERTEX_DTYPE)
        if len(us):
            for side in (us, vs):
                bad = (side < 0) | (side >= self.vertex_count)
                if bad.any():
                    raise VertexOutOfRange(int(side[bad][0]), self.vertex_count)
            loops = us == vs
            if loops.any():
                raise SelfLoop(int(us[loops][0]))
        self._sources.append(us)
        self._targets.append(vs)
        return self

    def finalize(self) -> Graph:
        ''' Freeze the accumulated pairs into a deduplicated Graph. '''
        n = self.vertex_count
        us = self._sources + [np.array([p[0] for p in self._pending], dtype=VERTEX_DTYPE)]
        vs = self._targets + [np.array([p[1] for p in self._pending], dtype=VERTEX_DTYPE)]
        us = np.concatenate(us)
        vs = np.concatenate(vs)

        # one key per unordered pair; unique() sorts them by (lo, hi)
        keys = np.unique(np.minimum(us, vs) * n + np.maximum(us, vs))
        lo, hi = np.divmod(keys, n) if n else (keys, keys)
        m = len(keys)

        sources = np.concatenate([lo, hi])
        targets = np.concatenate([hi, lo])
        order = np.argsort(sources * n + targets, kind='stable')
        targets = targets[order]
        offsets = np.zeros(n + 1, dtype=VERTEX_DTYPE)
        np.cumsum(np.bincount(sources, minlength=n), out=offsets[1:])

        logger.debug('finalized graph with %d vertices and %d edges', n, m)
        return Graph(n, m, offsets, targets.astype(VERTEX_DTYPE))

def graph_from_edges(n: int, edges: List[Tuple[int, int]]) -> Graph:
    '''
    Build a graph from a list of pairs.

    :param n: Number of vertices.

    :param edges: Unordered vertex pairs; duplicates are allowed.

    '''
    builder = GraphBuilder(n)
    for u, v in edges:
        builder.add_edge(u, v)
    return builder.finalize()

def complete_graph(n: int) -> Graph:
    '''
    The complete graph K_n.

    :param n: Number of vertices.

    '''
    us, vs = np.triu_indices(n, k=1)
    return GraphBuilder(n).add_edges(us, vs).finalize()

def is_connected(g: Graph) -> bool:
    '''
    True iff a breadth-first traversal from vertex 0 reaches every vertex.

    :param g: Graph to test.

    '''
    if g.n <= 1:
        return True
    order = breadth_first_order(g.matrix, 0, directed=True, return_predecessors=False)
    return len(order) == g.n

def degree_histogram(g: Graph) -> DegreeTable:
    '''
    Degree sequence of the graph as (degree, count) rows.

    :param g: Graph to summarize.

    '''
    ks, counts = np.unique(g.degrees(), return_counts=True)
    return DegreeTable.from_counts(dict(zip(ks.tolist(), counts.tolist())))
