''' Traversal kernels and runtime settings shared by the analysis modules. '''
import os
from typing import List, Tuple
import numpy as np
from scipy.sparse.csgraph import breadth_first_order
from construction.errors import Disconnected
from construction.graph import Graph, VERTEX_DTYPE

def analysis_threads() -> int:
    ''' Worker cap for parallel sweeps, from EXTREMAL_THREADS (default: CPU count). '''
    value = os.environ.get('EXTREMAL_THREADS')
    if value is None or not value.strip().isdigit():
        return max(1, os.cpu_count() or 1)
    return max(1, int(value))

def eccentricity(g: Graph, source: int) -> Tuple[int, int]:
    '''
    Eccentricity of a vertex and one vertex realizing it.

    Breadth-first order lists vertices by non-decreasing distance, so the last
    one visited is a farthest vertex; its depth is read off the predecessor chain.

    :param g: Connected graph.

    :param source: Start vertex.

    '''
    order, predecessors = breadth_first_order(g.matrix, source, directed=True,
                                              return_predecessors=True)
    if len(order) < g.n:
        raise Disconnected(f'{g.n - len(order)} vertices unreachable from {source}')
    farthest = int(order[-1])
    depth = 0
    v = farthest
    while v != source:
        v = int(predecessors[v])
        depth += 1
    return depth, farthest

def eccentricities(g: Graph, sources: List[int]) -> np.ndarray:
    '''
    Eccentricities of several vertices.

    :param g: Connected graph.

    :param sources: Start vertices.

    '''
    return np.array([eccentricity(g, s)[0] for s in sources], dtype=VERTEX_DTYPE)

def bfs_distances(g: Graph, source: int) -> np.ndarray:
    '''
    Hop distance from source to every vertex, -1 where unreachable.

    Expands one whole frontier per level, gathering all neighbor slices at once.

    :param g: Graph.

    :param source: Start vertex.

    '''
    dist = np.full(g.n, -1, dtype=VERTEX_DTYPE)
    dist[source] = 0
    frontier = np.array([source], dtype=VERTEX_DTYPE)
    level = 0
    while len(frontier):
        starts = g.offsets[frontier]
        lengths = g.offsets[frontier + 1] - starts
        total = int(lengths.sum())
        if total == 0:
            break
        shift = np.repeat(starts - (np.cumsum(lengths) - lengths), lengths)
        reached = g.targets[shift + np.arange(total, dtype=VERTEX_DTYPE)]
        reached = np.unique(reached[dist[reached] < 0])
        level += 1
        dist[reached] = level
        frontier = reached
    return dist
