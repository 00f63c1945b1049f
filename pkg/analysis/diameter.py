''' Exact and bounded diameter of connected graphs. '''
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
from typing import NamedTuple, Optional, Tuple
import numpy as np
from tqdm import tqdm
from construction.errors import BudgetExceeded, Disconnected, EmptyGraph
from construction.graph import Graph, is_connected
from .utils import analysis_threads, bfs_distances, eccentricities, eccentricity

logger = logging.getLogger(__name__)

EXACT_BUDGET = 2**16
SWEEP_CELLS = 2**22

EXACT = 'exact'
BOUNDED = 'bounded'

@dataclass(frozen=True)
class DiameterResult:
    ''' Diameter with a vertex pair at that distance and how it was obtained. '''
    diameter: int
    witness: Tuple[int, int]
    method: str

    def recheck(self, g: Graph) -> int:
        '''
        Recompute the distance between the witness pair.

        :param g: The graph the result was computed on.

        '''
        u, v = self.witness
        return int(bfs_distances(g, u)[v])

class DiameterBounds(NamedTuple):
    ''' Double-sweep lower bound, hub-based upper bound, and the lower bound's pair. '''
    lower: int
    upper: int
    witness: Tuple[int, int]

def exact_diameter(g: Graph, budget: int = EXACT_BUDGET, workers: Optional[int] = None,
                   progress: bool = False) -> DiameterResult:
    '''
    Diameter by a breadth-first search from every vertex.

    Sources are split into chunks swept by a thread pool; the witness is the
    lexicographically smallest pair at maximum distance.

    :param g: Connected graph.

    :param budget: Largest vertex count accepted; use fast_diameter_bounds above it.

    :param workers: Thread count, EXTREMAL_THREADS by default.

    :param progress: Show a progress bar over source chunks.

    '''
    if g.n == 0:
        raise EmptyGraph('diameter of a graph without vertices is undefined')
    if g.n > budget:
        raise BudgetExceeded(f'{g.n} vertices exceed the exact budget {budget}; '
                             'use fast_diameter_bounds')
    if not is_connected(g):
        raise Disconnected('diameter of a disconnected graph is undefined')
    if g.n == 1:
        return DiameterResult(0, (0, 0), EXACT)

    chunk = max(1, SWEEP_CELLS // max(1, g.m))
    chunks = [list(range(lo, min(lo + chunk, g.n))) for lo in range(0, g.n, chunk)]
    with ThreadPoolExecutor(max_workers=workers or analysis_threads()) as pool:
        ecc = np.concatenate(list(tqdm(pool.map(lambda c: eccentricities(g, c), chunks),
                                       total=len(chunks), disable=not progress)))

    diameter = int(ecc.max())
    u = int(np.argmax(ecc))
    v = int(np.flatnonzero(bfs_distances(g, u) == diameter)[0])
    logger.debug('exact diameter %d witnessed by (%d, %d)', diameter, u, v)
    return DiameterResult(diameter, (u, v), EXACT)

def fast_diameter_bounds(g: Graph) -> DiameterBounds:
    '''
    Bracket the diameter with three breadth-first searches.

    The lower bound is the eccentricity of the farthest vertex from vertex 0
    (double sweep); the upper bound is twice the eccentricity of a
    maximum-degree vertex.

    :param g: Connected graph.

    '''
    if g.n == 0:
        raise EmptyGraph('diameter of a graph without vertices is undefined')
    _, far = eccentricity(g, 0)
    lower, other = eccentricity(g, far)
    hub = int(np.argmax(g.degrees()))
    upper = 2 * eccentricity(g, hub)[0]
    logger.debug('diameter bounds [%d, %d]', lower, upper)
    return DiameterBounds(lower, upper, (min(far, other), max(far, other)))

def measured_diameter(g: Graph, budget: int = EXACT_BUDGET, workers: Optional[int] = None,
                      progress: bool = False) -> DiameterResult:
    '''
    Exact diameter within the budget, otherwise the double-sweep value when the bounds coincide.

    :param g: Connected graph.

    :param budget: Largest vertex count swept exactly.

    :param workers: Thread count for the exact sweep.

    :param progress: Show a progress bar during the exact sweep.

    '''
    if g.n <= budget:
        return exact_diameter(g, budget, workers, progress)
    bounds = fast_diameter_bounds(g)
    if bounds.lower != bounds.upper:
        raise BudgetExceeded(f'bounds [{bounds.lower}, {bounds.upper}] do not coincide and '
                             f'{g.n} vertices exceed the exact budget {budget}')
    return DiameterResult(bounds.lower, bounds.witness, BOUNDED)
