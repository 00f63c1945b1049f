'''
Completeness, the scale-free heuristic, and the diameter lower-bound verdict.

A connected graph of diameter 1 is complete, and a complete graph has a single
degree, so it cannot be scale-free; a scale-free graph therefore has diameter
at least 2, and G*_t attains it.
'''
from dataclasses import dataclass
import logging
from typing import Optional, Tuple
import numpy as np
from construction.errors import Disconnected, InsufficientPoints, TheoremViolation
from construction.graph import Graph, is_connected
from .degrees import GammaFit, cumulative_distribution, fit_gamma
from .diameter import EXACT_BUDGET, DiameterResult, measured_diameter

logger = logging.getLogger(__name__)

MIN_DISTINCT = 8
MIN_R2 = 0.95

@dataclass(frozen=True)
class TheoremVerdict:
    ''' Outcome of theorem_check, with the fit and diameter it was based on. '''
    is_complete: bool
    diameter: int
    scale_free_plausible: bool
    extremal_bound_met: bool
    fit: Optional[GammaFit] = None
    diameter_result: Optional[DiameterResult] = None

def is_complete(g: Graph) -> bool:
    '''
    True iff every pair of vertices is adjacent.

    :param g: Graph.

    '''
    return g.m == g.n * (g.n - 1) // 2

def scale_free_verdict(g: Graph, fit: Optional[GammaFit], min_distinct: int = MIN_DISTINCT,
                       min_r2: float = MIN_R2) -> bool:
    '''
    Heuristic scale-free classifier: enough distinct degrees, gamma above 1,
    a good log-log fit, and not complete.

    :param g: Graph the fit was computed on.

    :param fit: Fit of g's cumulative distribution; None when no fit was possible.

    :param min_distinct: Fewest distinct degrees accepted.

    :param min_r2: Smallest r^2 accepted.

    '''
    if fit is None:
        return False
    distinct = len(np.unique(g.degrees()))
    return distinct >= min_distinct and fit.gamma > 1 and fit.r_squared >= min_r2 \
           and not is_complete(g)

def try_fit(g: Graph, window: Tuple[Optional[int], Optional[int]] = (None, None)) \
            -> Optional[GammaFit]:
    '''
    Fit gamma over a window, or None when too few points fall in it.

    :param g: Graph.

    :param window: (k_lo, k_hi), either end None for unbounded.

    '''
    try:
        return fit_gamma(cumulative_distribution(g), *window)
    except InsufficientPoints as e:
        logger.info('no gamma fit: %s', e)
        return None

def theorem_check(g: Graph, window: Tuple[Optional[int], Optional[int]] = (None, None),
                  min_distinct: int = MIN_DISTINCT, min_r2: float = MIN_R2,
                  budget: int = EXACT_BUDGET, progress: bool = False) -> TheoremVerdict:
    '''
    Assemble the verdict and check diameter 1 => complete => not scale-free.

    :param g: Connected graph.

    :param window: Fit window (k_lo, k_hi).

    :param min_distinct: Passed to scale_free_verdict.

    :param min_r2: Passed to scale_free_verdict.

    :param budget: Exact-diameter vertex budget.

    :param progress: Show a progress bar during the exact diameter sweep.

    '''
    if not is_connected(g):
        raise Disconnected('the verdict needs a connected graph')
    complete = is_complete(g)
    result = measured_diameter(g, budget, progress=progress)
    fit = try_fit(g, window)
    plausible = scale_free_verdict(g, fit, min_distinct, min_r2)

    if result.diameter == 1 and not complete:
        raise TheoremViolation('diameter 1 but the graph is not complete')
    if complete and result.diameter > 1:
        raise TheoremViolation(f'complete graph with diameter {result.diameter}')
    if complete and plausible:
        raise TheoremViolation('complete graph classified as scale-free')

    return TheoremVerdict(complete, result.diameter, plausible, result.diameter == 2,
                          fit, result)
