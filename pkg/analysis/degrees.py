'''
Cumulative degree distribution and power-law exponent estimation.

The exponent is read from the cumulative distribution: the magnitude of its
log-log slope is gamma_alpha and gamma = gamma_alpha + 1. The steeper
k^-(gamma+1) form sometimes quoted for the cumulative distribution is not
consistent with that relation and is not offered.
'''
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Optional, Tuple
import numpy as np
import pandas as pd
from scipy.stats import linregress
from construction.errors import InsufficientPoints
from construction.graph import Graph

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 3

@dataclass(frozen=True)
class CumulativeDistribution:
    ''' Points (k, fraction of vertices with degree >= k), k ascending, exact fractions. '''
    points: Tuple[Tuple[int, Fraction], ...]
    order: int = 0

    @property
    def degrees(self) -> Tuple[int, ...]:
        ''' Distinct degrees. '''
        return tuple(k for k, _ in self.points)

    def to_frame(self) -> pd.DataFrame:
        ''' Points as a DataFrame with columns degree, count_at_least, p. '''
        return pd.DataFrame({
            'degree': [k for k, _ in self.points],
            'count_at_least': [int(p * self.order) for _, p in self.points],
            'p': [float(p) for _, p in self.points],
        })

@dataclass(frozen=True)
class GammaFit:
    ''' Least-squares line through (log2 k, log2 p) over a degree window. '''
    gamma_alpha: float
    gamma: float
    r_squared: float
    k_range: Tuple[int, int]
    points: int

    def __post_init__(self):
        if self.gamma != self.gamma_alpha + 1:
            raise ValueError('gamma must equal gamma_alpha + 1')

def cumulative_distribution(g: Graph) -> CumulativeDistribution:
    '''
    Fraction of vertices with degree at least k, for every distinct degree k.

    :param g: Graph with at least one vertex.

    '''
    ks, counts = np.unique(g.degrees(), return_counts=True)
    at_least = np.cumsum(counts[::-1])[::-1]
    return CumulativeDistribution(tuple((int(k), Fraction(int(c), g.n))
                                        for k, c in zip(ks, at_least)), g.n)

def extremal_fit_window(t: int, include_hub: bool = True) -> Tuple[int, int]:
    '''
    Default fit window for G*_t.

    Starts just above the leaf degree t + 1, where the cumulative distribution
    leaves its plateau, and ends at the hub degree (or at the largest Active
    degree 2**t + 1 when the hub is left out).

    The hub is kept by default although the usual recipe fits the Active rows
    from k = 5 without it. That recipe overshoots on small graphs: for G*_5 it
    gives gamma near 2.76, this window without the hub about 2.24, and with
    the hub about 2.02. Without the hub the estimate settles near 2.03 by t = 16.

    :param t: Construction step.

    :param include_hub: Whether the hub's single-vertex point is fitted.

    '''
    return t + 2, ((1 << (t + 2)) - 2) if include_hub else (1 << t) + 1

def fit_gamma(c: CumulativeDistribution, k_lo: Optional[int] = None,
              k_hi: Optional[int] = None) -> GammaFit:
    '''
    Fit a power law to the cumulative distribution over k_lo <= k <= k_hi.

    :param c: Cumulative distribution.

    :param k_lo: Smallest degree fitted; None for no lower limit.

    :param k_hi: Largest degree fitted; None for no upper limit.

    '''
    selected = [(k, p) for k, p in c.points
                if k > 0 and p > 0
                and (k_lo is None or k >= k_lo) and (k_hi is None or k <= k_hi)]
    if len(selected) < MIN_FIT_POINTS:
        raise InsufficientPoints(f'{len(selected)} points in [{k_lo}, {k_hi}], '
                                 f'need {MIN_FIT_POINTS}')

    x = np.log2([k for k, _ in selected])
    y = np.array([np.log2(p.numerator) - np.log2(p.denominator) for _, p in selected])
    fit = linregress(x, y)
    gamma_alpha = float(-fit.slope)
    r_squared = min(1.0, max(0.0, float(fit.rvalue) ** 2))
    logger.debug('fitted %d points: slope %.6f, r^2 %.6f', len(selected), fit.slope, r_squared)
    return GammaFit(gamma_alpha, gamma_alpha + 1, r_squared,
                    (selected[0][0], selected[-1][0]), len(selected))
