'''
Seeded preferential-attachment baseline.

The generator is NumPy's PCG64 seeded through SeedSequence(seed); equal seeds
give identical graphs on every platform NumPy supports.
'''
from dataclasses import dataclass
import logging
from typing import List
import numpy as np
from .errors import InvalidConfig
from .graph import Graph, GraphBuilder, VERTEX_DTYPE

logger = logging.getLogger(__name__)

SEED_LIMIT = 1 << 64

@dataclass(frozen=True)
class BaConfig:
    ''' Final order n, edges per new vertex m, and the PRNG seed. '''
    n: int
    m: int
    seed: int

    def validate(self):
        ''' Raise InvalidConfig unless m >= 1, n >= m + 1 and the seed fits in 64 bits. '''
        if self.m < 1:
            raise InvalidConfig(f'm must be at least 1, got {self.m}')
        if self.n < self.m + 1:
            raise InvalidConfig(f'n must be at least m + 1 = {self.m + 1}, got {self.n}')
        if not 0 <= self.seed < SEED_LIMIT:
            raise InvalidConfig(f'seed must be a 64-bit unsigned value, got {self.seed}')

    @property
    def edge_count(self) -> int:
        ''' Edges of the finished graph: the clique plus m per grown vertex. '''
        return self.m * (self.n - self.m - 1) + self.m * (self.m + 1) // 2

def make_rng(seed: int) -> np.random.Generator:
    '''
    The PCG64 generator used by every baseline.

    :param seed: 64-bit seed.

    '''
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))

def spawn_seeds(seed: int, count: int) -> List[int]:
    '''
    Derive independent child seeds for a seed ensemble.

    :param seed: Parent seed.

    :param count: Number of child seeds.

    '''
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]

def generate_ba(cfg: BaConfig) -> Graph:
    '''
    Grow a preferential-attachment graph from a clique on m + 1 vertices.

    Each new vertex picks m distinct targets by sampling uniformly from the
    list of edge endpoints so far (so proportionally to degree), drawing again
    whenever a target repeats.

    :param cfg: Generator configuration.

    '''
    cfg.validate()
    n, m = cfg.n, cfg.m
    rng = make_rng(cfg.seed)

    total = cfg.edge_count
    us = np.empty(total, dtype=VERTEX_DTYPE)
    vs = np.empty(total, dtype=VERTEX_DTYPE)
    endpoints = np.empty(2 * total, dtype=VERTEX_DTYPE)

    clique_u, clique_v = np.triu_indices(m + 1, k=1)
    k = len(clique_u)
    us[:k] = clique_u
    vs[:k] = clique_v
    endpoints[:k] = clique_u
    endpoints[k:2 * k] = clique_v
    filled = 2 * k

    for new in range(m + 1, n):
        targets: List[int] = []
        while len(targets) < m:
            target = int(endpoints[rng.integers(filled)])
            if target not in targets:
                targets.append(target)
        us[k:k + m] = new
        vs[k:k + m] = targets
        endpoints[filled:filled + m] = targets
        endpoints[filled + m:filled + 2 * m] = new
        k += m
        filled += 2 * m

    logger.debug('generated BA graph n=%d m=%d seed=%d with %d edges', n, m, cfg.seed, total)
    return GraphBuilder(n).add_edges(us, vs).finalize()
