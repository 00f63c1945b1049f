''' Verification campaigns: formulas, constructor equivalence, degree tables and diameter scaling. '''
from dataclasses import dataclass
import logging
from typing import Any, Dict, List, Optional, Tuple
import pandas as pd
from tqdm import tqdm
from construction.baselines import BaConfig, generate_ba
from construction.errors import BudgetExceeded, SpecError
from construction.extremal import DeletionRule, build_direct, build_recursive, \
                                  closed_form_degree_table, order_formula, size_formula
from construction.graph import degree_histogram
from .diameter import EXACT_BUDGET, fast_diameter_bounds, exact_diameter, measured_diameter

logger = logging.getLogger(__name__)

RECURSIVE_BUDGET = 12

EXTREMAL = 'extremal'
BA = 'ba'

DEFAULT_SCALING_SPEC = [
    {'model': EXTREMAL, 't': [4, 8, 12]},
    {'model': BA, 'n': [1024, 4096, 16384], 'm': 2, 'seeds': [1, 2, 3]},
]

@dataclass(frozen=True)
class FormulaReport:
    ''' Expected and measured order/size per t for one constructor. '''
    constructor: str
    rows: pd.DataFrame

    @property
    def passed(self) -> bool:
        ''' True when every row passes. '''
        return bool(self.rows['pass'].all())

@dataclass(frozen=True)
class ScalingConfig:
    ''' One campaign entry: G*_t, or a BA graph with n, m and seed. '''
    model: str
    t: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    seed: Optional[int] = None

@dataclass(frozen=True)
class ScalingRow:
    ''' Measured diameter of one campaign entry. '''
    model: str
    n: int
    params: str
    seed: Optional[int]
    diameter: int
    method: str
    witness: Tuple[int, int]

def _build(t: int, constructor: str):
    if constructor == 'recursive':
        return build_recursive(t)
    return build_direct(t)

def _check_recursive_budget(t_max: int, budget: int):
    if t_max > budget:
        raise BudgetExceeded(f'recursive construction is limited to t <= {budget}, got {t_max}')

def verify_formulas(t_max: int, constructor: str = 'direct',
                    budget: int = RECURSIVE_BUDGET) -> FormulaReport:
    '''
    Compare the closed-form order and size with constructed graphs for t = 0..t_max.

    :param t_max: Largest t checked.

    :param constructor: 'direct' or 'recursive'.

    :param budget: Largest t allowed for the recursive constructor.

    '''
    if constructor == 'recursive':
        _check_recursive_budget(t_max, budget)
    rows = []
    for t in tqdm(range(t_max + 1), desc=f'formulas ({constructor})'):
        graph = _build(t, constructor).graph
        row = {'t': t, 'order_expected': order_formula(t), 'order_actual': graph.n,
               'size_expected': size_formula(t), 'size_actual': graph.m}
        row['pass'] = row['order_expected'] == row['order_actual'] \
                      and row['size_expected'] == row['size_actual']
        rows.append(row)
    return FormulaReport(constructor, pd.DataFrame(rows))

def constructor_equivalence(t_max: int, budget: int = RECURSIVE_BUDGET,
                            deletion_rule: DeletionRule = DeletionRule.LEAF_CLASS) -> List[bool]:
    '''
    For each t = 0..t_max, whether both constructors give the same canonical edge set.

    :param t_max: Largest t checked.

    :param budget: Largest t allowed for the recursive constructor.

    :param deletion_rule: Step (iv) reading used by the recursive constructor.

    '''
    _check_recursive_budget(t_max, budget)
    result = []
    for t in tqdm(range(t_max + 1), desc='equivalence'):
        same = build_recursive(t, deletion_rule).graph == build_direct(t).graph
        if not same:
            logger.info('constructors differ at t=%d', t)
        result.append(same)
    return result

def degree_table_conformance(t_max: int) -> pd.DataFrame:
    '''
    Compare the measured degree histogram with the closed form for t = 1..t_max.

    :param t_max: Largest t checked.

    '''
    rows = []
    for t in tqdm(range(1, t_max + 1), desc='degree tables'):
        expected = closed_form_degree_table(t)
        actual = degree_histogram(build_direct(t).graph)
        rows.append({'t': t, 'expected': [list(r) for r in expected.rows],
                     'actual': [list(r) for r in actual.rows], 'pass': expected == actual})
    return pd.DataFrame(rows, columns=['t', 'expected', 'actual', 'pass'])

def diameter_campaign(t_max: int, budget: int = EXACT_BUDGET) -> pd.DataFrame:
    '''
    Diameter of G*_t for t = 1..t_max: exact within the budget, bounds beyond it.

    :param t_max: Largest t checked.

    :param budget: Exact-diameter vertex budget.

    '''
    rows = []
    for t in tqdm(range(1, t_max + 1), desc='diameters'):
        graph = build_direct(t).graph
        lower, upper, _ = fast_diameter_bounds(graph)
        if graph.n <= budget:
            diameter, method = exact_diameter(graph, budget).diameter, 'exact'
        else:
            diameter, method = (lower if lower == upper else None), 'bounded'
        rows.append({'t': t, 'n': graph.n, 'lower': lower, 'upper': upper,
                     'diameter': diameter, 'method': method, 'pass': diameter == 2})
    return pd.DataFrame(rows, columns=['t', 'n', 'lower', 'upper', 'diameter', 'method', 'pass'])

def _as_list(value: Any) -> List[Any]:
    return value if isinstance(value, list) else [value]

def parse_scaling_spec(entries: List[Dict[str, Any]]) -> List[ScalingConfig]:
    '''
    Expand campaign entries into one config per graph.

    :param entries: Objects with model 'extremal' (key t) or 'ba' (keys n, m, seeds);
                    t, n and seeds may be single values or lists.

    '''
    if not isinstance(entries, list):
        raise SpecError('a campaign spec is a list of objects')
    configs = []
    for entry in entries:
        if not isinstance(entry, dict):
            raise SpecError(f'campaign entry is not an object: {entry!r}')
        try:
            if entry['model'] == EXTREMAL:
                configs += [ScalingConfig(EXTREMAL, t=int(t)) for t in _as_list(entry['t'])]
            elif entry['model'] == BA:
                seeds = entry.get('seeds', entry.get('seed'))
                if seeds is None:
                    raise SpecError('ba entries need explicit seeds')
                configs += [ScalingConfig(BA, n=int(n), m=int(entry['m']), seed=int(s))
                            for n in _as_list(entry['n']) for s in _as_list(seeds)]
            else:
                raise SpecError(f'unknown model {entry["model"]!r}')
        except (KeyError, TypeError, ValueError) as e:
            raise SpecError(f'bad campaign entry {entry!r}: {e}') from e
    return configs

def _measure(config: ScalingConfig, budget: int) -> ScalingRow:
    if config.model == EXTREMAL:
        graph = build_direct(config.t).graph
        params, seed = f't={config.t}', None
    else:
        graph = generate_ba(BaConfig(config.n, config.m, config.seed))
        params, seed = f'm={config.m}', config.seed
    result = measured_diameter(graph, budget)
    logger.info('%s %s n=%d: diameter %d (%s)', config.model, params, graph.n,
                result.diameter, result.method)
    return ScalingRow(config.model, graph.n, params, seed, result.diameter, result.method,
                      result.witness)

def diameter_scaling(configs: List[ScalingConfig], budget: int = EXACT_BUDGET) -> List[ScalingRow]:
    '''
    Measure the diameter of every configured graph, rows sorted by (model, n, seed).

    :param configs: Campaign entries.

    :param budget: Exact-diameter vertex budget.

    '''
    rows = [_measure(config, budget) for config in tqdm(configs, desc='scaling')]
    return sorted(rows, key=lambda r: (r.model, r.n, -1 if r.seed is None else r.seed))

def scaling_frame(rows: List[ScalingRow]) -> pd.DataFrame:
    '''
    Campaign rows as the CSV table (model, n, params, seed, diameter, method).

    :param rows: Campaign rows.

    '''
    columns = ['model', 'n', 'params', 'seed', 'diameter', 'method']
    frame = pd.DataFrame([{c: getattr(r, c) for c in columns} for r in rows], columns=columns)
    frame['seed'] = frame['seed'].astype('Int64')
    return frame

def seed_means(rows: List[ScalingRow]) -> pd.DataFrame:
    '''
    Mean diameter per (model, n) over seeds.

    :param rows: Campaign rows.

    '''
    frame = scaling_frame(rows)
    return frame.groupby(['model', 'n'], as_index=False)['diameter'].mean()
