'''
The extremal scale-free family G*_t, built recursively and in closed form.

Vertices are addressed by class (Hub, Active(step), Center, Leaf) and by a bit
path through the binary duplication hierarchy. Sorting addresses by class rank
(Hub, Active by descending step, Center, Leaf) and then by path gives the
canonical ids, which coincide with heap positions in the ancestry tree:
id = 2**len(path) - 1 + int(path, 2). Both constructors emit the same ids, so
their outputs can be compared as plain edge sets.

Step (iv) of the recursive procedure keeps, inside each copy, only the edges
touching a Leaf (a vertex that was a leaf of one of the seed stars). Reading
"level L=2" as "two levels below the copied hub" instead keeps 12 edges per
copy when building G*_3 and gives 54 edges rather than 2**4 * 5 - 2 = 78; that
reading is kept as DeletionRule.DEPTH_RELABEL for regression checks only.

The hub has degree 2**(t+2) - 2 = n - 1. A degree table often quoted for this family
lists 2**(t+2), which exceeds n - 1 and disagrees with G*_1 (hub degree 6).
'''
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
import logging
from typing import Dict, List, Optional, Tuple
import numpy as np
from .errors import Overflow, UnsupportedT
from .graph import DegreeTable, Graph, GraphBuilder, VERTEX_DTYPE

logger = logging.getLogger(__name__)

INT64_MAX = int(np.iinfo(np.int64).max)
MAX_T = 56

class VertexKind(Enum):
    ''' Construction role of a vertex. '''
    HUB = 'hub'
    ACTIVE = 'active'
    CENTER = 'center'
    LEAF = 'leaf'

@dataclass(frozen=True)
class VertexClass:
    ''' Vertex class; step is set for Active vertices only. '''
    kind: VertexKind
    step: Optional[int] = None

    @classmethod
    def hub(cls) -> 'VertexClass':
        ''' The hub added at the last step. '''
        return cls(VertexKind.HUB)

    @classmethod
    def active(cls, step: int) -> 'VertexClass':
        '''
        A former hub, added at the given step.

        :param step: Construction step that introduced the vertex.

        '''
        return cls(VertexKind.ACTIVE, step)

    @classmethod
    def center(cls) -> 'VertexClass':
        ''' Center of a seed star copy. '''
        return cls(VertexKind.CENTER)

    @classmethod
    def leaf(cls) -> 'VertexClass':
        ''' Leaf of a seed star copy. '''
        return cls(VertexKind.LEAF)

    @property
    def rank(self) -> Tuple[int, int]:
        ''' Sort key of the class in the canonical ordering. '''
        if self.kind is VertexKind.HUB:
            return (0, 0)
        if self.kind is VertexKind.ACTIVE:
            return (1, -self.step)
        if self.kind is VertexKind.CENTER:
            return (2, 0)
        return (3, 0)

    def __str__(self) -> str:
        if self.kind is VertexKind.ACTIVE:
            return f'Active({self.step})'
        return self.kind.value.capitalize()

@dataclass(frozen=True)
class VertexAddress:
    ''' Canonical identity of a vertex: its class and its ancestry bit path. '''
    vertex_class: VertexClass
    path: str = ''

    def sort_key(self) -> Tuple[Tuple[int, int], str]:
        ''' Key of the canonical ordering. '''
        return (self.vertex_class.rank, self.path)

    def heap_id(self) -> int:
        ''' Position of the address in the canonical ordering. '''
        return (1 << len(self.path)) - 1 + (int(self.path, 2) if self.path else 0)

class DeletionRule(Enum):
    ''' Which intra-copy edges survive step (iv). '''
    LEAF_CLASS = 'leaf-class'
    DEPTH_RELABEL = 'depth-relabel'

@dataclass(frozen=True)
class StepRecord:
    ''' Bookkeeping of one recursive step. '''
    step: int
    deleted_per_copy: int
    size: int

@dataclass(frozen=True)
class ClassifiedGraph:
    '''
    G*_t together with the address of every vertex.

    Addresses are derived from the canonical ids unless the constructor kept
    the explicit list it sorted (labels).

    '''
    graph: Graph
    t: int
    steps: Tuple[StepRecord, ...] = ()
    labels: Optional[Tuple[VertexAddress, ...]] = field(default=None, repr=False)

    def address_of(self, v: int) -> VertexAddress:
        '''
        Address of a vertex.

        :param v: Canonical vertex id.

        '''
        if self.labels is not None:
            return self.labels[v]
        depth = (v + 1).bit_length() - 1
        path = format(v + 1 - (1 << depth), f'0{depth}b') if depth else ''
        return VertexAddress(class_at_depth(depth, self.t), path)

    def vertex_ids(self, vertex_class: VertexClass) -> range:
        '''
        Ids of all vertices of one class, a contiguous range.

        :param vertex_class: Class to look up.

        '''
        depth = depth_of(vertex_class, self.t)
        return range((1 << depth) - 1, (1 << (depth + 1)) - 1)

@dataclass(frozen=True)
class CensusViolation:
    ''' First disagreement found by class_census. '''
    vertex_class: VertexClass
    vertex: Optional[int]
    expected: int
    actual: int
    what: str

    def __str__(self) -> str:
        where = f' at vertex {self.vertex}' if self.vertex is not None else ''
        return f'{self.vertex_class} {self.what}{where}: expected {self.expected}, got {self.actual}'

@dataclass(frozen=True)
class Census:
    ''' Per-class vertex counts and the first violation, if any. '''
    counts: Dict[VertexClass, int]
    violation: Optional[CensusViolation] = None

    @property
    def ok(self) -> bool:
        ''' True when counts and degrees match the closed form. '''
        return self.violation is None

def _check_t(t: int, value: int) -> int:
    if t < 0:
        raise UnsupportedT(f't must be non-negative, got {t}')
    if value > INT64_MAX:
        raise Overflow(f'value for t={t} does not fit in 64 bits')
    return value

def order_formula(t: int) -> int:
    '''
    Number of vertices of G*_t, 2**(t+2) - 1.

    :param t: Construction step.

    '''
    return _check_t(t, (1 << (t + 2)) - 1)

def size_formula(t: int) -> int:
    '''
    Number of edges of G*_t, 2**(t+1) * (t+2) - 2.

    :param t: Construction step.

    '''
    return _check_t(t, (1 << (t + 1)) * (t + 2) - 2)

def class_at_depth(depth: int, t: int) -> VertexClass:
    '''
    Class of the vertices at a given depth of the ancestry tree.

    :param depth: Path length of the address.

    :param t: Construction step.

    '''
    if depth == t + 1:
        return VertexClass.leaf()
    if depth == t:
        return VertexClass.center()
    if depth == 0:
        return VertexClass.hub()
    return VertexClass.active(t - depth)

def depth_of(vertex_class: VertexClass, t: int) -> int:
    '''
    Path length of addresses of a class.

    :param vertex_class: Vertex class.

    :param t: Construction step.

    '''
    if vertex_class.kind is VertexKind.HUB:
        return 0
    if vertex_class.kind is VertexKind.ACTIVE:
        return t - vertex_class.step
    if vertex_class.kind is VertexKind.CENTER:
        return t
    return t + 1

def class_degree(vertex_class: VertexClass, t: int) -> int:
    '''
    Closed-form degree of every vertex of a class in G*_t.

    :param vertex_class: Vertex class.

    :param t: Construction step.

    '''
    if vertex_class.kind is VertexKind.HUB:
        return (1 << (t + 2)) - 2
    if vertex_class.kind is VertexKind.ACTIVE:
        return (1 << (vertex_class.step + 1)) + 1
    if vertex_class.kind is VertexKind.CENTER:
        return 3 if t >= 1 else 2
    return t + 1

def class_count(vertex_class: VertexClass, t: int) -> int:
    '''
    Number of vertices of a class in G*_t.

    :param vertex_class: Vertex class.

    :param t: Construction step.

    '''
    return 1 << depth_of(vertex_class, t)

def vertex_classes(t: int) -> List[VertexClass]:
    '''
    Classes present in G*_t, in canonical order.

    :param t: Construction step.

    '''
    classes = [VertexClass.hub()] if t >= 1 else []
    classes += [VertexClass.active(s) for s in range(t - 1, 0, -1)]
    return classes + [VertexClass.center(), VertexClass.leaf()]

def closed_form_degree_table(t: int) -> DegreeTable:
    '''
    Degree sequence of G*_t from the closed form, equal degrees merged.

    :param t: Construction step, at least 1.

    '''
    if t < 1:
        raise UnsupportedT('the degree table needs t >= 1')
    size_formula(t)  # raises Overflow
    counts: Counter = Counter()
    for vertex_class in vertex_classes(t):
        counts[class_degree(vertex_class, t)] += class_count(vertex_class, t)
    return DegreeTable.from_counts(dict(counts))

def _seed_star() -> Graph:
    return GraphBuilder(3).add_edge(0, 1).add_edge(0, 2).finalize()

def build_direct(t: int) -> ClassifiedGraph:
    '''
    Build G*_t straight from the ancestry tree, filling the compact layout in one pass.

    Each Leaf is joined to its Center and to every ancestor up to the Hub, and
    the Hub is joined to every other vertex.

    :param t: Construction step.

    '''
    m = size_formula(t)
    if t == 0:
        return ClassifiedGraph(_seed_star(), 0)

    n = order_formula(t)
    first_leaf = (1 << (t + 1)) - 1

    degrees = np.full(n, t + 1, dtype=VERTEX_DTYPE)
    degrees[0] = n - 1
    for depth in range(1, t + 1):
        degrees[(1 << depth) - 1:(1 << (depth + 1)) - 1] = 1 + (1 << (t + 1 - depth))
    offsets = np.zeros(n + 1, dtype=VERTEX_DTYPE)
    np.cumsum(degrees, out=offsets[1:])
    targets = np.empty(2 * m, dtype=VERTEX_DTYPE)

    # hub block
    targets[:n - 1] = np.arange(1, n, dtype=VERTEX_DTYPE)

    # Active and Center rows: the hub, then the contiguous range of leaves below
    for depth in range(1, t + 1):
        ids = np.arange((1 << depth) - 1, (1 << (depth + 1)) - 1, dtype=VERTEX_DTYPE)
        span = 1 << (t + 1 - depth)
        start = offsets[ids[0]]
        block = targets[start:start + len(ids) * (span + 1)].reshape(len(ids), span + 1)
        block[:, 0] = 0
        block[:, 1:] = (((ids + 1) << (t + 1 - depth)) - 1)[:, None] \
                       + np.arange(span, dtype=VERTEX_DTYPE)[None, :]

    # Leaf rows: ancestors at depths 0..t, which have increasing ids
    leaves = np.arange(first_leaf, n, dtype=VERTEX_DTYPE)
    block = targets[offsets[first_leaf]:].reshape(len(leaves), t + 1)
    for depth in range(t + 1):
        block[:, depth] = ((leaves + 1) >> (t + 1 - depth)) - 1

    logger.debug('built G*_%d directly: %d vertices, %d edges', t, n, m)
    return ClassifiedGraph(Graph(n, m, offsets, targets), t)

def _survives(labels: List[VertexAddress], edges: np.ndarray, rule: DeletionRule) -> np.ndarray:
    if rule is DeletionRule.LEAF_CLASS:
        marked = np.array([a.vertex_class.kind is VertexKind.LEAF for a in labels])
    else:
        marked = np.array([len(a.path) == 2 for a in labels])
    return marked[edges[0]] | marked[edges[1]]

def build_recursive(t: int, deletion_rule: DeletionRule = DeletionRule.LEAF_CLASS) -> ClassifiedGraph:
    '''
    Build G*_t by repeated duplication of the seed star.

    Step s duplicates G*_{s-1}, prepending bit 0 or 1 to every path of the
    respective copy; from s = 2 on it deletes the intra-copy edges that touch
    no Leaf; then a new hub is joined to every vertex of both copies.

    :param t: Construction step.

    :param deletion_rule: Which intra-copy edges survive step (iv).

    '''
    size_formula(t)
    labels = [VertexAddress(VertexClass.center()),
              VertexAddress(VertexClass.leaf(), '0'),
              VertexAddress(VertexClass.leaf(), '1')]
    edges = np.array([[0, 0], [1, 2]], dtype=VERTEX_DTYPE)
    steps = []

    for s in range(1, t + 1):
        count = len(labels)
        deleted = 0
        if s >= 2:
            keep = _survives(labels, edges, deletion_rule)
            deleted = int((~keep).sum())
            edges = edges[:, keep]

        old = [VertexAddress(VertexClass.active(s - 1), a.path)
               if a.vertex_class.kind is VertexKind.HUB else a for a in labels]
        labels = [VertexAddress(VertexClass.hub())]
        for bit in '01':
            labels += [VertexAddress(a.vertex_class, bit + a.path) for a in old]

        copies = [edges + 1, edges + 1 + count]
        spokes = np.vstack([np.zeros(2 * count, dtype=VERTEX_DTYPE),
                            np.arange(1, 2 * count + 1, dtype=VERTEX_DTYPE)])
        edges = np.hstack(copies + [spokes])
        steps.append(StepRecord(s, deleted, edges.shape[1]))
        logger.debug('step %d: deleted %d edges per copy, %d edges total',
                     s, deleted, edges.shape[1])

    order = sorted(range(len(labels)), key=lambda i: labels[i].sort_key())
    rank = np.empty(len(labels), dtype=VERTEX_DTYPE)
    rank[order] = np.arange(len(labels), dtype=VERTEX_DTYPE)
    graph = GraphBuilder(len(labels)).add_edges(rank[edges[0]], rank[edges[1]]).finalize()
    return ClassifiedGraph(graph, t, tuple(steps), tuple(labels[i] for i in order))

def class_census(g: ClassifiedGraph) -> Census:
    '''
    Count vertices per class and check every degree against the closed form.

    :param g: Classified G*_t, t >= 1.

    '''
    t = g.t
    if t < 1:
        raise UnsupportedT('the census needs t >= 1')
    n = g.graph.n
    if g.labels is not None:
        counts = dict(Counter(a.vertex_class for a in g.labels))
    else:
        counts = {}
        for vertex_class in vertex_classes(t):
            ids = g.vertex_ids(vertex_class)
            counts[vertex_class] = max(0, min(ids.stop, n) - ids.start)

    degrees = g.graph.degrees()
    for vertex_class in vertex_classes(t):
        expected = class_count(vertex_class, t)
        actual = counts.get(vertex_class, 0)
        if actual != expected:
            return Census(counts, CensusViolation(vertex_class, None, expected, actual, 'count'))
        ids = g.vertex_ids(vertex_class)
        want = class_degree(vertex_class, t)
        wrong = np.flatnonzero(degrees[ids.start:ids.stop] != want)
        if len(wrong):
            v = ids.start + int(wrong[0])
            return Census(counts, CensusViolation(vertex_class, v, want, int(degrees[v]), 'degree'))
    return Census(counts)
