import unittest
import os
import numpy as np
import networkx as nx
from networkx.utils import UnionFind
from hypothesis import given, settings, strategies as st
from construction.baselines import BaConfig, generate_ba, make_rng, spawn_seeds
from construction.errors import InvalidConfig, Overflow, SelfLoop, UnsupportedT, \
                                VertexOutOfRange
from construction.extremal import MAX_T, ClassifiedGraph, DeletionRule, StepRecord, \
                                  VertexAddress, VertexClass, VertexKind, build_direct, \
                                  build_recursive, class_census, class_degree, \
                                  closed_form_degree_table, order_formula, size_formula
from construction.graph import DegreeTable, Graph, GraphBuilder, complete_graph, \
                               degree_histogram, graph_from_edges, is_connected

SLOW_TESTS = os.environ.get('EXTREMAL_SLOW_TESTS') == '1'

@st.composite
def edge_lists(draw, max_vertices=40):
    ''' A vertex count and a list of loop-free pairs, repeats allowed. '''
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return n, draw(st.lists(pair, max_size=3 * n))

def ancestors(leaf: int, t: int):
    ''' Heap ids of every ancestor of a leaf, hub first. '''
    return [((leaf + 1) >> j) - 1 for j in range(t + 1, 0, -1)]

class TestGraphCore(unittest.TestCase):
    ''' Test graph.py module. '''

    def test_add_edge(self):
        ''' Test GraphBuilder.add_edge function. '''
        g = GraphBuilder(2).add_edge(0, 1).add_edge(1, 0).finalize()
        self.assertEqual(g.m, 1)
        self.assertEqual(g.degree(0), 1)
        with self.assertRaises(SelfLoop):
            GraphBuilder(3).add_edge(2, 2)
        with self.assertRaises(VertexOutOfRange):
            GraphBuilder(3).add_edge(0, 3)
        with self.assertRaises(VertexOutOfRange):
            GraphBuilder(3).add_edge(-1, 0)

    def test_add_edges(self):
        ''' Test GraphBuilder.add_edges function. '''
        g = GraphBuilder(4).add_edges(np.array([0, 1, 2]), np.array([1, 2, 3])) \
                           .add_edges(np.array([3]), np.array([2])).finalize()
        self.assertEqual(g.m, 3)
        with self.assertRaises(SelfLoop):
            GraphBuilder(4).add_edges(np.array([0, 1]), np.array([1, 1]))
        with self.assertRaises(VertexOutOfRange):
            GraphBuilder(4).add_edges(np.array([0]), np.array([4]))

    def test_finalize(self):
        ''' Test GraphBuilder.finalize function. '''
        g = graph_from_edges(3, [(0, 1), (1, 2)])
        self.assertEqual([g.degree(v) for v in range(3)], [1, 2, 1])
        self.assertEqual(g.neighbors(1).tolist(), [0, 2])
        empty = GraphBuilder(5).finalize()
        self.assertEqual(empty.m, 0)
        self.assertEqual(empty.degrees().tolist(), [0] * 5)
        self.assertEqual(empty.neighbors(4).tolist(), [])
        triangle = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
        self.assertEqual(triangle.m, 3)
        self.assertEqual(triangle.degrees().tolist(), [2, 2, 2])

    def test_graph(self):
        ''' Test Graph class. '''
        g = graph_from_edges(4, [(2, 3), (0, 3), (0, 1)])
        us, vs = g.edges()
        self.assertEqual(list(zip(us.tolist(), vs.tolist())), [(0, 1), (0, 3), (2, 3)])
        self.assertEqual(g, graph_from_edges(4, [(1, 0), (3, 0), (3, 2), (0, 1)]))
        self.assertNotEqual(g, graph_from_edges(4, [(0, 1)]))
        with self.assertRaises(VertexOutOfRange):
            g.degree(4)
        with self.assertRaises(VertexOutOfRange):
            g.neighbors(-1)
        with self.assertRaises(ValueError):
            g.targets[0] = 1
        self.assertEqual(g.matrix.shape, (4, 4))
        self.assertEqual(g.matrix.nnz, 2 * g.m)

    def test_is_connected(self):
        ''' Test is_connected function. '''
        self.assertTrue(is_connected(GraphBuilder(1).finalize()))
        self.assertTrue(is_connected(build_direct(2).graph))
        self.assertFalse(is_connected(graph_from_edges(4, [(0, 1), (2, 3)])))
        self.assertFalse(is_connected(GraphBuilder(2).finalize()))

    def test_degree_histogram(self):
        ''' Test degree_histogram function. '''
        self.assertEqual(degree_histogram(build_direct(1).graph).rows, ((6, 1), (3, 2), (2, 4)))
        self.assertEqual(degree_histogram(build_direct(2).graph).rows, ((14, 1), (5, 2), (3, 12)))
        self.assertEqual(degree_histogram(complete_graph(4)).rows, ((3, 4),))
        table = DegreeTable.from_counts({2: 4, 6: 1, 3: 2, 9: 0})
        self.assertEqual(table.rows, ((6, 1), (3, 2), (2, 4)))
        self.assertEqual(table.order, 7)
        self.assertEqual(table.weighted_sum, 20)
        self.assertEqual(table.to_frame().columns.tolist(), ['degree', 'count'])

    def test_complete_graph(self):
        ''' Test complete_graph function. '''
        for n in (1, 2, 5, 12):
            g = complete_graph(n)
            self.assertEqual(g.m, n * (n - 1) // 2)
            self.assertTrue(all(d == n - 1 for d in g.degrees().tolist()))

    @settings(max_examples=100, deadline=None)
    @given(edge_lists())
    def test_handshake(self, case):
        ''' Test handshake invariant of finalize function. '''
        n, pairs = case
        g = graph_from_edges(n, pairs)
        self.assertEqual(int(g.degrees().sum()), 2 * g.m)
        self.assertEqual(g.m, len({frozenset(p) for p in pairs}))
        self.assertEqual(degree_histogram(g).order, n)
        self.assertEqual(degree_histogram(g).weighted_sum, 2 * g.m)
        for v in range(n):
            neighbors = g.neighbors(v).tolist()
            self.assertEqual(neighbors, sorted(set(neighbors)))
            self.assertNotIn(v, neighbors)

    @settings(max_examples=100, deadline=None)
    @given(edge_lists())
    def test_idempotence(self, case):
        ''' Test that repeated and reversed pairs leave finalize unchanged. '''
        n, pairs = case
        once = graph_from_edges(n, pairs)
        twice = graph_from_edges(n, pairs + [(v, u) for u, v in pairs])
        self.assertEqual(once, twice)

    @settings(max_examples=100, deadline=None)
    @given(edge_lists(max_vertices=25))
    def test_is_connected_oracle(self, case):
        ''' Test is_connected function against a union-find oracle. '''
        n, pairs = case
        components = UnionFind(range(n))
        for u, v in pairs:
            components.union(u, v)
        expected = len(list(components.to_sets())) == 1
        self.assertEqual(is_connected(graph_from_edges(n, pairs)), expected)

class TestExtremalModel(unittest.TestCase):
    ''' Test extremal.py module. '''

    def test_order_formula(self):
        ''' Test order_formula function. '''
        self.assertEqual(order_formula(0), 3)
        self.assertEqual(order_formula(1), 7)
        self.assertEqual(order_formula(2), 15)
        self.assertEqual(order_formula(20), 4194303)
        with self.assertRaises(Overflow):
            order_formula(62)
        with self.assertRaises(UnsupportedT):
            order_formula(-1)

    def test_size_formula(self):
        ''' Test size_formula function. '''
        self.assertEqual(size_formula(0), 2)
        self.assertEqual(size_formula(1), 10)
        self.assertEqual(size_formula(2), 30)
        self.assertEqual(size_formula(3), 78)
        self.assertEqual(size_formula(20), 46137342)
        self.assertTrue(size_formula(MAX_T) < 2**63)
        with self.assertRaises(Overflow):
            size_formula(MAX_T + 1)

    def test_closed_form_degree_table(self):
        ''' Test closed_form_degree_table function. '''
        self.assertEqual(closed_form_degree_table(1).rows, ((6, 1), (3, 2), (2, 4)))
        self.assertEqual(closed_form_degree_table(2).rows, ((14, 1), (5, 2), (3, 12)))
        self.assertEqual(closed_form_degree_table(3).rows,
                         ((30, 1), (9, 2), (5, 4), (4, 16), (3, 8)))
        for t in range(1, 30):
            table = closed_form_degree_table(t)
            self.assertEqual(table.order, order_formula(t))
            self.assertEqual(table.weighted_sum, 2 * size_formula(t))
        with self.assertRaises(UnsupportedT):
            closed_form_degree_table(0)
        with self.assertRaises(Overflow):
            closed_form_degree_table(MAX_T + 1)

    def test_class_degree(self):
        ''' Test class_degree function. '''
        self.assertEqual(class_degree(VertexClass.hub(), 1), 6)
        self.assertEqual(class_degree(VertexClass.active(3), 5), 17)
        self.assertEqual(class_degree(VertexClass.center(), 4), 3)
        self.assertEqual(class_degree(VertexClass.center(), 0), 2)
        self.assertEqual(class_degree(VertexClass.leaf(), 7), 8)

    def test_vertex_address(self):
        ''' Test VertexAddress class. '''
        self.assertEqual(VertexAddress(VertexClass.hub()).heap_id(), 0)
        self.assertEqual(VertexAddress(VertexClass.active(2), '1').heap_id(), 2)
        self.assertEqual(VertexAddress(VertexClass.leaf(), '101').heap_id(), 12)
        self.assertEqual(str(VertexClass.active(3)), 'Active(3)')
        self.assertEqual(str(VertexClass.hub()), 'Hub')
        self.assertTrue(VertexAddress(VertexClass.hub()).sort_key()
                        < VertexAddress(VertexClass.active(5), '0').sort_key()
                        < VertexAddress(VertexClass.active(4), '00').sort_key()
                        < VertexAddress(VertexClass.center(), '000').sort_key())

    def test_build_direct(self):
        ''' Test build_direct function. '''
        seed = build_direct(0).graph
        self.assertEqual((seed.n, seed.m), (3, 2))
        self.assertEqual(seed.neighbors(0).tolist(), [1, 2])
        for t in range(0, 17):
            g = build_direct(t).graph
            self.assertEqual(g.n, order_formula(t))
            self.assertEqual(g.m, size_formula(t))
            self.assertEqual(int(g.degrees().sum()), 2 * g.m)

    def test_hub_adjacency(self):
        ''' Test that the hub of build_direct is adjacent to every other vertex. '''
        for t in range(1, 9):
            g = build_direct(t).graph
            self.assertEqual(g.neighbors(0).tolist(), list(range(1, g.n)))

    def test_leaf_neighborhood(self):
        ''' Test that every leaf is adjacent to exactly its ancestors. '''
        for t in range(1, 7):
            cg = build_direct(t)
            for leaf in cg.vertex_ids(VertexClass.leaf()):
                self.assertEqual(cg.graph.neighbors(leaf).tolist(), ancestors(leaf, t))

    def test_edges_touch_hub_or_leaf(self):
        ''' Test that every edge of build_direct touches the hub or a leaf. '''
        for t in range(1, 9):
            cg = build_direct(t)
            first_leaf = cg.vertex_ids(VertexClass.leaf()).start
            us, vs = cg.graph.edges()
            self.assertTrue(bool(((us == 0) | (vs >= first_leaf)).all()))

    def test_build_recursive(self):
        ''' Test build_recursive function. '''
        for t in range(0, 13):
            g = build_recursive(t).graph
            self.assertEqual(g.n, order_formula(t))
            self.assertEqual(g.m, size_formula(t))
        self.assertEqual(build_recursive(2).steps, (StepRecord(1, 0, 10), StepRecord(2, 2, 30)))
        self.assertEqual(build_recursive(3).steps[-1], StepRecord(3, 6, 78))
        for s, record in enumerate(build_recursive(8).steps, start=1):
            self.assertEqual(record.deleted_per_copy, 0 if s == 1 else 2**s - 2)
            self.assertEqual(record.size, size_formula(s))

    def test_constructor_equivalence(self):
        ''' Test that build_recursive and build_direct agree on edges and addresses. '''
        for t in range(0, 13):
            recursive = build_recursive(t)
            direct = build_direct(t)
            self.assertEqual(recursive.graph, direct.graph)
            if t <= 6:
                for v in range(direct.graph.n):
                    self.assertEqual(recursive.address_of(v), direct.address_of(v))
                    self.assertEqual(recursive.address_of(v).heap_id(), v)

    def test_depth_relabel(self):
        ''' Test the DEPTH_RELABEL reading of build_recursive. '''
        self.assertEqual(build_recursive(2, DeletionRule.DEPTH_RELABEL).graph.m, 30)
        self.assertEqual(build_recursive(3, DeletionRule.DEPTH_RELABEL).graph.m, 54)
        self.assertNotEqual(build_recursive(3, DeletionRule.DEPTH_RELABEL).graph,
                            build_direct(3).graph)

    def test_address_of(self):
        ''' Test ClassifiedGraph.address_of function. '''
        cg = build_direct(3)
        self.assertEqual(cg.address_of(0), VertexAddress(VertexClass.hub(), ''))
        self.assertEqual(cg.address_of(2), VertexAddress(VertexClass.active(2), '1'))
        self.assertEqual(cg.address_of(5), VertexAddress(VertexClass.active(1), '10'))
        self.assertEqual(cg.address_of(7).vertex_class.kind, VertexKind.CENTER)
        self.assertEqual(cg.address_of(30), VertexAddress(VertexClass.leaf(), '1111'))
        self.assertEqual(cg.vertex_ids(VertexClass.center()), range(7, 15))

    def test_class_census(self):
        ''' Test class_census function. '''
        census = class_census(build_direct(2))
        self.assertTrue(census.ok)
        self.assertEqual(census.counts[VertexClass.leaf()], 8)
        self.assertEqual(census.counts[VertexClass.center()], 4)
        census = class_census(build_recursive(4))
        self.assertTrue(census.ok)
        self.assertEqual(census.counts[VertexClass.leaf()], 32)
        with self.assertRaises(UnsupportedT):
            class_census(build_direct(0))

        tampered = build_direct(3).graph
        us, vs = tampered.edges()
        keep = ~((us == 0) & (vs == 7))
        broken = GraphBuilder(tampered.n).add_edges(us[keep], vs[keep]).finalize()
        census = class_census(ClassifiedGraph(broken, 3))
        self.assertFalse(census.ok)
        self.assertEqual(census.violation.vertex_class, VertexClass.hub())
        self.assertEqual(census.violation.vertex, 0)
        self.assertEqual(census.violation.actual, 29)

        cg = build_direct(2)
        labels = [cg.address_of(v) for v in range(cg.graph.n)]
        labels[14] = VertexAddress(VertexClass.center(), '111')
        census = class_census(ClassifiedGraph(cg.graph, 2, labels=tuple(labels)))
        self.assertFalse(census.ok)
        self.assertEqual(census.violation.what, 'count')
        self.assertEqual(census.violation.vertex_class, VertexClass.center())
        self.assertEqual((census.violation.expected, census.violation.actual), (4, 5))

    def test_degree_table_conformance(self):
        ''' Test degree_histogram of build_direct against the closed form. '''
        for t in range(1, 15):
            self.assertEqual(degree_histogram(build_direct(t).graph), closed_form_degree_table(t))

    def test_networkx_view(self):
        ''' Test build_direct against an independent networkx rendering of G*_2. '''
        g = build_direct(2).graph
        us, vs = g.edges()
        view = nx.Graph(list(zip(us.tolist(), vs.tolist())))
        self.assertEqual(nx.diameter(view), 2)
        self.assertEqual(view.number_of_edges(), 30)

    def test_build_direct_large(self):
        ''' Test build_direct function at t = 20. '''
        if SLOW_TESTS:
            g = build_direct(20).graph
            self.assertEqual(g.n, 4194303)
            self.assertEqual(g.m, 46137342)

class TestBaselines(unittest.TestCase):
    ''' Test baselines.py module. '''

    def test_ba_config(self):
        ''' Test BaConfig class. '''
        self.assertEqual(BaConfig(1024, 2, 1).edge_count, 2045)
        self.assertEqual(BaConfig(3, 2, 1).edge_count, 3)
        with self.assertRaises(InvalidConfig):
            BaConfig(10, 0, 1).validate()
        with self.assertRaises(InvalidConfig):
            BaConfig(2, 2, 1).validate()
        with self.assertRaises(InvalidConfig):
            BaConfig(10, 2, -1).validate()
        with self.assertRaises(InvalidConfig):
            BaConfig(10, 2, 2**64).validate()

    def test_generate_ba(self):
        ''' Test generate_ba function. '''
        triangle = generate_ba(BaConfig(3, 2, 5))
        self.assertEqual(triangle, complete_graph(3))
        g = generate_ba(BaConfig(1024, 2, 1))
        self.assertEqual(g.n, 1024)
        self.assertEqual(g.m, 2045)
        self.assertTrue(is_connected(g))
        self.assertEqual(g, generate_ba(BaConfig(1024, 2, 1)))
        self.assertNotEqual(g, generate_ba(BaConfig(1024, 2, 2)))
        self.assertEqual(generate_ba(BaConfig(10, 2, 7)).m, 17)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 60), st.integers(0, 2**64 - 1))
    def test_generate_ba_properties(self, m, extra, seed):
        ''' Test that generate_ba graphs are connected, simple and of the expected size. '''
        cfg = BaConfig(m + 1 + extra, m, seed)
        g = generate_ba(cfg)
        self.assertEqual(g.m, cfg.edge_count)
        self.assertTrue(is_connected(g))
        self.assertTrue(all(d >= m for d in g.degrees().tolist()))

    def test_heavy_tail(self):
        ''' Test that BA graphs have hubs far above the mean degree. '''
        heavy = 0
        for seed in range(1, 6):
            degrees = generate_ba(BaConfig(4096, 2, seed)).degrees()
            heavy += int(degrees.max() > 10 * degrees.mean())
        self.assertTrue(heavy >= 3)

    def test_make_rng(self):
        ''' Test make_rng function. '''
        self.assertEqual(make_rng(42).integers(1000, size=5).tolist(),
                         make_rng(42).integers(1000, size=5).tolist())

    def test_spawn_seeds(self):
        ''' Test spawn_seeds function. '''
        seeds = spawn_seeds(7, 4)
        self.assertEqual(len(set(seeds)), 4)
        self.assertEqual(seeds, spawn_seeds(7, 4))
        self.assertTrue(all(0 <= s < 2**64 for s in seeds))

if __name__ == '__main__':
    unittest.main()
