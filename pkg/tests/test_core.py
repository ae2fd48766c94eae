"""Core types: symbol interning, pattern validation, containment operations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siftmine import (
    Embedding,
    InputError,
    Itemset,
    LabeledGraph,
    PatternRecord,
    Sequence,
    SymbolTable,
    TransactionDB,
    cover_itemset,
    edge_itemize,
    find_embedding,
    graph_included,
    is_unique_labeled,
    pattern_kind,
    pattern_size,
    subgraph_isomorphic,
)
from siftmine.oracle import all_embeddings, embedding_exists, injective_map_exists


class TestSymbolTable:
    def test_first_appearance_order(self):
        t = SymbolTable()
        assert [t.intern(s) for s in ("b", "a", "b", "c")] == [0, 1, 0, 2]
        assert t.labels == ("b", "a", "c")
        assert len(t) == 3

    def test_lookup(self):
        t = SymbolTable()
        t.intern("x")
        assert t.id_of("x") == 0
        assert t.label_of(0) == "x"
        assert "x" in t and "y" not in t
        assert t.get("y") is None
        with pytest.raises(InputError):
            t.id_of("y")
        with pytest.raises(InputError):
            t.label_of(5)


class TestItemset:
    def test_normalization_and_validation(self):
        assert Itemset.of((3, 1, 2)).items == (1, 2, 3)
        assert Itemset.of([5]).size == 1
        assert Itemset.of((1, 1)).items == (1,)  # .of collapses duplicates
        with pytest.raises(InputError):
            Itemset.of(())
        with pytest.raises(InputError):
            Itemset(items=(2, 1))
        with pytest.raises(InputError):
            Itemset(items=(1, 1))

    def test_as_set(self):
        assert Itemset.of((2, 0)).as_set() == frozenset({0, 2})


class TestSequence:
    def test_repeats_kept(self):
        s = Sequence.of((1, 1, 0))
        assert s.symbols == (1, 1, 0)
        assert s.size == 3
        with pytest.raises(InputError):
            Sequence.of(())


class TestEmbedding:
    def test_positions_strictly_increasing(self):
        assert Embedding((1, 3, 4)).positions == (1, 3, 4)
        with pytest.raises(InputError):
            Embedding((1, 1))
        with pytest.raises(InputError):
            Embedding((0, 1))
        with pytest.raises(InputError):
            Embedding(())


class TestLabeledGraph:
    def test_normalization(self):
        g = LabeledGraph.of([(1, 7), (0, 5)], [(1, 0)])
        assert g.vertices == ((0, 5), (1, 7))
        assert g.edges == ((0, 1, 0),)

    def test_rejections(self):
        with pytest.raises(InputError):
            LabeledGraph.of([], [])
        with pytest.raises(InputError):
            LabeledGraph.of([(0, 1), (0, 2)], [])
        with pytest.raises(InputError):
            LabeledGraph.of([(0, 1)], [(0, 0)])
        with pytest.raises(InputError):
            LabeledGraph.of([(0, 1), (1, 1)], [(0, 1), (1, 0)])
        with pytest.raises(InputError):
            LabeledGraph.of([(0, 1)], [(0, 3)])

    def test_degree_and_neighbors(self, demo_graphs):
        g1 = demo_graphs.g1
        assert g1.degree(0) == 3
        assert g1.degree(4) == 1
        assert g1.neighbors[2] == ((0, 0), (4, 0))


class TestPatternHelpers:
    def test_kind_and_size(self, demo_graphs):
        assert pattern_kind(Itemset.of((1,))) == "itemset"
        assert pattern_kind(Sequence.of((1, 1))) == "sequence"
        assert pattern_kind(demo_graphs.g1) == "graph"
        assert pattern_size(Itemset.of((1, 2))) == 2
        assert pattern_size(Sequence.of((1, 1, 1))) == 3
        assert pattern_size(demo_graphs.g1) == 4  # edge count

    def test_record_validation(self):
        pat = Itemset.of((0, 1))
        PatternRecord(pid=1, pattern=pat, support=2, cover=frozenset({1, 2}), size=2)
        with pytest.raises(InputError):
            PatternRecord(pid=1, pattern=pat, support=1, cover=frozenset({1, 2}), size=2)
        with pytest.raises(InputError):
            PatternRecord(pid=1, pattern=pat, support=2, cover=frozenset({1, 2}), size=3)
        with pytest.raises(InputError):
            PatternRecord(pid=0, pattern=pat, support=2, cover=frozenset({1, 2}), size=2)


class TestCoverItemset:
    def test_table_values(self, toy_items):
        f = toy_items
        assert cover_itemset(f.db, Itemset.of(f.itemset_ids("ae"))) == frozenset({1, 3})
        assert cover_itemset(f.db, Itemset.of(f.itemset_ids("be"))) == frozenset({1, 2})
        assert cover_itemset(f.db, Itemset.of(f.itemset_ids("e"))) == frozenset({1, 2, 3})

    def test_unknown_item_id(self, toy_items):
        with pytest.raises(InputError):
            cover_itemset(toy_items.db, Itemset.of((99,)))


class TestFindEmbedding:
    def test_worked_examples(self, toy_seqs):
        host = Sequence.of(toy_seqs.seq_ids("abcdaeb"))
        assert find_embedding(Sequence.of(toy_seqs.seq_ids("bceb")), host).positions == (2, 3, 6, 7)
        assert find_embedding(Sequence.of(toy_seqs.seq_ids("aae")), host).positions == (1, 5, 6)
        short = Sequence.of(toy_seqs.seq_ids("bceb"))
        assert find_embedding(Sequence.of(toy_seqs.seq_ids("bdb")), short) is None

    def test_identity_embedding(self):
        s = Sequence.of((4, 2, 4))
        assert find_embedding(s, s).positions == (1, 2, 3)

    @given(
        pattern=st.lists(st.integers(0, 2), min_size=1, max_size=4),
        host=st.lists(st.integers(0, 2), min_size=1, max_size=8),
    )
    @settings(max_examples=200, deadline=None)
    def test_matches_bruteforce_existence(self, pattern, host):
        p, h = Sequence.of(tuple(pattern)), Sequence.of(tuple(host))
        got = find_embedding(p, h)
        assert (got is not None) == embedding_exists(p.symbols, h.symbols)
        if got is not None:
            # a genuine witness, and the leftmost one
            assert all(h.symbols[pos - 1] == p.symbols[k] for k, pos in enumerate(got.positions))
            assert got.positions == min(all_embeddings(p.symbols, h.symbols))


class TestSubgraphIsomorphic:
    def test_probe_graphs(self, demo_graphs):
        f = demo_graphs
        checks = [
            (f.probe_path, f.g1, True),
            (f.probe_path, f.g2, True),
            (f.probe_path, f.g3, False),
            (f.probe_triangle, f.g1, False),
            (f.probe_triangle, f.g2, True),
            (f.probe_triangle, f.g3, True),
        ]
        for pat, host, want in checks:
            assert (subgraph_isomorphic(pat, host) is not None) == want
            assert graph_included(pat, host) == want

    def test_mapping_is_a_witness(self, demo_graphs):
        f = demo_graphs
        mapping = subgraph_isomorphic(f.probe_triangle, f.g2)
        lm_p, lm_h = f.probe_triangle.label_map, f.g2.label_map
        assert len(set(mapping.values())) == len(mapping)
        for v, lbl in f.probe_triangle.vertices:
            assert lm_h[mapping[v]] == lbl
        host_pairs = {(u, v): l for u, v, l in f.g2.edges}
        for u, v, l in f.probe_triangle.edges:
            a, b = sorted((mapping[u], mapping[v]))
            assert host_pairs[(a, b)] == l

    def test_randomized_against_permutation_oracle(self):
        rng = random.Random(20260819)
        from helpers import random_graph

        symbols = SymbolTable()
        labels = [symbols.intern(f"L{k}") for k in range(2)]
        for _ in range(150):
            pat = random_graph(rng, labels, max_vertices=4, max_extra_edges=2)
            host = random_graph(rng, labels, max_vertices=6, max_extra_edges=4)
            assert (subgraph_isomorphic(pat, host) is not None) == injective_map_exists(pat, host)

    def test_edge_labels_must_match(self):
        pat = LabeledGraph.of([(0, 1), (1, 2)], [(0, 1, 5)])
        host = LabeledGraph.of([(0, 1), (1, 2)], [(0, 1, 6)])
        assert subgraph_isomorphic(pat, host) is None


class TestUniqueLabeled:
    def test_examples(self, demo_graphs):
        assert is_unique_labeled(demo_graphs.g1)
        assert is_unique_labeled(demo_graphs.g2)
        assert not is_unique_labeled(demo_graphs.g3)

    def test_edge_itemize(self, demo_graphs):
        f = demo_graphs
        pairs = edge_itemize(f.g1)
        want = {
            tuple(sorted((f.L["a"], f.L["b"]))),
            tuple(sorted((f.L["a"], f.L["c"]))),
            tuple(sorted((f.L["a"], f.L["d"]))),
            tuple(sorted((f.L["c"], f.L["e"]))),
        }
        assert set(pairs) == want
        assert list(pairs) == sorted(pairs)

    def test_edge_itemize_rejects(self, demo_graphs):
        with pytest.raises(InputError):
            edge_itemize(demo_graphs.g3)
        lonely = LabeledGraph.of([(0, 1)], [])
        with pytest.raises(InputError):
            edge_itemize(lonely)

    def test_inclusion_fast_path_equals_general(self, demo_graphs):
        f = demo_graphs
        rng = random.Random(7)
        from helpers import random_unique_graph_db

        for _ in range(40):
            db = random_unique_graph_db(rng, max_graphs=2, n_labels=5)
            a, b = db.graphs[0], db.graphs[-1]
            fast = graph_included(a, b)
            slow = subgraph_isomorphic(a, b) is not None
            assert fast == slow
