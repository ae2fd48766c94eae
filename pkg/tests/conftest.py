"""Shared fixtures: the small worked examples every module is tested against."""

import pytest

from siftmine import (
    BinaryMatrix,
    GraphDB,
    LabeledGraph,
    SequenceDB,
    SymbolTable,
    Tile,
    TransactionDB,
)


class ItemFixture:
    """Three transactions over items a..e: abde / bce / ae."""

    def __init__(self):
        self.symbols = SymbolTable()
        self.ids = {s: self.symbols.intern(s) for s in "abcde"}
        rows = ("abde", "bce", "ae")
        self.db = TransactionDB(
            tuple(tuple(sorted(self.ids[c] for c in row)) for row in rows), self.symbols
        )

    def itemset_ids(self, labels):
        return tuple(sorted(self.ids[c] for c in labels))

    def labels_of(self, itemset):
        return tuple(sorted(self.symbols.label_of(i) for i in itemset.items))


@pytest.fixture
def toy_items():
    return ItemFixture()


class SeqFixture:
    """Three sequences: abcdaeb / bceb / aae."""

    def __init__(self):
        self.symbols = SymbolTable()
        rows = ("abcdaeb", "bceb", "aae")
        self.db = SequenceDB(
            tuple(tuple(self.symbols.intern(c) for c in row) for row in rows), self.symbols
        )

    def seq_ids(self, text):
        return tuple(self.symbols.intern(c) for c in text)

    def labels_of(self, seq):
        return tuple(self.symbols.label_of(s) for s in seq.symbols)


@pytest.fixture
def toy_seqs():
    return SeqFixture()


class GraphFixture:
    """Five-vertex demo graphs: two unique-labeled, one with a repeated label,
    plus the two small probe graphs used for containment checks."""

    def __init__(self):
        self.symbols = SymbolTable()
        self.L = {s: self.symbols.intern(s) for s in "abcdef"}

        def graph(vlabels, edges):
            return LabeledGraph.of(
                [(i, self.L[x]) for i, x in enumerate(vlabels)], list(edges)
            )

        self.g1 = graph("abcde", [(0, 1), (0, 2), (0, 3), (2, 4)])
        self.g2 = graph("abcfe", [(0, 1), (0, 2), (0, 3), (2, 4), (1, 3)])
        self.g3 = graph("abcfa", [(0, 1), (0, 2), (0, 3), (3, 4), (1, 3)])
        self.probe_path = graph("abce", [(0, 1), (0, 2), (2, 3)])
        self.probe_triangle = graph("abf", [(0, 1), (0, 2), (1, 2)])
        self.db12 = GraphDB((self.g1, self.g2), self.symbols)
        self.db23 = GraphDB((self.g2, self.g3), self.symbols)
        self.db123 = GraphDB((self.g1, self.g2, self.g3), self.symbols)

    def graph(self, vlabels, edges):
        return LabeledGraph.of([(i, self.L[x]) for i, x in enumerate(vlabels)], list(edges))

    def edge_labels(self, g):
        lm = g.label_map
        return {
            tuple(sorted((self.symbols.label_of(lm[u]), self.symbols.label_of(lm[v]))))
            for u, v, _ in g.edges
        }


@pytest.fixture
def demo_graphs():
    return GraphFixture()


class RelocationFixture:
    """Three career-move sequences and the constraint text that keeps only S1."""

    CONSTRAINTS = "excludes bUS\nadjacent mG ma | none_between {mA,mUS} bG ma"

    def __init__(self):
        from siftmine import PatternRecord, Sequence

        self.symbols = SymbolTable()
        rows = (
            "bG mA ba mG ma",
            "bA mG ba mA ma",
            "bUS mA ba mUS ma",
        )
        seqs = tuple(tuple(self.symbols.intern(w) for w in row.split()) for row in rows)
        self.db = SequenceDB(seqs, self.symbols)
        self.records = [
            PatternRecord(
                pid=i + 1,
                pattern=Sequence.of(s),
                support=1,
                cover=frozenset({i + 1}),
                size=len(s),
            )
            for i, s in enumerate(seqs)
        ]


@pytest.fixture
def relocations():
    return RelocationFixture()


class TilingFixture:
    """The 3x3 matrix 110/101/011 and its three overlapping 2-row tiles."""

    def __init__(self):
        self.matrix = BinaryMatrix(((1, 1, 0), (1, 0, 1), (0, 1, 1)))
        self.tiles = [
            self.make_tile(1, {1, 2}, {1, 2, 3}),
            self.make_tile(2, {2, 3}, {1, 2}),
            self.make_tile(3, {2, 3}, {2, 3}),
        ]

    def make_tile(self, tid, rows, cols):
        rect = {(r, c) for r in rows for c in cols}
        return Tile(
            tile_id=tid,
            row_set=frozenset(rows),
            col_set=frozenset(cols),
            ones=frozenset(rect & self.matrix.ones),
        )


@pytest.fixture
def tiling():
    return TilingFixture()
