"""Pattern data model and inclusion primitives.

Symbols (item names, sequence event names, vertex and edge labels) are
interned to dense integer ids per dataset; patterns carry ids only, and the
dataset's SymbolTable owns the id <-> label mapping. Three pattern kinds are
supported:

* itemsets: strictly increasing tuples of item ids,
* sequences: ordered tuples of symbol ids, repeats allowed,
* labeled graphs: simple undirected graphs with vertex labels and an
  optional edge label (id 0 is reserved for the default edge label "0").

The inclusion primitives at the bottom of the module (cover_itemset,
find_embedding, subgraph_isomorphic, graph_included) define what "pattern p
occurs in object x" means for each kind; everything else in the package is
built on top of them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

from .errors import InputError

DEFAULT_EDGE_LABEL = 0


class SymbolTable:
    """Bijective label <-> id mapping, ids assigned in first-appearance order."""

    def __init__(self, labels: Iterable[str] = ()):
        self._ids: dict[str, int] = {}
        self._labels: list[str] = []
        for label in labels:
            self.intern(label)

    def intern(self, label: str) -> int:
        """Return the id for label, assigning the next free id if unseen."""
        sid = self._ids.get(label)
        if sid is None:
            sid = len(self._labels)
            self._ids[label] = sid
            self._labels.append(label)
        return sid

    def get(self, label: str) -> int | None:
        """Id of a label, or None if the label was never interned."""
        return self._ids.get(label)

    def id_of(self, label: str) -> int:
        sid = self._ids.get(label)
        if sid is None:
            raise InputError(f"unknown symbol {label!r}")
        return sid

    def label_of(self, sid: int) -> str:
        if not 0 <= sid < len(self._labels):
            raise InputError(f"unknown symbol id {sid}")
        return self._labels[sid]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._ids

    def __repr__(self) -> str:
        return f"SymbolTable({self._labels!r})"


@dataclass(frozen=True)
class Itemset:
    """A nonempty set of item ids, stored as a strictly increasing tuple."""

    items: tuple[int, ...]

    def __post_init__(self):
        if not self.items:
            raise InputError("itemset must be nonempty")
        if self.items[0] < 0:
            raise InputError("item ids must be nonnegative")
        if any(b <= a for a, b in zip(self.items, self.items[1:])):
            raise InputError("item ids must be strictly increasing")

    @classmethod
    def of(cls, items: Iterable[int]) -> "Itemset":
        """Build from any iterable; duplicates collapse, order is normalized."""
        return cls(tuple(sorted(set(items))))

    @property
    def size(self) -> int:
        return len(self.items)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.items)


@dataclass(frozen=True)
class Sequence:
    """A nonempty ordered tuple of symbol ids; repeats are meaningful."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        if not self.symbols:
            raise InputError("sequence must be nonempty")
        if any(s < 0 for s in self.symbols):
            raise InputError("symbol ids must be nonnegative")

    @classmethod
    def of(cls, symbols: Iterable[int]) -> "Sequence":
        return cls(tuple(symbols))

    @property
    def size(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Embedding:
    """Positions (1-based, strictly increasing) witnessing one subsequence occurrence."""

    positions: tuple[int, ...]

    def __post_init__(self):
        if not self.positions:
            raise InputError("embedding must be nonempty")
        if self.positions[0] < 1:
            raise InputError("embedding positions are 1-based")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise InputError("embedding positions must be strictly increasing")


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph with labeled vertices and optionally labeled edges.

    vertices holds (vertex id, label id) pairs sorted by vertex id; edges holds
    (u, v, edge label id) triples with u < v, sorted. Self loops and parallel
    edges (same unordered vertex pair) are rejected. Use LabeledGraph.of to
    build from unnormalized input.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if not self.vertices:
            raise InputError("graph must have at least one vertex")
        vids = [vid for vid, _ in self.vertices]
        if len(set(vids)) != len(vids):
            raise InputError("duplicate vertex id")
        if list(vids) != sorted(vids):
            raise InputError("vertices must be sorted by id")
        declared = set(vids)
        seen_pairs = set()
        for u, v, _ in self.edges:
            if u == v:
                raise InputError(f"self loop at vertex {u}")
            if u > v:
                raise InputError("edge endpoints must satisfy u < v")
            if u not in declared or v not in declared:
                raise InputError(f"edge ({u},{v}) references an undeclared vertex")
            if (u, v) in seen_pairs:
                raise InputError(f"duplicate edge ({u},{v})")
            seen_pairs.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise InputError("edges must be sorted")

    @classmethod
    def of(
        cls,
        vertices: Iterable[tuple[int, int]],
        edges: Iterable[tuple[int, int] | tuple[int, int, int]] = (),
    ) -> "LabeledGraph":
        """Build from unnormalized vertex/edge lists.

        Edge triples may omit the label (defaults to DEFAULT_EDGE_LABEL) and
        endpoints may come in either order.
        """
        norm_edges = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                lbl = DEFAULT_EDGE_LABEL
            else:
                u, v, lbl = e
            norm_edges.append((min(u, v), max(u, v), lbl))
        return cls(tuple(sorted(vertices)), tuple(sorted(norm_edges)))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def label_map(self) -> dict[int, int]:
        return dict(self.vertices)

    @cached_property
    def neighbors(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """vid -> tuple of (neighbor vid, edge label id)."""
        adj: dict[int, list[tuple[int, int]]] = {vid: [] for vid, _ in self.vertices}
        for u, v, lbl in self.edges:
            adj[u].append((v, lbl))
            adj[v].append((u, lbl))
        return {vid: tuple(sorted(nbrs)) for vid, nbrs in adj.items()}

    @cached_property
    def edge_lookup(self) -> dict[tuple[int, int], int]:
        """Unordered vertex pair (normalized u < v) -> edge label id."""
        return {(u, v): lbl for u, v, lbl in self.edges}

    @cached_property
    def unique_labeled(self) -> bool:
        labels = [lbl for _, lbl in self.vertices]
        if len(set(labels)) != len(labels):
            return False
        return all(lbl == DEFAULT_EDGE_LABEL for _, _, lbl in self.edges)

    def degree(self, vid: int) -> int:
        return len(self.neighbors[vid])


Pattern = Union[Itemset, Sequence, LabeledGraph]


def pattern_size(pattern: Pattern) -> int:
    """Number of items, sequence length, or edge count."""
    if isinstance(pattern, Itemset):
        return len(pattern.items)
    if isinstance(pattern, Sequence):
        return len(pattern.symbols)
    if isinstance(pattern, LabeledGraph):
        return pattern.edge_count
    raise InputError(f"not a pattern: {pattern!r}")


def pattern_kind(pattern: Pattern) -> str:
    if isinstance(pattern, Itemset):
        return "itemset"
    if isinstance(pattern, Sequence):
        return "sequence"
    if isinstance(pattern, LabeledGraph):
        return "graph"
    raise InputError(f"not a pattern: {pattern!r}")


@dataclass(frozen=True)
class TransactionDB:
    """Transactions as sorted id-tuples; tids are the 1-based positions."""

    transactions: tuple[tuple[int, ...], ...]
    symbols: SymbolTable

    def __len__(self) -> int:
        return len(self.transactions)

    def records(self) -> Iterator[tuple[int, tuple[int, ...]]]:
        return iter(enumerate(self.transactions, start=1))


@dataclass(frozen=True)
class SequenceDB:
    """Sequences as id-tuples (repeats preserved); sids are 1-based positions."""

    sequences: tuple[tuple[int, ...], ...]
    symbols: SymbolTable

    def __len__(self) -> int:
        return len(self.sequences)

    def records(self) -> Iterator[tuple[int, tuple[int, ...]]]:
        return iter(enumerate(self.sequences, start=1))


@dataclass(frozen=True)
class GraphDB:
    """Graphs in file order; gids are 1-based positions."""

    graphs: tuple[LabeledGraph, ...]
    symbols: SymbolTable

    def __len__(self) -> int:
        return len(self.graphs)

    def records(self) -> Iterator[tuple[int, LabeledGraph]]:
        return iter(enumerate(self.graphs, start=1))


@dataclass(frozen=True)
class PatternRecord:
    """A mined pattern together with its support, cover, and size.

    cover may be None for records rebuilt from files that omitted it; when
    present it must agree with support.
    """

    pid: int
    pattern: Pattern
    support: int
    cover: frozenset[int] | None
    size: int

    def __post_init__(self):
        if self.pid < 1:
            raise InputError("pattern ids are 1-based")
        if self.support < 0:
            raise InputError("support must be nonnegative")
        if self.cover is not None and len(self.cover) != self.support:
            raise InputError("support must equal the cover cardinality")
        if self.size != pattern_size(self.pattern):
            raise InputError("size must match the pattern")

    @property
    def kind(self) -> str:
        return pattern_kind(self.pattern)


def make_record(pid: int, pattern: Pattern, cover: Iterable[int]) -> PatternRecord:
    cov = frozenset(cover)
    return PatternRecord(pid=pid, pattern=pattern, support=len(cov), cover=cov, size=pattern_size(pattern))


# ---------------------------------------------------------------------------
# Inclusion primitives


def cover_itemset(db: TransactionDB, p: Itemset) -> frozenset[int]:
    """Tids of all transactions containing every item of p."""
    for item in p.items:
        if item >= len(db.symbols):
            raise InputError(f"unknown item id {item}")
    want = p.as_set()
    return frozenset(tid for tid, txn in db.records() if want.issubset(txn))


def find_embedding(p: Sequence, host: Sequence) -> Embedding | None:
    """Leftmost-greedy subsequence embedding of p into host, or None.

    Scans host once, matching each pattern symbol at its earliest possible
    position after the previous match. Greedy matching is complete for plain
    subsequence containment: if any embedding exists, the greedy one does.
    """
    positions: list[int] = []
    i = 0
    hs = host.symbols
    for sym in p.symbols:
        while i < len(hs) and hs[i] != sym:
            i += 1
        if i == len(hs):
            return None
        positions.append(i + 1)
        i += 1
    return Embedding(tuple(positions))


def _matching_order(g: LabeledGraph) -> list[int]:
    # Vertices ordered so each one (except component seeds) touches the
    # already-placed prefix; keeps the backtracking frontier connected.
    remaining = set(g.label_map)
    placed: set[int] = set()
    order: list[int] = []
    while remaining:
        best = max(
            sorted(remaining),
            key=lambda v: (sum(1 for n, _ in g.neighbors[v] if n in placed), g.degree(v)),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def subgraph_isomorphic(p: LabeledGraph, host: LabeledGraph) -> dict[int, int] | None:
    """Injective label- and edge-preserving map of p into host, or None.

    The match is not induced: host edges between image vertices that have no
    preimage in p are allowed. Backtracking over a connectivity-friendly
    vertex order with label, degree, and mapped-neighbor consistency pruning.
    """
    if p.vertex_count > host.vertex_count or p.edge_count > host.edge_count:
        return None
    p_labels = Counter(lbl for _, lbl in p.vertices)
    h_labels = Counter(lbl for _, lbl in host.vertices)
    if any(h_labels[lbl] < n for lbl, n in p_labels.items()):
        return None

    order = _matching_order(p)
    p_label = p.label_map
    h_edge = host.edge_lookup
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def ok(pv: int, hv: int) -> bool:
        for nbr, elbl in p.neighbors[pv]:
            if nbr in mapping:
                hn = mapping[nbr]
                key = (hn, hv) if hn < hv else (hv, hn)
                if h_edge.get(key) != elbl:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        for hv, hlbl in host.vertices:
            if hv in used or hlbl != p_label[pv] or host.degree(hv) < p.degree(pv):
                continue
            if not ok(pv, hv):
                continue
            mapping[pv] = hv
            used.add(hv)
            if extend(i + 1):
                return True
            del mapping[pv]
            used.remove(hv)
        return False

    return dict(mapping) if extend(0) else None


def is_unique_labeled(g: LabeledGraph) -> bool:
    """True when vertex labels are pairwise distinct and all edges carry the default label."""
    return g.unique_labeled


def edge_itemize(g: LabeledGraph) -> tuple[tuple[int, int], ...]:
    """Edges of a unique-labeled graph as sorted (label, label) pairs.

    Each edge (u, v) becomes the pair (min, max) of the endpoint label ids.
    Unique labels make the pair set a faithful encoding: subgraph inclusion
    between unique-labeled graphs is exactly pair-set inclusion.
    """
    if not is_unique_labeled(g):
        raise InputError("graph is not unique-labeled")
    if not g.edges:
        raise InputError("edgeless graph has no edge items")
    lbl = g.label_map
    pairs = sorted((min(lbl[u], lbl[v]), max(lbl[u], lbl[v])) for u, v, _ in g.edges)
    return tuple(pairs)


def graph_included(p: LabeledGraph, host: LabeledGraph) -> bool:
    """Subgraph inclusion with a set-inclusion fast path for unique-labeled pairs."""
    if p.unique_labeled and host.unique_labeled:
        p_lbls = {lbl for _, lbl in p.vertices}
        h_lbls = {lbl for _, lbl in host.vertices}
        if not p_lbls <= h_lbls:
            return False
        lbl_p, lbl_h = p.label_map, host.label_map
        p_pairs = {(min(lbl_p[u], lbl_p[v]), max(lbl_p[u], lbl_p[v])) for u, v, _ in p.edges}
        h_pairs = {(min(lbl_h[u], lbl_h[v]), max(lbl_h[u], lbl_h[v])) for u, v, _ in host.edges}
        return p_pairs <= h_pairs
    return subgraph_isomorphic(p, host) is not None
