"""Brute-force reference implementations for verification.

Everything here favors obviousness over speed and shares no search logic
with the miners or selectors it checks: subsequence tests enumerate index
tuples, graph containment enumerates injective vertex maps, miners
enumerate candidate patterns from the data and count supports directly,
and tiling errors are counted cell by cell. Size bounds keep the
enumeration honest; exceeding one raises BoundExceededError rather than
silently taking forever.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .core import GraphDB, LabeledGraph, SequenceDB, TransactionDB, is_unique_labeled
from .errors import BoundExceededError, InputError
from .tiling import BinaryMatrix, Tile

MAX_ITEMS = 16
MAX_TRANSACTIONS = 256
MAX_SEQUENCES = 8
MAX_SEQUENCE_LEN = 12
MAX_GRAPHS = 6
MAX_GRAPH_EDGES = 10
MAX_UNIQUE_EDGES = 12
MAX_TILE_CANDIDATES = 12


def embedding_exists(pattern: tuple[int, ...], host: tuple[int, ...]) -> bool:
    """Subsequence containment via depth-first enumeration of match positions."""

    def extend(pi: int, start: int) -> bool:
        if pi == len(pattern):
            return True
        return any(
            host[h] == pattern[pi] and extend(pi + 1, h + 1) for h in range(start, len(host))
        )

    return extend(0, 0)


def all_embeddings(pattern: tuple[int, ...], host: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every embedding as a 1-based position tuple, by filtering index combinations."""
    out = []
    for positions in combinations(range(len(host)), len(pattern)):
        if all(host[h] == sym for h, sym in zip(positions, pattern)):
            out.append(tuple(h + 1 for h in positions))
    return out


def injective_map_exists(pattern: LabeledGraph, host: LabeledGraph) -> bool:
    """Subgraph containment by trying every injective vertex assignment."""
    p_vids = [vid for vid, _ in pattern.vertices]
    p_label = pattern.label_map
    h_label = host.label_map
    h_edges = host.edge_lookup
    for image in permutations([vid for vid, _ in host.vertices], len(p_vids)):
        assign = dict(zip(p_vids, image))
        if any(p_label[v] != h_label[assign[v]] for v in p_vids):
            continue
        ok = True
        for u, v, el in pattern.edges:
            hu, hv = assign[u], assign[v]
            if h_edges.get((min(hu, hv), max(hu, hv))) != el:
                ok = False
                break
        if ok:
            return True
    return False


def frequent_itemsets_bruteforce(db: TransactionDB, sigma: int) -> dict[tuple[int, ...], frozenset[int]]:
    """Every frequent itemset (as an id tuple) with its cover, by powerset scan."""
    if len(db) > MAX_TRANSACTIONS:
        raise BoundExceededError(f"{len(db)} transactions exceed oracle bound {MAX_TRANSACTIONS}")
    universe = sorted({item for txn in db.transactions for item in txn})
    if len(universe) > MAX_ITEMS:
        raise BoundExceededError(f"{len(universe)} distinct items exceed oracle bound {MAX_ITEMS}")
    sets = [(tid, set(txn)) for tid, txn in db.records()]
    out: dict[tuple[int, ...], frozenset[int]] = {}
    for k in range(1, len(universe) + 1):
        for items in combinations(universe, k):
            want = set(items)
            cover = frozenset(tid for tid, txn in sets if want <= txn)
            if len(cover) >= sigma:
                out[items] = cover
    return out


def frequent_sequences_bruteforce(
    db: SequenceDB, sigma: int, max_len: int | None = None
) -> dict[tuple[int, ...], frozenset[int]]:
    """Every frequent sequential pattern with its cover.

    Candidates are the distinct subsequences of the database sequences
    (any frequent pattern embeds into some sequence, so this is exhaustive);
    support is recounted per candidate with the enumeration-based test.
    """
    if len(db) > MAX_SEQUENCES:
        raise BoundExceededError(f"{len(db)} sequences exceed oracle bound {MAX_SEQUENCES}")
    if any(len(s) > MAX_SEQUENCE_LEN for s in db.sequences):
        raise BoundExceededError(f"sequence longer than oracle bound {MAX_SEQUENCE_LEN}")
    candidates: set[tuple[int, ...]] = set()
    for seq in db.sequences:
        top = len(seq) if max_len is None else min(max_len, len(seq))
        for k in range(1, top + 1):
            for positions in combinations(range(len(seq)), k):
                candidates.add(tuple(seq[i] for i in positions))
    out: dict[tuple[int, ...], frozenset[int]] = {}
    for cand in sorted(candidates):
        cover = frozenset(sid for sid, seq in db.records() if embedding_exists(cand, seq))
        if len(cover) >= sigma:
            out[cand] = cover
    return out


def frequent_graphs_unique_bruteforce(
    db: GraphDB, sigma: int
) -> dict[tuple[tuple[int, int], ...], frozenset[int]]:
    """Frequent edge-pair sets of unique-labeled graphs, keyed by sorted pairs."""
    if len(db) > MAX_GRAPHS:
        raise BoundExceededError(f"{len(db)} graphs exceed oracle bound {MAX_GRAPHS}")
    pair_sets: list[tuple[int, frozenset[tuple[int, int]]]] = []
    for gid, g in db.records():
        if not is_unique_labeled(g):
            raise InputError(f"graph {gid} is not unique-labeled")
        if g.edge_count > MAX_UNIQUE_EDGES:
            raise BoundExceededError(f"graph {gid} exceeds oracle bound of {MAX_UNIQUE_EDGES} edges")
        lbl = g.label_map
        pair_sets.append(
            (gid, frozenset((min(lbl[u], lbl[v]), max(lbl[u], lbl[v])) for u, v, _ in g.edges))
        )
    candidates: set[frozenset[tuple[int, int]]] = set()
    for _, pairs in pair_sets:
        for k in range(1, len(pairs) + 1):
            for subset in combinations(sorted(pairs), k):
                candidates.add(frozenset(subset))
    out: dict[tuple[tuple[int, int], ...], frozenset[int]] = {}
    for cand in sorted(candidates, key=lambda s: (len(s), sorted(s))):
        cover = frozenset(gid for gid, pairs in pair_sets if cand <= pairs)
        if len(cover) >= sigma:
            out[tuple(sorted(cand))] = cover
    return out


def _connected_edge_subgraph(g: LabeledGraph, edge_idx: tuple[int, ...]) -> LabeledGraph | None:
    edges = [g.edges[i] for i in edge_idx]
    vids = sorted({v for u, v, _ in edges} | {u for u, v, _ in edges})
    # connectivity over the chosen edges only
    parent = {v: v for v in vids}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v, _ in edges:
        parent[find(u)] = find(v)
    if len({find(v) for v in vids}) != 1:
        return None
    lbl = g.label_map
    return LabeledGraph(tuple((v, lbl[v]) for v in vids), tuple(sorted(edges)))


def _iso_signature(g: LabeledGraph) -> tuple:
    degrees = sorted((lbl, g.degree(vid)) for vid, lbl in g.vertices)
    edge_labels = sorted(el for _, _, el in g.edges)
    return (g.vertex_count, g.edge_count, tuple(degrees), tuple(edge_labels))


def frequent_graphs_general_bruteforce(
    db: GraphDB, sigma: int, max_edges: int | None = None
) -> list[tuple[LabeledGraph, frozenset[int]]]:
    """Frequent connected patterns by enumerating every connected edge subset.

    A connected pattern occurs in a graph exactly when it is isomorphic to
    one of that graph's connected edge subsets, so enumerating those per
    graph and bucketing them into isomorphism classes (signature prefilter,
    then exhaustive injective maps both ways) yields supports directly.
    """
    if len(db) > MAX_GRAPHS:
        raise BoundExceededError(f"{len(db)} graphs exceed oracle bound {MAX_GRAPHS}")
    for gid, g in db.records():
        if g.edge_count > MAX_GRAPH_EDGES:
            raise BoundExceededError(f"graph {gid} exceeds oracle bound of {MAX_GRAPH_EDGES} edges")

    classes: list[tuple[tuple, LabeledGraph, set[int]]] = []
    for gid, g in db.records():
        top = g.edge_count if max_edges is None else min(max_edges, g.edge_count)
        seen_here: set[int] = set()
        for k in range(1, top + 1):
            for edge_idx in combinations(range(g.edge_count), k):
                sub = _connected_edge_subgraph(g, edge_idx)
                if sub is None:
                    continue
                sig = _iso_signature(sub)
                for ci, (csig, rep, cover) in enumerate(classes):
                    if csig == sig and injective_map_exists(sub, rep):
                        if ci not in seen_here:
                            cover.add(gid)
                            seen_here.add(ci)
                        break
                else:
                    classes.append((sig, sub, {gid}))
                    seen_here.add(len(classes) - 1)
    return [(rep, frozenset(cover)) for _, rep, cover in classes if len(cover) >= sigma]


def tiling_error_bruteforce(
    matrix: BinaryMatrix,
    tiles: list[Tile],
    mode: str = "coverable",
    candidates: list[Tile] | None = None,
) -> int:
    """Cell-by-cell error count, independent of the set-arithmetic version."""
    universe = tiles if candidates is None else candidates
    total = 0
    for r in range(1, matrix.n_rows + 1):
        for c in range(1, matrix.n_cols + 1):
            inside = any(r in t.row_set and c in t.col_set for t in tiles)
            d = matrix.cell(r, c)
            if d == 0 and inside:
                total += 1
            elif d == 1 and not inside:
                if mode == "full":
                    total += 1
                elif any((r, c) in t.ones for t in universe):
                    total += 1
    return total


def exact_selections_bruteforce(
    matrix: BinaryMatrix,
    candidates: list[Tile],
    budget: int,
    error_mode: str = "coverable",
) -> list[tuple[tuple[int, ...], int]]:
    """All admissible nonempty subsets with their errors, by full enumeration."""
    if len(candidates) > MAX_TILE_CANDIDATES:
        raise BoundExceededError(
            f"{len(candidates)} candidates exceed oracle bound {MAX_TILE_CANDIDATES}"
        )
    tiles = sorted(candidates, key=lambda t: t.tile_id)
    out: list[tuple[tuple[int, ...], int]] = []
    for k in range(1, len(tiles) + 1):
        for subset in combinations(tiles, k):
            err = tiling_error_bruteforce(matrix, list(subset), error_mode, candidates)
            if err <= budget:
                out.append((tuple(t.tile_id for t in subset), err))
    return out
