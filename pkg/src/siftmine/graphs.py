"""Frequent subgraph mining and canonical graph forms.

Two miners live here. The unique-labeled miner exploits a structural gift:
when every vertex label in a graph occurs once and edges are unlabeled,
subgraph inclusion collapses to set inclusion over label pairs, so graphs
reduce to itemsets and the itemset miner does the heavy lifting. The general
miner grows connected patterns edge by edge and deduplicates candidates by a
canonical form, the minimum DFS code.

A DFS code is the edge list of one depth-first traversal, each edge written
as the 5-tuple (i, j, l_i, l_e, l_j) over discovery indices; the canonical
code is the lexicographically smallest one over all traversals. Two graphs
share a canonical code exactly when they are isomorphic, since the code
reconstructs the graph up to renaming.
"""

from __future__ import annotations

from .core import (
    DEFAULT_EDGE_LABEL,
    GraphDB,
    Itemset,
    LabeledGraph,
    PatternRecord,
    SymbolTable,
    TransactionDB,
    edge_itemize,
    is_unique_labeled,
    subgraph_isomorphic,
)
from .errors import InputError
from .itemsets import MinSupport, mine_frequent_itemsets

# An isolated vertex with label l encodes as this sentinel; a real component
# code always starts with discovery indices (0, 1), so no collision.
_VERTEX_SENTINEL = -1


def _components(g: LabeledGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps: list[list[int]] = []
    for vid, _ in g.vertices:
        if vid in seen:
            continue
        comp = [vid]
        seen.add(vid)
        queue = [vid]
        while queue:
            u = queue.pop()
            for n, _ in g.neighbors[u]:
                if n not in seen:
                    seen.add(n)
                    comp.append(n)
                    queue.append(n)
        comps.append(sorted(comp))
    return comps


def _component_min_code(comp: list[int], g: LabeledGraph) -> tuple:
    label = g.label_map
    elabel = g.edge_lookup
    adj = {v: [n for n, _ in g.neighbors[v]] for v in comp}
    n_edges = sum(len(nbrs) for nbrs in adj.values()) // 2
    if n_edges == 0:
        return ((0, 0, label[comp[0]], _VERTEX_SENTINEL, _VERTEX_SENTINEL),)

    def ekey(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    best: list[tuple] | None = None

    def search(stack: list[int], disc: dict[int, int], emitted: frozenset, code: list[tuple]) -> None:
        nonlocal best
        if best is not None and code > best[: len(code)]:
            return
        if len(code) == n_edges:
            if best is None or code < best:
                best = list(code)
            return
        if not stack:
            return
        u = stack[-1]
        # Backward edges from the current vertex are forced, emitted in
        # ascending discovery index of the target.
        back = sorted((disc[w], w) for w in adj[u] if w in disc and ekey(u, w) not in emitted)
        if back:
            ext = [(disc[u], dw, label[u], elabel[ekey(u, w)], label[w]) for dw, w in back]
            search(stack, disc, emitted | {ekey(u, w) for _, w in back}, code + ext)
            return
        fwd = sorted(set(w for w in adj[u] if w not in disc))
        if fwd:
            # Only minimal next tuples can start a minimal completion; ties
            # still branch because their futures differ.
            ranked = sorted((elabel[ekey(u, w)], label[w], w) for w in fwd)
            lowest = ranked[0][:2]
            for el, lw, w in ranked:
                if (el, lw) != lowest:
                    break
                disc2 = dict(disc)
                disc2[w] = len(disc)
                search(
                    stack + [w],
                    disc2,
                    emitted | {ekey(u, w)},
                    code + [(disc[u], disc2[w], label[u], el, lw)],
                )
            return
        search(stack[:-1], disc, emitted, code)

    start_label = min(label[v] for v in comp)
    for v0 in comp:
        if label[v0] == start_label:
            search([v0], {v0: 0}, frozenset(), [])
    assert best is not None
    return tuple(best)


def canonical_code(g: LabeledGraph) -> tuple:
    """Canonical form of g: the sorted tuple of per-component minimum DFS codes.

    Equal codes characterize isomorphism, including for disconnected graphs,
    because each component code rebuilds its component up to vertex renaming
    and sorting makes the component multiset order-free.
    """
    return tuple(sorted(_component_min_code(comp, g) for comp in _components(g)))


def _extensions(g: LabeledGraph, edge_types: set[tuple[int, int, int]]) -> list[LabeledGraph]:
    # One-edge extensions restricted to edge types present in the database:
    # attach a new vertex to an existing one, or close a pair of existing
    # non-adjacent vertices. Every connected (k+1)-edge graph arises from a
    # connected k-edge subgraph this way (delete a leaf edge or a cycle edge),
    # so growth is complete.
    out: list[LabeledGraph] = []
    next_vid = g.vertices[-1][0] + 1
    for vid, lv in g.vertices:
        for la, lb, el in sorted(edge_types):
            if la == lv:
                out.append(LabeledGraph.of(g.vertices + ((next_vid, lb),), g.edges + ((vid, next_vid, el),)))
            if lb == lv and la != lb:
                out.append(LabeledGraph.of(g.vertices + ((next_vid, la),), g.edges + ((vid, next_vid, el),)))
    present = set(g.edge_lookup)
    verts = g.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            u, lu = verts[i]
            v, lv = verts[j]
            if (u, v) in present:
                continue
            pa, pb = min(lu, lv), max(lu, lv)
            for la, lb, el in sorted(edge_types):
                if (la, lb) == (pa, pb):
                    out.append(LabeledGraph.of(verts, g.edges + ((u, v, el),)))
    return out


def mine_frequent_graphs_general(
    db: GraphDB, minsup: MinSupport, max_edges: int | None = None
) -> list[PatternRecord]:
    """Frequent connected subgraph patterns with 1..max_edges edges.

    Support counts database graphs containing the pattern (at least one
    subgraph isomorphism), never occurrences. Candidates are deduplicated by
    canonical code, and each level only rechecks the parent's cover since
    support is anti-monotone under subgraph inclusion. Results are ordered by
    (edge count, canonical code) with pids 1..n.
    """
    if len(db) == 0:
        raise InputError("database must be nonempty")
    if max_edges is not None and max_edges < 1:
        raise InputError("max_edges must be positive")
    sigma = minsup.effective(len(db))
    if sigma > len(db):
        return []

    edge_types: set[tuple[int, int, int]] = set()
    for _, g in db.records():
        lbl = g.label_map
        for u, v, el in g.edges:
            la, lb = lbl[u], lbl[v]
            edge_types.add((min(la, lb), max(la, lb), el))

    level: dict[tuple, tuple[LabeledGraph, frozenset[int]]] = {}
    for la, lb, el in sorted(edge_types):
        pat = LabeledGraph(((0, la), (1, lb)), ((0, 1, el),))
        cover = frozenset(gid for gid, g in db.records() if subgraph_isomorphic(pat, g) is not None)
        if len(cover) >= sigma:
            level[canonical_code(pat)] = (pat, cover)

    collected = list(level.items())
    k = 1
    while level and (max_edges is None or k < max_edges):
        grown: dict[tuple, tuple[LabeledGraph, frozenset[int]]] = {}
        rejected: set[tuple] = set()
        for _, (pat, cover) in sorted(level.items()):
            for cand in _extensions(pat, edge_types):
                code = canonical_code(cand)
                if code in grown or code in rejected:
                    continue
                new_cover = frozenset(
                    gid for gid in cover if subgraph_isomorphic(cand, db.graphs[gid - 1]) is not None
                )
                if len(new_cover) >= sigma:
                    grown[code] = (cand, new_cover)
                else:
                    rejected.add(code)
        collected.extend(grown.items())
        level = grown
        k += 1

    collected.sort(key=lambda entry: (entry[1][0].edge_count, entry[0]))
    return [
        PatternRecord(pid=pid, pattern=pat, support=len(cover), cover=cover, size=pat.edge_count)
        for pid, (_, (pat, cover)) in enumerate(collected, start=1)
    ]


def mine_frequent_graphs_unique(db: GraphDB, minsup: MinSupport) -> list[PatternRecord]:
    """Frequent subgraph patterns of a database of unique-labeled graphs.

    Each graph becomes the itemset of its label-pair edges; the itemset miner
    enumerates frequent pair sets; each result maps back to a graph whose
    vertices are exactly the labels its edges touch. Patterns may be
    disconnected. An edgeless graph contributes an empty transaction but still
    counts toward the database size. Raises when any input graph is not
    unique-labeled, naming the offending graph.
    """
    if len(db) == 0:
        raise InputError("database must be nonempty")
    for gid, g in db.records():
        if not is_unique_labeled(g):
            raise InputError(f"graph {gid} is not unique-labeled")

    pair_ids: dict[tuple[int, int], int] = {}
    pairs_by_id: list[tuple[int, int]] = []
    pair_table = SymbolTable()
    transactions: list[tuple[int, ...]] = []
    for _, g in db.records():
        items: list[int] = []
        if g.edges:
            for pair in edge_itemize(g):
                pid = pair_ids.get(pair)
                if pid is None:
                    pid = len(pairs_by_id)
                    pair_ids[pair] = pid
                    pairs_by_id.append(pair)
                    pair_table.intern(f"{pair[0]}~{pair[1]}")
                items.append(pid)
        transactions.append(tuple(sorted(set(items))))

    reduced = TransactionDB(tuple(transactions), pair_table)
    out: list[PatternRecord] = []
    for rec in mine_frequent_itemsets(reduced, minsup):
        assert isinstance(rec.pattern, Itemset)
        pairs = [pairs_by_id[i] for i in rec.pattern.items]
        labels = sorted({lbl for pair in pairs for lbl in pair})
        vid_of = {lbl: vid for vid, lbl in enumerate(labels)}
        vertices = tuple(enumerate(labels))
        edges = tuple(sorted((vid_of[a], vid_of[b], DEFAULT_EDGE_LABEL) for a, b in pairs))
        pattern = LabeledGraph(vertices, edges)
        out.append(
            PatternRecord(pid=rec.pid, pattern=pattern, support=rec.support, cover=rec.cover, size=rec.size)
        )
    return out
