"""Loaders and writers for every file format the package speaks.

Inputs: transaction, sequence, and graph databases, binary matrices, weight
tables, and candidate-tile lists. Outputs: pattern files and tiling reports.
All loaders are strict: malformed content raises InputError with the path
and 1-based line number, and no line is ever silently skipped. Interning is
deterministic (first appearance order), so loading a file twice yields
identical id assignments.

Pattern files are line-oriented key=value records. Labels are percent-quoted
so any non-whitespace token round-trips losslessly; a written file parses
back to exactly the same outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable
from urllib.parse import quote, unquote

from .core import (
    GraphDB,
    Itemset,
    LabeledGraph,
    PatternRecord,
    Sequence,
    SequenceDB,
    SymbolTable,
    TransactionDB,
)
from .errors import InputError
from .tiling import BinaryMatrix, Tile, TileSelection, error_terms


def _read_lines(path) -> list[str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    return text.splitlines()


def load_transactions(path) -> TransactionDB:
    """One transaction per line, whitespace-separated items, duplicates collapsed."""
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty file")
    symbols = SymbolTable()
    transactions: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        transactions.append(tuple(sorted({symbols.intern(tok) for tok in tokens})))
    return TransactionDB(tuple(transactions), symbols)


def load_sequences(path) -> SequenceDB:
    """One sequence per line, whitespace-separated symbols, repeats preserved."""
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty file")
    symbols = SymbolTable()
    sequences: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        sequences.append(tuple(symbols.intern(tok) for tok in tokens))
    return SequenceDB(tuple(sequences), symbols)


def load_graphs(path) -> GraphDB:
    """Graph records: `t # <gid>`, then `v <vid> <label>` and `e <u> <v> [<elabel>]` lines.

    Graph ids must be 1-based and dense in file order. Vertex ids are
    nonnegative integers local to their record. The edge label is optional
    and defaults to "0"; that label is always interned first, at id 0.
    """
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty file")
    symbols = SymbolTable()
    symbols.intern("0")
    graphs: list[LabeledGraph] = []
    vertices: list[tuple[int, int]] | None = None
    edges: list[tuple[int, int, int]] = []
    seen_vids: set[int] = set()
    seen_pairs: set[tuple[int, int]] = set()
    record_line = 0

    def finalize() -> None:
        if vertices is None:
            return
        if not vertices:
            raise InputError(f"{path}: line {record_line}: graph {len(graphs) + 1} has no vertices")
        graphs.append(LabeledGraph.of(vertices, edges))

    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        tag = tokens[0]
        if tag == "t":
            finalize()
            if len(tokens) != 3 or tokens[1] != "#":
                raise InputError(f"{path}: line {lineno}: malformed graph header, expected `t # <gid>`")
            try:
                gid = int(tokens[2])
            except ValueError:
                raise InputError(f"{path}: line {lineno}: graph id {tokens[2]!r} is not an integer") from None
            if gid != len(graphs) + 1:
                raise InputError(
                    f"{path}: line {lineno}: graph id {gid} out of order, expected {len(graphs) + 1}"
                )
            vertices = []
            edges = []
            seen_vids = set()
            seen_pairs = set()
            record_line = lineno
        elif tag == "v":
            if vertices is None:
                raise InputError(f"{path}: line {lineno}: vertex before any graph header")
            if len(tokens) != 3:
                raise InputError(f"{path}: line {lineno}: malformed vertex, expected `v <vid> <label>`")
            try:
                vid = int(tokens[1])
            except ValueError:
                raise InputError(f"{path}: line {lineno}: vertex id {tokens[1]!r} is not an integer") from None
            if vid < 0:
                raise InputError(f"{path}: line {lineno}: vertex id must be nonnegative")
            if vid in seen_vids:
                raise InputError(f"{path}: line {lineno}: duplicate vertex id {vid}")
            seen_vids.add(vid)
            vertices.append((vid, symbols.intern(tokens[2])))
        elif tag == "e":
            if vertices is None:
                raise InputError(f"{path}: line {lineno}: edge before any graph header")
            if len(tokens) not in (3, 4):
                raise InputError(f"{path}: line {lineno}: malformed edge, expected `e <u> <v> [<elabel>]`")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise InputError(f"{path}: line {lineno}: edge endpoints must be integers") from None
            if u == v:
                raise InputError(f"{path}: line {lineno}: self-loop at vertex {u}")
            if u not in seen_vids or v not in seen_vids:
                raise InputError(f"{path}: line {lineno}: edge ({u},{v}) references an undeclared vertex")
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise InputError(f"{path}: line {lineno}: duplicate edge ({u},{v})")
            seen_pairs.add(pair)
            edges.append((pair[0], pair[1], symbols.intern(tokens[3] if len(tokens) == 4 else "0")))
        else:
            raise InputError(f"{path}: line {lineno}: unknown record tag {tag!r}")
    finalize()
    if not graphs:
        raise InputError(f"{path}: no graph records")
    return GraphDB(tuple(graphs), symbols)


def load_matrix(path) -> BinaryMatrix:
    """Rows of space-separated 0/1 cells, all rows the same length."""
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty file")
    rows: list[tuple[int, ...]] = []
    width: int | None = None
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        cells = []
        for tok in tokens:
            if tok not in ("0", "1"):
                raise InputError(f"{path}: line {lineno}: non-binary cell {tok!r}")
            cells.append(int(tok))
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise InputError(f"{path}: line {lineno}: ragged row ({len(cells)} cells, expected {width})")
        rows.append(tuple(cells))
    return BinaryMatrix(tuple(rows))


@dataclass(frozen=True)
class WeightTable:
    """Per-symbol nonnegative integer costs; unlisted symbols cost 0."""

    costs: dict[int, int]

    def cost_of(self, sid: int) -> int:
        return self.costs.get(sid, 0)


def load_weights(path, symbols: SymbolTable) -> WeightTable:
    """`SYM INT` per line; symbols are interned into the given table."""
    lines = _read_lines(path)
    costs: dict[int, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        if len(tokens) != 2:
            raise InputError(f"{path}: line {lineno}: expected `SYM WEIGHT`")
        try:
            weight = int(tokens[1])
        except ValueError:
            raise InputError(f"{path}: line {lineno}: weight {tokens[1]!r} is not an integer") from None
        if weight < 0:
            raise InputError(f"{path}: line {lineno}: negative weight")
        sid = symbols.intern(tokens[0])
        if sid in costs:
            raise InputError(f"{path}: line {lineno}: duplicate weight for {tokens[0]!r}")
        costs[sid] = weight
    return WeightTable(costs)


def load_tiles(path, matrix: BinaryMatrix) -> list[Tile]:
    """Candidate tiles as `rows=R,R,... cols=C,C,...` lines, ids 1..n in file order.

    Each tile's ones are the data ones inside its rectangle.
    """
    lines = _read_lines(path)
    if not lines:
        raise InputError(f"{path}: empty file")
    tiles: list[Tile] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            raise InputError(f"{path}: line {lineno}: blank line")
        fields = dict(_split_kv(tok, path, lineno) for tok in tokens)
        if set(fields) != {"rows", "cols"} or len(tokens) != 2:
            raise InputError(f"{path}: line {lineno}: expected `rows=... cols=...`")
        rows = _parse_int_list(fields["rows"], path, lineno)
        cols = _parse_int_list(fields["cols"], path, lineno)
        if any(not 1 <= r <= matrix.n_rows for r in rows):
            raise InputError(f"{path}: line {lineno}: row index out of range 1..{matrix.n_rows}")
        if any(not 1 <= c <= matrix.n_cols for c in cols):
            raise InputError(f"{path}: line {lineno}: column index out of range 1..{matrix.n_cols}")
        ones = frozenset((r, c) for r in rows for c in cols if matrix.cell(r, c))
        tiles.append(
            Tile(tile_id=len(tiles) + 1, row_set=frozenset(rows), col_set=frozenset(cols), ones=ones)
        )
    return tiles


# ---------------------------------------------------------------------------
# Pattern files


@dataclass(frozen=True)
class PatternOutput:
    """One pattern file line, label-level (no symbol ids)."""

    pid: int
    kind: str
    support: int
    size: int
    elements: tuple[str, ...] | None
    vertices: tuple[tuple[int, str], ...] | None
    edges: tuple[tuple[int, int, str], ...] | None
    cover: tuple[int, ...] | None
    valid: bool | None
    condensed: bool | None


@dataclass(frozen=True)
class LoadedPatterns:
    records: tuple[PatternRecord, ...]
    symbols: SymbolTable
    valid: dict[int, bool]
    condensed: dict[int, bool]
    outputs: tuple[PatternOutput, ...]


def _q(label: str) -> str:
    return quote(label, safe="")


def record_to_output(
    rec: PatternRecord,
    symbols: SymbolTable,
    valid: bool | None = None,
    condensed: bool | None = None,
) -> PatternOutput:
    elements = vertices = edges = None
    if isinstance(rec.pattern, Itemset):
        # Lexicographic label order: ids depend on interning history, labels
        # don't, so a reloaded file serializes back to the same bytes.
        elements = tuple(sorted(symbols.label_of(i) for i in rec.pattern.items))
    elif isinstance(rec.pattern, Sequence):
        elements = tuple(symbols.label_of(s) for s in rec.pattern.symbols)
    else:
        assert isinstance(rec.pattern, LabeledGraph)
        vertices = tuple((vid, symbols.label_of(lbl)) for vid, lbl in rec.pattern.vertices)
        edges = tuple((u, v, symbols.label_of(el)) for u, v, el in rec.pattern.edges)
    cover = tuple(sorted(rec.cover)) if rec.cover is not None else None
    return PatternOutput(
        pid=rec.pid,
        kind=rec.kind,
        support=rec.support,
        size=rec.size,
        elements=elements,
        vertices=vertices,
        edges=edges,
        cover=cover,
        valid=valid,
        condensed=condensed,
    )


def output_to_line(out: PatternOutput) -> str:
    parts = [f"pid={out.pid}", f"kind={out.kind}", f"support={out.support}", f"size={out.size}"]
    if out.kind in ("itemset", "sequence"):
        if out.elements is None:
            raise InputError("itemset/sequence output needs elements")
        parts.append("elements=" + ",".join(_q(lbl) for lbl in out.elements))
    elif out.kind == "graph":
        if out.vertices is None or out.edges is None:
            raise InputError("graph output needs vertices and edges")
        parts.append("vertices=" + ",".join(f"{vid}:{_q(lbl)}" for vid, lbl in out.vertices))
        parts.append("edges=" + ",".join(f"{u}-{v}:{_q(lbl)}" for u, v, lbl in out.edges))
    else:
        raise InputError(f"unknown pattern kind {out.kind!r}")
    if out.cover is not None:
        parts.append("cover=" + ",".join(str(tid) for tid in out.cover))
    if out.valid is not None:
        parts.append(f"valid={int(out.valid)}")
    if out.condensed is not None:
        parts.append(f"condensed={int(out.condensed)}")
    return " ".join(parts)


def _split_kv(token: str, path, lineno: int) -> tuple[str, str]:
    key, sep, value = token.partition("=")
    if not sep or not key:
        raise InputError(f"{path}: line {lineno}: malformed field {token!r}")
    return key, value


def _parse_int_list(value: str, path, lineno: int) -> tuple[int, ...]:
    if value == "":
        return ()
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise InputError(f"{path}: line {lineno}: malformed integer list {value!r}") from None


_ALLOWED_KEYS = ("pid", "kind", "support", "size", "elements", "vertices", "edges", "cover", "valid", "condensed")


def line_to_output(line: str, path="<string>", lineno: int = 1) -> PatternOutput:
    tokens = line.split()
    if not tokens:
        raise InputError(f"{path}: line {lineno}: blank line")
    fields: dict[str, str] = {}
    for tok in tokens:
        key, value = _split_kv(tok, path, lineno)
        if key not in _ALLOWED_KEYS:
            raise InputError(f"{path}: line {lineno}: unknown field {key!r}")
        if key in fields:
            raise InputError(f"{path}: line {lineno}: duplicate field {key!r}")
        fields[key] = value
    for required in ("pid", "kind", "support", "size"):
        if required not in fields:
            raise InputError(f"{path}: line {lineno}: missing field {required!r}")
    try:
        pid = int(fields["pid"])
        support = int(fields["support"])
        size = int(fields["size"])
    except ValueError:
        raise InputError(f"{path}: line {lineno}: pid/support/size must be integers") from None
    kind = fields["kind"]
    elements = vertices = edges = None
    if kind in ("itemset", "sequence"):
        if "elements" not in fields or "vertices" in fields or "edges" in fields:
            raise InputError(f"{path}: line {lineno}: {kind} records carry elements only")
        if fields["elements"] == "":
            raise InputError(f"{path}: line {lineno}: empty elements")
        elements = tuple(unquote(part) for part in fields["elements"].split(","))
    elif kind == "graph":
        if "vertices" not in fields or "edges" not in fields or "elements" in fields:
            raise InputError(f"{path}: line {lineno}: graph records carry vertices and edges")
        verts: list[tuple[int, str]] = []
        if fields["vertices"] == "":
            raise InputError(f"{path}: line {lineno}: empty vertices")
        for part in fields["vertices"].split(","):
            vid_text, sep, lbl = part.partition(":")
            if not sep:
                raise InputError(f"{path}: line {lineno}: malformed vertex {part!r}")
            try:
                verts.append((int(vid_text), unquote(lbl)))
            except ValueError:
                raise InputError(f"{path}: line {lineno}: malformed vertex id {vid_text!r}") from None
        vertices = tuple(verts)
        edge_list: list[tuple[int, int, str]] = []
        if fields["edges"]:
            for part in fields["edges"].split(","):
                pair_text, sep, lbl = part.partition(":")
                if not sep:
                    raise InputError(f"{path}: line {lineno}: malformed edge {part!r}")
                u_text, sep2, v_text = pair_text.partition("-")
                if not sep2:
                    raise InputError(f"{path}: line {lineno}: malformed edge endpoints {pair_text!r}")
                try:
                    edge_list.append((int(u_text), int(v_text), unquote(lbl)))
                except ValueError:
                    raise InputError(f"{path}: line {lineno}: malformed edge {part!r}") from None
        edges = tuple(edge_list)
    else:
        raise InputError(f"{path}: line {lineno}: unknown pattern kind {kind!r}")
    cover = None
    if "cover" in fields:
        cover = _parse_int_list(fields["cover"], path, lineno)
    flags: dict[str, bool | None] = {"valid": None, "condensed": None}
    for flag in flags:
        if flag in fields:
            if fields[flag] not in ("0", "1"):
                raise InputError(f"{path}: line {lineno}: flag {flag} must be 0 or 1")
            flags[flag] = fields[flag] == "1"
    return PatternOutput(
        pid=pid,
        kind=kind,
        support=support,
        size=size,
        elements=elements,
        vertices=vertices,
        edges=edges,
        cover=cover,
        valid=flags["valid"],
        condensed=flags["condensed"],
    )


def outputs_to_records(
    outputs: Iterable[PatternOutput],
) -> tuple[tuple[PatternRecord, ...], SymbolTable]:
    """Rebuild records, interning labels afresh in first-appearance order."""
    outputs = tuple(outputs)
    symbols = SymbolTable()
    if any(out.kind == "graph" for out in outputs):
        symbols.intern("0")
    records: list[PatternRecord] = []
    seen_pids: set[int] = set()
    for out in outputs:
        if out.pid in seen_pids:
            raise InputError(f"duplicate pattern id {out.pid}")
        seen_pids.add(out.pid)
        if out.kind == "itemset":
            pattern = Itemset.of(symbols.intern(lbl) for lbl in out.elements)
        elif out.kind == "sequence":
            pattern = Sequence.of(symbols.intern(lbl) for lbl in out.elements)
        else:
            vertices = tuple(sorted((vid, symbols.intern(lbl)) for vid, lbl in out.vertices))
            edges = tuple(
                sorted((min(u, v), max(u, v), symbols.intern(lbl)) for u, v, lbl in out.edges)
            )
            pattern = LabeledGraph(vertices, edges)
        cover = frozenset(out.cover) if out.cover is not None else None
        records.append(
            PatternRecord(pid=out.pid, pattern=pattern, support=out.support, cover=cover, size=out.size)
        )
    return tuple(records), symbols


def write_patterns(
    records: Iterable[PatternRecord],
    path,
    symbols: SymbolTable,
    valid: dict[int, bool] | None = None,
    condensed: dict[int, bool] | None = None,
) -> None:
    """One key=value line per record, deterministic field order; may be empty."""
    lines = []
    for rec in records:
        out = record_to_output(
            rec,
            symbols,
            valid=None if valid is None else valid.get(rec.pid),
            condensed=None if condensed is None else condensed.get(rec.pid),
        )
        lines.append(output_to_line(out))
    _write_text(path, "".join(line + "\n" for line in lines))


def load_patterns(path) -> LoadedPatterns:
    """Parse a pattern file; an empty file is an empty pattern list."""
    lines = _read_lines(path)
    outputs = tuple(line_to_output(raw, path, lineno) for lineno, raw in enumerate(lines, start=1))
    try:
        records, symbols = outputs_to_records(outputs)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None
    valid = {out.pid: out.valid for out in outputs if out.valid is not None}
    condensed = {out.pid: out.condensed for out in outputs if out.condensed is not None}
    return LoadedPatterns(records=records, symbols=symbols, valid=valid, condensed=condensed, outputs=outputs)


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def write_tiling(
    path,
    matrix: BinaryMatrix,
    candidates: list[Tile],
    method: str,
    error_mode: str,
    budget: int,
    status: str,
    selections: Iterable[TileSelection],
) -> None:
    """Tiling report: header, candidate tiles, then one line per selection.

    Every selection line carries the chosen ids, k, both error terms, and the
    total error, recomputed from the matrix.
    """
    by_id = {t.tile_id: t for t in candidates}
    lines = [
        f"method={method}",
        f"error_mode={error_mode}",
        f"threshold={budget}",
        f"candidates={len(candidates)}",
        f"status={status}",
    ]
    for t in sorted(candidates, key=lambda t: t.tile_id):
        rows = ",".join(str(r) for r in sorted(t.row_set))
        cols = ",".join(str(c) for c in sorted(t.col_set))
        lines.append(f"tile={t.tile_id} rows={rows} cols={cols} ones={len(t.ones)}")
    selections = tuple(selections)
    for sel in selections:
        chosen = [by_id[tid] for tid in sel.tile_ids]
        ones_outside, zeros_inside = error_terms(matrix, chosen, error_mode, candidates)
        ids = ",".join(str(tid) for tid in sel.tile_ids)
        lines.append(
            f"selection={ids} k={len(sel.tile_ids)} "
            f"ones_outside={ones_outside} zeros_inside={zeros_inside} error={sel.error}"
        )
    lines.append(f"solutions={len(selections)}")
    _write_text(path, "".join(line + "\n" for line in lines))
