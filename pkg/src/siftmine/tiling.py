"""Tiles, tilings, and approximate tile selection under an error budget.

A tile is a rectangle (row set x column set) remembering which of its cells
are ones in the source matrix. A selection of tiles covers the union of
their rectangles; its error is the number of zeros inside that union plus
the number of ones outside it. The "coverable" error mode restricts the
outside term to ones appearing in at least one candidate tile: ones no
candidate can ever cover are a constant the selector cannot influence, so
they are left out of the budget. The "full" mode charges every one, which
makes the error the Hamming distance between the data and the union.

Selection comes in two flavors: a greedy loop that keeps adding the tile
with the largest error decrease (it may fail even when an admissible subset
exists), and an exact branch-and-bound over all nonempty candidate subsets.
Both are deterministic, with ties broken by lowest tile id.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .core import Itemset, TransactionDB, cover_itemset
from .errors import BoundExceededError, InputError

ERROR_MODES = ("full", "coverable")


@dataclass(frozen=True)
class BinaryMatrix:
    """Dense 0/1 matrix; rows and columns are addressed 1-based."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise InputError("matrix must have at least one row and one column")
        width = len(self.cells[0])
        for r, row in enumerate(self.cells, start=1):
            if len(row) != width:
                raise InputError(f"row {r} has {len(row)} cells, expected {width}")
            if any(v not in (0, 1) for v in row):
                raise InputError(f"row {r} contains a non-binary cell")

    @property
    def n_rows(self) -> int:
        return len(self.cells)

    @property
    def n_cols(self) -> int:
        return len(self.cells[0])

    def cell(self, row: int, col: int) -> int:
        return self.cells[row - 1][col - 1]

    @cached_property
    def ones(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (r, c)
            for r, row in enumerate(self.cells, start=1)
            for c, v in enumerate(row, start=1)
            if v
        )


@dataclass(frozen=True)
class Tile:
    """A rectangle with the ones it contains; ones must be 1 in the source."""

    tile_id: int
    row_set: frozenset[int]
    col_set: frozenset[int]
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not self.row_set or not self.col_set:
            raise InputError("tile row and column sets must be nonempty")
        if any(r not in self.row_set or c not in self.col_set for r, c in self.ones):
            raise InputError("tile ones must lie inside its rectangle")

    @property
    def rectangle(self) -> frozenset[tuple[int, int]]:
        return frozenset((r, c) for r in self.row_set for c in self.col_set)


def tile_of(source: TransactionDB | BinaryMatrix, alpha: Itemset, tile_id: int = 1) -> Tile:
    """The tile of an itemset: its cover times its columns.

    Over a TransactionDB the columns are item ids; over a BinaryMatrix they
    are 1-based column indices. Every cell of the rectangle is a one by
    construction (each covering row carries every column of alpha), so the
    tile alone contributes no inside-zeros. An empty cover is an error.
    """
    if isinstance(source, TransactionDB):
        rows = cover_itemset(source, alpha)
    elif isinstance(source, BinaryMatrix):
        for c in alpha.items:
            if not 1 <= c <= source.n_cols:
                raise InputError(f"column {c} out of range 1..{source.n_cols}")
        rows = frozenset(
            r for r in range(1, source.n_rows + 1) if all(source.cell(r, c) for c in alpha.items)
        )
    else:
        raise InputError(f"cannot build a tile over {type(source).__name__}")
    if not rows:
        raise InputError("itemset has an empty cover; the tile would have no rows")
    cols = frozenset(alpha.items)
    ones = frozenset((r, c) for r in rows for c in cols)
    return Tile(tile_id=tile_id, row_set=frozenset(rows), col_set=cols, ones=ones)


def area(tiles: list[Tile]) -> int:
    """Cardinality of the union of the tiles' ones."""
    covered: set[tuple[int, int]] = set()
    for t in tiles:
        covered |= t.ones
    return len(covered)


def _validate_tiles(matrix: BinaryMatrix, tiles) -> None:
    for t in tiles:
        if not t.ones <= matrix.ones:
            raise InputError(f"tile {t.tile_id} marks cells that are 0 in the matrix")


def error_terms(
    matrix: BinaryMatrix,
    tiles: list[Tile],
    mode: str = "coverable",
    candidates: list[Tile] | None = None,
) -> tuple[int, int]:
    """(ones outside, zeros inside) of the selection's rectangle union.

    In coverable mode the outside term only counts ones belonging to some
    tile of the candidate universe; candidates defaults to the selection
    itself, so selectors must pass the full candidate list.
    """
    if mode not in ERROR_MODES:
        raise InputError(f"unknown error mode {mode!r}")
    _validate_tiles(matrix, tiles)
    covered: set[tuple[int, int]] = set()
    for t in tiles:
        covered |= t.rectangle
    zeros_inside = len(covered - matrix.ones)
    if mode == "full":
        ones_outside = len(matrix.ones - covered)
    else:
        universe = tiles if candidates is None else candidates
        _validate_tiles(matrix, universe)
        coverable: set[tuple[int, int]] = set()
        for t in universe:
            coverable |= t.ones
        ones_outside = len(coverable - covered)
    return ones_outside, zeros_inside


def error(
    matrix: BinaryMatrix,
    tiles: list[Tile],
    mode: str = "coverable",
    candidates: list[Tile] | None = None,
) -> int:
    """Zeros inside the selection plus (coverable) ones outside it."""
    ones_outside, zeros_inside = error_terms(matrix, tiles, mode, candidates)
    return ones_outside + zeros_inside


def generate_candidates(
    matrix: BinaryMatrix, tau: float, max_candidates: int | None = None
) -> list[Tile]:
    """Candidate tiles from association confidences.

    For each column i with nonzero support, B_i collects the columns j whose
    confidence conf(i=>j) = |rows with both| / |rows with i| reaches tau, and
    the tile's rows are those where ones within B_i are at least as many as
    zeros (covering the row helps). Duplicates collapse; the result is sorted
    by descending area with ties on column then row sets, ids assigned 1..k,
    then truncated to max_candidates.
    """
    if not 0 < tau <= 1:
        raise InputError("tau must lie in (0, 1]")
    if max_candidates is not None and max_candidates < 1:
        raise InputError("max_candidates must be positive")
    tau_frac = Fraction(str(tau))
    col_rows = {
        c: frozenset(r for r in range(1, matrix.n_rows + 1) if matrix.cell(r, c))
        for c in range(1, matrix.n_cols + 1)
    }
    rects: dict[tuple[frozenset[int], frozenset[int]], Tile] = {}
    for i, support in sorted(col_rows.items()):
        if not support:
            continue
        cols = frozenset(
            j
            for j, j_rows in col_rows.items()
            if j_rows and Fraction(len(support & j_rows), len(support)) >= tau_frac
        )
        rows = frozenset(
            r
            for r in range(1, matrix.n_rows + 1)
            if 2 * sum(matrix.cell(r, j) for j in cols) >= len(cols)
        )
        if not rows:
            continue
        key = (rows, cols)
        if key in rects:
            continue
        ones = frozenset((r, c) for r in rows for c in cols if matrix.cell(r, c))
        rects[key] = Tile(tile_id=0, row_set=rows, col_set=cols, ones=ones)

    ordered = sorted(
        rects.values(),
        key=lambda t: (-len(t.ones), sorted(t.col_set), sorted(t.row_set)),
    )
    if max_candidates is not None:
        ordered = ordered[:max_candidates]
    return [
        Tile(tile_id=tid, row_set=t.row_set, col_set=t.col_set, ones=t.ones)
        for tid, t in enumerate(ordered, start=1)
    ]


@dataclass(frozen=True)
class TileSelection:
    """Chosen tile ids (ascending) with the recomputed total error."""

    tile_ids: tuple[int, ...]
    error: int


@dataclass(frozen=True)
class SelectionResult:
    """Outcome of exact selection: status 'ok' or 'unsatisfiable'."""

    status: str
    selections: tuple[TileSelection, ...]


def greedy_select(
    matrix: BinaryMatrix,
    candidates: list[Tile],
    budget: int,
    error_mode: str = "coverable",
) -> TileSelection | None:
    """Add the tile with the largest error decrease until error <= budget.

    Ties go to the lowest tile id; a round where no tile strictly decreases
    the error fails, as does exhausting all tiles above budget. Failure is a
    legitimate outcome (an admissible subset may exist that greedy never
    reaches) and is reported as None, not an error. An already-admissible
    empty selection succeeds immediately.
    """
    if budget < 0:
        raise InputError("error budget must be nonnegative")
    chosen: list[Tile] = []
    current = error(matrix, chosen, error_mode, candidates)
    if current <= budget:
        return TileSelection((), current)
    remaining = sorted(candidates, key=lambda t: t.tile_id)
    while remaining:
        best_tile = None
        best_error = current
        for t in remaining:
            e = error(matrix, chosen + [t], error_mode, candidates)
            if e < best_error:
                best_tile, best_error = t, e
        if best_tile is None:
            return None
        chosen.append(best_tile)
        remaining.remove(best_tile)
        current = best_error
        if current <= budget:
            return TileSelection(tuple(sorted(t.tile_id for t in chosen)), current)
    return None


def exact_select(
    matrix: BinaryMatrix,
    candidates: list[Tile],
    budget: int,
    mode: str = "first",
    error_mode: str = "coverable",
    bound: int = 20,
) -> SelectionResult:
    """Complete search over nonempty candidate subsets with error <= budget.

    mode 'first' returns one admissible selection (the first in a
    deterministic exclude-before-include depth-first order, so small subsets
    surface early); 'all' returns every admissible selection in enumeration
    order; 'optimal' returns the minimum-error selection, ties broken by
    fewer tiles then lexicographic ids. Infeasible instances yield status
    "unsatisfiable" with no selections.

    Pruning uses a sound lower bound: zeros inside can only grow as tiles
    are added, and ones outside can only shrink to what the still-available
    tiles could cover, so a partial selection whose bound beats the budget
    dies with its whole subtree.
    """
    if budget < 0:
        raise InputError("error budget must be nonnegative")
    if mode not in ("first", "all", "optimal"):
        raise InputError(f"unknown selection mode {mode!r}")
    if error_mode not in ERROR_MODES:
        raise InputError(f"unknown error mode {error_mode!r}")
    if len(candidates) > bound:
        raise BoundExceededError(
            f"exact selection over {len(candidates)} candidates exceeds bound {bound}"
        )
    _validate_tiles(matrix, candidates)

    tiles = sorted(candidates, key=lambda t: t.tile_id)
    n = len(tiles)
    data = matrix.ones
    rectangles = [t.rectangle for t in tiles]
    if error_mode == "full":
        target = data
    else:
        covered: set[tuple[int, int]] = set()
        for t in tiles:
            covered |= t.ones
        target = frozenset(covered)

    # Union of rectangles still available from position i on.
    suffix: list[frozenset[tuple[int, int]]] = [frozenset()] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | rectangles[i]

    found: list[TileSelection] = []
    best: TileSelection | None = None

    def admit(chosen_ids: tuple[int, ...], covered: frozenset) -> TileSelection | None:
        nonlocal best
        err = len(covered - data) + len(target - covered)
        if err > budget:
            return None
        sel = TileSelection(chosen_ids, err)
        if best is None or (err, len(sel.tile_ids), sel.tile_ids) < (
            best.error,
            len(best.tile_ids),
            best.tile_ids,
        ):
            best = sel
        return sel

    def walk(i: int, chosen_ids: tuple[int, ...], covered: frozenset) -> bool:
        nonlocal found
        lower = len(covered - data) + len(target - (covered | suffix[i]))
        if lower > budget:
            return False
        if mode == "optimal" and best is not None and lower > best.error:
            return False
        if i == n:
            if not chosen_ids:
                return False
            sel = admit(chosen_ids, covered)
            if sel is None:
                return False
            found.append(sel)
            return mode == "first"
        if walk(i + 1, chosen_ids, covered):
            return True
        return walk(i + 1, chosen_ids + (tiles[i].tile_id,), covered | rectangles[i])

    walk(0, (), frozenset())
    if mode == "first":
        return SelectionResult("ok", (found[0],)) if found else SelectionResult("unsatisfiable", ())
    if mode == "all":
        return SelectionResult("ok", tuple(found)) if found else SelectionResult("unsatisfiable", ())
    return SelectionResult("ok", (best,)) if best is not None else SelectionResult("unsatisfiable", ())
