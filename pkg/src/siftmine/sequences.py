"""Frequent sequence mining by prefix growth.

A pattern's projected database holds, per supporting sequence, the scan
position just after the leftmost embedding of the pattern. Extending the
pattern by one symbol only needs the first occurrence of that symbol at or
after the stored position, so each growth step touches each supporting
sequence once. Support counts supporting sequences, never embeddings.
"""

from __future__ import annotations

from .core import PatternRecord, Sequence, SequenceDB
from .errors import InputError
from .itemsets import MinSupport


def mine_frequent_sequences(
    db: SequenceDB, minsup: MinSupport, max_len: int | None = None
) -> list[PatternRecord]:
    """All frequent sequential patterns up to max_len symbols.

    Results come in canonical order (length, then symbol ids) with pids
    assigned 1..n. A threshold above the database size yields an empty list.
    """
    if len(db) == 0:
        raise InputError("database must be nonempty")
    if max_len is not None and max_len < 1:
        raise InputError("max_len must be positive")
    sigma = minsup.effective(len(db))
    if sigma > len(db):
        return []

    seqs = db.sequences
    found: list[tuple[tuple[int, ...], frozenset[int]]] = []

    def grow(prefix: tuple[int, ...], projection: list[tuple[int, int]]) -> None:
        # First occurrence of each symbol at or after the projection point.
        firsts: dict[int, list[tuple[int, int]]] = {}
        for sid, start in projection:
            seq = seqs[sid - 1]
            seen: set[int] = set()
            for pos in range(start, len(seq)):
                sym = seq[pos]
                if sym not in seen:
                    seen.add(sym)
                    firsts.setdefault(sym, []).append((sid, pos + 1))
        for sym in sorted(firsts):
            supported = firsts[sym]
            if len(supported) < sigma:
                continue
            pattern = prefix + (sym,)
            found.append((pattern, frozenset(sid for sid, _ in supported)))
            if max_len is None or len(pattern) < max_len:
                grow(pattern, supported)

    grow((), [(sid, 0) for sid, _ in db.records()])
    found.sort(key=lambda entry: (len(entry[0]), entry[0]))
    return [
        PatternRecord(pid=pid, pattern=Sequence(syms), support=len(cover), cover=cover, size=len(syms))
        for pid, (syms, cover) in enumerate(found, start=1)
    ]
