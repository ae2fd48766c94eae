"""Frequent itemset mining over vertical tid-lists.

Depth-first search over the item lattice: each frequent prefix stores its
tid-list, and extending a prefix by one item is a single intersection.
Infrequent prefixes prune the whole subtree (support is anti-monotone).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Itemset, PatternRecord, TransactionDB
from .errors import InputError


@dataclass(frozen=True)
class MinSupport:
    """Minimum support threshold, absolute count or relative fraction."""

    kind: str
    value: int | float

    def __post_init__(self):
        if self.kind == "absolute":
            if not isinstance(self.value, int) or self.value < 1:
                raise InputError("absolute minimum support must be a positive integer")
        elif self.kind == "relative":
            if not 0 < float(self.value) <= 1:
                raise InputError("relative minimum support must lie in (0, 1]")
        else:
            raise InputError(f"unknown minimum support kind {self.kind!r}")

    @classmethod
    def absolute(cls, value: int) -> "MinSupport":
        return cls("absolute", value)

    @classmethod
    def relative(cls, value: float) -> "MinSupport":
        return cls("relative", value)

    @classmethod
    def parse(cls, text: str) -> "MinSupport":
        """Integer text means absolute; decimal in (0, 1] means relative."""
        text = text.strip()
        try:
            return cls.absolute(int(text))
        except ValueError:
            pass
        try:
            value = float(text)
        except ValueError:
            raise InputError(f"cannot parse minimum support {text!r}") from None
        return cls.relative(value)

    def effective(self, db_size: int) -> int:
        """Absolute threshold for a database of db_size objects, at least 1.

        Relative thresholds go through Fraction(str(value)) so the ceiling is
        exact for decimal input (no float-epsilon drift).
        """
        if self.kind == "absolute":
            return max(1, int(self.value))
        return max(1, math.ceil(Fraction(str(self.value)) * db_size))


def mine_frequent_itemsets(db: TransactionDB, minsup: MinSupport) -> list[PatternRecord]:
    """All frequent itemsets of db, in canonical order (size, then item ids).

    Returns one record per nonempty frequent itemset with its exact cover.
    Pids are assigned 1..n in canonical order. An effective threshold above
    the database size yields an empty list.
    """
    if len(db) == 0:
        raise InputError("database must be nonempty")
    sigma = minsup.effective(len(db))
    if sigma > len(db):
        return []

    tidlists: dict[int, set[int]] = {}
    for tid, txn in db.records():
        for item in txn:
            tidlists.setdefault(item, set()).add(tid)
    frequent_items = sorted(item for item, tids in tidlists.items() if len(tids) >= sigma)

    found: list[tuple[tuple[int, ...], frozenset[int]]] = []

    def grow(prefix: tuple[int, ...], prefix_tids: frozenset[int] | None, start: int) -> None:
        for idx in range(start, len(frequent_items)):
            item = frequent_items[idx]
            tids = frozenset(tidlists[item]) if prefix_tids is None else prefix_tids & tidlists[item]
            if len(tids) >= sigma:
                extended = prefix + (item,)
                found.append((extended, tids))
                grow(extended, tids, idx + 1)

    grow((), None, 0)
    found.sort(key=lambda entry: (len(entry[0]), entry[0]))
    return [
        PatternRecord(pid=pid, pattern=Itemset(items), support=len(tids), cover=tids, size=len(items))
        for pid, (items, tids) in enumerate(found, start=1)
    ]
