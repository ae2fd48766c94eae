"""Condensed representations: keep the valid patterns nothing dominates.

The four relations pick different survivors from the same valid set:
maximal keeps patterns no valid pattern properly contains; closed and free
additionally tie support (closed drops into larger equals, free into smaller
equals); skyline keeps the support/size Pareto front. Validity filtering
must happen first: which patterns survive depends on which competitors are
still in the set, so constraints change the outcome, not just trim it.
"""

from __future__ import annotations

from enum import Enum

from .core import (
    Itemset,
    LabeledGraph,
    Pattern,
    PatternRecord,
    Sequence,
    find_embedding,
    graph_included,
)
from .errors import BoundExceededError, InputError, KindMismatchError


class DominanceRelation(Enum):
    MAXIMAL = "maximal"
    CLOSED = "closed"
    FREE = "free"
    SKYLINE = "skyline"

    @classmethod
    def parse(cls, text: str) -> "DominanceRelation":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(rel.value for rel in cls)
            raise InputError(f"unknown representation {text!r} (expected one of: {names})") from None


def _properly_included(a: Pattern, b: Pattern) -> bool:
    # a is a proper sub-pattern of b, per kind.
    if isinstance(a, Itemset) and isinstance(b, Itemset):
        return a.as_set() < b.as_set()
    if isinstance(a, Sequence) and isinstance(b, Sequence):
        return a.symbols != b.symbols and find_embedding(a, b) is not None
    if isinstance(a, LabeledGraph) and isinstance(b, LabeledGraph):
        return graph_included(a, b) and not graph_included(b, a)
    raise KindMismatchError("patterns are of different kinds")


def dominates(p: PatternRecord, q: PatternRecord, rel: DominanceRelation) -> bool:
    """True when q dominates p under rel, so p drops out of the condensed set."""
    if p.kind != q.kind:
        raise KindMismatchError(f"cannot compare {p.kind} with {q.kind}")
    if rel is DominanceRelation.MAXIMAL:
        return _properly_included(p.pattern, q.pattern)
    if rel is DominanceRelation.CLOSED:
        return p.support == q.support and _properly_included(p.pattern, q.pattern)
    if rel is DominanceRelation.FREE:
        return p.support == q.support and _properly_included(q.pattern, p.pattern)
    if rel is DominanceRelation.SKYLINE:
        return (p.support <= q.support and p.size < q.size) or (
            p.support < q.support and p.size <= q.size
        )
    raise InputError(f"unknown relation {rel!r}")


def _check_kinds(records) -> None:
    kinds = {rec.kind for rec in records}
    if len(kinds) > 1:
        raise KindMismatchError(f"records mix pattern kinds: {sorted(kinds)}")


def condense(valid: list[PatternRecord], rel: DominanceRelation) -> list[PatternRecord]:
    """Exactly the patterns of valid that no other valid pattern dominates.

    Input order (canonical from the miners) is preserved. Cheap field
    comparisons skip dominance tests that cannot succeed: a dominator under
    maximal or closed is never smaller than its victim, under free never
    larger, and closed/free need equal support.
    """
    _check_kinds(valid)
    kept: list[PatternRecord] = []
    for p in valid:
        dominated = False
        for q in valid:
            if q is p:
                continue
            if rel in (DominanceRelation.MAXIMAL, DominanceRelation.CLOSED) and q.size < p.size:
                continue
            if rel is DominanceRelation.FREE and q.size > p.size:
                continue
            if rel in (DominanceRelation.CLOSED, DominanceRelation.FREE) and q.support != p.support:
                continue
            if dominates(p, q, rel):
                dominated = True
                break
        if not dominated:
            kept.append(p)
    return kept


def brute_force_condense(
    valid: list[PatternRecord], rel: DominanceRelation, bound: int = 512
) -> list[PatternRecord]:
    """Reference implementation: the literal double loop, no shortcuts.

    Used as a test oracle against condense; refuses inputs above bound.
    """
    if len(valid) > bound:
        raise BoundExceededError(f"brute-force condensation over {len(valid)} patterns exceeds bound {bound}")
    _check_kinds(valid)
    return [p for p in valid if not any(q is not p and dominates(p, q, rel) for q in valid)]
