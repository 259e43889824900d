"""Class one / class two decision and the Alcuin number c(G).

c(G) is always beta or beta + 1.  Two distinct minimum covers force class
one; with a unique cover C the verdict comes from the common-neighborhood
criterion: the graph is class two iff every two nonempty independent subsets
S, T of C have strictly more than |S| + |T| common neighbors outside C.
Quantifiers run over nonempty subsets throughout, which makes edgeless
graphs class two (c = 1: the boat still has to carry each item).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cover import check_minimum_cover, independent_subsets, min_covers
from .cover import DEFAULT_ENUMERATION_LIMIT
from .errors import BudgetExceededError
from .graph import Graph, bits, is_claw_free

CLASS_ONE = "one"
CLASS_TWO = "two"


@dataclass(frozen=True)
class MultipleCovers:
    """Two distinct minimum covers: class one without condition evaluation."""

    cover: int
    cover2: int


@dataclass(frozen=True)
class PairWitness:
    """Nonempty independent s, t within the cover whose common outside
    neighborhood has size at most |s| + |t|: certifies class one."""

    cover: int
    s: int
    t: int


@dataclass(frozen=True)
class SetWitness:
    """Nonempty independent a within the cover with at most 2|a| outside
    neighbors; the s = t = a special case of PairWitness."""

    cover: int
    a: int


@dataclass(frozen=True)
class ConditionHolds:
    """Every candidate pair exceeds the bound: certifies class two."""

    cover: int


@dataclass(frozen=True)
class Degenerate:
    """Empty graph; nothing to transport."""


Reason = Union[MultipleCovers, PairWitness, SetWitness, ConditionHolds, Degenerate]


@dataclass(frozen=True)
class Classification:
    verdict: str
    c: int
    reason: Reason


def _outside_subsets(g: Graph, cover: int) -> list[tuple[int, int, int]]:
    """Nonempty independent subsets of cover as (size, mask, outside_nbrs)."""
    outside = g.full_mask & ~cover
    return sorted(
        (m.bit_count(), m, nb & outside) for m, nb in independent_subsets(g, cover) if m
    )


def classification_condition(
    g: Graph, cover: int, _validate: bool = True
) -> ConditionHolds | PairWitness:
    """Exhaustive common-neighborhood test over a minimum cover.

    Scans every unordered pair of nonempty independent subsets S, T of the
    cover (S = T allowed).  Returns the first pair, ordered by |S|+|T|, then
    |S|, then the two masks, with |N(S) & N(T) outside C| <= |S| + |T|;
    ConditionHolds if no pair violates, which certifies class two.
    """
    if _validate:
        check_minimum_cover(g, cover)
    subsets = _outside_subsets(g, cover)
    by_size: dict[int, list[tuple[int, int]]] = {}
    for size, mask, nbrs in subsets:
        by_size.setdefault(size, []).append((mask, nbrs))
    max_size = max(by_size) if by_size else 0
    for total in range(2, 2 * max_size + 1):
        for s_size in range(max(1, total - max_size), total // 2 + 1):
            t_size = total - s_size
            if s_size not in by_size or t_size not in by_size:
                continue
            for s_mask, s_nbrs in by_size[s_size]:
                for t_mask, t_nbrs in by_size[t_size]:
                    if s_size == t_size and t_mask < s_mask:
                        continue
                    if (s_nbrs & t_nbrs).bit_count() <= total:
                        return PairWitness(cover, s_mask, t_mask)
    return ConditionHolds(cover)


def classify(g: Graph, cover_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Classification:
    """Verdict, Alcuin number and a machine-checkable reason.

    Degenerate n=0 graphs get c=0.  Two or more minimum covers settle class
    one immediately; otherwise the condition on the unique cover decides.
    Edgeless graphs (beta=0, unique cover is empty) come out class two with
    c=1, matching the search oracle.
    """
    if g.n == 0:
        return Classification(CLASS_ONE, 0, Degenerate())
    report = min_covers(g, cover_limit)
    if not report.complete:
        raise BudgetExceededError(
            f"cover enumeration for n={g.n} exceeds the limit {cover_limit}"
        )
    beta = report.beta
    if len(report.covers) >= 2:
        return Classification(
            CLASS_ONE, beta, MultipleCovers(report.covers[0], report.covers[1])
        )
    outcome = classification_condition(g, report.covers[0], _validate=False)
    if isinstance(outcome, ConditionHolds):
        return Classification(CLASS_TWO, beta + 1, outcome)
    return Classification(CLASS_ONE, beta, outcome)


def exists_2x_witness(g: Graph, cover: int) -> int | None:
    """First nonempty independent A within the cover with at most 2|A|
    outside neighbors (size then mask order), or None.

    Such an A certifies class one; it is exactly a PairWitness with S = T.
    """
    check_minimum_cover(g, cover)
    for size, mask, nbrs in _outside_subsets(g, cover):
        if nbrs.bit_count() <= 2 * size:
            return mask
    return None


@dataclass(frozen=True)
class FastPath:
    """Advisory class-one shortcut: which cheap sufficient test fired."""

    kind: str  # "claw_free" or "pair_common_neighbors"
    u: int | None = None
    v: int | None = None


def fast_paths(g: Graph, cover: int) -> FastPath | None:
    """Cheap sufficient conditions for class one; advisory only.

    Fires when the graph is claw-free, or when some cover vertices u, v
    (u = v allowed) share at most two neighbors outside the cover.
    """
    check_minimum_cover(g, cover)
    if is_claw_free(g):
        return FastPath("claw_free")
    outside = g.full_mask & ~cover
    members = list(bits(cover))
    for i, u in enumerate(members):
        for v in members[i:]:
            if (g.adj[u] & g.adj[v] & outside).bit_count() <= 2:
                return FastPath("pair_common_neighbors", u, v)
    return None
