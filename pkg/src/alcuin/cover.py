"""Exact independence and vertex-cover computations.

alpha() runs a branch-and-bound maximum-independent-set search; min_covers()
independently enumerates every maximum independent set and complements, so the
two routes cross-check each other through the alpha + beta = n identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, vertices_of

DEFAULT_ENUMERATION_LIMIT = 16


@dataclass(frozen=True)
class CoverReport:
    """All minimum vertex covers of a graph.

    covers holds every minimum cover (ascending mask order) when complete is
    True; under the enumeration budget a single witness cover is returned
    with complete False, and unique is not meaningful.
    """

    beta: int
    covers: tuple[int, ...]
    unique: bool
    complete: bool = True


def _alpha_search(g: Graph) -> tuple[int, int]:
    """Branch-and-bound maximum independent set: (alpha, witness mask).

    Branches on the lowest-index maximum-degree vertex of the remaining
    subgraph: either exclude it, or include it and drop its closed
    neighborhood.
    """
    adj = g.adj
    best = -1
    witness = 0

    def rec(remaining: int, chosen: int, size: int) -> None:
        nonlocal best, witness
        if size + remaining.bit_count() <= best:
            return
        if remaining == 0:
            best, witness = size, chosen
            return
        v = -1
        vdeg = -1
        m = remaining
        while m:
            low = m & -m
            u = low.bit_length() - 1
            d = (adj[u] & remaining).bit_count()
            if d > vdeg:
                v, vdeg = u, d
            m ^= low
        if vdeg == 0:
            best, witness = size + remaining.bit_count(), chosen | remaining
            return
        bit = 1 << v
        rec(remaining ^ bit, chosen, size)
        rec(remaining & ~(adj[v] | bit), chosen | bit, size + 1)

    rec(g.full_mask, 0, 0)
    return best, witness


def alpha(g: Graph) -> int:
    """Independence number: size of a largest pairwise non-adjacent set."""
    return _alpha_search(g)[0]


def _maximum_independent_sets(g: Graph) -> tuple[int, list[int]]:
    """(alpha, every maximum independent set) by exhaustive enumeration."""
    n, adj = g.n, g.adj
    best = -1
    found: list[int] = []

    def rec(v: int, mask: int, size: int) -> None:
        nonlocal best, found
        if size + (n - v) < best:
            return
        if v == n:
            if size > best:
                best = size
                found = [mask]
            elif size == best:
                found.append(mask)
            return
        rec(v + 1, mask, size)
        if not adj[v] & mask:
            rec(v + 1, mask | (1 << v), size + 1)

    rec(0, 0, 0)
    return best, found


def min_covers(g: Graph, full_limit: int = DEFAULT_ENUMERATION_LIMIT) -> CoverReport:
    """Every minimum vertex cover, as complements of maximum independent sets.

    Above the enumeration budget the report degrades to beta plus one witness
    cover, flagged complete=False; truncation is never silent.
    """
    full = g.full_mask
    if g.n > full_limit:
        a, wit = _alpha_search(g)
        return CoverReport(g.n - a, (full ^ wit,), unique=False, complete=False)
    a, sets = _maximum_independent_sets(g)
    covers = tuple(sorted(full ^ s for s in sets))
    return CoverReport(g.n - a, covers, unique=len(covers) == 1, complete=True)


def is_vertex_cover(g: Graph, mask: int) -> bool:
    """True iff every edge of g has at least one endpoint in mask."""
    out = g.full_mask & ~mask
    for v in bits(out):
        if g.adj[v] & out:
            return False
    return True


def check_minimum_cover(g: Graph, mask: int) -> None:
    """Raise ValueError unless mask is a minimum vertex cover of g."""
    if mask < 0 or mask & ~g.full_mask:
        raise ValueError("cover contains vertices outside the graph")
    if not is_vertex_cover(g, mask):
        raise ValueError("set is not a vertex cover")
    if mask.bit_count() != g.n - alpha(g):
        raise ValueError("vertex cover is not minimum")


def independent_subsets(g: Graph, base: int) -> list[tuple[int, int]]:
    """All independent subsets of base as (subset, neighborhood) mask pairs.

    Includes the empty set; neighborhoods are unions of adjacency masks,
    unrestricted (intersect with a bank mask at the call site).
    """
    adj = g.adj
    vs = vertices_of(base)
    out: list[tuple[int, int]] = []

    def rec(i: int, mask: int, nbrs: int) -> None:
        if i == len(vs):
            out.append((mask, nbrs))
            return
        v = vs[i]
        rec(i + 1, mask, nbrs)
        if not adj[v] & mask:
            rec(i + 1, mask | (1 << v), nbrs | adj[v])

    rec(0, 0, 0)
    return out


def hall_strict(g: Graph, cover: int) -> bool:
    """Strict expansion test on a minimum cover: characterizes uniqueness.

    True iff every nonempty independent subset A of the cover has strictly
    more than |A| neighbors outside the cover.  Holding for all such A is
    equivalent to the cover being the unique minimum one.
    """
    check_minimum_cover(g, cover)
    outside = g.full_mask & ~cover
    for mask, nbrs in independent_subsets(g, cover):
        if mask and (nbrs & outside).bit_count() <= mask.bit_count():
            return False
    return True
