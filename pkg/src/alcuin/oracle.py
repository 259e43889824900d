"""Ground truth by brute force: breadth-first search over bank states.

A state is (right-bank contents, boat side).  From each state every cargo
choice that fits the boat and leaves the departure bank independent is a
legal crossing.  BFS yields shortest schedules; cargo candidates are tried
ascending by size then mask so tie-breaks, and therefore traces, are
reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cover import alpha
from .errors import BudgetExceededError
from .graph import Graph
from .schedule import LEFT_TO_RIGHT, RIGHT_TO_LEFT, Move, Schedule

DEFAULT_SEARCH_LIMIT = 12


@dataclass(frozen=True)
class SearchResult:
    feasible: bool
    min_crossings: int | None
    schedule: Schedule | None
    states_expanded: int


def _cargo_choices(adj: tuple[int, ...], bank: int, b: int) -> list[tuple[int, int]]:
    """Cargo subsets leaving the rest of the bank independent, as sorted
    (size, cargo) pairs."""
    out = []
    sub = bank
    while True:
        # sub runs over all submasks of bank descending; rest is the bank remainder
        if sub.bit_count() <= b:
            rest = bank ^ sub
            ok = True
            scan = rest
            while scan:
                low = scan & -scan
                if adj[low.bit_length() - 1] & rest:
                    ok = False
                    break
                scan ^= low
            if ok:
                out.append((sub.bit_count(), sub))
        if sub == 0:
            break
        sub = (sub - 1) & bank
    out.sort()
    return out


def feasible(g: Graph, b: int, limit: int = DEFAULT_SEARCH_LIMIT) -> SearchResult:
    """Decide feasibility at boat capacity b; shortest schedule when feasible."""
    if b < 0:
        raise ValueError("negative boat capacity")
    if g.n > limit:
        raise BudgetExceededError(f"oracle search for n={g.n} exceeds the limit {limit}")
    full = g.full_mask
    if full == 0:
        return SearchResult(True, 0, Schedule(b, ()), 0)
    adj = g.adj
    start = (0, 0)  # (right bank, boat side); side 0 = left
    parents: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    expanded = 0
    goal = None
    while queue and goal is None:
        state = queue.popleft()
        expanded += 1
        right, side = state
        bank = right if side else full ^ right
        for _, cargo in _cargo_choices(adj, bank, b):
            nxt = (right ^ cargo, side ^ 1)
            if nxt in parents:
                continue
            parents[nxt] = (state, cargo)
            if nxt[0] == full:
                goal = nxt
                break
            queue.append(nxt)
    if goal is None:
        return SearchResult(False, None, None, expanded)
    moves: list[Move] = []
    state = goal
    while parents[state] is not None:
        prev, cargo = parents[state]  # type: ignore[misc]
        moves.append(Move(LEFT_TO_RIGHT if prev[1] == 0 else RIGHT_TO_LEFT, cargo))
        state = prev
    moves.reverse()
    return SearchResult(True, len(moves), Schedule(b, tuple(moves)), expanded)


def alcuin_exact(
    g: Graph, limit: int = DEFAULT_SEARCH_LIMIT, beta: int | None = None
) -> tuple[int, Schedule]:
    """Exact Alcuin number with a witnessing shortest schedule.

    Tries b = max(beta, 1) first (capacity 0 moves nothing, so c >= 1 for
    n >= 1); on failure b+1 must succeed, which the cover-rides-along
    construction guarantees, and a miss there aborts loudly.
    """
    if g.n == 0:
        return 0, Schedule(0, ())
    if beta is None:
        beta = g.n - alpha(g)
    b = max(beta, 1)
    result = feasible(g, b, limit)
    if result.feasible:
        assert result.schedule is not None
        return b, result.schedule
    result = feasible(g, b + 1, limit)
    if not result.feasible:
        raise RuntimeError(
            f"no schedule at capacity {b + 1} despite the beta+1 guarantee (n={g.n})"
        )
    assert result.schedule is not None
    return b + 1, result.schedule
