"""Exact minimizer for arbitrary configurations, with invariant-based pruning.

The search answers "can this configuration be reduced to exactly k stones"
for increasing k, starting at the delta/component lower bound; the first
reachable k is the minimum, because stone counts along a move sequence step
down by one.  Memoization is per (stone layout, turn); each memo entry also
records one succeeding move so witnesses can be rebuilt deterministically.
"""

from __future__ import annotations

from enum import Enum

from .board import (Color, Configuration, Coord, Move, ORTHO_STEPS, Plan,
                    connected_components, delta)
from .errors import EmptyConfiguration, LimitExceeded

DEFAULT_LIMIT = 16


class Mode(Enum):
    """Move-order discipline for the minimizer."""

    ALTERNATING_WHITE_FIRST = "wfirst"
    ALTERNATING_BLACK_FIRST = "bfirst"
    ALTERNATING_EITHER = "either"
    FREE_ORDER = "free"


def lower_bound(cfg: Configuration) -> int:
    """Provable floor on the reachable stone count.

    The maximum of: the component count (moves never cross components), the
    smallest k whose delta range [k, 2k] meets delta(cfg) mod 3 (so k=1 is
    excluded exactly for class 0), and the size of any single-color component
    (which never moves at all).
    """
    if not cfg.stones:
        raise EmptyConfiguration("lower_bound needs a nonempty configuration")
    parts = connected_components(cfg)
    by_class = 1 if delta(cfg) % 3 else 2
    frozen = max((len(p) for p in parts if len(set(p.stones.values())) == 1), default=0)
    return max(len(parts), by_class, frozen)


def _component_floor(stones: dict[Coord, Color], anchor: int) -> int:
    """Sum of per-component floors; sound in every mode since moves stay
    inside components and delta is additive over them."""
    total = 0
    seen: set[Coord] = set()
    for start in stones:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        size = 0
        d = 0
        colors: set[Color] = set()
        while stack:
            cell = stack.pop()
            color = stones[cell]
            colors.add(color)
            size += 1
            r, c = cell
            d += 1 if ((r + c) % 2 == anchor) == (color is Color.BLACK) else 2
            for dr, dc in ORTHO_STEPS:
                nxt = (r + dr, c + dc)
                if nxt in stones and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(colors) == 1:
            total += size
        else:
            total += 1 if d % 3 else 2
    return total


def _alternation_feasible(whites: int, blacks: int, turn: Color, k: int) -> bool:
    """Counting check: a strict alternation starting with ``turn`` removes a
    fixed number of stones of each color, which must not exceed supply."""
    d = whites + blacks - k
    first_moves = (d + 1) // 2
    second_moves = d // 2
    if turn is Color.WHITE:
        return blacks >= first_moves and whites >= second_moves
    return whites >= first_moves and blacks >= second_moves


class _Search:
    """Depth-first reachability search shared by all modes of one query."""

    def __init__(self, stones: dict[Coord, Color], anchor: int):
        self.stones = stones
        self.anchor = anchor
        self.memo: dict = {}

    def moves_for(self, stones: dict[Coord, Color], turn: Color | None):
        colors = (turn,) if turn is not None else (Color.BLACK, Color.WHITE)
        out = []
        for src in sorted(stones):
            color = stones[src]
            if color not in colors:
                continue
            r, c = src
            for dr, dc in ORTHO_STEPS:
                dst = (r + dr, c + dc)
                if stones.get(dst) is color.opposite:
                    out.append(Move(color, src, dst))
        return out

    def reach(self, stones: dict[Coord, Color], turn: Color | None, k: int) -> bool:
        """Can ``stones`` be reduced to exactly ``k`` under this discipline?"""
        if len(stones) == k:
            return True
        key = (frozenset(stones.items()), turn, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit[0]
        ok = False
        good_move = None
        if self._feasible(stones, turn, k):
            for move in self.moves_for(stones, turn):
                child = dict(stones)
                del child[move.src]
                child[move.dst] = move.mover
                nxt = turn.opposite if turn is not None else None
                if self.reach(child, nxt, k):
                    ok = True
                    good_move = move
                    break
        self.memo[key] = (ok, good_move)
        return ok

    def _feasible(self, stones, turn, k) -> bool:
        if _component_floor(stones, self.anchor) > k:
            return False
        if turn is not None:
            whites = sum(1 for c in stones.values() if c is Color.WHITE)
            return _alternation_feasible(whites, len(stones) - whites, turn, k)
        return True

    def witness(self, turn: Color | None, k: int) -> list[Move]:
        """Rebuild the stored winning line from the memo."""
        moves = []
        stones = dict(self.stones)
        while len(stones) > k:
            if len(stones) == k:
                break
            key = (frozenset(stones.items()), turn, k)
            ok, move = self.memo[key]
            assert ok and move is not None
            moves.append(move)
            del stones[move.src]
            stones[move.dst] = move.mover
            turn = turn.opposite if turn is not None else None
        return moves


def _mode_turns(mode: Mode) -> tuple[Color | None, ...]:
    if mode is Mode.ALTERNATING_WHITE_FIRST:
        return (Color.WHITE,)
    if mode is Mode.ALTERNATING_BLACK_FIRST:
        return (Color.BLACK,)
    if mode is Mode.ALTERNATING_EITHER:
        return (Color.WHITE, Color.BLACK)
    return (None,)


def min_stones(cfg: Configuration, mode: Mode,
               limit: int = DEFAULT_LIMIT) -> tuple[int, Plan]:
    """Exact minimum reachable stone count under ``mode``, with a witness.

    Raises LimitExceeded when the board holds more than ``limit`` stones.
    """
    if len(cfg) > limit:
        raise LimitExceeded(
            f"{len(cfg)} stones exceeds the search limit {limit}; "
            "raise the limit or use a constructive reducer")
    if not cfg.stones:
        return 0, Plan(Color.WHITE, (), metadata=f"min-stones mode={mode.value}")
    search = _Search(dict(cfg.stones), cfg.anchor)
    start_k = lower_bound(cfg)
    for k in range(start_k, len(cfg) + 1):
        for turn in _mode_turns(mode):
            if search.reach(dict(cfg.stones), turn, k):
                moves = search.witness(turn, k)
                first = moves[0].mover if moves else (turn or Color.WHITE)
                meta = f"min-stones mode={mode.value} k={k}"
                return k, Plan(first, tuple(moves), metadata=meta)
    raise AssertionError("unreachable: the initial count is always reachable")


def is_one_reducible(cfg: Configuration,
                     limit: int = DEFAULT_LIMIT) -> tuple[bool, Plan | None]:
    """Decide 1-reducibility under alternating play with either first mover.

    Configurations in delta class 0 are rejected without search.
    """
    if not cfg.stones:
        return False, None
    if delta(cfg) % 3 == 0:
        return False, None
    if len(cfg) > limit:
        raise LimitExceeded(
            f"{len(cfg)} stones exceeds the search limit {limit}")
    if len(cfg) == 1:
        return True, Plan(Color.WHITE, (), metadata="one-reducible: single stone")
    search = _Search(dict(cfg.stones), cfg.anchor)
    for turn in (Color.WHITE, Color.BLACK):
        if search.reach(dict(cfg.stones), turn, 1):
            moves = search.witness(turn, 1)
            return True, Plan(moves[0].mover, tuple(moves),
                              metadata="one-reducible witness")
    return False, None
