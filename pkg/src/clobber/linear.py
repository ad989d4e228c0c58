"""Closed-form bound and constructive alternating reduction for one-row boards.

The line of n alternating stones splits into ceil(n/4) blocks, all of length
four except possibly a final remainder block.  Blocks of length 1, 2, or 4
reduce to one stone and a block of length 3 to two stones, no matter which
color is due to move, so the blocks can be played left to right while
threading the mover color across block seams.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Color, Configuration, Move, Plan, apply_move, legal_moves, psi_line
from .errors import InvalidSize

# Blocks of these lengths reduce to this many stones, from either first mover.
_BLOCK_TARGET = {1: 1, 2: 1, 3: 2, 4: 1}


def line_bound(n: int) -> int:
    """Tight reducibility bound for the n-stone line: ceil(n/4), plus one more
    when n == 3 (mod 4)."""
    if n < 1:
        raise InvalidSize(f"line_bound needs n >= 1, got {n}")
    return (n + 3) // 4 + (1 if n % 4 == 3 else 0)


def _derive_block_table() -> dict[tuple[int, Color], tuple[Move, ...]]:
    """Find, for every (block length, first mover), an alternating in-block
    sequence reaching the block's target count.

    The sequences are not written out anywhere authoritative; an exhaustive
    search over each four-cell-or-smaller block makes them concrete.  Blocks
    always start at even columns, so colors inside a block are fixed.
    """
    table = {}
    for length, target in _BLOCK_TARGET.items():
        segment = Configuration({(0, c): Color.BLACK if c % 2 == 0 else Color.WHITE
                                 for c in range(length)})
        for first in (Color.WHITE, Color.BLACK):
            seq = _search_block(segment, first, target)
            if seq is None:
                raise AssertionError(
                    f"no alternating reduction for block length {length}, first {first}")
            table[(length, first)] = tuple(seq)
    return table


def _search_block(cfg: Configuration, mover: Color, target: int) -> list[Move] | None:
    if len(cfg) == target:
        return []
    for move in legal_moves(cfg, mover):
        rest = _search_block(apply_move(cfg, move), mover.opposite, target)
        if rest is not None:
            return [move] + rest
    return None


_TABLE_CACHE: dict[tuple[int, Color], tuple[Move, ...]] | None = None


def _block_table() -> dict[tuple[int, Color], tuple[Move, ...]]:
    global _TABLE_CACHE
    if _TABLE_CACHE is None:
        _TABLE_CACHE = _derive_block_table()
    return _TABLE_CACHE


@dataclass(frozen=True)
class BlockSchedule:
    """Block decomposition of the line plus the shared per-block move tables.

    ``blocks`` holds ``(start column, length)`` pairs; lengths sum to n with
    at most one non-4 block, placed last.  ``tables`` maps
    ``(length, first mover)`` to a move sequence relative to column 0 of the
    block.
    """

    blocks: tuple[tuple[int, int], ...]
    tables: dict[tuple[int, Color], tuple[Move, ...]]


def block_split(n: int) -> BlockSchedule:
    """Split the n-line into ceil(n/4) blocks; the remainder block goes last."""
    if n < 1:
        raise InvalidSize(f"block_split needs n >= 1, got {n}")
    blocks = [(4 * i, 4) for i in range(n // 4)]
    if n % 4:
        blocks.append((n - n % 4, n % 4))
    return BlockSchedule(tuple(blocks), _block_table())


def reduce_line(n: int, first: Color) -> Plan:
    """Alternating plan reducing psi_line(n) to exactly line_bound(n) stones,
    starting with ``first``; each move stays inside its block."""
    schedule = block_split(n)
    moves: list[Move] = []
    due = first
    for start, length in schedule.blocks:
        for rel in schedule.tables[(length, due)]:
            moves.append(Move(rel.mover, (0, rel.src[1] + start), (0, rel.dst[1] + start)))
        if moves:
            due = moves[-1].mover.opposite
    return Plan(first, tuple(moves), metadata=f"reduce-line n={n} first={first}")


def check_line_reduction(n: int, first: Color) -> int:
    """Replay helper used by tests and suites; returns the final stone count."""
    from .board import replay

    _, report = replay(psi_line(n), reduce_line(n, first), require_alternation=True)
    return report.final_stones
