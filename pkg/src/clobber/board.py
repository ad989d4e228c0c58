"""Board representation, move rules, the delta invariant, and serialization.

Coordinates are ``(row, col)`` pairs with row increasing downward and col
increasing rightward.  The underlying checkerboard coloring is fixed by a
parity anchor: cell ``(r, c)`` is a Black square iff ``(r + c) % 2 == anchor``.
With the default anchor 0 the origin is a Black square, so ``psi_line(n)``
starts with a black stone and ``checkerboard(n, m)`` is all-matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .errors import IllegalMove, InvalidSize, ParseError, ReplayError

Coord = tuple[int, int]

ORTHO_STEPS = ((-1, 0), (0, -1), (0, 1), (1, 0))


class Color(Enum):
    BLACK = "B"
    WHITE = "W"

    @property
    def opposite(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    def __str__(self) -> str:
        return self.value


def square_color(cell: Coord, anchor: int = 0) -> Color:
    """Color of the checkerboard square under ``cell`` for the given anchor."""
    return Color.BLACK if (cell[0] + cell[1]) % 2 == anchor else Color.WHITE


@dataclass(frozen=True)
class Move:
    """One clobbering step: ``mover`` travels ``src`` -> ``dst``.

    ``src`` and ``dst`` must be orthogonally adjacent; ``dst`` must hold a
    stone of the opposite color when the move is applied.
    """

    mover: Color
    src: Coord
    dst: Coord

    @property
    def sort_key(self) -> tuple[Coord, Coord]:
        """Row-major ordering key: source first, then destination."""
        return (self.src, self.dst)

    def __str__(self) -> str:
        return f"{self.mover} {self.src[0]} {self.src[1]} {self.dst[0]} {self.dst[1]}"


class Configuration:
    """An immutable sparse set of colored stones on the checkerboard.

    ``stones`` maps occupied cells to stone colors.  All operations return new
    configurations; instances are safe to share between workers.
    """

    __slots__ = ("stones", "anchor")

    def __init__(self, stones: Mapping[Coord, Color] | Iterable[tuple[Coord, Color]] = (),
                 anchor: int = 0):
        if anchor not in (0, 1):
            raise ValueError(f"anchor must be 0 or 1, got {anchor!r}")
        object.__setattr__(self, "stones", dict(stones))
        object.__setattr__(self, "anchor", anchor)

    def __setattr__(self, name, value):
        raise AttributeError("Configuration is immutable")

    def __len__(self) -> int:
        return len(self.stones)

    def __contains__(self, cell: Coord) -> bool:
        return cell in self.stones

    def __eq__(self, other) -> bool:
        return (isinstance(other, Configuration)
                and self.anchor == other.anchor
                and self.stones == other.stones)

    def __hash__(self) -> int:
        return hash((self.anchor, frozenset(self.stones.items())))

    def __repr__(self) -> str:
        return f"Configuration({len(self.stones)} stones, anchor={self.anchor})"

    def square_color(self, cell: Coord) -> Color:
        return square_color(cell, self.anchor)

    def is_matching(self, cell: Coord) -> bool:
        """True iff the stone on ``cell`` has the color of its square."""
        return self.stones[cell] is self.square_color(cell)

    def sorted_cells(self) -> list[Coord]:
        return sorted(self.stones)

    def key(self) -> frozenset:
        """Hashable identity of the stone layout (anchor excluded)."""
        return frozenset(self.stones.items())

    def translate(self, dr: int, dc: int) -> "Configuration":
        """Shift all stones; the anchor is adjusted so square colors follow."""
        anchor = (self.anchor + dr + dc) % 2
        return Configuration({(r + dr, c + dc): col for (r, c), col in self.stones.items()},
                             anchor)

    def transpose(self) -> "Configuration":
        """Mirror across the main diagonal; square colors are unaffected."""
        return Configuration({(c, r): col for (r, c), col in self.stones.items()}, self.anchor)


def delta(cfg: Configuration) -> int:
    """Number of stones plus number of clashing stones (0 for the empty board)."""
    return len(cfg.stones) + sum(1 for cell in cfg.stones if not cfg.is_matching(cell))


def delta_class(cfg: Configuration) -> int:
    """``delta(cfg) % 3``; invariant under any legal move sequence."""
    return delta(cfg) % 3


def legal_moves(cfg: Configuration, mover: Color) -> list[Move]:
    """All moves for ``mover``, in row-major order by source then destination."""
    stones = cfg.stones
    out = []
    for src in sorted(stones):
        if stones[src] is not mover:
            continue
        r, c = src
        for dr, dc in ORTHO_STEPS:
            dst = (r + dr, c + dc)
            if stones.get(dst) is mover.opposite:
                out.append(Move(mover, src, dst))
    return out


def apply_move(cfg: Configuration, move: Move) -> Configuration:
    """Apply one clobbering move, decreasing the stone count by exactly one."""
    stones = cfg.stones
    if stones.get(move.src) is not move.mover:
        raise IllegalMove(f"no {move.mover} stone at {move.src}")
    if stones.get(move.dst) is not move.mover.opposite:
        raise IllegalMove(f"no {move.mover.opposite} stone at {move.dst} to clobber")
    if abs(move.src[0] - move.dst[0]) + abs(move.src[1] - move.dst[1]) != 1:
        raise IllegalMove(f"{move.src} and {move.dst} are not orthogonally adjacent")
    new_stones = dict(stones)
    del new_stones[move.src]
    new_stones[move.dst] = move.mover
    return Configuration(new_stones, cfg.anchor)


def checkerboard(rows: int, cols: int, anchor: int = 0) -> Configuration:
    """Rectangular all-matching configuration with ``rows`` x ``cols`` stones."""
    if rows < 1 or cols < 1:
        raise InvalidSize(f"checkerboard needs positive dimensions, got {rows}x{cols}")
    return Configuration({(r, c): square_color((r, c), anchor)
                          for r in range(rows) for c in range(cols)}, anchor)


def psi_line(n: int) -> Configuration:
    """The one-row checkerboard of ``n`` stones, black stone first."""
    if n < 1:
        raise InvalidSize(f"psi_line needs n >= 1, got {n}")
    return checkerboard(1, n)


def connected_components(cfg: Configuration) -> list[Configuration]:
    """Partition into orthogonal-adjacency components, ordered by smallest cell."""
    unseen = set(cfg.stones)
    parts = []
    for start in sorted(cfg.stones):
        if start not in unseen:
            continue
        stack, comp = [start], {}
        unseen.discard(start)
        while stack:
            r, c = cell = stack.pop()
            comp[cell] = cfg.stones[cell]
            for dr, dc in ORTHO_STEPS:
                nxt = (r + dr, c + dc)
                if nxt in unseen:
                    unseen.discard(nxt)
                    stack.append(nxt)
        parts.append(Configuration(comp, cfg.anchor))
    return parts


# --- plans and replay ---

@dataclass(frozen=True)
class Plan:
    """An ordered move list; the witness format for every reduction claim."""

    first_mover: Color
    moves: tuple[Move, ...]
    metadata: str = ""

    def __post_init__(self):
        if self.moves and self.moves[0].mover is not self.first_mover:
            raise ValueError("first_mover does not match the first move")

    def __len__(self) -> int:
        return len(self.moves)

    def is_alternating(self) -> bool:
        return all(b.mover is a.mover.opposite for a, b in zip(self.moves, self.moves[1:]))


@dataclass(frozen=True)
class ReplayReport:
    moves_applied: int
    strictly_alternating: bool
    initial_stones: int
    final_stones: int
    final_delta: int
    final_delta_class: int


def replay(cfg: Configuration, plan: Plan,
           require_alternation: bool = False) -> tuple[Configuration, ReplayReport]:
    """Apply ``plan`` to ``cfg``, failing fast on the first bad move.

    Raises ``ReplayError`` at the index of the first illegal move, or of the
    first alternation break when ``require_alternation`` is set.
    """
    cur = cfg
    alternating = True
    prev_mover = None
    for i, move in enumerate(plan.moves):
        if prev_mover is not None and move.mover is not prev_mover.opposite:
            alternating = False
            if require_alternation:
                raise ReplayError("consecutive moves by the same color", i)
        try:
            cur = apply_move(cur, move)
        except IllegalMove as exc:
            raise ReplayError(str(exc), i) from exc
        prev_mover = move.mover
    report = ReplayReport(
        moves_applied=len(plan.moves),
        strictly_alternating=alternating,
        initial_stones=len(cfg),
        final_stones=len(cur),
        final_delta=delta(cur),
        final_delta_class=delta_class(cur),
    )
    return cur, report


# --- serialization ---

_HEADER_PREFIX = "clobber "
_GLYPHS = {"B": Color.BLACK, "W": Color.WHITE}


def parse_board(text: str) -> Configuration:
    """Parse the board file format.

    Line 1 is the header ``clobber v1 anchor=<0|1>``.  As a convenience,
    header-less input consisting only of body lines is accepted with the
    default anchor 0 (which keeps one-liners like ``"BW\\nWB"`` usable).
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    anchor = 0
    body_start = 0
    if lines and lines[0].startswith(_HEADER_PREFIX):
        header = lines[0]
        if header == "clobber v1 anchor=0":
            anchor = 0
        elif header == "clobber v1 anchor=1":
            anchor = 1
        else:
            raise ParseError(f"malformed header {header!r}", 1, 1)
        body_start = 1
    stones = {}
    for r, line in enumerate(lines[body_start:]):
        for c, glyph in enumerate(line):
            if glyph in _GLYPHS:
                stones[(r, c)] = _GLYPHS[glyph]
            elif glyph != ".":
                raise ParseError(f"invalid glyph {glyph!r}", body_start + r + 1, c + 1)
    return Configuration(stones, anchor)


def canonical_translation(cfg: Configuration) -> Configuration:
    """Translate toward the origin by an even-sum vector.

    The minimum row becomes 0 and the minimum column 0 or 1, so square colors
    (and thus the anchor) are position-stable across serialization.
    """
    if not cfg.stones:
        return cfg
    min_r = min(r for r, _ in cfg.stones)
    min_c = min(c for _, c in cfg.stones)
    dr, dc = -min_r, -min_c
    if (dr + dc) % 2:
        dc += 1
    return Configuration({(r + dr, c + dc): col for (r, c), col in cfg.stones.items()},
                         cfg.anchor)


def format_board(cfg: Configuration) -> str:
    """Serialize ``cfg`` in the board file format (canonically translated)."""
    canon = canonical_translation(cfg)
    lines = [f"clobber v1 anchor={canon.anchor}"]
    if canon.stones:
        max_r = max(r for r, _ in canon.stones)
        max_c = max(c for _, c in canon.stones)
        for r in range(max_r + 1):
            lines.append("".join(
                canon.stones[(r, c)].value if (r, c) in canon.stones else "."
                for c in range(max_c + 1)))
    return "\n".join(lines) + "\n"


def parse_plan(text: str) -> Plan:
    """Parse the plan file format: one ``<B|W> r1 c1 r2 c2`` move per line."""
    moves = []
    metadata = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            metadata.append(line[1:].strip())
            continue
        tokens = line.split()
        if len(tokens) != 5:
            raise ParseError("expected '<B|W> r1 c1 r2 c2'", lineno, 1)
        if tokens[0] not in _GLYPHS:
            raise ParseError(f"invalid mover {tokens[0]!r}", lineno, 1)
        try:
            r1, c1, r2, c2 = (int(t) for t in tokens[1:])
        except ValueError:
            raise ParseError("coordinates must be integers",
                             lineno, len(tokens[0]) + 2) from None
        moves.append(Move(_GLYPHS[tokens[0]], (r1, c1), (r2, c2)))
    first = moves[0].mover if moves else Color.WHITE
    return Plan(first, tuple(moves), metadata="; ".join(metadata))


def format_plan(plan: Plan) -> str:
    """Serialize a plan; metadata becomes a leading comment line."""
    lines = []
    if plan.metadata:
        lines.append(f"# {plan.metadata}")
    lines.extend(str(move) for move in plan.moves)
    return "\n".join(lines) + "\n"
