"""Grid-graph Hamiltonicity gadgets and certificate translation.

A grid graph (integer points, edges exactly between unit-distance pairs) maps
to a Clobber position: black stones on the vertices, a lone white bomb just
above the anchor's left neighbor, a fuse of n white stones stacked above the
anchor vertex, and a black fire on top.  A Hamiltonian circuit corresponds to
a 1-reduction of that position, and both directions of the correspondence can
be checked on small instances with the exact solver.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .board import Color, Configuration, Coord, Move, Plan, replay
from .errors import (AnchorMissing, BombLeftGraph, EmptyGraph, InvalidCircuit,
                     LimitExceeded, NotAOneReduction, ParseError)

Point = tuple[int, int]

HAM_LIMIT = 12

_UNIT_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class GridGraph:
    """Vertices at integer (x, y) points, y increasing upward; edges implicit."""

    vertices: frozenset[Point]

    @staticmethod
    def of(points) -> "GridGraph":
        pts = list(points)
        unique = frozenset(pts)
        if len(unique) < len(pts):
            warnings.warn("duplicate grid-graph vertices dropped", stacklevel=2)
        return GridGraph(unique)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, p: Point) -> list[Point]:
        x, y = p
        return [(x + dx, y + dy) for dx, dy in _UNIT_STEPS
                if (x + dx, y + dy) in self.vertices]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {next(iter(sorted(self.vertices)))}
        stack = list(seen)
        while stack:
            for q in self.neighbors(stack.pop()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return len(seen) == self.n


@dataclass(frozen=True)
class Anchor:
    """The max-y (then max-x) vertex and its left neighbor; every Hamiltonian
    circuit must use the edge between them."""

    v: Point
    w: Point


def pick_anchor(graph: GridGraph) -> Anchor | None:
    """The unique anchor, or None when v has no left neighbor (in which case
    the graph trivially has no Hamiltonian circuit)."""
    if not graph.vertices:
        raise EmptyGraph("cannot anchor an empty graph")
    v = max(graph.vertices, key=lambda p: (p[1], p[0]))
    w = (v[0] - 1, v[1])
    if w not in graph.vertices:
        return None
    return Anchor(v, w)


def _to_board(graph: GridGraph, point: Point, y_top: int) -> Coord:
    """Graph coordinates are y-up; board rows grow downward from the fire."""
    x, y = point
    return (y_top - y, x)


def build_gadget(graph: GridGraph) -> Configuration:
    """The bomb/fuse/fire position for ``graph``: n+1 white, n+1 black stones."""
    anchor = pick_anchor(graph)
    if anchor is None:
        raise AnchorMissing("anchor vertex has no left neighbor; "
                            "graph is trivially non-Hamiltonian")
    n = graph.n
    vx, vy = anchor.v
    y_top = vy + n + 1
    stones: dict[Coord, Color] = {}
    for p in graph.vertices:
        stones[_to_board(graph, p, y_top)] = Color.BLACK
    stones[_to_board(graph, (vx - 1, vy + 1), y_top)] = Color.WHITE   # bomb
    for j in range(1, n + 1):
        stones[_to_board(graph, (vx, vy + j), y_top)] = Color.WHITE   # fuse
    stones[_to_board(graph, (vx, vy + n + 1), y_top)] = Color.BLACK   # fire
    return Configuration(stones)


def gadget_cells(graph: GridGraph) -> dict[str, object]:
    """Board cells of the named gadget pieces, for tests and extraction."""
    anchor = pick_anchor(graph)
    if anchor is None:
        raise AnchorMissing("anchor vertex has no left neighbor")
    n = graph.n
    vx, vy = anchor.v
    y_top = vy + n + 1
    return {
        "anchor": anchor,
        "bomb": _to_board(graph, (vx - 1, vy + 1), y_top),
        "fire": _to_board(graph, (vx, vy + n + 1), y_top),
        "fuse": [_to_board(graph, (vx, vy + j), y_top) for j in range(n, 0, -1)],
        "vertex": {p: _to_board(graph, p, y_top) for p in graph.vertices},
        "above_v": _to_board(graph, (vx, vy + 1), y_top),
    }


def _validate_circuit(graph: GridGraph, circuit: tuple[Point, ...]) -> None:
    if len(circuit) != graph.n or graph.n < 4:
        raise InvalidCircuit(f"circuit must visit all {graph.n} vertices once")
    if set(circuit) != set(graph.vertices):
        raise InvalidCircuit("circuit does not cover the vertex set exactly")
    for a, b in zip(circuit, circuit[1:] + circuit[:1]):
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise InvalidCircuit(f"step {a} -> {b} is not a unit step")


def circuit_to_plan(graph: GridGraph, circuit: tuple[Point, ...]) -> Plan:
    """Translate a Hamiltonian circuit into an alternating 1-reduction plan.

    White walks the bomb along the circuit from w to v while Black burns the
    fuse top-down; the bomb then clobbers the fire.  Exactly 2n+1 moves.
    """
    _validate_circuit(graph, circuit)
    anchor = pick_anchor(graph)
    if anchor is None:
        raise InvalidCircuit("graph has no anchor, so no circuit can exist")
    cells = gadget_cells(graph)
    idx_v = circuit.index(anchor.v)
    n = graph.n
    rotated = circuit[idx_v:] + circuit[:idx_v]       # rotated[0] == v
    if rotated[1] == anchor.w:
        walk = rotated[1:] + (anchor.v,)              # w, ..., around to v
    elif rotated[-1] == anchor.w:
        walk = tuple(reversed(rotated[1:])) + (anchor.v,)
    else:
        raise InvalidCircuit("circuit does not use the anchor edge (v, w)")
    assert walk[0] == anchor.w and walk[-1] == anchor.v
    vmap = cells["vertex"]
    fuse = cells["fuse"]
    moves = []
    bomb_at = cells["bomb"]
    fire_at = cells["fire"]
    for i in range(n):
        dst = vmap[walk[i]]
        moves.append(Move(Color.WHITE, bomb_at, dst))
        bomb_at = dst
        moves.append(Move(Color.BLACK, fire_at, fuse[i]))
        fire_at = fuse[i]
    moves.append(Move(Color.WHITE, bomb_at, fire_at))
    return Plan(Color.WHITE, tuple(moves),
                metadata=f"circuit-to-plan n={n}")


def plan_to_circuit(graph: GridGraph, plan: Plan) -> tuple[Point, ...]:
    """Extract the bomb's vertex trajectory from a 1-reduction witness.

    The plan must replay on the gadget to a single stone; the white moves
    must form one walk starting at the bomb and staying on graph vertices
    (ending on the fire cell).  Witnesses of any other shape are surfaced as
    errors, never repaired.
    """
    cfg = build_gadget(graph)
    final, report = replay(cfg, plan)
    if report.final_stones != 1:
        raise NotAOneReduction(
            f"plan leaves {report.final_stones} stones, not 1")
    cells = gadget_cells(graph)
    whites = [m for m in plan.moves if m.mover is Color.WHITE]
    if not whites or whites[0].src != cells["bomb"]:
        raise BombLeftGraph("white moves do not start with the bomb")
    trajectory = []
    at = cells["bomb"]
    for move in whites:
        if move.src != at:
            raise BombLeftGraph("white moves do not form a single walk")
        at = move.dst
        trajectory.append(at)
    board_to_vertex = {cell: p for p, cell in cells["vertex"].items()}
    visited = []
    for cell in trajectory[:-1]:
        if cell not in board_to_vertex:
            raise BombLeftGraph(f"bomb visited non-vertex cell {cell}")
        visited.append(board_to_vertex[cell])
    if trajectory[-1] != cells["above_v"]:
        raise BombLeftGraph("bomb walk does not end on the fire above v")
    if len(visited) != graph.n or set(visited) != set(graph.vertices):
        raise BombLeftGraph("bomb walk does not cover the vertices exactly once")
    circuit = tuple(visited)
    _validate_circuit(graph, circuit)
    return circuit


def ham_brute(graph: GridGraph) -> tuple[Point, ...] | None:
    """Exhaustive backtracking for a Hamiltonian circuit; None when there is
    none.  Deterministic: the lexicographically first circuit is returned."""
    n = graph.n
    if n > HAM_LIMIT:
        raise LimitExceeded(f"{n} vertices exceeds the brute-force limit {HAM_LIMIT}")
    if n < 4:
        return None
    start = min(graph.vertices)
    order = {p: sorted(graph.neighbors(p)) for p in graph.vertices}
    path = [start]
    seen = {start}

    def extend() -> bool:
        if len(path) == n:
            return start in order[path[-1]]
        for q in order[path[-1]]:
            if q not in seen:
                seen.add(q)
                path.append(q)
                if extend():
                    return True
                path.pop()
                seen.discard(q)
        return False

    return tuple(path) if extend() else None


# --- file formats ---

def parse_points(text: str, kind: str = "grid-graph") -> list[Point]:
    """Shared reader for graph and circuit files: ``x y`` per line, # comments."""
    points = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"{kind} line must be 'x y'", lineno, 1)
        try:
            points.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise ParseError(f"{kind} coordinates must be integers", lineno, 1) from None
    return points


def parse_graph(text: str) -> GridGraph:
    return GridGraph.of(parse_points(text, "grid-graph"))


def parse_circuit(text: str) -> tuple[Point, ...]:
    return tuple(parse_points(text, "circuit"))


def format_points(points, header: str = "") -> str:
    lines = [f"# {header}"] if header else []
    lines.extend(f"{x} {y}" for x, y in points)
    return "\n".join(lines) + "\n"
