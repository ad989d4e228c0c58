"""Solitaire Clobber engine: boards, reducers, exact search, and gadgets."""

from .board import (Color, Configuration, Coord, Move, Plan, ReplayReport,
                    apply_move, checkerboard, connected_components, delta,
                    delta_class, format_board, format_plan, legal_moves,
                    parse_board, parse_plan, psi_line, replay, square_color)
from .errors import (AnchorMissing, BombLeftGraph, ClobberError,
                     EmptyConfiguration, EmptyGraph, IllegalMove,
                     InvalidCircuit, InvalidSize, LimitExceeded,
                     NoConnectingSequence, NotAOneReduction, ParseError,
                     ReplayError)
from .gadgets import (Anchor, GridGraph, build_gadget, circuit_to_plan,
                      ham_brute, pick_anchor, plan_to_circuit)
from .linear import BlockSchedule, block_split, line_bound, reduce_line
from .rect import (CaseTag, StepMacro, classify_case, reduce_rect,
                   solve_waypoint_gap, step_library)
from .solver import Mode, is_one_reducible, lower_bound, min_stones

__all__ = [name for name in dir() if not name.startswith("_")]
