"""The four maps between downs-first cycles, balanced origin-connected
weight functions and sequences of lap cycles.

    path_to_weights   cycle   -> weights
    weights_to_path   weights -> cycle
    laps_to_weights   laps    -> weights   (packing)
    weights_to_laps   weights -> laps      (lowest-first extraction)

Both weight-consuming maps run the same greedy walk: take the down-edge
while it has weight left, otherwise the up-edge. Every walk checks that it
never reaches a weld point above its start.
"""

from dataclasses import dataclass

from .cylinder import ORIGIN, CylCycle, Vertex, downs_first_violation, is_lap_cycle, lap_profile, step
from .errors import (
    InternalInvariantViolation,
    HigherWeldPoint,
    NotBalanced,
    NotOriginConnected,
    NotOriginStart,
    NotDownsFirst,
    ParseError,
)
from .params import DOWN, UP, Params
from .weights import WeightFunction, is_balanced, is_origin_connected, unbalanced_vertices
from .words import Word, cycle_to_word, word_to_cycle


@dataclass(frozen=True)
class LapSequence:
    """Ordered lap cycles C1..Cn, each as a direction string from the origin."""

    params: Params
    laps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "laps", tuple(self.laps))
        for lap in self.laps:
            if not is_lap_cycle(self.params, lap):
                raise ValueError(
                    f"{lap!r} is not a lap cycle: need {self.params.m} steps with exactly "
                    f"{self.params.b} U and {self.params.a} D"
                )

    def __len__(self):
        return len(self.laps)


def check_weld_ceiling(start, v, trace):
    """Raise if a walk from weld point ``start`` sits at a higher weld point."""
    if v[0] == 0 and v[1] > start[1]:
        raise HigherWeldPoint(
            f"downs-first walk from weld point {tuple(start)} reached higher weld point {tuple(v)}", trace
        )


def _greedy_walk(params, remaining, start, close_at_start):
    """Consume weight from ``remaining`` (mutated) along the greedy walk.

    With ``close_at_start`` the walk stops on its first return to ``start``;
    otherwise it stops at the first vertex with no remaining out-weight.
    Returns ``(dirs, end_vertex)``.
    """
    v = Vertex(*start)
    dirs = []
    while True:
        down, up = (v.x, v.y, DOWN), (v.x, v.y, UP)
        if remaining.get(down, 0) > 0:
            edge = down
        elif remaining.get(up, 0) > 0:
            edge = up
        else:
            return "".join(dirs), v
        remaining[edge] -= 1
        if not remaining[edge]:
            del remaining[edge]
        dirs.append(edge[2])
        v = step(params, v, edge[2])
        check_weld_ceiling(start, v, dirs)
        if close_at_start and v == start:
            return "".join(dirs), v


def path_to_weights(cycle: CylCycle) -> WeightFunction:
    """Weight of each edge = number of times the cycle uses it."""
    if cycle.start != ORIGIN:
        raise NotOriginStart(f"cycle starts at {tuple(cycle.start)}, not at the origin")
    bad = downs_first_violation(cycle)
    if bad is not None:
        v, i, j = bad
        raise NotDownsFirst(f"cycle is not downs-first: vertex {tuple(v)} is left Up at step {i} and Down at step {j}")
    return WeightFunction.from_edges(cycle.params, cycle.edges())


def weights_to_path(wf: WeightFunction) -> CylCycle:
    """Greedy downs-first cycle from the origin using up all the weight."""
    if not is_balanced(wf):
        raise NotBalanced(f"weight function is not balanced at {unbalanced_vertices(wf)[:5]}")
    remaining = dict(wf.weights)
    dirs, end = _greedy_walk(wf.params, remaining, ORIGIN, close_at_start=False)
    if end != ORIGIN:
        raise InternalInvariantViolation(f"greedy walk halted at {tuple(end)} instead of the origin", dirs)
    if remaining:
        raise NotOriginConnected(
            f"{sum(remaining.values())} units of weight are unreachable from the origin"
        )
    return CylCycle(wf.params, ORIGIN, dirs)


def pack(params: Params, laps) -> list:
    """Vertical shifts placing each lap just below the next one.

    The last lap stays at the origin. Each earlier lap is lowered until it
    touches its successor at some column while lying weakly below it.
    """
    profiles = [lap_profile(params, lap) for lap in laps]
    shifts = [0] * len(laps)
    for i in range(len(laps) - 2, -1, -1):
        upper, lower = profiles[i + 1], profiles[i]
        shifts[i] = shifts[i + 1] + min(u - l for u, l in zip(upper, lower))
        gaps = [(u + shifts[i + 1]) - (l + shifts[i]) for u, l in zip(upper, lower)]
        if min(gaps) != 0 or shifts[i] % params.m:
            raise InternalInvariantViolation(f"lap {i + 1} is not packed against lap {i + 2}: gaps {gaps}")
    return shifts


def laps_to_weights(seq: LapSequence) -> WeightFunction:
    params = seq.params
    edges = []
    for lap, shift in zip(seq.laps, pack(params, seq.laps)):
        edges.extend(CylCycle(params, Vertex(0, shift), lap).edges())
    return WeightFunction.from_edges(params, edges)


def weights_to_laps(wf: WeightFunction) -> LapSequence:
    """Peel lap cycles off bottom-up, starting each at the lowest weld point
    that still has weight leaving it."""
    params = wf.params
    if not is_balanced(wf):
        raise NotBalanced(f"weight function is not balanced at {unbalanced_vertices(wf)[:5]}")
    if not is_origin_connected(wf):
        raise NotOriginConnected("some weighted vertex is not reachable from the origin")
    remaining = dict(wf.weights)
    laps = []
    while remaining:
        weld_heights = [y for (x, y, _) in remaining if x == 0]
        if not weld_heights:
            raise NotOriginConnected("remaining weight never touches the weld")
        p = Vertex(0, min(weld_heights))
        dirs, _ = _greedy_walk(params, remaining, p, close_at_start=True)
        if len(dirs) != params.m:
            raise HigherWeldPoint(f"extraction from {tuple(p)} closed after {len(dirs)} steps, not {params.m}", dirs)
        laps.append(dirs)
    return LapSequence(params, laps)


def word_to_laps(word: Word) -> LapSequence:
    return weights_to_laps(path_to_weights(word_to_cycle(word)))


def laps_to_word(seq: LapSequence) -> Word:
    return cycle_to_word(weights_to_path(laps_to_weights(seq)))


def parse_laps(params: Params, text: str) -> LapSequence:
    """One direction string per line, C1 first; blank lines are ignored."""
    laps = [line.strip().upper() for line in text.splitlines() if line.strip()]
    try:
        return LapSequence(params, laps)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_laps(seq: LapSequence) -> str:
    return "".join(lap + "\n" for lap in seq.laps)

