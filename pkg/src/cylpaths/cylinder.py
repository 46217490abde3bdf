"""The cylinder graphs G_{a,b} and H_{a,b}, handled implicitly.

Vertices are pairs ``(x, y)`` with ``x`` a residue mod ``a+b`` and
``y ≡ a*x (mod a+b)``. Every vertex has an up-edge to ``(x+1, y+a)`` and a
down-edge to ``(x+1, y-b)``. H is G cut off above the highest lap cycle
through the origin, whose height profile is :func:`ceiling`. Nothing is ever
materialized; membership and adjacency are arithmetic.
"""

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import NotACycle, ParseError
from .params import DOWN, UP, Params


class Vertex(NamedTuple):
    x: int
    y: int


ORIGIN = Vertex(0, 0)


def ceiling(params: Params, x: int) -> int:
    """Height of the highest lap cycle from the origin above column ``x``."""
    x %= params.m
    return min(params.a * x, params.b * (params.m - x))


def in_g(params: Params, x: int, y: int) -> bool:
    return (y - params.a * x) % params.m == 0


def vertex_valid(params: Params, x: int, y: int) -> bool:
    """True iff ``(x, y)`` is a vertex of H_{a,b}."""
    return in_g(params, x, y) and y <= ceiling(params, x)


def is_weld(v: Vertex) -> bool:
    return v[0] == 0


def step(params: Params, v: Vertex, direction: str) -> Vertex:
    """Head of the edge leaving ``v`` in ``direction``."""
    return Vertex((v[0] + 1) % params.m, v[1] + params.delta(direction))


def walk(params: Params, start: Vertex, dirs: str) -> Iterator[Vertex]:
    """Yield the vertices visited by ``dirs`` from ``start``, start included."""
    v = Vertex(*start)
    yield v
    for d in dirs:
        v = step(params, v, d)
        yield v


@dataclass(frozen=True)
class CylCycle:
    """A closed walk on G_{a,b}: a start vertex and a string over ``{U, D}``.

    Walks that leave H are representable (illegal words map to them); use
    :meth:`in_h` to test, the bijections require it.
    """

    params: Params
    start: Vertex
    dirs: str

    def __post_init__(self):
        object.__setattr__(self, "start", Vertex(*self.start))
        if set(self.dirs) - {UP, DOWN}:
            raise ValueError(f"direction string may only contain U and D: {self.dirs!r}")
        x, y = self.start
        if not (0 <= x < self.params.m and in_g(self.params, x, y)):
            raise NotACycle(f"start vertex {(x, y)} is not a vertex of G")
        end = self.start
        for end in walk(self.params, self.start, self.dirs):
            pass
        if end != self.start:
            raise NotACycle(f"walk from {tuple(self.start)} ends at {tuple(end)}")

    def __len__(self):
        return len(self.dirs)

    def in_h(self) -> bool:
        return all(vertex_valid(self.params, *v) for v in walk(self.params, self.start, self.dirs))

    def vertices(self) -> list:
        return list(walk(self.params, self.start, self.dirs))

    def edges(self) -> Iterator[tuple]:
        """Yield ``(x, y, dir)`` for each step of the cycle."""
        v = self.start
        for d in self.dirs:
            yield (v.x, v.y, d)
            v = step(self.params, v, d)


def downs_first_violation(cycle: CylCycle) -> Optional[tuple]:
    """First ``(vertex, up_index, down_index)`` in walk order where a Down
    leaves a vertex after an Up already left it; ``None`` if downs-first.

    Step indices are 1-based; ``up_index`` is the earliest Up from that vertex.
    """
    first_up = {}
    v = cycle.start
    for i, d in enumerate(cycle.dirs, start=1):
        if d == UP:
            first_up.setdefault(v, i)
        elif v in first_up:
            return (v, first_up[v], i)
        v = step(cycle.params, v, d)
    return None


def is_downs_first(cycle: CylCycle) -> bool:
    return downs_first_violation(cycle) is None


def lap_profile(params: Params, dirs: str) -> tuple:
    """Heights of a lap cycle started at the origin, one per column 0..a+b-1."""
    if len(dirs) != params.m:
        raise ValueError(f"a lap has exactly {params.m} steps, got {len(dirs)}")
    heights = [v.y for v in walk(params, ORIGIN, dirs)]
    if heights[-1] != 0:
        raise ValueError(f"{dirs!r} is not a lap cycle")
    return tuple(heights[:-1])


def is_lap_cycle(params: Params, dirs: str) -> bool:
    return (
        len(dirs) == params.m
        and not set(dirs) - {UP, DOWN}
        and dirs.count(UP) == params.b
    )


def enumerate_lap_cycles(params: Params) -> list:
    """All C(a+b, a) lap cycles from the origin, lexicographic with D < U."""
    out = []

    def extend(prefix, ups_left, downs_left):
        if not ups_left and not downs_left:
            out.append(prefix)
            return
        if downs_left:
            extend(prefix + DOWN, ups_left, downs_left - 1)
        if ups_left:
            extend(prefix + UP, ups_left - 1, downs_left)

    extend("", params.b, params.a)
    return out


_CYCLE_RE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*:\s*([UD]*)\s*$")


def parse_cycle(params: Params, text: str) -> CylCycle:
    """Parse ``"x,y:DIRS"``, e.g. ``"0,0:UDDUDD"``."""
    match = _CYCLE_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse cycle {text.strip()!r}; expected 'x,y:DIRS' with DIRS over U/D")
    x, y, dirs = int(match[1]), int(match[2]), match[3]
    if not 0 <= x < params.m:
        raise ParseError(f"x-coordinate {x} is not a residue mod {params.m}")
    return CylCycle(params, Vertex(x, y), dirs)


def format_cycle(cycle: CylCycle) -> str:
    return f"{cycle.start.x},{cycle.start.y}:{cycle.dirs}"
