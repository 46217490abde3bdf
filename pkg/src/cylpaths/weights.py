"""Weight functions on the edges of H_{a,b}.

An edge is keyed by its tail and direction, ``(x, y, dir)``. The map is
sparse and canonical: zero weights are never stored, so two weight
functions are equal iff their maps are equal.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable

from .cylinder import ORIGIN, CylCycle, Vertex, step, vertex_valid
from .errors import ParseError
from .params import DOWN, UP, Params


@dataclass(frozen=True)
class WeightFunction:
    params: Params
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for edge, w in self.weights.items():
            x, y, d = edge
            if d not in (UP, DOWN):
                raise ValueError(f"invalid edge direction {d!r}")
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"weight of edge {edge} must be a nonnegative integer, got {w!r}")
            if w == 0:
                continue
            if not (0 <= x < self.params.m and vertex_valid(self.params, x, y)):
                raise ValueError(f"edge {edge} does not start at a vertex of H")
            if not vertex_valid(self.params, *step(self.params, Vertex(x, y), d)):
                raise ValueError(f"edge {edge} leaves H")
            clean[(x, y, d)] = w
        object.__setattr__(self, "weights", clean)

    @classmethod
    def from_edges(cls, params: Params, edges: Iterable[tuple]) -> "WeightFunction":
        """Weight = multiplicity of each edge in ``edges``."""
        return cls(params, dict(Counter(edges)))

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    def __getitem__(self, edge) -> int:
        return self.weights.get(tuple(edge), 0)

    def __bool__(self):
        return bool(self.weights)


def out_weight(wf: WeightFunction, v) -> int:
    x, y = v
    if not vertex_valid(wf.params, x, y):
        raise ValueError(f"{(x, y)} is not a vertex of H")
    return wf[(x, y, UP)] + wf[(x, y, DOWN)]


def in_weight(wf: WeightFunction, v) -> int:
    x, y = v
    if not vertex_valid(wf.params, x, y):
        raise ValueError(f"{(x, y)} is not a vertex of H")
    a, b, m = wf.params.a, wf.params.b, wf.params.m
    px = (x - 1) % m
    return wf[(px, y - a, UP)] + wf[(px, y + b, DOWN)]


def _imbalance(wf: WeightFunction) -> Counter:
    net = Counter()
    for (x, y, d), w in wf.weights.items():
        net[(x, y)] -= w
        net[step(wf.params, Vertex(x, y), d)] += w
    return net


def is_balanced(wf: WeightFunction) -> bool:
    return not any(_imbalance(wf).values())


def unbalanced_vertices(wf: WeightFunction) -> list:
    """Vertices whose in-weight differs from out-weight, sorted."""
    return sorted(v for v, net in _imbalance(wf).items() if net)


def is_origin_connected(wf: WeightFunction) -> bool:
    """Every vertex with positive out-weight is reachable from the origin
    along positive-weight edges."""
    tails = {(x, y) for (x, y, _) in wf.weights}
    if not tails:
        return True
    seen = {tuple(ORIGIN)}
    queue = deque([ORIGIN])
    while queue:
        v = queue.popleft()
        for d in (UP, DOWN):
            if wf[(v[0], v[1], d)]:
                head = tuple(step(wf.params, v, d))
                if head not in seen:
                    seen.add(head)
                    queue.append(head)
    return tails <= seen


def covers(wf: WeightFunction, cycle: CylCycle) -> bool:
    used = Counter(cycle.edges())
    return all(count <= wf[edge] for edge, count in used.items())


def _sort_key(edge):
    x, y, d = edge
    return (-y, x, 0 if d == UP else 1)


def sorted_items(wf: WeightFunction) -> list:
    """``(x, y, dir, weight)`` rows by height descending, then x, U before D."""
    return [(*edge, wf.weights[edge]) for edge in sorted(wf.weights, key=_sort_key)]


def format_weights(wf: WeightFunction) -> str:
    return "".join(f"{x} {y} {d} {w}\n" for x, y, d, w in sorted_items(wf))


def parse_weights(params: Params, text: str) -> WeightFunction:
    weights = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split()
        try:
            x, y, d, w = int(parts[0]), int(parts[1]), parts[2].upper(), int(parts[3])
            if len(parts) != 4 or d not in (UP, DOWN):
                raise ValueError
        except (ValueError, IndexError):
            raise ParseError(f"line {lineno}: expected 'x y U|D weight', got {line.strip()!r}") from None
        if (x, y, d) in weights:
            raise ParseError(f"line {lineno}: edge {x} {y} {d} listed twice")
        weights[(x, y, d)] = w
    try:
        return WeightFunction(params, weights)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
