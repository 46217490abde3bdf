"""Show one downs-first cycle for a=3, b=2, n=5 in all three forms: the
cycle, its weight function drawn on the strip, and its packed laps."""

from cylpaths.bijections import pack, path_to_weights, weights_to_laps, weights_to_path
from cylpaths.cylinder import ORIGIN, CylCycle, ceiling, vertex_valid
from cylpaths.params import Params
from cylpaths.weights import format_weights
from cylpaths.words import cycle_to_word, format_word

CYCLE = "DUDDDDDDDDUUUUDUUDDUDUUDD"


def draw(params, wf):
    """One row per height; each cell shows 'up/down' weights leaving that vertex."""
    ys = [y for (_, y, _) in wf.weights]
    lo, hi = min(ys), max(ceiling(params, x) for x in range(params.m))
    for y in range(hi, lo - 1, -1):
        cells = []
        for x in range(params.m):
            if not vertex_valid(params, x, y):
                cells.append("     ")
            else:
                cells.append(f"{wf[(x, y, 'U')]}/{wf[(x, y, 'D')]}".center(5))
        print(f"{y:>4} |" + "".join(cells))


def main():
    p = Params(3, 2)
    cycle = CylCycle(p, ORIGIN, CYCLE)
    wf = path_to_weights(cycle)
    seq = weights_to_laps(wf)
    print("word:   ", format_word(cycle_to_word(cycle)))
    print("weights (x y dir weight):")
    print(format_weights(wf), end="")
    print("strip (up/down weight per vertex):")
    draw(p, wf)
    print("laps C1..C5:", " ".join(seq.laps))
    print("packing shifts:", pack(p, seq.laps))
    assert weights_to_path(wf) == cycle


if __name__ == "__main__":
    main()
