"""Words over ``{+a, -b}``: parsing, zero-sum and legality, and the
translation to closed walks on the cylinder."""

import re
from dataclasses import dataclass
from itertools import accumulate

from .cylinder import ORIGIN, CylCycle
from .errors import NotACycle, NotOriginStart, NotZeroSum, ParseError
from .params import DOWN, UP, LegalityMode, Params


@dataclass(frozen=True)
class Word:
    params: Params
    steps: str

    def __post_init__(self):
        if set(self.steps) - {UP, DOWN}:
            raise ValueError(f"steps may only contain U and D: {self.steps!r}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return format_word(self)

    def heights(self) -> list:
        """Prefix sums; ``heights()[i]`` is the height after ``i`` steps."""
        return list(accumulate((self.params.delta(s) for s in self.steps), initial=0))


_TOKEN_RE = re.compile(r"\s*([+-])\s*(\d+)\s*")


def parse_word(params: Params, text: str) -> Word:
    """Parse signed-integer notation such as ``"+3-2-2+3-2"``.

    Every token must be exactly ``+a`` or ``-b``. The Unicode minus sign is
    accepted. An empty or blank string is the empty word.
    """
    text = text.replace("−", "-")
    steps = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos + 1} in word {text!r}")
        sign, value = match[1], int(match[2])
        if sign == "+" and value == params.a:
            steps.append(UP)
        elif sign == "-" and value == params.b:
            steps.append(DOWN)
        else:
            raise ParseError(f"token {sign}{value} is neither +{params.a} nor -{params.b}")
        pos = match.end()
    return Word(params, "".join(steps))


def format_word(word: Word) -> str:
    up, down = f"+{word.params.a}", f"-{word.params.b}"
    return "".join(up if s == UP else down for s in word.steps)


def is_zero_sum(word: Word) -> bool:
    ups = word.steps.count(UP)
    return word.params.a * ups == word.params.b * (len(word.steps) - ups)


def find_illegal_subwords(word: Word, mode: LegalityMode) -> list:
    """All illegal subwords as 1-based inclusive ``(start, end)`` spans.

    Direct scan of every subword: ``steps[i..j]`` is zero-sum, starts with
    an Up, is followed by a Down, and in ModM mode has length divisible by
    ``a+b``. Quadratic; :func:`is_legal` is the linear-time check.
    """
    steps = word.steps
    h = word.heights()
    m = word.params.m
    spans = []
    for i in range(1, len(steps) + 1):
        if steps[i - 1] != UP:
            continue
        for j in range(i, len(steps)):
            if h[j] != h[i - 1] or steps[j] != DOWN:
                continue
            if mode is LegalityMode.MODM and (j - i + 1) % m:
                continue
            spans.append((i, j))
    return spans


def is_legal(word: Word, mode: LegalityMode) -> bool:
    """Linear-time legality via the downs-first characterisation.

    An illegal subword is exactly an Up and a later Down departing from the
    same position key: the height in Strict mode, the pair
    (step index mod a+b, height) in ModM mode.
    """
    a, b, m = word.params.a, word.params.b, word.params.m
    modm = mode is LegalityMode.MODM
    up_departed = set()
    height = 0
    for i, s in enumerate(word.steps):
        key = (i % m, height) if modm else height
        if s == UP:
            up_departed.add(key)
            height += a
        else:
            if key in up_departed:
                return False
            height -= b
    return True


def word_to_cycle(word: Word) -> CylCycle:
    if not is_zero_sum(word):
        raise NotZeroSum(f"word {format_word(word)!r} is not zero-sum, so it is not a cycle")
    if len(word) % word.params.m:
        # only possible when gcd(a, b) > 1
        raise NotACycle(f"zero-sum word of length {len(word)} does not return to the weld (a+b = {word.params.m})")
    return CylCycle(word.params, ORIGIN, word.steps)


def cycle_to_word(cycle: CylCycle) -> Word:
    if cycle.start != ORIGIN:
        raise NotOriginStart(f"cycle starts at {tuple(cycle.start)}, not at the origin")
    return Word(cycle.params, cycle.dirs)
