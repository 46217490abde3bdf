"""Counting, brute-force enumeration, ranking and sampling of legal words,
plus the end-to-end verification harness."""

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .bijections import (
    LapSequence,
    laps_to_weights,
    laps_to_word,
    path_to_weights,
    weights_to_laps,
    weights_to_path,
)
from .errors import CylPathError, IllegalWord, RankOutOfRange, SizeGuardExceeded
from .params import DOWN, UP, LegalityMode, Params
from .words import Word, format_word, is_legal, is_zero_sum, word_to_cycle

DEFAULT_GUARD = 24


def count_formula(params: Params, n: int, mode: LegalityMode) -> int:
    """Number of legal zero-sum words of length (a+b)*n.

    ModM mode, or coprime a and b: C(a+b, a)**n. Strict mode with
    c = gcd(a, b) > 1: C((a+b)/c, a/c)**(c*n).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if mode is LegalityMode.MODM or params.coprime:
        return math.comb(params.m, params.a) ** n
    c = params.gcd
    return math.comb(params.m // c, params.a // c) ** (c * n)


def check_guard(params: Params, n: int, override: bool = False, guard: int = DEFAULT_GUARD):
    if not override and params.m * n > guard:
        raise SizeGuardExceeded(
            f"brute force over words of length {params.m * n} exceeds the guard of {guard}; pass an override to force it"
        )


def brute_force_legal_words(params: Params, n: int, mode: LegalityMode, override: bool = False) -> list:
    """Every legal zero-sum word of length (a+b)*n, lexicographic with D < U.

    Backtracking over prefixes. A branch dies when its Up or Down budget
    (b*n and a*n) is exceeded or when a Down leaves a position key an Up
    already left, since an illegal prefix stays illegal.
    """
    check_guard(params, n, override)
    a, b, m = params.a, params.b, params.m
    modm = mode is LegalityMode.MODM
    length = m * n
    out = []
    steps = []
    up_departed = set()

    def extend(height, ups_left, downs_left):
        i = len(steps)
        if i == length:
            out.append(Word(params, "".join(steps)))
            return
        key = (i % m, height) if modm else height
        if downs_left and key not in up_departed:
            steps.append(DOWN)
            extend(height - b, ups_left, downs_left - 1)
            steps.pop()
        if ups_left:
            fresh = key not in up_departed
            up_departed.add(key)
            steps.append(UP)
            extend(height + a, ups_left - 1, downs_left)
            steps.pop()
            if fresh:
                up_departed.discard(key)

    extend(0, b * n, a * n)
    return out


def rank_lap_cycle(params: Params, lap: str) -> int:
    """Lexicographic rank (D < U) among strings with b Ups and a Downs."""
    if len(lap) != params.m or lap.count(UP) != params.b or set(lap) - {UP, DOWN}:
        raise ValueError(f"{lap!r} is not a lap cycle for a={params.a}, b={params.b}")
    rank = 0
    ups_left = params.b
    for i, s in enumerate(lap):
        rest = params.m - i - 1
        if s == UP:
            # every string with D here instead (and ups_left Ups to place later) precedes
            rank += math.comb(rest, ups_left)
            ups_left -= 1
    return rank


def unrank_lap_cycle(params: Params, r: int) -> str:
    total = params.laps_per_round
    if not 0 <= r < total:
        raise RankOutOfRange(f"lap rank {r} outside [0, {total})")
    out = []
    ups_left = params.b
    for i in range(params.m):
        rest = params.m - i - 1
        with_down = math.comb(rest, ups_left)
        if r < with_down:
            out.append(DOWN)
        else:
            r -= with_down
            out.append(UP)
            ups_left -= 1
    return "".join(out)


def unrank_word(params: Params, n: int, rank: int) -> Word:
    """Legal word of length (a+b)*n with the given rank.

    The rank is read little-endian in base C(a+b, a); digit i picks lap C_i.
    """
    base = params.laps_per_round
    total = base**n
    if not 0 <= rank < total:
        raise RankOutOfRange(f"rank {rank} outside [0, {total})")
    laps = []
    for _ in range(n):
        rank, digit = divmod(rank, base)
        laps.append(unrank_lap_cycle(params, digit))
    return laps_to_word(LapSequence(params, laps))


def rank_word(word: Word) -> int:
    params = word.params
    if len(word) % params.m or not is_zero_sum(word):
        raise IllegalWord(f"{format_word(word)!r} is not a zero-sum word of length divisible by {params.m}")
    if not is_legal(word, LegalityMode.MODM):
        raise IllegalWord(f"{format_word(word)!r} has an illegal subword")
    laps = weights_to_laps(path_to_weights(word_to_cycle(word))).laps
    base = params.laps_per_round
    rank = 0
    for lap in reversed(laps):
        rank = rank * base + rank_lap_cycle(params, lap)
    return rank


def sample_word(params: Params, n: int, seed: int) -> Word:
    """Uniformly random legal word; the same seed gives the same word."""
    rng = random.Random(seed)
    return unrank_word(params, n, rng.randrange(params.laps_per_round**n))


def sample_words(params: Params, n: int, seed: int, count: int) -> list:
    """``count`` independent uniform legal words from one seeded stream."""
    rng = random.Random(seed)
    total = params.laps_per_round**n
    return [unrank_word(params, n, rng.randrange(total)) for _ in range(count)]


@dataclass
class CountReport:
    params: Params
    n: int
    mode: LegalityMode
    formula_count: int
    brute_count: Optional[int] = None
    agree: Optional[bool] = None
    bijection_ok: Optional[bool] = None
    roundtrips_ok: Optional[bool] = None
    problems: list = field(default_factory=list)

    def __post_init__(self):
        if self.brute_count is not None:
            self.agree = self.formula_count == self.brute_count

    @property
    def passed(self) -> bool:
        return bool(self.agree) and self.bijection_ok is not False and self.roundtrips_ok is not False


def _check_roundtrips(params, legal_words, sequences, problems):
    ok = True
    for word in legal_words:
        try:
            cycle = word_to_cycle(word)
            wf = path_to_weights(cycle)
            if weights_to_path(wf) != cycle:
                problems.append(f"weights_to_path(path_to_weights(c)) != c for {format_word(word)}")
                ok = False
            if laps_to_weights(weights_to_laps(wf)) != wf:
                problems.append(f"laps_to_weights(weights_to_laps(w)) != w for {format_word(word)}")
                ok = False
        except CylPathError as exc:
            problems.append(f"{format_word(word)}: {exc}")
            ok = False
    for seq in sequences:
        try:
            wf = laps_to_weights(seq)
            if weights_to_laps(wf) != seq:
                problems.append(f"weights_to_laps(laps_to_weights(s)) != s for {list(seq.laps)}")
                ok = False
            if path_to_weights(weights_to_path(wf)) != wf:
                problems.append(f"path_to_weights(weights_to_path(w)) != w for laps {list(seq.laps)}")
                ok = False
        except CylPathError as exc:
            problems.append(f"laps {list(seq.laps)}: {exc}")
            ok = False
    return ok


def all_lap_sequences(params: Params, n: int):
    laps = [unrank_lap_cycle(params, r) for r in range(params.laps_per_round)]
    for combo in itertools.product(laps, repeat=n):
        yield LapSequence(params, combo)


def verify(params: Params, n_max: int, mode: LegalityMode, override: bool = False) -> list:
    """Cross-check counts and bijections for n = 1..n_max.

    The lap-sequence image is always compared with the ModM legal set, which
    is what the bijections produce; in Strict mode with coprime a and b the
    two sets coincide.
    """
    check_guard(params, n_max, override)
    reports = []
    for n in range(1, n_max + 1):
        problems = []
        legal = brute_force_legal_words(params, n, mode, override=True)
        if len(set(legal)) != len(legal) or legal != sorted(legal, key=lambda w: w.steps):
            problems.append("brute-force list is not sorted and duplicate-free")
        report = CountReport(params, n, mode, count_formula(params, n, mode), len(legal))
        target = legal if mode is LegalityMode.MODM else brute_force_legal_words(params, n, LegalityMode.MODM, override=True)
        target_set = {w.steps for w in target}
        sequences = list(all_lap_sequences(params, n))
        image = []
        try:
            image = [laps_to_word(seq).steps for seq in sequences]
        except CylPathError as exc:
            problems.append(f"laps_to_word failed: {exc}")
        report.bijection_ok = len(image) == len(sequences) and len(set(image)) == len(image) and set(image) == target_set
        if not report.bijection_ok:
            problems.append(
                f"lap image has {len(set(image))} distinct words of {len(sequences)}; legal set has {len(target_set)}"
            )
        report.roundtrips_ok = _check_roundtrips(params, target, sequences, problems)
        report.problems = problems
        reports.append(report)
    return reports
