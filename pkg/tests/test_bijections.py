import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylpaths.bijections import (
    LapSequence,
    format_laps,
    laps_to_weights,
    laps_to_word,
    pack,
    parse_laps,
    path_to_weights,
    weights_to_laps,
    weights_to_path,
    word_to_laps,
)
from cylpaths.cylinder import ORIGIN, CylCycle, enumerate_lap_cycles, is_downs_first, lap_profile
from cylpaths.errors import (
    HigherWeldPoint,
    NotBalanced,
    NotDownsFirst,
    NotOriginConnected,
    NotOriginStart,
    ParseError,
)
from cylpaths.params import LegalityMode, Params
from cylpaths.weights import WeightFunction, covers, is_balanced, is_origin_connected
from cylpaths.words import Word, is_legal, parse_word, word_to_cycle

import oracles

P21 = Params(2, 1)
P32 = Params(3, 2)

W_DOUBLE = {(0, 0, "U"): 2, (1, 2, "D"): 2, (2, 1, "D"): 2}
W_MIXED = {
    (0, 0, "D"): 1,
    (1, -1, "D"): 1,
    (2, -2, "U"): 1,
    (0, 0, "U"): 1,
    (1, 2, "D"): 1,
    (2, 1, "D"): 1,
}

# a downs-first cycle for a=3, b=2, n=5
WORKED_CYCLE = "DUDDDDDDDDUUUUDUUDDUDUUDD"
# its weights along the diagonals checked by hand; every other edge on
# those diagonals has weight 0
WORKED_WEIGHTS = {
    (0, 0, "D"): 2,
    (0, -5, "U"): 1, (1, -2, "U"): 3, (2, 1, "U"): 1,
    (0, -5, "D"): 1, (2, 1, "D"): 2, (3, 4, "D"): 1,
    (1, -7, "D"): 1, (3, -1, "D"): 2, (4, 2, "D"): 1,
    (0, -15, "U"): 1, (1, -12, "U"): 1, (2, -9, "U"): 1, (3, -6, "U"): 1, (4, -3, "U"): 1,
    (2, -9, "D"): 1, (4, -3, "D"): 2,
    (3, -11, "D"): 1,
    (4, -13, "D"): 1,
}
WORKED_ZERO_EDGES = [
    (0, 0, "U"), (1, 3, "U"), (1, -2, "D"), (0, -10, "D"), (2, -4, "D"),
    (0, -15, "D"), (1, -12, "D"), (3, -6, "D"), (1, -17, "D"), (2, -14, "D"), (4, -8, "D"), (3, -16, "D"),
]


def cyc(p, text):
    return word_to_cycle(parse_word(p, text))


class TestPathToWeights:
    def test_empty(self):
        assert path_to_weights(CylCycle(P21, ORIGIN, "")) == WeightFunction(P21)

    def test_examples(self):
        assert path_to_weights(cyc(P21, "+2-1-1+2-1-1")).weights == W_DOUBLE
        assert path_to_weights(cyc(P21, "-1-1+2+2-1-1")).weights == W_MIXED

    def test_rejects(self):
        with pytest.raises(NotDownsFirst):
            path_to_weights(cyc(P21, "+2-1+2-1-1-1"))
        with pytest.raises(NotOriginStart):
            path_to_weights(CylCycle(P21, (0, -3), "UDD"))

    @pytest.mark.parametrize("a,b,n", [(2, 1, 3), (3, 2, 2), (2, 2, 2), (1, 2, 3)])
    def test_outputs_are_in_set_two(self, a, b, n):
        p = Params(a, b)
        for steps in oracles.legal_words(a, b, n, modm=True):
            cycle = CylCycle(p, ORIGIN, steps)
            wf = path_to_weights(cycle)
            assert is_balanced(wf) and is_origin_connected(wf)
            assert wf.total == p.m * n
            assert covers(wf, cycle)
            assert wf.weights == oracles.edge_counts(a, b, (0, 0), steps)


class TestWeightsToPath:
    def test_empty(self):
        assert weights_to_path(WeightFunction(P21)) == CylCycle(P21, ORIGIN, "")

    def test_examples(self):
        assert weights_to_path(WeightFunction(P21, W_DOUBLE)) == cyc(P21, "+2-1-1+2-1-1")
        assert weights_to_path(WeightFunction(P21, W_MIXED)) == cyc(P21, "-1-1+2+2-1-1")

    def test_not_balanced(self):
        with pytest.raises(NotBalanced):
            weights_to_path(WeightFunction(P32, {(0, 0, "U"): 1}))

    def test_not_origin_connected(self):
        wf = WeightFunction.from_edges(P32, CylCycle(P32, (0, -5), "DUDUD").edges())
        with pytest.raises(NotOriginConnected):
            weights_to_path(wf)
        extra = dict(W_DOUBLE)
        extra.update({(0, -3, "D"): 1, (1, -4, "D"): 1, (2, -5, "U"): 1})
        with pytest.raises(NotOriginConnected):
            weights_to_path(WeightFunction(P21, extra))

    def test_input_not_mutated(self):
        wf = WeightFunction(P21, W_DOUBLE)
        weights_to_path(wf)
        assert wf.weights == W_DOUBLE


class TestPacking:
    def test_examples(self):
        assert laps_to_weights(LapSequence(P21, ["UDD", "UDD"])).weights == W_DOUBLE
        assert pack(P21, ["DDU", "UDD"]) == [0, 0]
        assert laps_to_weights(LapSequence(P21, ["DDU", "UDD"])).weights == W_MIXED

    def test_single_lap(self):
        for lap in enumerate_lap_cycles(P32):
            wf = laps_to_weights(LapSequence(P32, [lap]))
            assert wf == WeightFunction.from_edges(P32, CylCycle(P32, ORIGIN, lap).edges())

    def test_packing_goes_down(self):
        # profiles (0,3,6,4,2) under (0,-2,-4,-6,-3): largest gap 10, two turns
        assert pack(P32, ["UUDDD", "DDDUU"]) == [-10, 0]

    @pytest.mark.parametrize("a,b", [(2, 1), (3, 2), (2, 2), (1, 3)])
    def test_touch_and_weakly_below(self, a, b):
        p = Params(a, b)
        laps = enumerate_lap_cycles(p)
        for lower, upper in itertools.product(laps, repeat=2):
            t = pack(p, [lower, upper])[0]
            gaps = [u - (l + t) for u, l in zip(lap_profile(p, upper), lap_profile(p, lower))]
            assert min(gaps) == 0
            # unique: one turn higher would cross, one turn lower would not touch
            assert min(g - p.m for g in gaps) < 0
            assert min(g + p.m for g in gaps) > 0


class TestWeightsToLaps:
    def test_examples(self):
        assert weights_to_laps(WeightFunction(P21, W_DOUBLE)).laps == ("UDD", "UDD")
        assert weights_to_laps(WeightFunction(P21, W_MIXED)).laps == ("DDU", "UDD")
        for lap in enumerate_lap_cycles(P32):
            wf = WeightFunction.from_edges(P32, CylCycle(P32, ORIGIN, lap).edges())
            assert weights_to_laps(wf).laps == (lap,)

    def test_rejects(self):
        with pytest.raises(NotBalanced):
            weights_to_laps(WeightFunction(P32, {(0, 0, "U"): 1}))
        with pytest.raises(NotOriginConnected):
            weights_to_laps(WeightFunction.from_edges(P32, CylCycle(P32, (0, -5), "DUDUD").edges()))


class TestWorkedExample:
    def test_cycle_is_downs_first(self):
        cycle = CylCycle(P32, ORIGIN, WORKED_CYCLE)
        assert len(cycle) == 25
        assert is_downs_first(cycle)
        assert is_legal(Word(P32, WORKED_CYCLE), LegalityMode.STRICT)

    def test_weights_match_worked_example(self):
        wf = path_to_weights(CylCycle(P32, ORIGIN, WORKED_CYCLE))
        for edge, w in WORKED_WEIGHTS.items():
            assert wf[edge] == w, edge
        for edge in WORKED_ZERO_EDGES:
            assert wf[edge] == 0, edge
        assert wf.total == 25

    def test_roundtrip(self):
        wf = path_to_weights(CylCycle(P32, ORIGIN, WORKED_CYCLE))
        seq = weights_to_laps(wf)
        assert len(seq) == 5
        assert laps_to_weights(seq) == wf
        assert laps_to_word(seq).steps == WORKED_CYCLE


class TestCompositions:
    def test_examples(self):
        assert word_to_laps(parse_word(P21, "+2-1-1+2-1-1")).laps == ("UDD", "UDD")
        assert str(laps_to_word(LapSequence(P21, ["DDU", "UDD"]))) == "-1-1+2+2-1-1"
        assert word_to_laps(Word(P21, "")) == LapSequence(P21, ())
        assert laps_to_word(LapSequence(P21, ())) == Word(P21, "")

    @pytest.mark.parametrize("a,b,n", [(2, 1, 3), (1, 2, 3), (3, 2, 2), (2, 2, 2)])
    def test_exhaustive_identities(self, a, b, n):
        p = Params(a, b)
        legal = oracles.legal_words(a, b, n, modm=True)
        image = []
        for laps in itertools.product(enumerate_lap_cycles(p), repeat=n):
            seq = LapSequence(p, laps)
            wf = laps_to_weights(seq)
            assert weights_to_laps(wf) == seq
            cycle = weights_to_path(wf)
            assert is_downs_first(cycle)
            assert path_to_weights(cycle) == wf
            image.append(cycle.dirs)
        assert len(set(image)) == len(image) == math.comb(p.m, a) ** n
        assert sorted(image) == legal
        for steps in legal:
            cycle = CylCycle(p, ORIGIN, steps)
            wf = path_to_weights(cycle)
            assert weights_to_path(wf) == cycle
            assert laps_to_weights(weights_to_laps(wf)) == wf

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([(2, 1), (3, 2), (2, 2), (3, 4), (1, 5), (5, 3)]), st.data())
    def test_random_long_sequences(self, ab, data):
        p = Params(*ab)
        laps = enumerate_lap_cycles(p)
        seq = LapSequence(p, data.draw(st.lists(st.sampled_from(laps), max_size=25)))
        word = laps_to_word(seq)
        assert len(word) == p.m * len(seq)
        assert is_legal(word, LegalityMode.MODM)
        assert word_to_laps(word) == seq


class TestWeldGuard:
    def test_weights_of_non_downs_first_cycle(self):
        # the cycle climbs from (0,-3) to the origin, but its weights are
        # still balanced and origin-connected, so they decompose into laps
        wf = WeightFunction.from_edges(P21, CylCycle(P21, (0, -3), "UUDDDD").edges())
        seq = weights_to_laps(wf)
        assert seq.laps == ("UDD", "DUD")
        assert laps_to_weights(seq) == wf
        assert weights_to_path(wf).dirs == "DDDUUD"

    def test_weld_check_direct(self):
        from cylpaths.bijections import check_weld_ceiling

        check_weld_ceiling((0, -5), (0, -5), [])
        check_weld_ceiling((0, -5), (3, 4), [])
        with pytest.raises(HigherWeldPoint) as info:
            check_weld_ceiling((0, -5), (0, 0), ["U", "D"])
        assert info.value.trace == ["U", "D"]


class TestLapText:
    def test_roundtrip(self):
        seq = LapSequence(P21, ["DDU", "UDD"])
        assert format_laps(seq) == "DDU\nUDD\n"
        assert parse_laps(P21, "DDU\nUDD\n") == seq
        assert parse_laps(P21, "") == LapSequence(P21, ())

    @pytest.mark.parametrize("text", ["DD", "UUD", "DDX"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_laps(P21, text)
