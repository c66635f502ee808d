"""Small worked instances used by the self-test, the scripts and the tests."""

from fractions import Fraction

from .codetuple import CodeTuple, uniform
from .phi import PhiMap
from .rct import ExpandedIndex, Rct

ABCD = ("a", "b", "c", "d")
HALF = frozenset(["00"])
PAIR = frozenset(["00", "10"])
FULL = frozenset(["00", "01", "10", "11"])


def sample_codetuple():
    """Three tables, k = 2, 2-bit delay decodable."""
    f = {
        0: {"a": "01", "b": "10", "c": "0100", "d": "01"},
        1: {"a": "00", "b": "", "c": "00111", "d": "00111"},
        2: {"a": "1100", "b": "1110", "c": "111000", "d": "110"},
    }
    tau = {
        0: {"a": 0, "b": 1, "c": 0, "d": 2},
        1: {"a": 1, "b": 0, "c": 1, "d": 2},
        2: {"a": 1, "b": 2, "c": 2, "d": 2},
    }
    return CodeTuple(2, ABCD, (0, 1, 2), f, tau)


def sample_rct():
    s = lambda *b: frozenset(b)
    f = {
        HALF: {"a": "001", "b": "000", "c": "00", "d": "001"},
        PAIR: {"a": "1", "b": "1001", "c": "", "d": "1000"},
        FULL: {"a": "1", "b": "1", "c": "100", "d": "0"},
    }
    tau = {
        HALF: {"a": s("01", "10"), "b": s("00"), "c": s("01"), "d": s("00", "11")},
        PAIR: {"a": s("01"), "b": FULL, "c": s("00"), "d": FULL},
        FULL: {"a": s("01", "10"), "b": s("11"), "c": FULL, "d": FULL},
    }
    return Rct(2, ABCD, (HALF, PAIR, FULL), f, tau)


def sample_seed():
    return ExpandedIndex(FULL, PhiMap.parse("000"))


def mirror_pair():
    """Table 1 is table 0 with the first bit of every codeword flipped."""
    f = {0: {"a": "0", "b": "01", "c": "01"}, 1: {"a": "1", "b": "11", "c": "11"}}
    tau = {0: {"a": 0, "b": 0, "c": 1}, 1: {"a": 0, "b": 0, "c": 1}}
    return CodeTuple(1, ("a", "b", "c"), (0, 1), f, tau)


def all_empty(k=1):
    f = {0: {"a": "", "b": ""}}
    tau = {0: {"a": 0, "b": 0}}
    return CodeTuple(k, ("a", "b"), (0,), f, tau)


UNIFORM4 = uniform(ABCD)
DYADIC3 = {"a": Fraction(1, 2), "b": Fraction(1, 4), "c": Fraction(1, 4)}
