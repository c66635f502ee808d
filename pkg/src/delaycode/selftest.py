"""Quick reproduction of the built-in worked examples."""

from fractions import Fraction

from .codec import decode, encode, flush
from .codetuple import f_star, markov_analyze, pref_sets, uniform
from .orbit import count_classes, count_classes_restricted
from .phi import PhiMap
from .rct import pref_bar_rct, pref_set_rct, validate
from .samples import FULL, HALF, PAIR, sample_codetuple, sample_rct, sample_seed


def checks():
    F = sample_codetuple()
    R = sample_rct()
    seed = sample_seed()
    rep = markov_analyze(F, uniform(F.alphabet))
    yield "orbit counts", [count_classes(k) for k in range(5)] == [2, 3, 6, 21, 231]
    yield "restricted counts", count_classes_restricted(5) == 26565
    yield "phi_101(1001) = 0101", PhiMap.parse("101")("1001") == "0101"
    yield "f*_0(badb)", f_star(F, 0, "badb") == "1000001111110"
    yield "prefix sets", pref_sets(F) == {0: {"01", "10"}, 1: {"00", "01", "10"}, 2: {"11"}}
    yield "stationary distribution", rep.pi == (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2))
    yield "average length 85/24", rep.L == Fraction(85, 24)
    yield "rct prefix sets", all(pref_set_rct(R, A) == A for A in (HALF, PAIR, FULL))
    yield "rct prefix bar", pref_bar_rct(R, HALF, "00") == {"00", "10", "11"}
    yield "rct flags", validate(R).ok
    yield "encode acdb", encode(R, seed, "acdb") == "10111101"
    yield "flush", flush(R, seed) == "00"
    yield "decode", "".join(decode(R, seed, "1011110100")) == "acdb"


def run(report=print):
    ok = True
    for name, passed in checks():
        report(f"{'PASS' if passed else 'FAIL'}  {name}")
        ok &= bool(passed)
    return ok
