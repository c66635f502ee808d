"""One test per acceptance criterion.  Each records a PASS/FAIL line that is
printed at the end of the run (see conftest.py) and also echoed to stdout."""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from delaycode.bits import strings_up_to
from delaycode.cli import OK, main
from delaycode.codec import Encoder, decode, encode
from delaycode.codetuple import f_star, markov_analyze, pref_sets, uniform
from delaycode.io import rct_from_json
from delaycode.orbit import count_classes, count_classes_restricted
from delaycode.phi import PhiMap, all_maps, apply, compose, identity, invert
from delaycode.rct import (ExpandedIndex, direct_realization, expand_minimal,
                           expanded_f_star, pref_bar_rct, pref_set_rct,
                           validate)
from delaycode.reduce import to_rct
from delaycode.samples import (FULL, HALF, PAIR, mirror_pair, sample_codetuple,
                               sample_rct, sample_seed)

from oracles import (check_calculus, huffman_by_lengths, orbit_count_by_maps,
                     orbit_count_by_union_find, prefixes_by_search,
                     random_codetuple, random_good_codetuple, random_mu,
                     random_valid_rct, star_from_map, tree_maps)

RESULTS = {}

CLASS_COUNTS = [2, 3, 6, 21, 231, 26796, 359026206, 64449908476890321]
RESTRICTED_COUNTS = [1, 3, 15, 210, 26565, 358999410, 64449908117864115]


@contextmanager
def criterion(n, name):
    t0 = time.perf_counter()
    RESULTS[n] = f"[{n:2d}] FAIL  {name}"
    yield
    line = f"[{n:2d}] PASS  {name} ({time.perf_counter() - t0:.2f}s)"
    RESULTS[n] = line
    print(line)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def s(*b):
    return frozenset(b)


def test_01_orbit_counts():
    with criterion(1, "orbit counts and brute force"):
        for k, want in enumerate(CLASS_COUNTS):
            got, dt = timed(count_classes, k)
            assert got == want and dt < 1e-3
        for k, want in enumerate(RESTRICTED_COUNTS, start=1):
            got, dt = timed(count_classes_restricted, k)
            assert got == want and dt < 1e-3
        for k in range(3):
            assert orbit_count_by_maps(k) == CLASS_COUNTS[k]
        got, dt = timed(orbit_count_by_maps, 3)
        assert got == 21 and dt < 1
        got, dt = timed(orbit_count_by_union_find, 4)
        assert got == 231 and dt < 30


def test_02_golden_traces():
    with criterion(2, "golden traces"):
        F1, R3, seed = sample_codetuple(), sample_rct(), sample_seed()
        assert f_star(F1, 0, "badb") == "1000001111110"
        assert encode(R3, seed, "acdb") == "10111101"
        assert decode(R3, seed, "1011110100") == list("acdb")
        assert PhiMap.parse("101")("1001") == "0101"
        assert PhiMap.parse("010")("001") == "011"
        enc = Encoder(R3, seed)
        steps = []
        for x in "acdb":
            enc.push(x)
            steps.append(enc.state)
        assert steps == [
            ExpandedIndex(PAIR, PhiMap.parse("010")),
            ExpandedIndex(HALF, PhiMap.parse("010")),
            ExpandedIndex(PAIR, PhiMap.parse("001")),
            ExpandedIndex(FULL, PhiMap.parse("000")),
        ]


def test_03_table_iv():
    with criterion(3, "prefix-set table of the sample RCT"):
        R3 = sample_rct()
        E = frozenset()
        table = {
            HALF: [E, E, s("00", "10", "11"), E],
            PAIR: [s("00"), E, s("10"), E],
            FULL: [s("00"), s("00"), E, E],
        }
        for A, row in table.items():
            assert pref_set_rct(R3, A) == A
            for sym, want in zip("abcd", row):
                assert pref_bar_rct(R3, A, R3.f[A][sym]) == want
        assert pref_bar_rct(R3, HALF, R3.f[HALF]["c"]) == s("00", "10", "11")


def test_04_phi_calculus():
    with criterion(4, "Phi_k calculus at k = 2 and k = 3"):
        t0 = time.perf_counter()
        direct = tree_maps(2, 5)
        assert len(direct) == 8
        for m in direct:
            phi = star_from_map(m, 2)
            assert all(apply(phi, b) == m[b] for b in strings_up_to(5))
        short = strings_up_to(3)
        maps2 = all_maps(2)
        for phi in maps2:
            for psi in maps2:
                check_calculus(phi, psi, short, short)
        for k, maps in [(1, all_maps(1)), (2, maps2)]:
            e = identity(k)
            group = set(maps)
            for phi in maps:
                assert compose(phi, e) == phi == compose(e, phi)
                assert compose(phi, invert(phi)) == e
                for psi in maps:
                    assert compose(phi, psi) in group
                    for chi in maps:
                        assert compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi))
        rng = random.Random(4)
        maps3 = all_maps(3)
        assert len(maps3) == 128
        e3 = identity(3)
        longer = strings_up_to(5)
        for _ in range(1000):
            phi, psi, chi = (rng.choice(maps3) for _ in range(3))
            check_calculus(phi, psi, [rng.choice(short)], [rng.choice(longer)])
            assert compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi))
            assert compose(phi, invert(phi)) == e3 == compose(invert(phi), phi)
            assert compose(phi, e3) == phi
        assert time.perf_counter() - t0 < 10


def test_05_fixpoint_vs_search():
    with criterion(5, "prefix sets against search on 200 random tuples"):
        t0 = time.perf_counter()
        rng = random.Random(5)
        for _ in range(200):
            k = rng.randint(0, 2)
            F = random_codetuple(rng, k, rng.randint(2, 3), rng.randint(1, 3), 3, empty_weight=4)
            P = pref_sets(F)
            for i in F.domain:
                assert P[i] == prefixes_by_search(F, i, k)
        assert time.perf_counter() - t0 < 30


def test_06_markov():
    with criterion(6, "exact stationary distribution and average length"):
        rep = markov_analyze(sample_codetuple(), uniform("abcd"))
        assert rep.pi == (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2))
        assert rep.L == Fraction(85, 24)
        rng = random.Random(6)
        done = 0
        while done < 200:
            F = random_codetuple(rng, rng.randint(1, 2), rng.randint(2, 3), rng.randint(1, 4), 3)
            rep = markov_analyze(F, random_mu(rng, F.alphabet))
            if not rep.regular:
                continue
            n = len(F.domain)
            assert sum(rep.pi) == 1
            for c in range(n):
                assert sum(rep.pi[r] * rep.Q[r][c] for r in range(n)) == rep.pi[c]
            done += 1


def test_07_roundtrip():
    with criterion(7, "encode/decode roundtrip on 500 random RCTs"):
        t0 = time.perf_counter()
        rng = random.Random(7)
        for n in range(500):
            k = n % 3 + 1
            R = random_valid_rct(rng, k, max_symbols=4, max_len=4)
            start = ExpandedIndex(rng.choice(R.domain), rng.choice(all_maps(k)))
            x = [rng.choice(R.alphabet) for _ in range(rng.randint(0, 50))]
            assert decode(R, start, encode(R, start, x, with_tail=True)) == x
        assert time.perf_counter() - t0 < 60


def test_08_reduction():
    with criterion(8, "reduction contract on 100 random tuples and the mirror pair"):
        rng = random.Random(8)
        for n in range(100):
            k = n % 2 + 1
            F = random_good_codetuple(rng, k, max_symbols=3, max_len=4)
            mu = random_mu(rng, F.alphabet)
            L = markov_analyze(F, mu).L
            R, trace = to_rct(F, mu)
            rep = validate(R, mu)
            assert rep.compliant and rep.extendable and rep.k_dec and rep.regular
            assert rep.L <= L
            assert trace.monotone()
            assert len(R.domain) <= count_classes(k)
            assert markov_analyze(expand_minimal(R), mu).L == rep.L
        M = mirror_pair()
        mu = uniform(M.alphabet)
        R, _ = to_rct(M, mu)
        assert len(R.domain) == 1
        assert validate(R, mu).L == markov_analyze(M, mu).L


def test_09_length_invariance():
    with criterion(9, "expanded lengths match the direct realization"):
        R3 = sample_rct()
        D = direct_realization(R3)
        rng = random.Random(9)
        for _ in range(100):
            x = [rng.choice(R3.alphabet) for _ in range(rng.randint(0, 30))]
            for A in R3.domain:
                want = len(f_star(D, A, x))
                for phi in all_maps(2):
                    assert len(expanded_f_star(R3, ExpandedIndex(A, phi), x)[0]) == want


def test_10_huffman_at_k1(tmp_path, capsys):
    with criterion(10, "micro-search equals Huffman at k = 1"):
        t0 = time.perf_counter()
        rng = random.Random(10)
        for n in range(20):
            size = rng.choice([2, 3])
            mu = list(random_mu(rng, "abc"[:size], denom=rng.choice([5, 7, 12, 16])).values())
            out = tmp_path / f"best{n}.json"
            arg = json.dumps([[p.numerator, p.denominator] for p in mu])
            assert main(["micro-search", "--mu", arg, "--max-len", "3", "-o", str(out)]) == OK
            assert "match: yes" in capsys.readouterr().out
            best, _ = rct_from_json(json.loads(out.read_text()))
            assert validate(best, dict(zip(best.alphabet, mu))).L == huffman_by_lengths(mu)
        assert time.perf_counter() - t0 < 300
