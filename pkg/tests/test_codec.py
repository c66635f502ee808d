import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delaycode.codec import (Decoder, Encoder, decode, encode, flush,
                             format_header, parse_header, true_prefixes)
from delaycode.codetuple import f_star
from delaycode.errors import (CorruptInputError, DomainError, FlushError, FormatError,
                              InvalidCodeError)
from delaycode.phi import PhiMap, all_maps, apply, invert
from delaycode.rct import ExpandedIndex, Rct, expand_all, expanded_f_star
from delaycode.samples import FULL, HALF, PAIR, sample_rct, sample_seed

from oracles import random_valid_rct

R3 = sample_rct()
SEED = sample_seed()


def phi(bits):
    return PhiMap.parse(bits)


def test_encode_worked():
    assert encode(R3, SEED, "acdb") == "10111101"
    assert encode(R3, SEED, "") == ""
    assert encode(R3, ExpandedIndex(HALF, phi("010")), "d") == "011"
    assert encode(R3, SEED, "acdb", with_tail=True) == "1011110100"


def test_encoder_state_trace():
    enc = Encoder(R3, SEED)
    states = []
    for x in "acdb":
        enc.push(x)
        states.append(enc.state)
    assert states == [
        ExpandedIndex(PAIR, phi("010")),
        ExpandedIndex(HALF, phi("010")),
        ExpandedIndex(PAIR, phi("001")),
        ExpandedIndex(FULL, phi("000")),
    ]
    assert enc.bits_emitted == 8


def test_flush_worked():
    assert flush(R3, SEED) == "00"
    single = Rct(2, "ab", (HALF,), {HALF: {"a": "0", "b": "1"}}, {HALF: {"a": HALF, "b": HALF}})
    assert flush(single, ExpandedIndex(HALF, phi("000"))) == "00"


def _prefixes_by_enumeration(R, state, k, depth=6):
    out = set()
    for n in range(depth + 1):
        for x in product(R.alphabet, repeat=n):
            b, _ = expanded_f_star(R, state, x)
            if len(b) >= k:
                out.add(b[:k])
    return out


def test_flush_is_a_true_prefix():
    st = ExpandedIndex(PAIR, phi("001"))
    truth = _prefixes_by_enumeration(R3, st, 2)
    assert true_prefixes(R3, st) == truth
    c = flush(R3, st)
    assert c in truth
    # "00" is reachable but would be read as the empty codeword of c
    assert c == "11" and "00" in truth


def test_true_prefixes_all_states():
    for A in R3.domain:
        for p in all_maps(2):
            st = ExpandedIndex(A, p)
            assert true_prefixes(R3, st) == _prefixes_by_enumeration(R3, st, 2, depth=5)


def test_flush_error_on_all_empty_table():
    one, both = frozenset(["0"]), frozenset(["0", "1"])
    R = Rct(1, "ab", (one, both),
            {one: {"a": "0", "b": "00"}, both: {"a": "", "b": ""}},
            {one: {"a": both, "b": one}, both: {"a": one, "b": frozenset(["1"])}})
    with pytest.raises(FlushError):
        flush(R, ExpandedIndex(both, phi("0")))


def test_decode_worked():
    assert decode(R3, SEED, "1011110100") == list("acdb")
    assert decode(R3, SEED, "00") == []


def test_decoder_unmaps_fourth_step():
    st = ExpandedIndex(PAIR, phi("001"))
    assert apply(invert(st.phi), "110100") == "100100"
    assert decode(R3, st, "110100") == ["b"]


def test_decode_errors():
    with pytest.raises(CorruptInputError):
        decode(R3, SEED, "100")
    with pytest.raises(CorruptInputError):
        decode(R3, SEED, "0")
    one = frozenset(["0"])
    bad = Rct(1, "ab", (one,), {one: {"a": "0", "b": "0"}}, {one: {"a": one, "b": one}})
    with pytest.raises(InvalidCodeError):
        decode(bad, ExpandedIndex(one, phi("0")), "00")
    with pytest.raises(DomainError):
        encode(R3, SEED, "az")
    with pytest.raises(DomainError):
        Decoder(R3, ExpandedIndex(frozenset(["11"]), phi("000")))


def test_streaming_matches_batch():
    rng = random.Random(8)
    for _ in range(50):
        x = [rng.choice("abcd") for _ in range(rng.randint(0, 40))]
        start = ExpandedIndex(rng.choice(R3.domain), rng.choice(all_maps(2)))
        b = encode(R3, start, x, with_tail=True)
        dec = Decoder(R3, start)
        out = []
        for bit in b:
            out += dec.feed(bit)
        out += dec.finish()
        assert out == x


def test_encode_agrees_with_expanded_tuple():
    F = expand_all(R3)
    rng = random.Random(9)
    for _ in range(50):
        x = [rng.choice("abcd") for _ in range(rng.randint(0, 30))]
        start = ExpandedIndex(rng.choice(R3.domain), rng.choice(all_maps(2)))
        assert encode(R3, start, x) == f_star(F, start, x)


def test_header_roundtrip():
    line = format_header(2, SEED)
    assert line == "k=2 start={00,01,10,11}|000"
    assert parse_header(line) == (2, SEED)
    for bad in ["k=2", "garbage", "k=x start={00}|000", "k=2 start=00|000", "k=2 start={00}|0"]:
        with pytest.raises(FormatError):
            parse_header(bad)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_roundtrip(seed, k):
    rng = random.Random(seed)
    R = random_valid_rct(rng, k)
    start = ExpandedIndex(rng.choice(R.domain), rng.choice(all_maps(k)))
    for _ in range(3):
        x = [rng.choice(R.alphabet) for _ in range(rng.randint(0, 50))]
        bits, state = expanded_f_star(R, start, x)
        assert encode(R, start, x) == bits
        assert decode(R, start, bits + flush(R, state)) == x


def test_extra_bits_can_form_another_symbol():
    # one more bit after the tail is read as a further "d", not as garbage
    assert decode(R3, SEED, "10111101001") == list("acdbd")
