"""Streaming encoder and decoder that run directly on an RCT.

Neither side builds the expanded tuple: the state is an ``ExpandedIndex``
updated one symbol at a time.  The decoder un-maps only as many bits as the
candidate it is testing needs (codeword length plus ``k``).
"""

from functools import lru_cache

from .bits import check
from .codetuple import pref_sets
from .errors import CorruptInputError, DomainError, FlushError, FormatError, InvalidCodeError
from .orbit import format_subset
from .phi import PhiMap, apply, invert
from .rct import ExpandedIndex, expand_index_step, expanded_tuple, reachable_states


@lru_cache(maxsize=4096)
def true_prefixes(R, state):
    """Exact P^k of the expanded machine at ``state``."""
    states = reachable_states(R, state)
    return pref_sets(expanded_tuple(R, states))[state]


@lru_cache(maxsize=4096)
def _inverse(phi):
    return invert(phi)


def flush(R, state):
    """Smallest k-bit tail in P^k at ``state`` that no empty codeword claims."""
    inv = _inverse(state.phi)
    blocked = set()
    for s in R.alphabet:
        if R.f[state.A][s] == "":
            blocked |= R.tau[state.A][s]
    tails = sorted(c for c in true_prefixes(R, state) if apply(inv, c) not in blocked)
    if not tails:
        raise FlushError(f"no unambiguous {R.k}-bit tail at {state.label()}")
    return tails[0]


class Encoder:
    def __init__(self, R, start):
        if start.A not in R.f:
            raise DomainError(f"{format_subset(start.A)} is not in the domain")
        self.rct = R
        self.state = start
        self.bits_emitted = 0

    def push(self, s):
        bits, self.state = expand_index_step(self.rct, self.state, s)
        self.bits_emitted += len(bits)
        return bits

    def push_all(self, x):
        return "".join(self.push(s) for s in x)

    def finish(self):
        tail = flush(self.rct, self.state)
        self.bits_emitted += len(tail)
        return tail


class Decoder:
    def __init__(self, R, start):
        if start.A not in R.f:
            raise DomainError(f"{format_subset(start.A)} is not in the domain")
        self.rct = R
        self.state = start
        self.buffer = ""
        self.consumed = 0
        self._idle = {start}
        self._lookahead = R.k + R.max_len()

    def _match(self):
        R, A, k = self.rct, self.state.A, self.rct.k
        inv = _inverse(self.state.phi)
        hits = []
        for s in R.alphabet:
            w = R.f[A][s]
            n = len(w) + k
            if n > len(self.buffer):
                continue
            b = apply(inv, self.buffer[:n])
            if b.startswith(w) and b[len(w):] in R.tau[A][s]:
                hits.append(s)
        if len(hits) > 1:
            raise InvalidCodeError(f"symbols {hits} all match at bit {self.consumed}")
        return hits[0] if hits else None

    def _run(self, final):
        out = []
        while True:
            if not final and len(self.buffer) < self._lookahead:
                break
            s = self._match()
            if s is None:
                break
            out.append(s)
            bits, self.state = expand_index_step(self.rct, self.state, s)
            self.buffer = self.buffer[len(bits):]
            self.consumed += len(bits)
            if bits:
                self._idle = {self.state}
            elif self.state in self._idle:
                raise InvalidCodeError("empty codewords cycle without consuming input")
            else:
                self._idle.add(self.state)
        return out

    def feed(self, bits):
        """Add input; return the symbols that are already certain."""
        self.buffer += check(bits)
        return self._run(final=False)

    def finish(self):
        out = self._run(final=True)
        if len(self.buffer) != self.rct.k:
            raise CorruptInputError(
                f"{len(self.buffer)} bits left over, expected {self.rct.k}", self.consumed)
        return out


def encode(R, start, x, with_tail=False):
    enc = Encoder(R, start)
    bits = enc.push_all(x)
    return bits + enc.finish() if with_tail else bits


def encode_with_state(R, start, x):
    enc = Encoder(R, start)
    bits = enc.push_all(x)
    return bits, enc.state


def decode(R, start, b):
    dec = Decoder(R, start)
    out = dec.feed(b)
    return out + dec.finish()


def format_header(k, start):
    return f"k={k} start={format_subset(start.A)}|{start.phi}"


def parse_header(line):
    parts = dict(p.split("=", 1) for p in line.split() if "=" in p)
    if set(parts) != {"k", "start"} or len(line.split()) != 2 or not parts["k"].isdigit():
        raise FormatError(f"bad stream header {line!r}", "header")
    k = int(parts["k"])
    subset, _, phi = parts["start"].partition("|")
    if not (subset.startswith("{") and subset.endswith("}")):
        raise FormatError(f"bad start subset {subset!r}", "header")
    body = subset[1:-1]
    A = frozenset(body.split(",")) if body else frozenset()
    try:
        return k, ExpandedIndex(A, PhiMap.parse(phi, k))
    except DomainError as e:
        raise FormatError(str(e), "header") from None
