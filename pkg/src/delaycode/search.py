"""Exhaustive search for the best 1-bit delay RCT, and a Huffman reference.

With ``k = 1`` the inequivalent non-empty subsets are {0} and {0,1}, and a
transition into {0}'s class may point at {0} or {1}.  Compliance and
decodability only involve one table at a time, so valid tables are listed
once per (alphabet size, max length).  For a given distribution only the
cheapest table per pattern of cross-class transitions can be optimal, which
keeps the pairing step tiny.
"""

import heapq
from fractions import Fraction
from functools import lru_cache
from itertools import count, product

from ._guard import guard
from .bits import strings_up_to
from .errors import DomainError
from .rct import Rct, validate

MAX_LEN = 4
MAX_SYMBOLS = 3

HALF = frozenset(["0"])
FULL = frozenset(["0", "1"])
TARGETS = {HALF: (frozenset(["0"]), frozenset(["1"])), FULL: (FULL,)}


def huffman_length(probs):
    """Average codeword length of a binary Huffman code (exact)."""
    probs = [Fraction(p) for p in probs]
    if len(probs) < 2:
        return Fraction(0)
    tie = count()
    heap = [(p, next(tie)) for p in probs]
    heapq.heapify(heap)
    total = Fraction(0)
    while len(heap) > 1:
        a, _ = heapq.heappop(heap)
        b, _ = heapq.heappop(heap)
        total += a + b
        heapq.heappush(heap, (a + b, next(tie)))
    return total


def _table_ok(A, words, targets):
    got = set()
    for w, T in zip(words, targets):
        got |= {w[0]} if w else T
    if got != A:
        return False
    n = len(words)
    for i in range(n):
        w, T = words[i], targets[i]
        for j in range(n):
            v = words[j]
            if len(v) > len(w) and v.startswith(w) and v[len(w)] in T:
                return False
            if j > i and v == w and T & targets[j]:
                return False
    return True


@lru_cache(maxsize=None)
def valid_tables(A, n_symbols, max_len):
    """Every compliant, decodable table for ``A`` as (words, targets)."""
    words = strings_up_to(max_len)
    out = []
    options = [(w, T) for w in words for T in TARGETS[HALF] + TARGETS[FULL]]
    for combo in product(options, repeat=n_symbols):
        ws = tuple(c[0] for c in combo)
        ts = tuple(c[1] for c in combo)
        if _table_ok(A, ws, ts):
            out.append((ws, ts))
    return out


def _cheapest(A, mu, max_len, allowed_cross):
    """For each cross-class pattern, the table with least expected length."""
    best = {}
    for ws, ts in valid_tables(A, len(mu), max_len):
        cross = tuple((T == FULL) != (A == FULL) for T in ts)
        if not allowed_cross and any(cross):
            continue
        L = sum((len(w) * p for w, p in zip(ws, mu)), Fraction(0))
        if cross not in best or L < best[cross][0]:
            best[cross] = (L, ws, ts)
    return best


def micro_search(mu, max_len=3, alphabet=None):
    """Minimum average length over valid RCTs with k = 1.

    Returns ``(L, rct)``; ``mu`` is a sequence of probabilities.
    """
    mu = [Fraction(p) for p in mu]
    n = len(mu)
    if n < 2:
        raise DomainError("need at least two symbols")
    if sum(mu) != 1 or any(not 0 < p < 1 for p in mu):
        raise DomainError("mu must be a probability vector with entries in (0,1)")
    guard(n <= MAX_SYMBOLS and max_len <= MAX_LEN,
          f"micro-search is limited to {MAX_SYMBOLS} symbols and length {MAX_LEN}")
    alphabet = tuple(alphabet or "abcdefgh"[:n])
    candidates = []
    for A in (HALF, FULL):
        for L, ws, ts in _cheapest(A, mu, max_len, False).values():
            candidates.append((L, ((A, ws, ts),)))
    half = _cheapest(HALF, mu, max_len, True)
    full = _cheapest(FULL, mu, max_len, True)
    for (Lh, wh, th), (Lf, wf, tf) in product(half.values(), full.values()):
        qh = sum((p for p, T in zip(mu, th) if T == FULL), Fraction(0))
        qf = sum((p for p, T in zip(mu, tf) if T != FULL), Fraction(0))
        if qh + qf == 0:
            continue
        L = (qf * Lh + qh * Lf) / (qh + qf)
        candidates.append((L, ((HALF, wh, th), (FULL, wf, tf))))
    L, tables = min(candidates, key=lambda c: (c[0], len(c[1])))
    R = Rct(1, alphabet, tuple(t[0] for t in tables),
            {A: dict(zip(alphabet, ws)) for A, ws, _ in tables},
            {A: dict(zip(alphabet, ts)) for A, _, ts in tables})
    rep = validate(R, dict(zip(alphabet, mu)))
    if not rep.ok or rep.L != L:
        raise AssertionError("micro-search winner failed re-validation")
    return L, R
