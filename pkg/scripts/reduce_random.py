"""Reduce random valid code-tuples to RCTs and report the length change.

Each tuple is regular, extendable and k-bit delay decodable.  The script
prints one line per tuple and a summary of how often merges helped.
"""

import argparse
import random
from fractions import Fraction

from delaycode.codetuple import (CodeTuple, is_extendable, is_k_dec,
                                 is_regular, markov_analyze)
from delaycode.orbit import count_classes
from delaycode.rct import expand_minimal, validate
from delaycode.reduce import to_rct


def random_tuple(rng, k, n_symbols, n_tables, max_len):
    alphabet = tuple("abcdefgh"[:n_symbols])
    words = [format(v, f"0{n}b") if n else "" for n in range(max_len + 1) for v in range(1 << n)]
    f = {i: {s: rng.choice(words) for s in alphabet} for i in range(n_tables)}
    tau = {i: {s: rng.randrange(n_tables) for s in alphabet} for i in range(n_tables)}
    return CodeTuple(k, alphabet, tuple(range(n_tables)), f, tau)


def random_good(rng, k, max_symbols, max_tables, max_len):
    while True:
        F = random_tuple(rng, k, rng.randint(2, max_symbols), rng.randint(1, max_tables), max_len)
        if is_extendable(F) and is_regular(F) and is_k_dec(F)[0]:
            return F


def random_mu(rng, alphabet, denom):
    cuts = sorted(rng.sample(range(1, denom), len(alphabet) - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [denom])]
    return {s: Fraction(p, denom) for s, p in zip(alphabet, parts)}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("-n", type=int, default=20)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-symbols", type=int, default=3)
    p.add_argument("--max-tables", type=int, default=3)
    p.add_argument("--max-len", type=int, default=4)
    args = p.parse_args()

    rng = random.Random(args.seed)
    better = 0
    for n in range(args.n):
        F = random_good(rng, args.k, args.max_symbols, args.max_tables, args.max_len)
        mu = random_mu(rng, F.alphabet, 12)
        L = markov_analyze(F, mu).L
        R, trace = to_rct(F, mu)
        rep = validate(R, mu)
        assert rep.ok and rep.L <= L and len(R.domain) <= count_classes(args.k)
        assert markov_analyze(expand_minimal(R), mu).L == rep.L
        merges = sum(st.kind == "merge" for st in trace.steps)
        better += rep.L < L
        print(f"{n:3d}  tables {len(F.domain)} -> {len(R.domain)}  merges {merges}  "
              f"L {L} -> {rep.L}")
    print(f"{better}/{args.n} reductions shortened the average length")


if __name__ == "__main__":
    main()
