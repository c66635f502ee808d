"""Command-line front end.

Exit codes: 0 success, 1 the input was read but a check failed, 2 the input
could not be read.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import codec, io, orbit
from ._guard import guard
from .codetuple import (is_extendable, is_k_dec, is_regular, markov_analyze,
                        potentials)
from .errors import (CorruptInputError, DelayCodeError, FormatError,
                     NotRegularError, ResourceError)
from .phi import all_maps, apply_set, identity
from .rct import ExpandedIndex, direct_realization, expand_minimal, validate
from .reduce import to_rct
from .search import huffman_length, micro_search

OK, FAIL, BAD_INPUT = 0, 1, 2
VERIFY_MAX_K = 3


def show(x):
    """``85/24 (3.541667)``"""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x} ({float(x):.6f})"


def _id(i):
    if isinstance(i, frozenset):
        return orbit.format_subset(i)
    if hasattr(i, "label"):
        return i.label()
    return str(i)


def _detect_kind(doc, kind):
    if kind != "auto":
        return kind
    tables = doc.get("tables") if isinstance(doc, dict) else None
    if tables and isinstance(tables[0], dict) and "A" in tables[0]:
        return "rct"
    return "codetuple"


def _load(path, kind="auto"):
    doc = io.load_json(path)
    kind = _detect_kind(doc, kind)
    if kind == "rct":
        R, mu = io.rct_from_json(doc)
        return kind, R, mu
    F, mu = io.codetuple_from_json(doc)
    return kind, F, mu


def _mu(arg, file_mu, alphabet):
    if arg is not None:
        try:
            obj = json.loads(arg) if arg != "uniform" else "uniform"
        except json.JSONDecodeError as e:
            raise FormatError(e.msg, "--mu") from None
        return io.parse_mu(obj, alphabet)
    if file_mu is not None:
        return file_mu
    return io.parse_mu("uniform", alphabet)


def _write(text, path):
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# orbits

def _brute_classes(k):
    """Group every subset by explicitly applying all of Phi_k."""
    maps = all_maps(k)
    seen = set()
    classes = 0
    for A in orbit.all_subsets(k):
        if A in seen:
            continue
        classes += 1
        for phi in maps:
            seen.add(apply_set(phi, A))
    return classes


def cmd_orbits(args):
    k, mode = args.k, args.mode
    if mode == "count":
        print(orbit.count_classes(k))
    elif mode == "count-restricted":
        print(orbit.count_classes_restricted(k))
    elif mode == "enumerate":
        for A in orbit.enumerate_classes(k):
            print(orbit.format_subset(A))
    else:
        guard(k <= VERIFY_MAX_K, f"verify is limited to k <= {VERIFY_MAX_K}")
        expected = orbit.count_classes(k)
        got = _brute_classes(k)
        canon = len({orbit.canonicalize(A, k).canon for A in orbit.all_subsets(k)})
        if got == expected == canon:
            print(f"OK: {expected} classes, brute-force agrees")
        else:
            print(f"MISMATCH: recurrence {expected}, brute force {got}, canonical forms {canon}")
            return FAIL
    return OK


# validate / analyze

def _flag(name, value):
    print(f"{name}: {'true' if value else 'false'}")


def cmd_validate(args):
    kind, obj, mu = _load(args.path, args.kind)
    if kind == "rct":
        rep = validate(obj, mu)
        for name in ("compliant", "extendable", "k_dec", "regular"):
            _flag(name, getattr(rep, name))
        for v in rep.violations:
            print("  violation:", v[0], " ".join(_id(x) for x in v[1:]))
        if rep.L is not None:
            print("L~ =", show(rep.L))
        return OK if rep.ok else FAIL
    F = obj
    ext = is_extendable(F)
    dec, bad = is_k_dec(F)
    reg = is_regular(F)
    _flag("extendable", ext)
    _flag("k_dec", dec)
    for v in bad:
        print("  violation:", " ".join(_id(x) for x in v))
    _flag("regular", reg)
    return OK if ext and dec and reg else FAIL


def cmd_analyze(args):
    kind, obj, file_mu = _load(args.path, args.kind)
    F = direct_realization(obj) if kind == "rct" else obj
    mu = _mu(args.mu, file_mu, F.alphabet)
    rep = markov_analyze(F, mu)
    names = [_id(i) for i in F.domain]
    print("tables:", " ".join(names))
    print("Q:")
    for name, row in zip(names, rep.Q):
        print(f"  {name}: " + " ".join(str(q) for q in row))
    for i, name in zip(F.domain, names):
        print(f"L[{name}] = {show(rep.L_tables[i])}")
    if not rep.regular:
        print("not regular: no table is reachable from every table")
        return FAIL
    for p, name in zip(rep.pi, names):
        print(f"pi[{name}] = {show(p)}")
    print(("L~ = " if kind == "rct" else "L = ") + show(rep.L))
    if args.potentials:
        for i, v in potentials(F, mu).items():
            print(f"h[{_id(i)}] = {show(v)}")
    return OK


# reduce / expand

def cmd_reduce(args):
    kind, F, file_mu = _load(args.path, "codetuple")
    mu = _mu(args.mu, file_mu, F.alphabet)
    L0 = markov_analyze(F, mu).L
    R, trace = to_rct(F, mu)
    rep = validate(R, mu)
    print("L before =", show(L0))
    print("L after  =", show(rep.L))
    print("tables:", " ".join(_id(A) for A in R.domain))
    _write(io.dump_json(io.rct_to_json(R, mu)), args.output)
    if args.trace:
        io.dump_json(trace.to_json(), args.trace)
    return OK if rep.ok and rep.L <= L0 else FAIL


def cmd_expand(args):
    kind, R, file_mu = _load(args.path, "rct")
    seed = io.parse_seed(args.seed, R.k) if args.seed else None
    F = expand_minimal(R, seed)
    mu = _mu(args.mu, file_mu, R.alphabet)
    Lr = validate(R, mu).L
    L = markov_analyze(F, mu).L
    print("L~ (rct)      =", show(Lr))
    print("L (expanded)  =", show(L))
    print("tables:", len(F))
    _write(io.dump_json(io.codetuple_to_json(F, mu)), args.output)
    return OK if L == Lr else FAIL


# encode / decode

def _symbols(text, alphabet):
    if all(len(s) == 1 for s in alphabet):
        return [c for c in text if not c.isspace()]
    return text.split()


def _join(symbols, alphabet):
    sep = "" if all(len(s) == 1 for s in alphabet) else " "
    return sep.join(symbols)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(e.strerror or str(e), path) from None


def cmd_encode(args):
    kind, R, _ = _load(args.path, "rct")
    seed = io.parse_seed(args.seed, R.k) if args.seed else ExpandedIndex(R.domain[0], identity(R.k))
    x = _symbols(_read_text(args.payload), R.alphabet)
    bits = codec.encode(R, seed, x, with_tail=True)
    _write(codec.format_header(R.k, seed) + "\n" + bits + "\n", args.output)
    return OK


def cmd_decode(args):
    kind, R, _ = _load(args.path, "rct")
    lines = _read_text(args.stream).splitlines()
    if not lines:
        raise FormatError("empty stream", args.stream)
    k, seed = codec.parse_header(lines[0])
    if k != R.k:
        raise FormatError(f"stream has k={k} but the RCT has k={R.k}", args.stream)
    bits = "".join(lines[1:]).strip()
    x = codec.decode(R, seed, bits)
    _write(_join(x, R.alphabet) + "\n", args.output)
    return OK


# micro-search

def cmd_micro_search(args):
    if args.k != 1:
        raise ResourceError("micro-search only supports k = 1")
    try:
        obj = json.loads(args.mu)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, "--mu") from None
    if not isinstance(obj, list):
        raise FormatError("--mu must be a JSON list of fractions", "--mu")
    mu = [io.parse_fraction(v, f"mu[{n}]") for n, v in enumerate(obj)]
    L, R = micro_search(mu, args.max_len)
    H = huffman_length(mu)
    print("best L~ =", show(L))
    print("huffman =", show(H))
    print("match:", "yes" if L == H else "no")
    _write(io.dump_json(io.rct_to_json(R)), args.output)
    return OK if L == H else FAIL


def cmd_selftest(args):
    from .selftest import run
    return OK if run(print) else FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="delaycode", description="k-bit delay decodable code-tuples and RCTs")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("orbits", help="count or list subset classes")
    q.add_argument("k", type=int)
    q.add_argument("--mode", choices=["count", "count-restricted", "enumerate", "verify"], default="count")
    q.set_defaults(func=cmd_orbits)

    q = sub.add_parser("validate", help="check the decodability flags of a file")
    q.add_argument("path")
    q.add_argument("--kind", choices=["auto", "codetuple", "rct"], default="auto")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("analyze", help="transition matrix, stationary distribution, average length")
    q.add_argument("path")
    q.add_argument("--kind", choices=["auto", "codetuple", "rct"], default="auto")
    q.add_argument("--mu", help='JSON, e.g. \'{"a": [1, 2], "b": "1/2"}\', or "uniform"')
    q.add_argument("--potentials", action="store_true")
    q.set_defaults(func=cmd_analyze)

    q = sub.add_parser("reduce", help="code-tuple to RCT")
    q.add_argument("path")
    q.add_argument("-o", "--output")
    q.add_argument("--mu")
    q.add_argument("--trace", help="write the reduction trace as JSON")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("expand", help="RCT to a minimal code-tuple")
    q.add_argument("path")
    q.add_argument("--seed", help='start index, e.g. "{00,01,10,11}|000"')
    q.add_argument("-o", "--output")
    q.add_argument("--mu")
    q.set_defaults(func=cmd_expand)

    q = sub.add_parser("encode", help="encode a payload with an RCT")
    q.add_argument("path")
    q.add_argument("payload", help="payload file, or - for stdin")
    q.add_argument("--seed")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_encode)

    q = sub.add_parser("decode", help="decode a stream produced by encode")
    q.add_argument("path")
    q.add_argument("stream", help="stream file, or - for stdin")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_decode)

    q = sub.add_parser("micro-search", help="best 1-bit delay RCT versus Huffman")
    q.add_argument("--mu", required=True, help='JSON list, e.g. "[[1,2],[1,4],[1,4]]"')
    q.add_argument("--k", type=int, default=1)
    q.add_argument("--max-len", type=int, default=3)
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_micro_search)

    q = sub.add_parser("selftest", help="reproduce the built-in worked examples")
    q.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        return args.func(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT
    except CorruptInputError as e:
        print(f"error: corrupt stream: {e}", file=sys.stderr)
        return FAIL
    except (NotRegularError, ResourceError, DelayCodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
