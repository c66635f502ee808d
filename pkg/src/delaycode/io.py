"""JSON documents for code-tuples, RCTs and source distributions.

Subset ids are written as sorted lists of bit strings.  Expanded indices
become labels such as ``"{00,10}:101"``.
"""

import json
from fractions import Fraction

from .codetuple import CodeTuple, source_dist
from .errors import DelayCodeError, FormatError
from .orbit import format_subset
from .phi import PhiMap
from .rct import ExpandedIndex, Rct


def parse_fraction(v, where="mu"):
    if isinstance(v, bool) or isinstance(v, float):
        raise FormatError("probabilities must be exact, e.g. [1, 4] or \"1/4\"", where)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        if v[1] == 0:
            raise FormatError("zero denominator", where)
        return Fraction(v[0], v[1])
    if isinstance(v, str) and v.count("/") <= 1 and v.replace("/", "").lstrip("-").isdigit():
        try:
            return Fraction(v)
        except ZeroDivisionError:
            raise FormatError("zero denominator", where) from None
    raise FormatError(f"cannot read {v!r} as an exact fraction", where)


def parse_mu(obj, alphabet):
    if obj == "uniform":
        return {s: Fraction(1, len(alphabet)) for s in alphabet}
    if isinstance(obj, list):
        if len(obj) != len(alphabet):
            raise FormatError("mu list length differs from the alphabet", "mu")
        obj = dict(zip(alphabet, obj))
    if not isinstance(obj, dict):
        raise FormatError("mu must be an object, a list or \"uniform\"", "mu")
    probs = {s: parse_fraction(v, f"mu.{s}") for s, v in obj.items()}
    try:
        return source_dist(probs, alphabet)
    except DelayCodeError as e:
        raise FormatError(str(e), "mu") from None


def mu_to_json(mu):
    return {s: [p.numerator, p.denominator] for s, p in mu.items()}


def _id_in(v, where):
    if isinstance(v, list):
        if not all(isinstance(b, str) for b in v):
            raise FormatError("subset ids must be lists of bit strings", where)
        return frozenset(v)
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return v
    raise FormatError(f"bad table id {v!r}", where)


def _id_out(i):
    if isinstance(i, frozenset):
        return sorted(i)
    if isinstance(i, ExpandedIndex):
        return i.label()
    return i


def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing {key!r}", where)
    v = obj[key]
    if not isinstance(v, kind):
        raise FormatError(f"{key!r} has the wrong type", where)
    return v


def codetuple_from_json(doc):
    k = _need(doc, "k", int, "$")
    alphabet = _need(doc, "alphabet", list, "$")
    tables = _need(doc, "tables", list, "$")
    domain, f, tau = [], {}, {}
    for n, t in enumerate(tables):
        where = f"tables[{n}]"
        i = _id_in(_need(t, "id", (list, str, int), where), where + ".id")
        domain.append(i)
        f[i] = dict(_need(t, "f", dict, where))
        tau[i] = {s: _id_in(v, f"{where}.tau.{s}") for s, v in _need(t, "tau", dict, where).items()}
    try:
        F = CodeTuple(k, tuple(alphabet), tuple(domain), f, tau)
    except DelayCodeError as e:
        raise FormatError(str(e), "$") from None
    mu = parse_mu(doc["mu"], F.alphabet) if "mu" in doc else None
    return F, mu


def codetuple_to_json(F, mu=None):
    doc = {"k": F.k, "alphabet": list(F.alphabet)}
    if mu is not None:
        doc["mu"] = mu_to_json(mu)
    doc["tables"] = [{"id": _id_out(i), "f": dict(F.f[i]),
                      "tau": {s: _id_out(t) for s, t in F.tau[i].items()}} for i in F.domain]
    return doc


def rct_from_json(doc):
    k = _need(doc, "k", int, "$")
    alphabet = _need(doc, "alphabet", list, "$")
    tables = _need(doc, "tables", list, "$")
    domain, f, tau, psi = [], {}, {}, {}
    for n, t in enumerate(tables):
        where = f"tables[{n}]"
        A = frozenset(_need(t, "A", list, where))
        domain.append(A)
        f[A] = dict(_need(t, "f", dict, where))
        tau[A] = {}
        for s, v in _need(t, "tau", dict, where).items():
            if not isinstance(v, list):
                raise FormatError("RCT targets must be lists of bit strings", f"{where}.tau.{s}")
            tau[A][s] = frozenset(v)
        for s, bits in t.get("psi", {}).items():
            try:
                psi[(A, s)] = PhiMap.parse(bits, k)
            except DelayCodeError as e:
                raise FormatError(str(e), f"{where}.psi.{s}") from None
    try:
        R = Rct(k, tuple(alphabet), tuple(domain), f, tau, psi)
    except DelayCodeError as e:
        raise FormatError(str(e), "$") from None
    mu = parse_mu(doc["mu"], R.alphabet) if "mu" in doc else None
    return R, mu


def rct_to_json(R, mu=None):
    doc = {"k": R.k, "alphabet": list(R.alphabet)}
    if mu is not None:
        doc["mu"] = mu_to_json(mu)
    tables = []
    for A in R.domain:
        t = {"A": sorted(A), "f": dict(R.f[A]), "tau": {s: sorted(T) for s, T in R.tau[A].items()}}
        over = {s: str(p) for (B, s), p in R.psi_override.items() if B == A}
        if over:
            t["psi"] = over
        tables.append(t)
    doc["tables"] = tables
    return doc


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, f"{path}:{e.lineno}:{e.colno}") from None
    except OSError as e:
        raise FormatError(e.strerror or str(e), str(path)) from None


def dump_json(doc, path=None):
    text = json.dumps(doc, indent=2) + "\n"
    if path is None or path == "-":
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return text


def parse_subset(text, k=None):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise FormatError(f"subsets are written like {{00,10}}, got {text!r}")
    body = text[1:-1].replace(" ", "")
    return frozenset(body.split(",")) if body else frozenset()


def parse_seed(text, k):
    subset, sep, phi = text.partition("|")
    try:
        return ExpandedIndex(parse_subset(subset), PhiMap.parse(phi, k) if sep else PhiMap(k, (0,) * ((1 << k) - 1)))
    except DelayCodeError as e:
        raise FormatError(str(e), "seed") from None


def format_seed(state):
    return f"{format_subset(state.A)}|{state.phi}"
