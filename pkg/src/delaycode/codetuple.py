"""Code-tuples: a list of code tables, each with a codeword map ``f`` and a
transition map ``tau`` naming the table used for the next symbol.

Table ids are any hashable values (ints, strings, frozensets of bit strings).
Symbol sequences are any iterable of symbol names; a plain ``str`` works when
every symbol is a single character.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .bits import check
from .errors import (CorruptInputError, DomainError, FlushError,
                     InvalidCodeError, NotRegularError, InternalError)
from .graph import bottom_components, reachable
from .linalg import solve


def check_alphabet(alphabet):
    alphabet = tuple(alphabet)
    if len(alphabet) < 2:
        raise DomainError("alphabet needs at least two symbols")
    if len(set(alphabet)) != len(alphabet):
        raise DomainError("alphabet symbols must be distinct")
    return alphabet


def source_dist(probs, alphabet):
    """Validate a probability map and return it as ``{sym: Fraction}``."""
    out = {}
    for s in alphabet:
        if s not in probs:
            raise DomainError(f"no probability for symbol {s!r}")
        p = probs[s]
        if isinstance(p, float):
            raise DomainError("probabilities must be exact rationals, not floats")
        if isinstance(p, (tuple, list)):
            p = Fraction(int(p[0]), int(p[1]))
        p = Fraction(p)
        if not 0 < p < 1:
            raise DomainError(f"probability of {s!r} must lie strictly in (0,1)")
        out[s] = p
    extra = set(probs) - set(alphabet)
    if extra:
        raise DomainError(f"probabilities given for unknown symbols {sorted(extra)}")
    if sum(out.values()) != 1:
        raise DomainError("probabilities do not sum to 1")
    return out


def uniform(alphabet):
    return {s: Fraction(1, len(alphabet)) for s in alphabet}


@dataclass(frozen=True, eq=False)
class CodeTuple:
    k: int
    alphabet: tuple
    domain: tuple
    f: dict
    tau: dict

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "domain", tuple(self.domain))
        if self.k < 0:
            raise DomainError("k must be non-negative")
        if not self.domain:
            raise DomainError("domain must be non-empty")
        if len(set(self.domain)) != len(self.domain):
            raise DomainError("table ids must be distinct")
        ids = set(self.domain)
        for i in self.domain:
            if i not in self.f or i not in self.tau:
                raise DomainError(f"table {i!r} is missing f or tau")
            for s in self.alphabet:
                if s not in self.f[i] or s not in self.tau[i]:
                    raise DomainError(f"table {i!r} has no entry for {s!r}")
                check(self.f[i][s])
                if self.tau[i][s] not in ids:
                    raise DomainError(f"tau[{i!r}][{s!r}] leaves the domain")

    def __eq__(self, other):
        if not isinstance(other, CodeTuple):
            return NotImplemented
        return (self.k == other.k and self.alphabet == other.alphabet
                and self.domain == other.domain
                and all(dict(self.f[i]) == dict(other.f[i])
                        and dict(self.tau[i]) == dict(other.tau[i]) for i in self.domain))

    def __len__(self):
        return len(self.domain)

    def restrict(self, ids):
        """Sub-tuple on ``ids`` (kept in domain order).  Must be closed."""
        keep = tuple(i for i in self.domain if i in set(ids))
        return CodeTuple(self.k, self.alphabet, keep,
                         {i: dict(self.f[i]) for i in keep},
                         {i: dict(self.tau[i]) for i in keep})

    def max_len(self):
        return max(len(self.f[i][s]) for i in self.domain for s in self.alphabet)


def _check_table(F, i):
    if i not in F.f:
        raise DomainError(f"unknown table {i!r}")


def _check_symbol(F, s):
    if s not in F.tau[F.domain[0]]:
        raise DomainError(f"unknown symbol {s!r}")


def f_star(F, i, x):
    _check_table(F, i)
    out = []
    for s in x:
        _check_symbol(F, s)
        out.append(F.f[i][s])
        i = F.tau[i][s]
    return "".join(out)


def tau_star(F, i, x):
    _check_table(F, i)
    for s in x:
        _check_symbol(F, s)
        i = F.tau[i][s]
    return i


def pref_layers(F):
    """``layers[j][i]`` is the set of ``j``-bit strings some ``f*_i(x)``
    starts with, for ``j = 0..k``.

    Built one length at a time.  A codeword of length ``m`` either already
    covers ``j`` bits or hands the remaining ``j - m`` bits to its target
    table, whose layer is known when ``m > 0``.  Empty codewords link tables
    at the same length, so each layer is closed under those links.
    """
    layers = [{i: frozenset([""]) for i in F.domain}]
    for j in range(1, F.k + 1):
        cur = {}
        for i in F.domain:
            acc = set()
            for s in F.alphabet:
                w = F.f[i][s]
                m = len(w)
                if m >= j:
                    acc.add(w[:j])
                elif m > 0:
                    acc.update(w + c for c in layers[j - m][F.tau[i][s]])
            cur[i] = acc
        changed = True
        while changed:
            changed = False
            for i in F.domain:
                for s in F.alphabet:
                    if F.f[i][s] == "":
                        t = cur[F.tau[i][s]]
                        if not t <= cur[i]:
                            cur[i] |= t
                            changed = True
        layers.append({i: frozenset(v) for i, v in cur.items()})
    return layers


def pref_sets(F):
    return pref_layers(F)[F.k]


def _continuations(w, target, layers, k):
    if len(w) >= k:
        return {w[:k]}
    return {w + c for c in layers[k - len(w)][target]}


def pref_bar(F, i, b, layers=None):
    """k-bit continuations after ``b`` through codewords strictly longer than ``b``."""
    _check_table(F, i)
    check(b)
    layers = layers or pref_layers(F)
    out = set()
    for s in F.alphabet:
        w = F.f[i][s]
        if len(w) > len(b) and w.startswith(b):
            out |= _continuations(w[len(b):], F.tau[i][s], layers, F.k)
    return frozenset(out)


def k_dec_violations(F):
    """Every (i, s) breaking the prefix condition and every (i, s, s')
    breaking the equal-codeword condition."""
    layers = pref_layers(F)
    P = layers[F.k]
    bad = []
    for i in F.domain:
        for s in F.alphabet:
            if P[F.tau[i][s]] & pref_bar(F, i, F.f[i][s], layers):
                bad.append((i, s))
        syms = F.alphabet
        for a in range(len(syms)):
            for b in range(a + 1, len(syms)):
                s, t = syms[a], syms[b]
                if F.f[i][s] == F.f[i][t] and P[F.tau[i][s]] & P[F.tau[i][t]]:
                    bad.append((i, s, t))
    return bad


def is_k_dec(F):
    bad = k_dec_violations(F)
    return not bad, bad


def is_extendable(F):
    G = F if F.k >= 1 else CodeTuple(1, F.alphabet, F.domain, F.f, F.tau)
    P1 = pref_layers(G)[1]
    return all(P1[i] for i in F.domain)


def successors(F):
    return {i: [F.tau[i][s] for s in F.alphabet] for i in F.domain}


def recurrent_set(F):
    """Tables reachable from every table; empty when F is not regular."""
    succ = successors(F)
    common = None
    for i in F.domain:
        r = reachable(succ, i)
        common = r if common is None else common & r
    return frozenset(common)


def is_regular(F):
    return bool(recurrent_set(F))


def transition_matrix(F, mu):
    idx = {i: n for n, i in enumerate(F.domain)}
    Q = [[Fraction(0)] * len(F.domain) for _ in F.domain]
    for i in F.domain:
        for s in F.alphabet:
            Q[idx[i]][idx[F.tau[i][s]]] += mu[s]
    return Q


def table_lengths(F, mu):
    return {i: sum((len(F.f[i][s]) * mu[s] for s in F.alphabet), Fraction(0))
            for i in F.domain}


@dataclass(frozen=True)
class MarkovReport:
    domain: tuple
    Q: list
    L_tables: dict
    R: frozenset
    _pi: tuple = field(default=None, repr=False)
    _L: Fraction = field(default=None, repr=False)

    @property
    def regular(self):
        return bool(self.R)

    @property
    def pi(self):
        if self._pi is None:
            raise NotRegularError("no unique stationary distribution")
        return self._pi

    @property
    def L(self):
        if self._L is None:
            raise NotRegularError("average length undefined for a non-regular tuple")
        return self._L

    def pi_of(self, i):
        return self.pi[self.domain.index(i)]


def _stationary(F, mu, R):
    ids = [i for i in F.domain if i in R]
    pos = {i: n for n, i in enumerate(ids)}
    n = len(ids)
    # columns of (Q^T - I) on R, last row replaced by normalisation
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in ids:
        A[pos[i]][pos[i]] -= 1
        for s in F.alphabet:
            A[pos[F.tau[i][s]]][pos[i]] += mu[s]
    A[-1] = [Fraction(1)] * n
    rhs = [Fraction(0)] * (n - 1) + [Fraction(1)]
    sol = solve(A, rhs)
    return tuple(sol[pos[i]] if i in pos else Fraction(0) for i in F.domain)


def markov_analyze(F, mu):
    mu = source_dist(mu, F.alphabet)
    R = recurrent_set(F)
    Lt = table_lengths(F, mu)
    Q = transition_matrix(F, mu)
    if not R:
        return MarkovReport(F.domain, Q, Lt, R)
    pi = _stationary(F, mu, R)
    L = sum((p * Lt[i] for p, i in zip(pi, F.domain)), Fraction(0))
    return MarkovReport(F.domain, Q, Lt, R, pi, L)


def average_length(F, mu):
    return markov_analyze(F, mu).L


def core_restrict(F):
    R = recurrent_set(F)
    if not R:
        raise NotRegularError("tuple is not regular")
    return F.restrict(R)


def minimal_closed_sets(F):
    order = {i: n for n, i in enumerate(F.domain)}
    comps = bottom_components(successors(F))
    return sorted(comps, key=lambda c: min(order[i] for i in c))


def potentials(F, mu):
    """``h`` with ``L = L_A + sum_A' (h_A' - h_A) Q[A][A']`` for every table,
    normalised so the first table has ``h = 0``."""
    rep = markov_analyze(F, mu)
    L = rep.L
    mu = source_dist(mu, F.alphabet)
    ids = list(F.domain)
    anchor = ids[0]
    unknowns = ids[1:]
    col = {i: n for n, i in enumerate(unknowns)}
    drop = next(i for i in ids if i in rep.R)
    A, rhs = [], []
    for i in ids:
        if i == drop:
            continue
        row = [Fraction(0)] * len(unknowns)
        if i != anchor:
            row[col[i]] += 1
        for s in F.alphabet:
            t = F.tau[i][s]
            if t != anchor:
                row[col[t]] -= mu[s]
        A.append(row)
        rhs.append(rep.L_tables[i] - L)
    sol = solve(A, rhs) if unknowns else []
    h = {anchor: Fraction(0)}
    h.update({i: sol[col[i]] for i in unknowns})
    for i in ids:
        drift = sum(((h[F.tau[i][s]] - h[i]) * mu[s] for s in F.alphabet), Fraction(0))
        if rep.L_tables[i] + drift != L:
            raise InternalError("potential equation fails after solve")
    return h


def tail_bits(F, i, layers=None):
    """Smallest k-bit tail that ends a stream at table ``i`` unambiguously:
    it lies in P^k of ``i`` but in no target set of an empty codeword."""
    layers = layers or pref_layers(F)
    P = layers[F.k]
    blocked = set()
    for s in F.alphabet:
        if F.f[i][s] == "":
            blocked |= P[F.tau[i][s]]
    ok = sorted(P[i] - blocked)
    if not ok:
        raise FlushError(f"no unambiguous {F.k}-bit tail for table {i!r}")
    return ok[0]


def encode_codetuple(F, i0, x):
    """``f*_{i0}(x)`` followed by the deterministic tail."""
    return f_star(F, i0, x) + tail_bits(F, tau_star(F, i0, x))


def decode_codetuple(F, i0, c):
    _check_table(F, i0)
    check(c)
    layers = pref_layers(F)
    P = layers[F.k]
    k = F.k
    out = []
    i, pos = i0, 0
    idle = 0
    while True:
        hits = []
        for s in F.alphabet:
            w = F.f[i][s]
            end = pos + len(w)
            if end + k <= len(c) and c.startswith(w, pos) and c[end:end + k] in P[F.tau[i][s]]:
                hits.append(s)
        if not hits:
            break
        if len(hits) > 1:
            raise InvalidCodeError(f"symbols {hits} all match at bit {pos}")
        s = hits[0]
        out.append(s)
        w = F.f[i][s]
        idle = 0 if w else idle + 1
        if idle > len(F.domain):
            raise InvalidCodeError("empty codewords cycle without consuming input")
        pos += len(w)
        i = F.tau[i][s]
    if len(c) - pos != k:
        raise CorruptInputError(f"{len(c) - pos} bits left over, expected {k}", pos)
    return out
