"""Reduced code-tuples (RCTs).

An RCT keys its tables by subsets of C^k and lets a transition point at any
subset equivalent to a domain element.  The domain elements double as the
class representatives: ``rep(R, T)`` is the domain element equivalent to
``T``.  Coding happens on expanded indices ``(A, phi)``; the transition map
for an expanded index rewrites the target through ``psi``, a fixed member of
Phi_k with ``psi(rep) == target``.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from ._guard import guard
from .bits import check
from .codetuple import (CodeTuple, check_alphabet, f_star, is_extendable,
                        is_k_dec, markov_analyze, minimal_closed_sets,
                        recurrent_set)
from .errors import DomainError, InvalidRctError
from .orbit import canonicalize, check_subset, format_subset, transport
from .phi import PhiMap, all_maps, apply, apply_set, compose, identity, quotient

EXPAND_ALL_LIMIT = 1 << 20


@dataclass(frozen=True)
class ExpandedIndex:
    A: frozenset
    phi: PhiMap

    def label(self):
        return f"{format_subset(self.A)}:{self.phi}"


@dataclass(frozen=True, eq=False)
class Rct:
    k: int
    alphabet: tuple
    domain: tuple
    f: dict
    tau: dict
    psi_override: dict = field(default_factory=dict)

    def __post_init__(self):
        k = self.k
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "domain", tuple(check_subset(A, k) for A in self.domain))
        if not self.domain:
            raise DomainError("domain must be non-empty")
        canon = {}
        for A in self.domain:
            c = canonicalize(A, k).canon
            if c in canon:
                raise DomainError(f"{format_subset(A)} and {format_subset(canon[c])} are equivalent")
            canon[c] = A
        object.__setattr__(self, "_rep", canon)
        f = {}
        tau = {}
        for A in self.domain:
            if A not in self.f or A not in self.tau:
                raise DomainError(f"table {format_subset(A)} is missing f or tau")
            f[A] = {}
            tau[A] = {}
            for s in self.alphabet:
                if s not in self.f[A] or s not in self.tau[A]:
                    raise DomainError(f"table {format_subset(A)} has no entry for {s!r}")
                f[A][s] = check(self.f[A][s])
                T = check_subset(self.tau[A][s], k)
                if canonicalize(T, k).canon not in canon:
                    raise DomainError(f"target {format_subset(T)} matches no domain element")
                tau[A][s] = T
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "tau", tau)
        for (A, s), psi in self.psi_override.items():
            T = tau[A][s]
            if psi.k != k or apply_set(psi, self.rep(T)) != T:
                raise DomainError(f"psi override for ({format_subset(A)}, {s}) does not map onto the target")

    def __eq__(self, other):
        if not isinstance(other, Rct):
            return NotImplemented
        return (self.k == other.k and self.alphabet == other.alphabet
                and self.domain == other.domain and self.psi_override == other.psi_override
                and all(dict(self.f[A]) == dict(other.f[A])
                        and dict(self.tau[A]) == dict(other.tau[A]) for A in self.domain))

    # codec caches per (R, state), so equal tables must hash alike
    def __hash__(self):
        return hash((self.k, self.alphabet, self.domain))

    def rep(self, T):
        return self._rep[canonicalize(T, self.k).canon]

    def psi(self, A, s):
        if (A, s) in self.psi_override:
            return self.psi_override[(A, s)]
        T = self.tau[A][s]
        return transport(self.rep(T), T, self.k)

    @cached_property
    def _psi_cache(self):
        return {(A, s): self.psi(A, s) for A in self.domain for s in self.alphabet}

    def max_len(self):
        return max(len(w) for A in self.domain for w in self.f[A].values())


def _check_table(R, A):
    if A not in R.f:
        raise DomainError(f"{format_subset(A)} is not in the domain")


def _prefixes_k(w, T, k):
    # [w T]_k for a set T of k-bit strings
    if len(w) >= k:
        return {w[:k]} if T else set()
    return {(w + t)[:k] for t in T}


def pref_set_rct(R, A):
    _check_table(R, A)
    out = set()
    for s in R.alphabet:
        out |= _prefixes_k(R.f[A][s], R.tau[A][s], R.k)
    return frozenset(out)


def pref_bar_rct(R, A, b):
    _check_table(R, A)
    check(b)
    out = set()
    for s in R.alphabet:
        w = R.f[A][s]
        if len(w) > len(b) and w.startswith(b):
            out |= _prefixes_k(w[len(b):], R.tau[A][s], R.k)
    return frozenset(out)


def direct_realization(R):
    tau = {A: {s: R.rep(R.tau[A][s]) for s in R.alphabet} for A in R.domain}
    return CodeTuple(R.k, R.alphabet, R.domain, {A: dict(R.f[A]) for A in R.domain}, tau)


@dataclass
class ValidationReport:
    compliant: bool
    extendable: bool
    k_dec: bool
    regular: bool
    L: object = None
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return self.compliant and self.extendable and self.k_dec and self.regular


def rct_k_dec_violations(R):
    bad = []
    for A in R.domain:
        for s in R.alphabet:
            if R.tau[A][s] & pref_bar_rct(R, A, R.f[A][s]):
                bad.append(("prefix", A, s))
        syms = R.alphabet
        for a in range(len(syms)):
            for b in range(a + 1, len(syms)):
                s, t = syms[a], syms[b]
                if R.f[A][s] == R.f[A][t] and R.tau[A][s] & R.tau[A][t]:
                    bad.append(("equal", A, s, t))
    return bad


def validate(R, mu=None):
    violations = []
    compliant = True
    for A in R.domain:
        if pref_set_rct(R, A) != A:
            compliant = False
            violations.append(("compliant", A))
    extendable = frozenset() not in R.domain
    if not extendable:
        violations.append(("extendable", frozenset()))
    dec = rct_k_dec_violations(R)
    violations.extend(dec)
    direct = direct_realization(R)
    regular = bool(recurrent_set(direct))
    if not regular:
        violations.append(("regular",))
    L = markov_analyze(direct, mu).L if regular and mu is not None else None
    return ValidationReport(compliant, extendable, not dec, regular, L, violations)


def require_valid(R):
    rep = validate(R)
    if not rep.ok:
        raise InvalidRctError(f"RCT fails validation: {rep.violations[:5]}")
    return rep


def expand_index_step(R, state, s):
    """One step of the expanded machine: ``(emitted bits, next index)``."""
    A, phi = state.A, state.phi
    _check_table(R, A)
    if s not in R.f[A]:
        raise DomainError(f"unknown symbol {s!r}")
    w = R.f[A][s]
    T = R.tau[A][s]
    nxt = ExpandedIndex(R.rep(T), compose(quotient(phi, w), R._psi_cache[(A, s)]))
    return apply(phi, w), nxt


def expanded_f_star(R, state, x):
    out = []
    for s in x:
        w, state = expand_index_step(R, state, s)
        out.append(w)
    return "".join(out), state


def reachable_states(R, seed):
    """Expanded indices reachable from ``seed``, in BFS order."""
    seen = {seed: None}
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        for s in R.alphabet:
            _, v = expand_index_step(R, u, s)
            if v not in seen:
                seen[v] = None
                queue.append(v)
    return list(seen)


def expanded_tuple(R, states):
    """The code-tuple on ``states`` (which must be closed under the expanded
    transitions); table ids are the ExpandedIndex values themselves."""
    f, tau = {}, {}
    for u in states:
        f[u], tau[u] = {}, {}
        for s in R.alphabet:
            f[u][s], tau[u][s] = expand_index_step(R, u, s)
    return CodeTuple(R.k, R.alphabet, tuple(states), f, tau)


def expand_all(R):
    """The whole expanded tuple over domain x Phi_k (guarded)."""
    size = len(R.domain) << ((1 << R.k) - 1)
    guard(size <= EXPAND_ALL_LIMIT, f"full expansion has {size} tables")
    states = [ExpandedIndex(A, phi) for A in R.domain for phi in all_maps(R.k)]
    return expanded_tuple(R, states)


def expand_minimal(R, seed=None):
    """A minimal closed sub-machine of the expansion reachable from ``seed``."""
    require_valid(R)
    if seed is None:
        seed = ExpandedIndex(R.domain[0], identity(R.k))
    states = reachable_states(R, seed)
    F = expanded_tuple(R, states)
    order = {u: n for n, u in enumerate(states)}
    sets = minimal_closed_sets(F)
    best = min(sets, key=lambda c: sorted(_sort_key(u) for u in c))
    keep = sorted(best, key=lambda u: order[u])
    G = F.restrict(keep)
    ok, _ = is_k_dec(G)
    if not (ok and is_extendable(G)):
        raise InvalidRctError("expanded tuple lost decodability")
    return G


def _sort_key(u):
    return (len(u.A), tuple(sorted(u.A)), str(u.phi))


def length_invariance_check(R, x, states):
    direct = direct_realization(R)
    A = states[0].A if states else None
    if any(u.A != A for u in states):
        raise DomainError("all states must share the same table")
    lengths = {len(expanded_f_star(R, u, x)[0]) for u in states}
    if A is not None:
        lengths.add(len(f_star(direct, A, x)))
    return len(lengths) <= 1
