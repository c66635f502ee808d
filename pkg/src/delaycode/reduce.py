"""Turn a regular, extendable, k-bit delay decodable code-tuple into an RCT
whose average length is no larger.

Tables are labelled by their P^k sets.  While two surviving tables carry
equivalent labels, every transition into that class is pointed at the member
with the smallest potential, and tables no longer reachable from everywhere
are dropped.  The targets before any redirection become the RCT transitions.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .codetuple import (CodeTuple, core_restrict, is_extendable, is_k_dec,
                        is_regular, markov_analyze, potentials, pref_sets)
from .errors import DomainError, InternalError
from .orbit import equivalent, format_subset, subset_key
from .rct import Rct


@dataclass
class TraceStep:
    kind: str
    pair: tuple = None
    target: object = None
    h: dict = None
    L_before: Fraction = None
    L_after: Fraction = None
    k_dec: bool = None

    def to_json(self):
        show = lambda i: format_subset(i) if isinstance(i, frozenset) else str(i)
        out = {"kind": self.kind, "L_before": _frac(self.L_before), "L_after": _frac(self.L_after)}
        if self.pair is not None:
            out["pair"] = [show(i) for i in self.pair]
            out["target"] = show(self.target)
            out["h"] = {show(i): _frac(v) for i, v in self.h.items()}
            out["k_dec"] = self.k_dec
        return out


def _frac(x):
    return None if x is None else [x.numerator, x.denominator]


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)

    def add(self, step):
        self.steps.append(step)

    def monotone(self):
        return all(s.L_after <= s.L_before for s in self.steps)

    def to_json(self):
        return [s.to_json() for s in self.steps]


def _redirect(F, group, target):
    tau = {i: {s: (target if t in group else t) for s, t in F.tau[i].items()} for i in F.domain}
    return CodeTuple(F.k, F.alphabet, F.domain, F.f, tau)


def _merge(F, mu, group, order, trace, pair):
    """Redirect every edge into ``group`` to its min-potential member."""
    h = potentials(F, mu)
    target = min(group, key=lambda i: (h[i], order(i)))
    G = _redirect(F, group, target)
    if not is_regular(G):
        raise InternalError("redirected tuple is not regular")
    G = core_restrict(G)
    L_before = markov_analyze(F, mu).L
    L_after = markov_analyze(G, mu).L
    trace.add(TraceStep("merge", pair, target, h, L_before, L_after, is_k_dec(G)[0]))
    if L_after > L_before:
        raise InternalError("merge increased the average length")
    return G


def _restrict(F, mu, trace):
    G = core_restrict(F)
    if len(G) != len(F):
        L = markov_analyze(F, mu).L
        trace.add(TraceStep("core-restrict", L_before=L, L_after=markov_analyze(G, mu).L))
    return G


def relabel_by_prefsets(F, mu, trace=None):
    """Merge tables with identical P^k sets, then rename every table by its
    P^k set."""
    trace = trace if trace is not None else ReductionTrace()
    P = pref_sets(F)
    pos = {i: n for n, i in enumerate(F.domain)}
    F = _restrict(F, mu, trace)
    while True:
        dom = F.domain
        pair = next(((a, b) for n, a in enumerate(dom) for b in dom[n + 1:] if P[a] == P[b]), None)
        if pair is None:
            break
        group = {i for i in dom if P[i] == P[pair[0]]}
        F = _merge(F, mu, group, pos.__getitem__, trace, pair)
    L = markov_analyze(F, mu).L
    G = CodeTuple(F.k, F.alphabet, tuple(P[i] for i in F.domain),
                  {P[i]: dict(F.f[i]) for i in F.domain},
                  {P[i]: {s: P[t] for s, t in F.tau[i].items()} for i in F.domain})
    trace.add(TraceStep("relabel", L_before=L, L_after=markov_analyze(G, mu).L))
    return G


def _check_labels(F, B, B2):
    for X in (B, B2):
        if X not in F.f or not isinstance(X, frozenset):
            raise DomainError(f"{X!r} is not a subset label in the domain")


def merge_equivalent_step(F, mu, B, B2, trace=None):
    """Point every transition into the class of ``B`` at its min-potential
    member (ties go to the smallest label).  Not core-restricted."""
    _check_labels(F, B, B2)
    if B == B2 or not equivalent(B, B2, F.k):
        raise DomainError("need two distinct equivalent labels")
    if core_restrict(F).domain != F.domain:
        raise DomainError("tuple must be irreducible")
    h = potentials(F, mu)
    group = {A for A in F.domain if equivalent(A, B, F.k)}
    target = min(group, key=lambda A: (h[A], subset_key(A)))
    if trace is not None:
        trace.add(TraceStep("merge", (B, B2), target, h))
    return _redirect(F, group, target)


def _first_equivalent_pair(F):
    dom = sorted(F.domain, key=subset_key)
    for n, a in enumerate(dom):
        for b in dom[n + 1:]:
            if equivalent(a, b, F.k):
                return a, b
    return None


def to_rct(F, mu):
    ok, _ = is_k_dec(F)
    if not (is_regular(F) and is_extendable(F) and ok):
        raise DomainError("input must be regular, extendable and k-bit delay decodable")
    trace = ReductionTrace()
    L0 = markov_analyze(F, mu).L
    G0 = relabel_by_prefsets(F, mu, trace)
    G = G0
    while True:
        pair = _first_equivalent_pair(G)
        if pair is None:
            break
        group = {A for A in G.domain if equivalent(A, pair[0], G.k)}
        G = _merge(G, mu, group, subset_key, trace, pair)
        G = _restrict(G, mu, trace)
    R = Rct(G.k, G.alphabet, G.domain,
            {A: dict(G.f[A]) for A in G.domain},
            {A: dict(G0.tau[A]) for A in G.domain})
    trace.add(TraceStep("finalize", L_before=L0, L_after=markov_analyze(G, mu).L))
    return R, trace
