"""Orbits of subsets of C^k under Phi_k.

Subsets are ``frozenset``s of ``k``-bit strings; ``k`` is passed alongside
because the empty set does not carry it.  The canonical form is built
bottom-up: split ``A`` by first bit, canonicalize both halves one level
down, and put the larger half (in ``subset_key`` order) under prefix 0.
Two subsets are equivalent exactly when the unordered pair of child classes
agrees, so this picks one member per class.  With this rule the k=2
representatives are {}, {00}, {00,01}, {00,10}, {00,01,10} and the full set.
"""

from dataclasses import dataclass
from functools import lru_cache

from ._guard import guard
from .bits import all_strings, strings_up_to
from .errors import DomainError
from .phi import PhiMap, compose, identity, invert

ENUMERATE_MAX_K = 4


def subset_key(A):
    """Global order on subsets: smaller sets first, then by sorted members."""
    return (len(A), tuple(sorted(A)))


def check_subset(A, k):
    A = frozenset(A)
    for b in A:
        if len(b) != k or b.strip("01"):
            raise DomainError(f"{b!r} is not a {k}-bit string")
    return A


def format_subset(A):
    return "{" + ",".join(sorted(A)) + "}"


@dataclass(frozen=True)
class CanonWitness:
    canon: frozenset
    psi: PhiMap  # apply_set(psi, canon) is the original set


def split(A):
    """``A = 0 A0 | 1 A1``; returns ``(A0, A1)``."""
    a0 = frozenset(b[1:] for b in A if b[0] == "0")
    a1 = frozenset(b[1:] for b in A if b[0] == "1")
    return a0, a1


def join(a0, a1):
    return frozenset(["0" + b for b in a0] + ["1" + b for b in a1])


@lru_cache(maxsize=None)
def _canon(A, k):
    if k == 0:
        return CanonWitness(A, identity(0))
    a0, a1 = split(A)
    w0, w1 = _canon(a0, k - 1), _canon(a1, k - 1)
    swap = subset_key(w1.canon) > subset_key(w0.canon)
    if swap:
        canon = join(w1.canon, w0.canon)
        under0, under1 = w1.psi, w0.psi
    else:
        canon = join(w0.canon, w1.canon)
        under0, under1 = w0.psi, w1.psi
    # psi*(empty) = swap bit, then the child maps' tables under 0 and 1
    table = []
    for p in strings_up_to(k - 1):
        if not p:
            table.append(int(swap))
        elif p[0] == "0":
            table.append(under0.star(p[1:]))
        else:
            table.append(under1.star(p[1:]))
    return CanonWitness(canon, PhiMap(k, tuple(table)))


def canonicalize(A, k):
    return _canon(check_subset(A, k), k)


def equivalent(A, B, k):
    return canonicalize(A, k).canon == canonicalize(B, k).canon


def transport(B, T, k):
    """A fixed map of Phi_k sending ``B`` onto ``T``."""
    wb, wt = canonicalize(B, k), canonicalize(T, k)
    if wb.canon != wt.canon:
        raise DomainError(f"{format_subset(B)} and {format_subset(T)} are not equivalent")
    return compose(wt.psi, invert(wb.psi))


def count_classes(k):
    if k < 0:
        raise DomainError("k must be non-negative")
    a = 2
    for _ in range(k):
        a = a * (a + 1) // 2
    return a


def count_classes_restricted(k):
    """Class count once the two one-sided halves are excluded (k >= 1)."""
    if k < 1:
        raise DomainError("restricted count needs k >= 1")
    a = count_classes(k - 1)
    return a * (a - 1) // 2


@lru_cache(maxsize=None)
def _classes(k):
    if k == 0:
        return (frozenset(), frozenset([""]))
    prev = _classes(k - 1)
    reps = []
    for i, lo in enumerate(prev):
        for hi in prev[i:]:
            # prev is sorted, so hi >= lo; the larger child goes under 0
            reps.append(join(hi, lo))
    return tuple(sorted(reps, key=subset_key))


def enumerate_classes(k):
    """One canonical representative per class, sorted by ``subset_key``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    guard(k <= ENUMERATE_MAX_K, f"enumerate_classes is limited to k <= {ENUMERATE_MAX_K}")
    return list(_classes(k))


def all_subsets(k):
    """Every subset of C^k (2^(2^k) of them)."""
    strings = all_strings(k)
    n = len(strings)
    for mask in range(1 << n):
        yield frozenset(strings[i] for i in range(n) if mask >> i & 1)
