"""Bit strings as plain ``str`` over the characters ``'0'`` and ``'1'``.

The empty string plays the role of the empty sequence.  Everything here is a
thin, checked wrapper around string slicing so that the rest of the package
can speak in terms of prefixes and residuals.
"""

from functools import lru_cache
from itertools import product

from .errors import DomainError

EMPTY = ""


def check(x):
    if not isinstance(x, str) or x.strip("01"):
        raise DomainError(f"not a bit string: {x!r}")
    return x


def take_prefix(x, k):
    """First ``k`` bits of ``x``."""
    if k < 0 or k > len(x):
        raise DomainError(f"cannot take {k} bits of a {len(x)}-bit string")
    return x[:k]


def drop_prefix(x, k):
    """``x`` with its first ``k`` bits removed."""
    if k < 0 or k > len(x):
        raise DomainError(f"cannot drop {k} bits of a {len(x)}-bit string")
    return x[k:]


def is_prefix(x, y):
    return y.startswith(x)


def is_proper_prefix(x, y):
    return len(x) < len(y) and y.startswith(x)


def residual(x, y):
    """The unique ``z`` with ``x + z == y``."""
    if not y.startswith(x):
        raise DomainError(f"{x!r} is not a prefix of {y!r}")
    return y[len(x):]


def concat(*parts):
    return "".join(parts)


def length_lex_key(x):
    """Sort key: shorter strings first, then lexicographic."""
    return (len(x), x)


@lru_cache(maxsize=None)
def all_strings(n):
    """Every bit string of length exactly ``n``, in lexicographic order."""
    return tuple("".join(p) for p in product("01", repeat=n))


@lru_cache(maxsize=None)
def strings_up_to(n):
    """Every bit string of length at most ``n``, in length-lex order."""
    out = []
    for m in range(n + 1):
        out.extend(all_strings(m))
    return tuple(out)


def prefixes_of_set(strings, k):
    """``{x[:k] for x in strings if len(x) >= k}``."""
    return frozenset(s[:k] for s in strings if len(s) >= k)
