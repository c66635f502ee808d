"""The mapping group Phi_k, stored as a table of control bits.

A member of Phi_k is fixed by one bit per string ``p`` with ``len(p) < k``:
output bit ``i`` of ``phi(b)`` is ``b[i] ^ star(b[:i])``, and ``star`` is
zero on strings of length ``k`` or more.  The table lists those bits in
length-lex order (empty string, 0, 1, 00, 01, ...), so for ``k = 2`` the
table ``"101"`` means star(empty)=1, star(0)=0, star(1)=1.
"""

from dataclasses import dataclass
from itertools import product

from .bits import strings_up_to
from .errors import DomainError


def _index(p):
    # position of p among the length-lex ordered strings
    return (1 << len(p)) - 1 + (int(p, 2) if p else 0)


def _k_from_size(n):
    k = (n + 1).bit_length() - 1
    if (1 << k) - 1 != n:
        raise DomainError(f"table length {n} is not of the form 2^k - 1")
    return k


@dataclass(frozen=True)
class PhiMap:
    k: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != (1 << self.k) - 1:
            raise DomainError(f"Phi_{self.k} needs {(1 << self.k) - 1} table bits, got {len(self.table)}")

    @classmethod
    def parse(cls, bits, k=None):
        """Build from the ASCII table, e.g. ``PhiMap.parse("101")``."""
        if bits.strip("01"):
            raise DomainError(f"bad PhiMap table {bits!r}")
        if k is None:
            k = _k_from_size(len(bits))
        return cls(k, tuple(int(c) for c in bits))

    def __str__(self):
        return "".join(map(str, self.table))

    def star(self, p):
        if len(p) >= self.k:
            return 0
        return self.table[_index(p)]

    def __call__(self, b):
        return apply(self, b)

    @property
    def is_identity(self):
        return not any(self.table)


def identity(k):
    return PhiMap(k, (0,) * ((1 << k) - 1))


def all_maps(k):
    """Every member of Phi_k, ordered by table (as a binary number)."""
    n = (1 << k) - 1
    return [PhiMap(k, t) for t in product((0, 1), repeat=n)]


def apply(phi, b):
    out = []
    for i, c in enumerate(b):
        bit = (c == "1") ^ (phi.star(b[:i]) if i < phi.k else 0)
        out.append("1" if bit else "0")
    return "".join(out)


def _check_same_k(phi, psi):
    if phi.k != psi.k:
        raise DomainError(f"cannot combine maps of Phi_{phi.k} and Phi_{psi.k}")


def compose(phi, psi):
    """The map ``b -> phi(psi(b))``."""
    _check_same_k(phi, psi)
    prefixes = strings_up_to(phi.k - 1)
    return PhiMap(phi.k, tuple(phi.star(apply(psi, p)) ^ psi.star(p) for p in prefixes))


def invert(phi):
    table = [0] * len(phi.table)
    for p in strings_up_to(phi.k - 1):
        table[_index(apply(phi, p))] = phi.star(p)
    return PhiMap(phi.k, tuple(table))


def quotient(phi, d):
    """The map ``b -> residual(phi(d), phi(d + b))``, as a member of Phi_k."""
    return PhiMap(phi.k, tuple(phi.star(d + p) for p in strings_up_to(phi.k - 1)))


def apply_set(phi, strings):
    """Image of a set of ``k``-bit strings."""
    for b in strings:
        if len(b) != phi.k:
            raise DomainError(f"{b!r} is not a {phi.k}-bit string")
    return frozenset(apply(phi, b) for b in strings)


def embed(phi, k):
    """The same map viewed as a member of Phi_k for a larger ``k``."""
    if k < phi.k:
        raise DomainError(f"cannot embed Phi_{phi.k} into Phi_{k}")
    return PhiMap(k, tuple(phi.star(p) for p in strings_up_to(k - 1)))
