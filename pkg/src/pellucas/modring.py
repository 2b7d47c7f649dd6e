"""Exact modular arithmetic primitives shared by every test.

The residue ring is always Z_n for an odd modulus n >= 3; evenness and
tiny moduli are rejected once, at ``Modulus`` construction, so the
arithmetic itself never has to re-validate.
"""

from dataclasses import dataclass
from math import gcd, isqrt  # noqa: F401  (gcd is part of the public API)

from . import kernels
from .errors import MixedContextError, NotInvertibleError


@dataclass(frozen=True)
class Modulus:
    """An odd integer n >= 3 defining the ring Z_n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError(f"modulus must be an integer, got {self.n!r}")
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"modulus must be odd and >= 3, got {self.n}")

    def __int__(self):
        return self.n

    def residue(self, value):
        return Residue(value % self.n, self)


def as_modulus(n):
    """Accept an int or a Modulus, validating ints on the way in."""
    return n if isinstance(n, Modulus) else Modulus(n)


@dataclass(frozen=True)
class Residue:
    """A value reduced into [0, n) against its owning modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.n)

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.n))

    def _coerce(self, other, op):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise MixedContextError(
                    f"cannot {op} residues mod {self.modulus.n} and mod {other.modulus.n}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other, "add")
        return NotImplemented if v is None else Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other, "subtract")
        return NotImplemented if v is None else Residue(self.value - v, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other, "multiply")
        return NotImplemented if v is None else Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def inverse(self):
        return mod_inverse(self.value, self.modulus)


def mod_inverse(a, n):
    """Residue r with a * r = 1 mod n.

    Raises ``NotInvertibleError`` carrying gcd(a, n) when no inverse
    exists; that gcd may be a nontrivial factor of n.
    """
    n = as_modulus(n)
    g = gcd(a, n.n)
    if g != 1:
        raise NotInvertibleError(a, n.n, g)
    return Residue(pow(a, -1, n.n), n)


def jacobi(a, n):
    """Jacobi symbol (a / n) in {-1, 0, +1}; zero iff gcd(a, n) > 1.

    Negative a is handled through (-1 / n) = (-1)^((n-1)/2).
    """
    n = as_modulus(n)
    if a < 0:
        sign = -1 if n.n % 4 == 3 else 1
        return sign * kernels.jacobi(-a % n.n, n.n)
    return kernels.jacobi(a % n.n, n.n)


def is_composite(n):
    """True iff n is composite; deterministic and exact.

    Below 2**32 this is trial division; above it, a fixed strong-probable-
    prime base battery with no composite counterexample below
    ``kernels.MR_DETERMINISTIC_BOUND``.  Larger inputs are rejected rather
    than answered probabilistically.
    """
    if n < 2:
        raise ValueError(f"compositeness is defined for n >= 2, got {n}")
    if n >= kernels.MR_DETERMINISTIC_BOUND:
        raise ValueError(
            f"n exceeds the deterministic primality bound {kernels.MR_DETERMINISTIC_BOUND}"
        )
    return not kernels.is_prime(n)


def smallest_factor(n):
    """Least prime factor of n by trial division, or None if n is prime.

    Intended as the optional witness companion to ``is_composite``; only
    factors up to min(sqrt(n), 2**16) are searched, so a large composite
    with no small factor also returns None.
    """
    if n < 2:
        raise ValueError(f"expected n >= 2, got {n}")
    if n % 2 == 0:
        return 2 if n > 2 else None
    i = 3
    limit = min(isqrt(n), 1 << 16)
    while i <= limit:
        if n % i == 0:
            return i
        i += 2
    return None
