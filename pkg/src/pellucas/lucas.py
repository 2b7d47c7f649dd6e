"""Lucas sequences mod n and the Lucas pseudoprimality tests.

The sequences are U_0 = 0, U_1 = 1, V_0 = 2, V_1 = P with the shared
recurrence X_k = P X_{k-1} - Q X_{k-2}; the basic test asks whether
U_{n - (D/n)} = 0 mod n for D = P^2 - 4Q.  Odd composite n passing it are
pseudoprimes for (P, Q).
"""

from dataclasses import dataclass
from math import gcd, isqrt

from . import kernels
from .errors import PerfectSquareError, SharedFactorError
from .modring import Modulus, as_modulus, is_composite, jacobi
from .verdict import (
    REASON_FAILS,
    REASON_GCD,
    REASON_HOLDS,
    REASON_JACOBI_ZERO,
    REASON_PRIME,
    Status,
    TestVerdict,
)


@dataclass(frozen=True)
class LucasParams:
    """Sequence parameters (P, Q) with discriminant D = P^2 - 4Q.

    P must be positive and D nonzero.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError(f"P must be positive, got {self.p}")
        if self.d == 0:
            raise ValueError(f"P^2 - 4Q must be nonzero, got P={self.p} Q={self.q}")

    @property
    def d(self):
        return self.p * self.p - 4 * self.q


@dataclass(frozen=True)
class LucasPair:
    """(U_k, V_k) reduced mod n."""

    u: int
    v: int
    k: int
    n: Modulus

    def satisfies_identity(self, params):
        """Classical self-check: V_k^2 - D U_k^2 = 4 Q^k mod n."""
        n = self.n.n
        lhs = (self.v * self.v - params.d * self.u * self.u) % n
        return lhs == 4 * pow(params.q, self.k, n) % n


def lucas_uv_mod(params, k, n):
    """Evaluate (U_k, V_k) mod n in O(log k) ring operations."""
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    n = as_modulus(n)
    u, v = kernels.lucas_uv(params.p, params.q, k, n.n)
    return LucasPair(u, v, k, n)


def _applicability(params, n):
    """Shared hypothesis gate; returns (epsilon, verdict-or-None)."""
    eps = jacobi(params.d, n)
    if eps == 0:
        g = gcd(params.d, n.n)
        return 0, TestVerdict(
            Status.NOT_APPLICABLE, REASON_JACOBI_ZERO, {"gcd": g}
        )
    g = gcd(n.n, params.q)
    if g > 1:
        return eps, TestVerdict(Status.NOT_APPLICABLE, REASON_GCD, {"gcd": g})
    return eps, None


def lucas_test(n, params):
    """Lucas test: does U_{n - (D/n)} vanish mod n?

    Verdicts keep the proven-prime case apart from the pseudoprime case:
    a prime n reports Prime, a composite n reports Pseudoprime exactly
    when the congruence holds.  A zero Jacobi symbol or gcd(n, Q) > 1
    yields NotApplicable with the gcd as witness.
    """
    n = as_modulus(n)
    eps, gate = _applicability(params, n)
    if gate is not None:
        return gate
    k = n.n - eps
    u, _ = kernels.lucas_uv(params.p, params.q, k, n.n)
    witnesses = {"u": u, "k": k}
    if not is_composite(n.n):
        return TestVerdict(Status.PRIME, REASON_PRIME, witnesses)
    if u == 0:
        return TestVerdict(Status.PSEUDOPRIME, REASON_HOLDS, witnesses)
    return TestVerdict(Status.COMPOSITE_DETECTED, REASON_FAILS, witnesses)


def strong_lucas_test(n, params):
    """Stronger variant: U_{n-(D/n)} = 0 and U_{n-(D/n)+1} = 1 mod n.

    Equivalent to the full identity point on the conic side.  Both U
    values are always reported.
    """
    n = as_modulus(n)
    eps, gate = _applicability(params, n)
    if gate is not None:
        return gate
    k = n.n - eps
    u, v = kernels.lucas_uv(params.p, params.q, k, n.n)
    # U_{k+1} = (P U_k + V_k) / 2; the modulus is odd, so halving is exact.
    t = (params.p * u + v) % n.n
    u_next = t >> 1 if t % 2 == 0 else (t + n.n) >> 1
    witnesses = {"u": u, "u_next": u_next, "k": k}
    if not is_composite(n.n):
        return TestVerdict(Status.PRIME, REASON_PRIME, witnesses)
    if u == 0 and u_next == 1:
        return TestVerdict(Status.PSEUDOPRIME, REASON_HOLDS, witnesses)
    return TestVerdict(Status.COMPOSITE_DETECTED, REASON_FAILS, witnesses)


def selfridge_params(n):
    """First D in 5, -7, 9, -11, ... with (D/n) = -1, as LucasParams.

    Packaged as P = 1, Q = (1 - D)/4 (the division is exact because every
    D in the sequence is 1 mod 4).  Perfect squares are rejected up front
    since no D with (D/n) = -1 exists for them; a tried D sharing a
    nontrivial factor with n raises ``SharedFactorError``.
    """
    n = as_modulus(n)
    r = isqrt(n.n)
    if r * r == n.n:
        raise PerfectSquareError(f"{n.n} = {r}^2 has no D with (D/n) = -1")
    d = 5
    while True:
        j = jacobi(d, n)
        if j == -1:
            assert (1 - d) % 4 == 0
            return LucasParams(1, (1 - d) // 4)
        if j == 0:
            g = gcd(abs(d), n.n)
            if 1 < g < n.n:
                raise SharedFactorError(n.n, g)
        d = -(d + 2) if d > 0 else -(d - 2)


def oeis_variant_test(n):
    """Variant on the Pell numbers U_k(2, -1): U_n = (2/n) mod n.

    Composites passing this are OEIS A099011; 169 is the first.
    """
    n = as_modulus(n)
    u, _ = kernels.lucas_uv(2, -1, n.n, n.n)
    target = jacobi(2, n) % n.n
    witnesses = {"u": u, "target": target}
    if not is_composite(n.n):
        return TestVerdict(Status.PRIME, REASON_PRIME, witnesses)
    if u == target:
        return TestVerdict(Status.PSEUDOPRIME, REASON_HOLDS, witnesses)
    return TestVerdict(Status.COMPOSITE_DETECTED, REASON_FAILS, witnesses)
