"""Pure-Python modular kernels.

Reference implementation of the hot inner loops; exact for integers of any
size thanks to Python's arbitrary-precision arithmetic.  The compiled
backend in ``_kernels_c`` mirrors these functions for 64-bit moduli; the
two are cross-checked in the test suite.

All functions expect residues already reduced into ``[0, n)`` and an odd
modulus ``n >= 3`` unless noted otherwise.
"""

BACKEND = "pure"

# Deterministic strong-probable-prime bases: no composite below
# 3317044064679887385961981 passes all of them (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_DETERMINISTIC_BOUND = 3317044064679887385961981

_TRIAL_DIVISION_BOUND = 1 << 32


def jacobi(a, n):
    """Jacobi symbol (a / n) for 0 <= a < n, n odd positive."""
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _half(a, n):
    # exact halving mod odd n
    return a >> 1 if a % 2 == 0 else (a + n) >> 1


def lucas_uv(p, q, k, n):
    """(U_k, V_k) mod n for the sequences with parameters (p, q).

    Fast doubling: U_{2m} = U_m V_m and V_{2m} = V_m^2 - 2 q^m, with the
    index+1 step (U, V) -> ((pU + V)/2, (dU + pV)/2) applied per binary
    digit of k.  O(log k) multiplications.
    """
    if k == 0:
        return 0, 2 % n
    u, v, qk = 1, p, q
    d = (p * p - 4 * q) % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = _half((p * u + v) % n, n), _half((d * u + p * v) % n, n)
            qk = qk * q % n
    return u, v


def pell_pow(x, y, d, e, n):
    """(x, y) raised to the e-th Brahmagupta power mod n.

    Square-and-multiply over (x1, y1) * (x2, y2) =
    (x1 x2 + d y1 y2, x1 y2 + x2 y1).  No membership assumption.
    """
    rx, ry = 1, 0
    while e:
        if e & 1:
            rx, ry = (rx * x + d * ry * y) % n, (rx * y + ry * x) % n
        x, y = (x * x + d * y * y) % n, 2 * x * y % n
        e >>= 1
    return rx, ry


def _trial_division_prime(n):
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def _mr_witness(a, d, s, n):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n):
    """Deterministic primality for n < 3317044064679887385961981.

    Trial division below 2**32, the 12-base strong-probable-prime battery
    above it.
    """
    if n < 2:
        return False
    if n < _TRIAL_DIVISION_BOUND:
        return _trial_division_prime(n)
    for p in _MR_BASES:
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_mr_witness(a, d, s, n) for a in _MR_BASES)


def closed_form_sweep(x_max, y_max, d_abs, k_max, n_lo, n_hi, cap=10):
    """Compare Brahmagupta powers against the Lucas closed form in bulk.

    For every seed pair (xs, ys) in [0, x_max] x [0, y_max], nonzero
    |d| <= d_abs, odd n in [n_lo, n_hi] and 0 <= k <= k_max, checks

        (xs, ys)^(x)k  ==  (V_k / 2, ys * U_k)   (mod n)

    with Lucas parameters p = 2 xs, q = xs^2 - d ys^2.  Both sides are
    advanced incrementally (one Brahmagupta product and one recurrence
    step per k).  Returns (comparisons, mismatches) where mismatches is a
    list of (xs, ys, d, k, n) tuples, at most ``cap`` long.
    """
    checked = 0
    bad = []
    start = n_lo if n_lo % 2 else n_lo + 1
    for n in range(start, n_hi + 1, 2):
        for d in range(-d_abs, d_abs + 1):
            if d == 0:
                continue
            dn = d % n
            for xi in range(x_max + 1):
                xs = xi % n
                p = 2 * xs % n
                for yi in range(y_max + 1):
                    ys = yi % n
                    q = (xs * xs - d * ys * ys) % n
                    xk, yk = 1, 0
                    ua, ub = 0, 1
                    va, vb = 2 % n, p
                    for k in range(k_max + 1):
                        checked += 1
                        if xk != _half(va, n) or yk != ys * ua % n:
                            bad.append((xi, yi, d, k, n))
                            if len(bad) >= cap:
                                return checked, bad
                        xk, yk = (
                            (xk * xs + dn * yk * ys) % n,
                            (xk * ys + yk * xs) % n,
                        )
                        ua, ub = ub, (p * ub - q * ua) % n
                        va, vb = vb, (p * vb - q * va) % n
    return checked, bad
