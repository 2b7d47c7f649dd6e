# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels.

Mirrors ``_kernels_py`` for moduli below 2**63; every product goes through
a 128-bit intermediate, so results are exact.  The dispatcher in
``kernels`` routes larger inputs to the pure backend.
"""

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

BACKEND = "compiled"


cdef inline u64 _mulmod(u64 a, u64 b, u64 n) noexcept nogil:
    return <u64>((<u128>a * b) % n)


cdef inline u64 _addmod(u64 a, u64 b, u64 n) noexcept nogil:
    # a, b < n < 2**63: the sum cannot overflow
    cdef u64 s = a + b
    return s - n if s >= n else s


cdef inline u64 _submod(u64 a, u64 b, u64 n) noexcept nogil:
    return a - b if a >= b else a + (n - b)


cdef inline u64 _half(u64 a, u64 n) noexcept nogil:
    # exact halving mod odd n
    return a >> 1 if (a & 1) == 0 else (a + n) >> 1


def jacobi(u64 a, u64 n):
    """Jacobi symbol (a / n) for 0 <= a < n, n odd positive."""
    cdef int result = 1
    cdef u64 t
    while a:
        while (a & 1) == 0:
            a >>= 1
            t = n & 7
            if t == 3 or t == 5:
                result = -result
        t = a
        a = n
        n = t
        if (a & 3) == 3 and (n & 3) == 3:
            result = -result
        a = a % n
    return result if n == 1 else 0


def lucas_uv(u64 p, u64 q, u64 k, u64 n):
    """(U_k, V_k) mod n by fast doubling; see the pure backend."""
    cdef u64 u, v, qk, d, u2, v2
    cdef int i, nbits
    cdef u64 tmp
    if k == 0:
        return 0, 2 % n
    u = 1
    v = p
    qk = q
    d = _submod(_mulmod(p, p, n), _mulmod(4 % n, q, n), n)
    nbits = 0
    tmp = k
    while tmp:
        nbits += 1
        tmp >>= 1
    for i in range(nbits - 2, -1, -1):
        u2 = _mulmod(u, v, n)
        v2 = _submod(_mulmod(v, v, n), _mulmod(2 % n, qk, n), n)
        qk = _mulmod(qk, qk, n)
        if (k >> i) & 1:
            u = _half(_addmod(_mulmod(p, u2, n), v2, n), n)
            v = _half(_addmod(_mulmod(d, u2, n), _mulmod(p, v2, n), n), n)
            qk = _mulmod(qk, q, n)
        else:
            u = u2
            v = v2
    return u, v


def pell_pow(u64 x, u64 y, u64 d, u64 e, u64 n):
    """Brahmagupta square-and-multiply; see the pure backend."""
    cdef u64 rx = 1, ry = 0, nx, ny
    while e:
        if e & 1:
            nx = _addmod(_mulmod(rx, x, n), _mulmod(d, _mulmod(ry, y, n), n), n)
            ny = _addmod(_mulmod(rx, y, n), _mulmod(ry, x, n), n)
            rx = nx
            ry = ny
        nx = _addmod(_mulmod(x, x, n), _mulmod(d, _mulmod(y, y, n), n), n)
        ny = _mulmod(_addmod(x, x, n), y, n)
        x = nx
        y = ny
        e >>= 1
    return rx, ry


cdef inline u64 _powmod(u64 b, u64 e, u64 n) noexcept nogil:
    cdef u64 r = 1 % n
    b = b % n
    while e:
        if e & 1:
            r = _mulmod(r, b, n)
        b = _mulmod(b, b, n)
        e >>= 1
    return r


cdef bint _mr_witness(u64 a, u64 d, int s, u64 n) noexcept nogil:
    cdef u64 x = _powmod(a, d, n)
    cdef int i
    if x == 1 or x == n - 1:
        return False
    for i in range(s - 1):
        x = _mulmod(x, x, n)
        if x == n - 1:
            return False
    return True


cdef u64[12] _MR_BASES
_MR_BASES[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_prime(u64 n):
    """Deterministic primality for n < 2**63; see the pure backend."""
    cdef u64 i, d
    cdef int s, j
    if n < 2:
        return False
    if n < (<u64>1 << 32):
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
    for j in range(12):
        if n % _MR_BASES[j] == 0:
            return False
    d = n - 1
    s = 0
    while (d & 1) == 0:
        d >>= 1
        s += 1
    for j in range(12):
        if _mr_witness(_MR_BASES[j], d, s, n):
            return False
    return True


def closed_form_sweep(long x_max, long y_max, long d_abs, long k_max,
                      long n_lo, long n_hi, long cap=10):
    """Bulk power-vs-closed-form comparison; see the pure backend."""
    cdef list bad = []
    cdef unsigned long long checked = 0
    cdef long ni, di, xi, yi, k, start
    cdef u64 n, dn, p, q, xs, ys, xk, yk, ua, ub, va, vb, t1, t2
    start = n_lo if n_lo % 2 else n_lo + 1
    for ni in range(start, n_hi + 1, 2):
        n = <u64>ni
        for di in range(-d_abs, d_abs + 1):
            if di == 0:
                continue
            dn = <u64>(((di % ni) + ni) % ni)
            for xi in range(x_max + 1):
                xs = <u64>(xi % ni)
                p = _addmod(xs, xs, n)
                for yi in range(y_max + 1):
                    ys = <u64>(yi % ni)
                    q = _submod(_mulmod(xs, xs, n),
                                _mulmod(dn, _mulmod(ys, ys, n), n), n)
                    xk = 1
                    yk = 0
                    ua = 0
                    ub = 1
                    va = 2 % n
                    vb = p
                    for k in range(k_max + 1):
                        checked += 1
                        if xk != _half(va, n) or yk != _mulmod(ys, ua, n):
                            bad.append((xi, yi, di, k, ni))
                            if len(bad) >= cap:
                                return checked, bad
                        t1 = _addmod(_mulmod(xk, xs, n),
                                     _mulmod(dn, _mulmod(yk, ys, n), n), n)
                        yk = _addmod(_mulmod(xk, ys, n), _mulmod(yk, xs, n), n)
                        xk = t1
                        t2 = _submod(_mulmod(p, ub, n), _mulmod(q, ua, n), n)
                        ua = ub
                        ub = t2
                        t2 = _submod(_mulmod(p, vb, n), _mulmod(q, va, n), n)
                        va = vb
                        vb = t2
    return checked, bad
