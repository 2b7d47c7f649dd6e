"""Backend parity: the compiled kernels must agree with the pure ones."""

import random

import pytest

from pellucas import kernels

BACKENDS = kernels.backends()
PAIRED = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="compiled backend not built"
)

rng = random.Random(20240817)


def _random_cases(count, n_bits):
    return [max(rng.getrandbits(n_bits) | 1, 3) for _ in range(count)]


@PAIRED
def test_jacobi_parity():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    for n in _random_cases(200, 40) + [3, 9, 21, 85, 2**62 + 1]:
        for _ in range(20):
            a = rng.randrange(n)
            assert pure.jacobi(a, n) == fast.jacobi(a, n)


@PAIRED
def test_lucas_uv_parity():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    for n in _random_cases(60, 48):
        p = rng.randrange(n)
        q = rng.randrange(n)
        k = rng.randrange(1 << 40)
        assert pure.lucas_uv(p, q, k, n) == fast.lucas_uv(p, q, k, n)
    assert pure.lucas_uv(3, 1, 0, 21) == fast.lucas_uv(3, 1, 0, 21) == (0, 2)


@PAIRED
def test_pell_pow_parity():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    for n in _random_cases(60, 48):
        x, y, d = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        e = rng.randrange(1 << 40)
        assert pure.pell_pow(x, y, d, e, n) == fast.pell_pow(x, y, d, e, n)


@PAIRED
def test_is_prime_parity():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    for n in range(2, 2000):
        assert pure.is_prime(n) == fast.is_prime(n)
    # straddle the trial-division/battery switch at 2**32
    for n in range(2**32 - 20, 2**32 + 20):
        assert pure.is_prime(n) == fast.is_prime(n)
    for n in _random_cases(50, 60):
        assert pure.is_prime(n) == fast.is_prime(n)


@PAIRED
def test_sweep_parity():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    assert pure.closed_form_sweep(6, 6, 3, 12, 3, 25) == fast.closed_form_sweep(
        6, 6, 3, 12, 3, 25
    )


def test_dispatcher_handles_huge_moduli():
    # beyond the compiled 2**63 window everything must fall back cleanly
    n = (1 << 70) + 3
    u, v = kernels.lucas_uv(3, 1, 20, n)
    assert (u, v) == (102334155, 228826127)
    x, y = kernels.pell_pow(2, 1, 3, 5, n)
    # (2 + sqrt(3))^5 = 362 + 209 sqrt(3)
    assert (x, y) == (362, 209)
    assert kernels.jacobi(4, n) == 1


def test_dispatcher_reduces_inputs():
    # negative and oversized parameters are reduced before kernel entry
    assert kernels.lucas_uv(3 + 21, 1 - 21, 20, 21) == kernels.lucas_uv(3, 1, 20, 21)
    assert kernels.pell_pow(-9, 11, 5 - 21, 20, 21) == kernels.pell_pow(12, 11, 5, 20, 21)


def test_mr_bound_exposed():
    assert kernels.MR_DETERMINISTIC_BOUND == 3317044064679887385961981
