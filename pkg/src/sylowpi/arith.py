"""Number-theoretic primitives backing the arithmetic D_pi criterion.

Everything here is pure and works with arbitrary-precision integers:
orders of groups of Lie type overflow 64 bits at small parameters already.
"""

from __future__ import annotations

import math

# Deterministic Miller-Rabin witness set; correct for all n below this bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= _MR_BOUND:
        raise ValueError(f"primality test only deterministic below {_MR_BOUND}: got {n}")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_set(values) -> frozenset[int]:
    """Build a set of primes, rejecting non-primes and duplicates."""
    out = []
    for v in values:
        v = int(v)
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        if v in out:
            raise ValueError(f"duplicate prime {v}")
        out.append(v)
    return frozenset(out)


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of odd composite n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def prime_divisors(n: int) -> frozenset[int]:
    """Set of primes dividing n (empty for n = 1)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: set[int] = set()
    for p in (2, 3, 5):
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
    # trial division with the 30-wheel up to 10^4, Pollard rho beyond
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p <= 10_000 and p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out.add(m)
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return frozenset(out)


def mult_order(q: int, r: int) -> int:
    """Multiplicative order of q modulo the odd prime r."""
    if q < 2:
        raise ValueError(f"base must be >= 2, got {q}")
    if r == 2 or not is_prime(r):
        raise ValueError(f"{r} is not an odd prime")
    if q % r == 0:
        raise ValueError(f"{r} divides {q}; order undefined")
    e = 1
    x = q % r
    while x != 1:
        x = x * q % r
        e += 1
    return e


def r_part(m: int, r: int) -> int:
    """Largest power of the prime r dividing m."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    part = 1
    while m % r == 0:
        m //= r
        part *= r
    return part


def is_fermat_prime(t: int) -> bool:
    """True iff t is a prime of the form 2^k + 1."""
    if not is_prime(t):
        return False
    return (t - 1) & (t - 2) == 0


def eps_mod4(q: int) -> int:
    """The sign eps in {+1, -1} with q = eps (mod 4); q must be odd."""
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got {q}")
    return 1 if q % 4 == 1 else -1
