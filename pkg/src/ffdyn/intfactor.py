"""Integer primality and capped factorization (trial division + Brent rho).

Factoring effort is bounded so that order computations either succeed or
fail loudly with :class:`ResourceLimitError`; they never guess.
"""

from __future__ import annotations

import math

from .errors import ResourceLimitError

TRIAL_BOUND = 10**6
RHO_ITER_BUDGET = 2_000_000

# Deterministic Miller-Rabin witness set, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _brent_rho(n: int, budget: int) -> int | None:
    """One deterministic Brent-rho pass; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    iters = 0
    for c in range(1, 64):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                iters += min(m, r - k)
                if iters > budget:
                    return None
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


def factor_int(n: int, trial_bound: int = TRIAL_BOUND,
               rho_budget: int = RHO_ITER_BUDGET) -> dict[int, int]:
    """Full prime factorization {prime: exponent} of n >= 1.

    Raises ResourceLimitError when a cofactor survives both trial division
    and the rho iteration budget.
    """
    if n < 1:
        raise ValueError("factor_int needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= trial_bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _brent_rho(m, rho_budget)
        if f is None or f in (1, m):
            raise ResourceLimitError(
                f"factoring effort exceeded on cofactor {m}")
        stack.append(f)
        stack.append(m // f)
    return out


def divisors(n: int) -> list[int]:
    """Sorted list of all divisors of n (fully factors n first)."""
    out = [1]
    for p, e in factor_int(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)
