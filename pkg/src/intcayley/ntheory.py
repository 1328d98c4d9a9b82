"""
Elementary arithmetic functions used throughout the package.

All functions take and return Python ints, so there is no overflow.
"""
from functools import lru_cache, reduce
from math import gcd

__all__ = ["gcd", "lcm", "factorize", "divisors", "euler_phi", "moebius",
           "units", "ramanujan_sum"]


def lcm(*args):
    """Least common multiple of the arguments; ``lcm()`` is 1."""
    return reduce(lambda a, b: a // gcd(a, b) * b, args, 1)


@lru_cache(maxsize=4096)
def factorize(k):
    """Prime factorization of ``k >= 1`` as a tuple of ``(prime, exponent)``."""
    if k < 1:
        raise ValueError(f"factorize needs k >= 1, got {k}")
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if k > 1:
        out.append((k, 1))
    return tuple(out)


def divisors(k):
    """Sorted list of the positive divisors of ``k``."""
    divs = [1]
    for p, e in factorize(k):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(k):
    result = k
    for p, _ in factorize(k):
        result = result // p * (p - 1)
    return result


def moebius(k):
    fac = factorize(k)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def units(k):
    """Residues ``a`` in ``[1, k]`` coprime to ``k`` (for ``k = 1`` this is ``[1]``)."""
    return [a for a in range(1, k + 1) if gcd(a, k) == 1]


def ramanujan_sum(q, a):
    """
    Ramanujan sum c_q(a), the sum of the primitive q-th roots of unity raised
    to the power a, evaluated in closed form:

        c_q(a) = mu(q/w) * phi(q) / phi(q/w),   w = gcd(a, q)

    The result is an exact integer.
    """
    w = gcd(a, q)
    return moebius(q // w) * (euler_phi(q) // euler_phi(q // w))
