# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty

import sympy
from scipy.special import comb
from sympy.ntheory import n_order


def is_prime(n: int) -> bool:
    """
    Checks whether n is a prime number.

    :param int n: number to check
    :returns bool: True if <n> is prime"""
    return bool(sympy.isprime(n))


def prime_factors(n: int) -> ty.List[int]:
    """Returns the distinct prime divisors of n in increasing order."""
    return [int(ell) for ell in sympy.primefactors(n)]


def prime_power(q: int) -> ty.Optional[ty.Tuple[int, int]]:
    """
    Decomposes q as r^k with r prime.

    Parameters
    ----------
    q : int
        number to decompose

    Returns
    -------
    (r, k) : tuple(int, int) or None
        prime base and exponent, or None if q is not a prime power

    """
    if q < 2:
        return None
    factors = sympy.factorint(q)
    if len(factors) != 1:
        return None
    (r, k), = factors.items()
    return int(r), int(k)


def prime_powers_up_to(q_max: int) -> ty.List[int]:
    """Returns all prime powers 2 <= q <= q_max in increasing order."""
    return [q for q in range(2, q_max + 1) if prime_power(q) is not None]


def multiplicative_order(a: int, n: int) -> int:
    """Returns the multiplicative order of a modulo n (gcd(a, n) = 1)."""
    return int(n_order(a % n, n))


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k)."""
    return int(comb(n, k, exact=True))


def minor_count(p: int, max_size: ty.Optional[int] = None) -> int:
    """
    Number of square submatrices of a p x p matrix with size at most
    max_size, that is, the sum of C(p, k)^2 over 1 <= k <= max_size.

    Parameters
    ----------
    p : int
        size of the square matrix
    max_size : int, optional
        largest submatrix size, defaults to p

    Returns
    -------
    count : int

    """
    if max_size is None:
        max_size = p
    return sum(binomial(p, k) ** 2 for k in range(1, max_size + 1))
