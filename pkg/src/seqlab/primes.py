"""Prime enumeration for the divisor experiments.

A plain sieve of Eratosthenes, grown geometrically when a count-based
request outruns the current bound.  Windows in this package are always
odd primes: 2 never belongs to the admissible set of any parameter.
"""

from __future__ import annotations

from math import isqrt
from typing import List


def primes_below(bound: int) -> List[int]:
    """All primes p < bound, ascending."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound, p)))
    return [p for p in range(bound) if sieve[p]]


def odd_primes_below(bound: int) -> List[int]:
    return [p for p in primes_below(bound) if p > 2]


def first_odd_primes(count: int) -> List[int]:
    """The first `count` odd primes 3, 5, 7, ..."""
    if count <= 0:
        return []
    bound = 32
    while True:
        out = odd_primes_below(bound)
        if len(out) >= count:
            return out[:count]
        bound *= 2


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in primes_below(isqrt(n) + 1):
        if n % p == 0:
            return n == p
    return True
