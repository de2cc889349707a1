"""Search for integer solutions of C(d, 2) = C(2c-1, c-1).

Writing V(c) = C(2c-1, c-1), a solution exists at c iff 1 + 8 V(c) is a
perfect square.  Two scan methods are provided:

``incremental``
    Carries V(c) exactly with V(c+1) = V(c) * 2(2c+1) / (c+1).  Before the
    integer square root, 1 + 8 V(c) is tested for quadratic residuosity
    modulo primes p > 2 c_max (such p never divide V(c), so the test
    keeps its strength for large c).

``modular``
    Never forms V(c): it carries the numerator and denominator of the same
    recurrence modulo those primes and only builds V(c) from scratch for
    the (rare) values passing every residue test.

The two share no state besides the prime list and must return the same
solutions.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, TextIO

from .exact_arith import binom, primes_upto, triangular_inverse

SIEVE_PRIMES = 32
METHODS = ("incremental", "modular")


@dataclass(frozen=True)
class Solution:
    d: int
    c: int
    value: int

    def __post_init__(self):
        if not (binom(self.d, 2) == self.value == binom(2 * self.c - 1, self.c - 1)):
            raise ValueError(f"({self.d}, {self.c}) does not solve C(d,2) = C(2c-1,c-1)")

    def as_dict(self) -> dict:
        return {"d": self.d, "c": self.c, "value": self.value}


def sieve_primes(c_max: int, count: int = SIEVE_PRIMES) -> list[int]:
    """The ``count`` smallest primes above max(2 c_max, 2**16)."""
    lo = max(2 * c_max, 1 << 16)
    span = 64 * count
    while True:
        found = [p for p in primes_upto(lo + span) if p > lo]
        if len(found) >= count:
            return found[:count]
        span *= 2


def _is_residue(x: int, p: int) -> bool:
    """x is a square (possibly 0) modulo the odd prime p."""
    x %= p
    return x == 0 or pow(x, (p - 1) // 2, p) == 1


def central_values(c_min: int, c_max: int) -> Iterator[tuple[int, int]]:
    """Yield (c, C(2c-1, c-1)) for c_min <= c <= c_max, updating incrementally."""
    if c_min < 1:
        raise ValueError("c_min must be >= 1")
    value = binom(2 * c_min - 1, c_min - 1)
    for c in range(c_min, c_max + 1):
        yield c, value
        value, rem = divmod(value * 2 * (2 * c + 1), c + 1)
        if rem:
            raise ArithmeticError(f"inexact central-binomial update at c = {c}")


def _scan_incremental(c_min: int, c_max: int, primes: list[int],
                      on_step: Optional[Callable[[int, int, bool], None]] = None) -> list[Solution]:
    found = []
    for c, value in central_values(c_min, c_max):
        hit = None
        if all(_is_residue(1 + 8 * (value % p), p) for p in primes):
            hit = triangular_inverse(value)
        if on_step is not None:
            on_step(c, value, hit is not None)
        if hit is not None:
            found.append(Solution(hit, c, value))
    return found


def _scan_modular(c_min: int, c_max: int, primes: list[int]) -> list[Solution]:
    seed = binom(2 * c_min - 1, c_min - 1)
    num = [seed % p for p in primes]
    den = [1] * len(primes)
    idx = range(len(primes))
    found = []
    for c in range(c_min, c_max + 1):
        # 1 + 8N/D is a square mod p iff D(D + 8N) is (D is a unit since p > 2c)
        if all(_is_residue(den[i] * (den[i] + 8 * num[i]), primes[i]) for i in idx):
            value = binom(2 * c - 1, c - 1)
            d = triangular_inverse(value)
            if d is not None:
                found.append(Solution(d, c, value))
        a, b = 2 * (2 * c + 1), c + 1
        for i in idx:
            p = primes[i]
            num[i] = num[i] * a % p
            den[i] = den[i] * b % p
    return found


def _scan_shard(job: tuple[int, int, str, tuple[int, ...]]) -> list[tuple[int, int, int]]:
    c_lo, c_hi, method, primes = job
    scan = _scan_incremental if method == "incremental" else _scan_modular
    return [(s.d, s.c, s.value) for s in scan(c_lo, c_hi, list(primes))]


def shard_ranges(c_min: int, c_max: int, shards: int) -> list[tuple[int, int]]:
    """Split [c_min, c_max] into at most ``shards`` contiguous ranges.

    Incremental cost per c grows linearly with c, so cut points balance
    sum(c) across shards rather than the number of c values.
    """
    total = c_max - c_min + 1
    shards = max(1, min(shards, total))
    if shards == 1:
        return [(c_min, c_max)]
    weight = sum(range(c_min, c_max + 1))
    ranges, start, acc = [], c_min, 0
    for c in range(c_min, c_max + 1):
        acc += c
        if len(ranges) < shards - 1 and acc * shards >= weight * (len(ranges) + 1):
            ranges.append((start, c))
            start = c + 1
    if start <= c_max:
        ranges.append((start, c_max))
    return ranges


def search(c_min: int, c_max: int, shards: int = 1, method: str = "incremental") -> list[Solution]:
    """All solutions with c_min <= c <= c_max, sorted by c.

    With ``shards > 1`` the range is split over worker processes.  Each
    shard seeds its running value with one direct binomial and the prime
    list depends only on c_max, so the output is independent of the shard
    count.
    """
    if not 2 <= c_min <= c_max:
        raise ValueError("need 2 <= c_min <= c_max")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if shards < 1:
        raise ValueError("shards must be >= 1")
    primes = tuple(sieve_primes(c_max))
    jobs = [(lo, hi, method, primes) for lo, hi in shard_ranges(c_min, c_max, shards)]
    if len(jobs) == 1:
        parts = [_scan_shard(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_scan_shard, jobs))
    out = [Solution(*t) for part in parts for t in part]
    return sorted(out, key=lambda s: s.c)


def search_with_log(c_min: int, c_max: int, stream: TextIO) -> list[Solution]:
    """Single-shard incremental search writing a CSV row (c, value, is_triangular) per c.

    Values past ~4300 digits need ``sys.set_int_max_str_digits(0)``.
    """
    if not 2 <= c_min <= c_max:
        raise ValueError("need 2 <= c_min <= c_max")
    writer = csv.writer(stream)
    writer.writerow(["c", "value", "is_triangular"])
    return _scan_incremental(c_min, c_max, sieve_primes(c_max),
                             lambda c, v, tri: writer.writerow([c, v, int(tri)]))
