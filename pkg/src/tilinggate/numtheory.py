"""Integer tiles (a, b, c) with c^2 = a^2 + ab + b^2, and squarefree machinery.

The sides of the tile satisfy the law-of-cosines relation for a 120-degree
angle opposite c.  Primitive solutions are pairwise coprime and have
a >= 3, b >= 5 (taking a < b); for fixed a the solutions are bounded by
b < c <= (3a^2+1)/2, which terminates the direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
import numpy as np


@dataclass(frozen=True, order=True)
class Triple:
    """Tile side lengths; c is opposite the 120-degree angle.

    Invariants: c^2 = a^2 + ab + b^2, pairwise coprime, a < c and b < c.
    No order between a and b is assumed.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 1:
            raise ValueError(f"sides must be positive: {(a, b, c)}")
        if c * c != a * a + a * b + b * b:
            raise ValueError(f"not a 120-degree integer triangle: {(a, b, c)}")
        if gcd(a, b) != 1 or gcd(b, c) != 1 or gcd(a, c) != 1:
            raise ValueError(f"sides must be pairwise coprime: {(a, b, c)}")

    @property
    def swapped(self) -> "Triple":
        """The same tile with the roles of a and b exchanged."""
        return Triple(self.b, self.a, self.c)

    @property
    def normalized(self) -> "Triple":
        return self if self.a <= self.b else self.swapped

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class ParamPair:
    """Parameter pair (s, t) generating a solution; see enumerate_triples_param."""

    s: int
    t: int
    branch: str  # "odd-odd" or "one-even"

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError("parameters must be positive")
        if gcd(self.s, self.t) != 1:
            raise ValueError("parameters must be coprime")
        if self.branch not in ("odd-odd", "one-even"):
            raise ValueError(f"unknown branch {self.branch!r}")
        if self.branch == "odd-odd" and (self.s + self.t) % 2 == 0:
            raise ValueError("odd-odd branch needs parameters of opposite parity")


def sqfree(x: int) -> int:
    """Squarefree part: product of the primes dividing x to an odd power."""
    if x < 1:
        raise ValueError("sqfree requires a positive integer")
    ans = 1
    n = x
    p = 2
    while p * p <= n:
        if n % p == 0:
            count = 0
            while n % p == 0:
                n //= p
                count += 1
            if count & 1:
                ans *= p
        p += 1 if p == 2 else 2
    if n > 1:
        ans *= n
    return ans


def sqdiv(x: int) -> int:
    """Square divider: smallest s with x | s^2; satisfies s^2 = x * sqfree(x)."""
    if x < 1:
        raise ValueError("sqdiv requires a positive integer")
    target = x * sqfree(x)
    s = isqrt(target)
    assert s * s == target
    return s


def is_squarefree(x: int) -> bool:
    return sqfree(x) == x


def sqfree_range(limit: int) -> np.ndarray:
    """Squarefree parts of 1..limit as an array (index i holds sqfree(i)).

    Sieve-based batch variant of sqfree for bulk identity checks.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p * p :: p][spf[p * p :: p] == 0] = p
    ans = np.ones(limit + 1, dtype=np.int64)
    for x in range(2, limit + 1):
        n = x
        acc = 1
        while n > 1:
            p = spf[n]
            if p == 0:
                acc *= n  # n is prime
                break
            count = 0
            while n % p == 0:
                n //= p
                count += 1
            if count & 1:
                acc *= p
        ans[x] = acc
    return ans


def enumerate_triples_direct(
    max_a: int, max_c: int | None = None
) -> list[Triple]:
    """All primitive triples with min(a, b) <= max_a and a < b, in (a, b) order.

    The inner loop stops at b <= (3a^2+1)/2, the bound beyond which the
    discriminant c^2 - 3a^2 can no longer be a perfect square.  The optional
    max_c cut restricts output (and the scan) to c <= max_c.
    """
    if max_a < 1:
        raise ValueError("max_a must be positive")
    out: list[Triple] = []
    chunk = 1 << 21
    for a in range(1, max_a + 1):
        b_hi = (3 * a * a + 1) // 2
        if max_c is not None:
            # c > b, so b < max_c suffices as a scan bound
            b_hi = min(b_hi, max_c)
        if b_hi <= a:
            continue
        for lo in range(a + 1, b_hi + 1, chunk):
            b = np.arange(lo, min(lo + chunk, b_hi + 1), dtype=np.int64)
            t = a * a + a * b + b * b
            # perfect squares below 2^53 round-trip exactly through sqrt
            c = np.sqrt(t.astype(np.float64)).round().astype(np.int64)
            hits = np.nonzero(c * c == t)[0]
            for i in hits:
                bb = int(b[i])
                cc = int(c[i])
                if max_c is not None and cc > max_c:
                    continue
                if gcd(a, bb) != 1:
                    continue
                out.append(Triple(a, bb, cc))
    return out


def triple_from_param(pair: ParamPair) -> tuple[int, int, int]:
    """Raw (a, b, c) from a parameter pair, before sign/order normalization."""
    s, t = pair.s, pair.t
    if pair.branch == "odd-odd":
        return (2 * s * t + s * s - 3 * t * t, 2 * s * t - s * s + 3 * t * t,
                s * s + 3 * t * t)
    return (2 * s * t - t * t, s * s - 2 * s * t, s * s + t * t - s * t)


def enumerate_triples_param(max_c: int) -> list[Triple]:
    """All primitive triples with c <= max_c via the two-branch parametrization.

    Branch odd-odd: a = 2st + s^2 - 3t^2, b = 2st - s^2 + 3t^2, c = s^2 + 3t^2
    over coprime (s, t) of opposite parity.  Branch one-even: a = 2st - t^2,
    b = s^2 - 2st, c = s^2 + t^2 - st over coprime (s, t).  Both orientations
    of each branch are generated and the results deduplicated; validity of
    every emitted triple is checked directly, and completeness is covered by
    the cross-method equality test against the direct enumeration.
    """
    if max_c < 7:
        raise ValueError("max_c must be at least 7 (the smallest c)")
    found: set[tuple[int, int, int]] = set()

    def offer(a: int, b: int, c: int) -> None:
        if a < 1 or b < 1 or c > max_c:
            return
        if a > b:
            a, b = b, a
        if gcd(a, b) != 1:
            return
        if c * c == a * a + a * b + b * b:
            found.add((a, b, c))

    s_hi = isqrt(max_c) + 1
    for s in range(1, s_hi + 1):
        for t in range(1, s_hi + 1):
            if gcd(s, t) != 1:
                continue
            if (s + t) % 2 == 1:
                c = s * s + 3 * t * t
                if c <= max_c:
                    x = 2 * s * t
                    y = s * s - 3 * t * t
                    offer(x + y, x - y, c)

    # c = s^2 + t^2 - st >= (3/4) max(s,t)^2, so max(s,t) is bounded
    s_hi = isqrt(4 * max_c // 3) + 2
    for s in range(2, s_hi + 1):
        for t in range(1, s):
            if gcd(s, t) != 1:
                continue
            c = s * s + t * t - s * t
            if c > max_c:
                continue
            offer(2 * s * t - t * t, s * s - 2 * s * t, c)
            offer(s * s - 2 * s * t, 2 * s * t - t * t, c)

    return [Triple(a, b, c) for (a, b, c) in sorted(found)]


def mod8_check(t: Triple) -> bool:
    """When a and b are both odd, a + b must be divisible by 8 (else vacuous)."""
    if t.a % 2 == 1 and t.b % 2 == 1:
        return (t.a + t.b) % 8 == 0
    return True
