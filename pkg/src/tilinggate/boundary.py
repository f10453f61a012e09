"""How a side of the tiled triangle can be composed of tile edges.

Each side of ABC must contain at least one c edge and cannot mix a and b
edges, so each admissible row of the boundary matrix is (p, 0, e) or
(0, d, e) with e >= 1.  Two feasibility modes exist: "lemma" requires one
c edge (what the geometry proves); "appendix" requires two and adds a
cross-side check, reproducing the acceptance logic of the published search
program bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from .numtheory import Triple

MODE_LEMMA = "lemma"
MODE_APPENDIX = "appendix"


@dataclass(frozen=True, order=True)
class DRow:
    """One boundary row: p edges of length a, d of length b, e of length c."""

    p: int
    d: int
    e: int

    def __post_init__(self):
        if min(self.p, self.d, self.e) < 0:
            raise ValueError("row entries must be nonnegative")
        if self.e < 1:
            raise ValueError("every side has at least one c edge")
        if self.p > 0 and self.d > 0:
            raise ValueError("no side has both a and b edges")

    def length(self, t: Triple) -> int:
        return self.p * t.a + self.d * t.b + self.e * t.c


@dataclass(frozen=True)
class SideComposition:
    """All admissible rows for one side of the given length."""

    length: int
    rows: tuple[DRow, ...]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("side length must be positive")


def compositions(L: int, e1: int, e2: int, min2: int = 0) -> list[tuple[int, int]]:
    """All nonnegative (u, v) with u*e1 + v*e2 = L and v >= min2, ascending v."""
    if e1 < 1 or e2 < 1:
        raise ValueError("edge lengths must be positive")
    if L < 0:
        raise ValueError("length must be nonnegative")
    out = []
    v = min2
    while v * e2 <= L:
        rest = L - v * e2
        if rest % e1 == 0:
            out.append((rest // e1, v))
        v += 1
    return out


def d_rows(L: int, t: Triple, min_c: int = 1) -> list[DRow]:
    """All admissible boundary rows for a side of length L, deduplicated."""
    rows: set[DRow] = set()
    for u, v in compositions(L, t.a, t.c, min_c):
        rows.add(DRow(u, 0, v))
    for u, v in compositions(L, t.b, t.c, min_c):
        rows.add(DRow(0, u, v))
    return sorted(rows)


def side_composition(L: int, t: Triple, min_c: int = 1) -> SideComposition:
    return SideComposition(L, tuple(d_rows(L, t, min_c)))


def side_feasible(L: int, t: Triple, mode: str = MODE_LEMMA) -> bool:
    """Whether length L can be written with the required number of c edges."""
    min_c = 1 if mode == MODE_LEMMA else 2
    return bool(d_rows(L, t, min_c))


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def _composable(L: int, t: Triple, min_c: int) -> bool:
    v = min_c
    c = t.c
    while v * c <= L:
        rest = L - v * c
        if rest % t.a == 0 or rest % t.b == 0:
            return True
        v += 1
    return False


def _composable_b_only(L: int, t: Triple, min_c: int) -> bool:
    v = min_c
    c = t.c
    while v * c <= L:
        if (L - v * c) % t.b == 0:
            return True
        v += 1
    return False


def aux23_filter(X: int, Y: int, Z: int, t: Triple) -> Verdict:
    """Acceptance logic of the published side-composition program, verbatim.

    Each of X, Y, Z must be composable with at least 2 c edges; finally, if
    X cannot be written as u*b + v*c (v >= 2) then Y must be writable as
    u*b + v*c (v >= 1).  (The program's comment announces a check on Y and
    Z, but its code checks X and Y; the code is what is reproduced here.)
    """
    for name, L in (("X", X), ("Y", Y), ("Z", Z)):
        if not _composable(L, t, 2):
            return Verdict(False, name)
    if not _composable_b_only(X, t, 2):
        if not _composable_b_only(Y, t, 1):
            return Verdict(False, "X,Y not b-composable")
    return Verdict(True)
