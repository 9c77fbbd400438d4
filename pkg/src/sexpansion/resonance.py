"""Resonant decompositions of a finite semigroup.

A decomposition is a pair of nonempty subsets S0, S1 covering the element
set with S0*S0 in S0, S0*S1 in S1 and S1*S1 in S0.  The subsets may
overlap; in the worked examples the zero element sits in both blocks, and
(S, S) is resonant for every table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import CayleyTable, find_zero


@dataclass(frozen=True)
class ResonantDecomposition:
    s0: frozenset[int]
    s1: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s0", frozenset(int(x) for x in self.s0))
        object.__setattr__(self, "s1", frozenset(int(x) for x in self.s1))
        if not self.s0 or not self.s1:
            raise ValueError("both blocks must be nonempty")
        for x in self.s0 | self.s1:
            if x < 1:
                raise ValueError(f"label {x} is not a 1-based element label")

    def render(self) -> str:
        fmt = lambda s: "{" + ",".join(str(x) for x in sorted(s)) + "}"
        return f"S0={fmt(self.s0)} S1={fmt(self.s1)}"


def is_resonant(t: CayleyTable, d: ResonantDecomposition) -> bool:
    """True iff S0 and S1 cover the elements and satisfy the three closures."""
    n = t.order
    for x in d.s0 | d.s1:
        if x > n:
            raise ValueError(f"label {x} outside 1..{n}")
    if d.s0 | d.s1 != set(t.elements()):
        return False
    for a in d.s0:
        for b in d.s0:
            if t.prod(a, b) not in d.s0:
                return False
        for b in d.s1:
            if t.prod(a, b) not in d.s1:
                return False
    for a in d.s1:
        for b in d.s1:
            if t.prod(a, b) not in d.s0:
                return False
    return True


def find_resonances(t: CayleyTable, *, zero_in_both: bool = False) -> tuple[ResonantDecomposition, ...]:
    """All resonant decompositions, ordered by the (S0, S1) bitmask pair.

    Bit a-1 of a mask stands for element a.  With zero_in_both=True only
    decompositions whose blocks both contain the zero element are kept
    (none at all when the table has no zero).
    """
    n = t.order
    full = (1 << n) - 1
    prod = [[t.prod(a + 1, b + 1) - 1 for b in range(n)] for a in range(n)]
    bits = [[a for a in range(n) if (m >> a) & 1] for m in range(full + 1)]

    def closed(ma: int, mb: int, mt: int) -> bool:
        for a in bits[ma]:
            row = prod[a]
            for b in bits[mb]:
                if not (mt >> row[b]) & 1:
                    return False
        return True

    zmask = 0
    if zero_in_both:
        z = find_zero(t)
        if z is None:
            return ()
        zmask = 1 << (z - 1)

    out = []
    for m0 in range(1, full + 1):
        for m1 in range(1, full + 1):
            if m0 | m1 != full:
                continue
            if zero_in_both and (m0 & zmask == 0 or m1 & zmask == 0):
                continue
            if closed(m0, m0, m0) and closed(m0, m1, m1) and closed(m1, m1, m0):
                out.append(
                    ResonantDecomposition(
                        frozenset(a + 1 for a in bits[m0]),
                        frozenset(a + 1 for a in bits[m1]),
                    )
                )
    return tuple(out)
