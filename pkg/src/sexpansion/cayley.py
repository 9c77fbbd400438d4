"""Multiplication tables of finite magmas: predicates, permutation action,
isomorphism testing, canonical forms, and the table text format.

Labels are 1-based everywhere; ``rows[a-1][b-1]`` is the label of the
product a*b.  Tables and permutations are immutable values and every
operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

ISO = "iso"
ISO_ANTI = "iso-anti"
CONVENTIONS = (ISO, ISO_ANTI)


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("table must have at least one element")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("table must be square")
            for v in row:
                if not (isinstance(v, int) and 1 <= v <= n):
                    raise ValueError(f"entry {v!r} outside 1..{n}")

    @classmethod
    def from_rows(cls, rows) -> "CayleyTable":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def prod(self, a: int, b: int) -> int:
        """Label of the product a*b."""
        return self.rows[a - 1][b - 1]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def transpose(self) -> "CayleyTable":
        return CayleyTable(tuple(zip(*self.rows)))

    def elements(self) -> range:
        return range(1, self.order + 1)


@dataclass(frozen=True)
class PartialCayleyTable:
    """Square table with 0 marking an unfilled cell."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("table must have at least one element")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("table must be square")
            for v in row:
                if not (isinstance(v, int) and 0 <= v <= n):
                    raise ValueError(f"entry {v!r} outside 0..{n}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def is_complete(self) -> bool:
        return all(v != 0 for row in self.rows for v in row)

    def to_table(self) -> CayleyTable:
        if not self.is_complete():
            raise ValueError("table still has unfilled cells")
        return CayleyTable(self.rows)


@dataclass(frozen=True)
class Perm:
    """Bijection on {1..n}; ``images[a-1]`` is the image of a.

    The one-line notation "(λ4 λ1 λ2 λ3)" reads: replace λ1 by λ4,
    λ2 by λ1, λ3 by λ2, λ4 by λ3.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if tuple(sorted(self.images)) != tuple(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for a, b in enumerate(self.images, start=1):
            inv[b - 1] = a
        return Perm(tuple(inv))

    def after(self, other: "Perm") -> "Perm":
        """Composite sending a to self(other(a))."""
        return Perm(tuple(self.images[b - 1] for b in other.images))

    def notation(self) -> str:
        return "(" + " ".join(f"λ{b}" for b in self.images) + ")"


def is_associative(t: CayleyTable) -> bool:
    """True iff (a*b)*c == a*(b*c) for all triples."""
    rows = t.rows
    n = t.order
    rng = range(n)
    for a in rng:
        ra = rows[a]
        for b in rng:
            ab = ra[b] - 1
            rab = rows[ab]
            rb = rows[b]
            for c in rng:
                if rab[c] != ra[rb[c] - 1]:
                    return False
    return True


def is_commutative(t: CayleyTable) -> bool:
    rows = t.rows
    n = t.order
    return all(rows[a][b] == rows[b][a] for a in range(n) for b in range(a + 1, n))


def find_zero(t: CayleyTable) -> int | None:
    """Label z with z*a == a*z == z for all a, or None.

    At most one such label exists: two zeros z, z' satisfy z = z*z' = z'.
    """
    rows = t.rows
    n = t.order
    for z in range(1, n + 1):
        if all(rows[z - 1][a] == z and rows[a][z - 1] == z for a in range(n)):
            return z
    return None


def apply_perm(t: CayleyTable, p: Perm) -> CayleyTable:
    """Relabelled table t' with t'[p(a)][p(b)] = p(t[a][b])."""
    if p.degree != t.order:
        raise ValueError(f"permutation degree {p.degree} != table order {t.order}")
    n = t.order
    img = p.images
    new = [[0] * n for _ in range(n)]
    for a in range(n):
        row = t.rows[a]
        pa = img[a] - 1
        for b in range(n):
            new[pa][img[b] - 1] = img[row[b] - 1]
    return CayleyTable.from_rows(new)


def are_isomorphic(a: CayleyTable, b: CayleyTable) -> Perm | None:
    """Lexicographically least witness p with apply_perm(b, p) == a, or None.

    The direction matches the isomorphism tables in the fixtures: applying
    the returned witness to the second table reproduces the first.
    """
    n = a.order
    if n != b.order:
        return None
    arows = a.rows
    brows = b.rows
    rng = range(n)
    for raw in permutations(range(1, n + 1)):
        ok = True
        for x in rng:
            brow = brows[x]
            arow = arows[raw[x] - 1]
            for y in rng:
                if arow[raw[y] - 1] != raw[brow[y] - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return Perm(raw)
    return None


@lru_cache(maxsize=None)
def _perm_data(n: int):
    """All n! permutations of range(n) plus gather indices for relabelling.

    For permutation k the flattening of the relabelled table is
    ``perms[k][flat[gather[k]]]`` where flat holds 0-based entries.
    """
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    m = perms.shape[0]
    inv = np.empty_like(perms)
    inv[np.arange(m)[:, None], perms] = np.arange(n)[None, :]
    gather = (inv[:, :, None] * n + inv[:, None, :]).reshape(m, n * n)
    return perms, gather


def _orbit_min_bytes(flat0: np.ndarray, n: int, convention: str) -> bytes:
    """Minimal flattening (as bytes, 0-based entries) over the orbit."""
    perms, gather = _perm_data(n)
    nn = n * n
    sources = [flat0]
    if convention == ISO_ANTI:
        sources.append(flat0.reshape(n, n).T.reshape(-1).copy())
    best = None
    for src in sources:
        orbit = np.take_along_axis(perms, src[gather], axis=1)
        raw = orbit.astype(np.uint8).tobytes()
        for i in range(orbit.shape[0]):
            chunk = raw[i * nn : (i + 1) * nn]
            if best is None or chunk < best:
                best = chunk
    return best


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def canonical_key(t: CayleyTable, convention: str = ISO) -> bytes:
    """Compact orbit invariant: the minimal flattening as bytes."""
    _check_convention(convention)
    flat0 = np.array(t.flat(), dtype=np.int64) - 1
    return _orbit_min_bytes(flat0, t.order, convention)


def canonical_form(t: CayleyTable, convention: str = ISO) -> CayleyTable:
    """Lexicographically minimal relabelling of t.

    Under ISO the minimum ranges over all permutations; under ISO_ANTI
    additionally over the transposed table.  Two tables have equal
    canonical forms iff they are isomorphic (resp. isomorphic or
    anti-isomorphic).
    """
    n = t.order
    best = canonical_key(t, convention)
    rows = tuple(tuple(best[r * n + c] + 1 for c in range(n)) for r in range(n))
    return CayleyTable(rows)


def format_table(t: CayleyTable | PartialCayleyTable, comment: str | None = None) -> str:
    """Table text format: comment lines, order line, then the rows."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(t.order))
    for row in t.rows:
        lines.append(" ".join("?" if v == 0 else str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_partial_table(text: str) -> PartialCayleyTable:
    """Parse the table text format, with ? marking unfilled cells."""
    rows: list[tuple[int, ...]] = []
    n = None
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if n is None:
            try:
                n = int(stripped)
            except ValueError:
                raise ValueError(f"line {ln}: expected the table order, got {stripped!r}")
            if n < 1:
                raise ValueError(f"line {ln}: order must be positive")
            continue
        toks = stripped.split()
        if len(toks) != n:
            raise ValueError(f"line {ln}: expected {n} entries, got {len(toks)}")
        row = []
        for col, tok in enumerate(toks, start=1):
            if tok == "?":
                row.append(0)
                continue
            try:
                v = int(tok)
            except ValueError:
                raise ValueError(f"line {ln}, col {col}: bad entry {tok!r}")
            if not 1 <= v <= n:
                raise ValueError(f"line {ln}, col {col}: entry {v} outside 1..{n}")
            row.append(v)
        rows.append(tuple(row))
        if len(rows) == n:
            break
    if n is None:
        raise ValueError("empty table file")
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    return PartialCayleyTable(tuple(rows))


def parse_table(text: str) -> CayleyTable:
    """Parse a fully filled table; ? cells are rejected."""
    partial = parse_partial_table(text)
    if not partial.is_complete():
        raise ValueError("table has unfilled '?' cells")
    return partial.to_table()
