"""Independent oracles and small generators shared by the tests.

Everything here recomputes results from first principles (exhaustive
enumeration, direct definition chasing) so the library is checked against
a second, dumber route.
"""

from fractions import Fraction
from itertools import permutations, product

import numpy as np

from sexpansion import CayleyTable


def all_tables(n):
    """Every one of the n^(n*n) tables of order n."""
    for cells in product(range(1, n + 1), repeat=n * n):
        yield tuple(cells[r * n : (r + 1) * n] for r in range(n))


def brute_assoc(rows) -> bool:
    n = len(rows)
    for a in range(n):
        for b in range(n):
            ab = rows[a][b] - 1
            for c in range(n):
                if rows[ab][c] != rows[a][rows[b][c] - 1]:
                    return False
    return True


def brute_commutative(rows) -> bool:
    n = len(rows)
    return all(rows[a][b] == rows[b][a] for a in range(n) for b in range(n))


def brute_class_key(rows, convention="iso"):
    """Lex-min flattening over relabellings (and the transpose for iso-anti),
    computed directly."""
    n = len(rows)
    tabs = [rows]
    if convention == "iso-anti":
        tabs.append(tuple(zip(*rows)))
    best = None
    for tab in tabs:
        for img in permutations(range(1, n + 1)):
            new = [[0] * n for _ in range(n)]
            for a in range(n):
                for b in range(n):
                    new[img[a] - 1][img[b] - 1] = img[tab[a][b] - 1]
            flat = tuple(v for row in new for v in row)
            if best is None or flat < best:
                best = flat
    return best


def naive_census(n, abelian_only, convention):
    """Generate-all, filter, dedupe: the class set as canonical flats."""
    keys = set()
    for rows in all_tables(n):
        if not brute_assoc(rows):
            continue
        if abelian_only and not brute_commutative(rows):
            continue
        keys.add(brute_class_key(rows, convention))
    return keys


def symmetric_order4_semigroup_classes() -> int:
    """Order-4 abelian class count from scratch: all 4^10 symmetric tables,
    associativity filtered with numpy, dedupe by lex-min orbit flat."""
    n = 4
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    k = len(pairs)
    idx = np.arange(n**k, dtype=np.int64)
    weights = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    cols = (idx[:, None] // weights) % n
    flats = np.zeros((idx.shape[0], n * n), dtype=np.int8)
    for c, (a, b) in enumerate(pairs):
        flats[:, a * n + b] = cols[:, c]
        flats[:, b * n + a] = cols[:, c]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                rows = np.arange(flats.shape[0])
                ab = flats[:, a * n + b].astype(np.int64)
                bc = flats[:, b * n + c].astype(np.int64)
                keep = flats[rows, ab * n + c] == flats[rows, a * n + bc]
                flats = flats[keep]
    keys = {
        brute_class_key(tuple(tuple(int(v) + 1 for v in f[r * n : (r + 1) * n]) for r in range(n)))
        for f in flats
    }
    return len(keys)


def brute_resonances(t: CayleyTable):
    """All resonant (S0, S1) pairs by direct iteration over subset pairs."""
    n = t.order
    elems = list(t.elements())
    out = set()
    for r0 in range(1, 2**n):
        s0 = {e for i, e in enumerate(elems) if (r0 >> i) & 1}
        for r1 in range(1, 2**n):
            s1 = {e for i, e in enumerate(elems) if (r1 >> i) & 1}
            if s0 | s1 != set(elems):
                continue
            if (
                all(t.prod(a, b) in s0 for a in s0 for b in s0)
                and all(t.prod(a, b) in s1 for a in s0 for b in s1)
                and all(t.prod(a, b) in s0 for a in s1 for b in s1)
            ):
                out.add((frozenset(s0), frozenset(s1)))
    return out


def random_table(rng, n) -> CayleyTable:
    return CayleyTable.from_rows(
        [[rng.randint(1, n) for _ in range(n)] for _ in range(n)]
    )


def random_perm_images(rng, n) -> tuple[int, ...]:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return tuple(images)


def random_unimodular(rng, n=3):
    """Random integer matrix with determinant ±1 (shears, swaps, sign flips)."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(10):
        op = rng.randrange(3)
        if op == 0:
            i, j = rng.sample(range(n), 2)
            k = rng.choice([-3, -2, -1, 1, 2, 3])
            for c in range(n):
                m[i][c] += k * m[j][c]
        elif op == 1:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i = rng.randrange(n)
            m[i] = [-x for x in m[i]]
    return m
