"""Orderly census of finite semigroups up to isomorphism.

The generator backtracks over table cells in row-major order with
incremental associativity propagation: after fixing a cell, every triple
whose evaluation just became fully determined is checked.  A completed
table is emitted only when it equals its own canonical form (minimal-image
test), so the output is isomorph-free without keeping a seen-set and the
search could be partitioned across workers without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .cayley import CONVENTIONS, ISO, ISO_ANTI, CayleyTable, _perm_data

HARD_CAP = 5


class CensusCapError(ValueError):
    """Requested order exceeds the configured cap."""


@dataclass(frozen=True)
class CensusRequest:
    order: int
    abelian_only: bool = False
    convention: str = ISO
    hard_cap: int = HARD_CAP

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"convention must be one of {CONVENTIONS}")


def search_completions(
    flat: Iterable[int],
    n: int,
    *,
    symmetric: bool = False,
    allowed: dict[int, Iterable[int]] | None = None,
    value_order: Iterable[int] | None = None,
    on_complete: Callable[[tuple[int, ...]], None],
) -> None:
    """Visit every associative completion of a partially filled table.

    flat: row-major entries, labels 1..n with 0 for unfilled cells.
    symmetric: tie cell (a,b) to (b,a); prefilled cells must already agree.
    allowed: optional map from flat index to the labels permitted there.
    on_complete receives each completion as a 1-based flat tuple; with the
    default ascending value order, completions arrive in lexicographic
    row-major order.

    If the prefilled cells already violate associativity the function
    returns without visiting anything.
    """
    t = [v - 1 for v in flat]
    if len(t) != n * n:
        raise ValueError("flat table has wrong length")

    if symmetric:
        # mirror prefilled cells; disagreement means no completions ever
        for a in range(n):
            for b in range(a + 1, n):
                i, j = a * n + b, b * n + a
                if t[i] >= 0 and t[j] >= 0 and t[i] != t[j]:
                    return
                if t[i] < 0 and t[j] >= 0:
                    t[i] = t[j]
                elif t[j] < 0 and t[i] >= 0:
                    t[j] = t[i]

    occ: list[list[int]] = [[] for _ in range(n)]
    for idx, v in enumerate(t):
        if v >= 0:
            occ[v].append(idx)

    def check(cell: int, v: int) -> bool:
        # verify every triple whose evaluation involves this cell and is
        # now fully determined; undetermined triples get checked when
        # their last missing cell is filled
        ai, bi = divmod(cell, n)
        base_a = ai * n
        base_b = bi * n
        base_v = v * n
        for c in range(n):
            w = t[base_b + c]  # b*c -> triple (a,b,c)
            if w >= 0:
                lhs = t[base_v + c]
                if lhs >= 0:
                    rhs = t[base_a + w]
                    if rhs >= 0 and lhs != rhs:
                        return False
            u = t[c * n + ai]  # c*a -> triple (c,a,b)
            if u >= 0:
                lhs = t[u * n + bi]
                if lhs >= 0:
                    rhs = t[c * n + v]
                    if rhs >= 0 and lhs != rhs:
                        return False
        for xy in occ[ai]:  # x*y == a -> triple (x,y,b), outer product is this cell
            x, y = divmod(xy, n)
            w = t[y * n + bi]
            if w >= 0:
                rhs = t[x * n + w]
                if rhs >= 0 and rhs != v:
                    return False
        for yz in occ[bi]:  # y*z == b -> triple (a,y,z), inner product is this cell
            y, z = divmod(yz, n)
            u = t[base_a + y]
            if u >= 0:
                lhs = t[u * n + z]
                if lhs >= 0 and lhs != v:
                    return False
        return True

    for idx, v in enumerate(t):
        if v >= 0 and not check(idx, v):
            return

    free = [
        i
        for i in range(n * n)
        if t[i] < 0 and (not symmetric or i // n <= i % n)
    ]
    mirror = [(i % n) * n + (i // n) for i in free]
    base_vals = [v - 1 for v in (value_order if value_order is not None else range(1, n + 1))]
    slot_vals: list[tuple[int, ...]] = []
    for i, cell in enumerate(free):
        vals = base_vals
        if allowed is not None:
            permitted = set(allowed.get(cell, range(1, n + 1)))
            if symmetric and mirror[i] != cell:
                permitted &= set(allowed.get(mirror[i], range(1, n + 1)))
            vals = [v for v in base_vals if (v + 1) in permitted]
        slot_vals.append(tuple(vals))

    depth = len(free)

    def rec(k: int) -> None:
        if k == depth:
            on_complete(tuple(v + 1 for v in t))
            return
        cell = free[k]
        mir = mirror[k]
        two = symmetric and mir != cell
        for v in slot_vals[k]:
            t[cell] = v
            occ[v].append(cell)
            if two:
                t[mir] = v
                occ[v].append(mir)
            if check(cell, v) and (not two or check(mir, v)):
                rec(k + 1)
            if two:
                occ[v].pop()
                t[mir] = -1
            occ[v].pop()
            t[cell] = -1

    rec(0)


def _is_canonical_leaf(flat: tuple[int, ...], n: int, convention: str) -> bool:
    """Minimal-image test: does the table equal its canonical form?"""
    f0 = np.array(flat, dtype=np.int64) - 1
    mine = f0.astype(np.uint8).tobytes()
    perms, gather = _perm_data(n)
    nn = n * n
    sources = [f0]
    if convention == ISO_ANTI:
        sources.append(f0.reshape(n, n).T.reshape(-1).copy())
    for src in sources:
        orbit = np.take_along_axis(perms, src[gather], axis=1)
        raw = orbit.astype(np.uint8).tobytes()
        for i in range(orbit.shape[0]):
            if raw[i * nn : (i + 1) * nn] < mine:
                return False
    return True


def _run_census(req: CensusRequest, on_table: Callable[[tuple[int, ...]], None],
                value_order: Iterable[int] | None = None) -> None:
    if req.order > req.hard_cap:
        raise CensusCapError(
            f"order {req.order} exceeds the cap of {req.hard_cap}: semigroup counts "
            f"grow super-exponentially (order 6 already has 15,973 classes); "
            f"raise hard_cap explicitly to force the search"
        )
    n = req.order

    def leaf(flat: tuple[int, ...]) -> None:
        if _is_canonical_leaf(flat, n, req.convention):
            on_table(flat)

    search_completions(
        (0,) * (n * n),
        n,
        symmetric=req.abelian_only,
        value_order=value_order,
        on_complete=leaf,
    )


def enumerate_semigroups(req: CensusRequest) -> list[CayleyTable]:
    """One canonical representative per class, sorted by canonical form.

    Every emitted table is associative, commutative when abelian_only, and
    equal to its own canonical form under the requested convention.
    """
    out: list[CayleyTable] = []

    def keep(flat: tuple[int, ...]) -> None:
        n = req.order
        out.append(CayleyTable(tuple(flat[r * n : (r + 1) * n] for r in range(n))))

    _run_census(req, keep)
    return out


def count_semigroups(req: CensusRequest) -> int:
    """Class count for the request, without materializing the tables."""
    count = 0

    def bump(_flat: tuple[int, ...]) -> None:
        nonlocal count
        count += 1

    _run_census(req, bump)
    return count
