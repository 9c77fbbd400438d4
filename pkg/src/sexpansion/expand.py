"""Semigroup expansion of a Lie algebra, resonant subalgebras, and the
zero-element reduction.

Expanded basis elements are labeled by (generator index, semigroup element)
pairs, ordered lexicographically; the bracket of two labeled elements is
the original bracket pushed onto the semigroup product of the labels:
[X_(i,α), X_(j,β)] = Σ_k c[i][j][k] X_(k, α·β).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cayley import CayleyTable, find_zero, is_associative
from .liealg import Grading, LieAlgebra, is_grading, validate
from .resonance import ResonantDecomposition, is_resonant


def label_name(label: tuple[int, int]) -> str:
    i, alpha = label
    return f"λ{alpha}X{i}"


@dataclass(frozen=True)
class LabeledAlgebra:
    """A Lie algebra whose basis carries (generator, semigroup element)
    labels, together with the table the labels multiply in."""

    underlying: LieAlgebra
    labels: tuple[tuple[int, int], ...]
    table: CayleyTable

    def __post_init__(self) -> None:
        if len(self.labels) != self.underlying.dim:
            raise ValueError("one label per basis element required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be pairwise distinct")

    @property
    def dim(self) -> int:
        return self.underlying.dim

    def label_names(self) -> tuple[str, ...]:
        return tuple(label_name(lab) for lab in self.labels)


def _require_monomial_input(g: LieAlgebra) -> None:
    for i in range(g.dim):
        for j in range(g.dim):
            nonzero = [q for q in g.c[i][j] if q]
            if len(nonzero) > 1 or any(q not in (1, -1) for q in nonzero):
                raise ValueError(
                    "expansion needs monomial structure constants in {-1, 0, +1}"
                )


def is_monomial(a: LieAlgebra) -> bool:
    """Every bracket of basis elements is 0 or ±1 times one basis element."""
    for i in range(a.dim):
        for j in range(a.dim):
            nonzero = [q for q in a.c[i][j] if q]
            if len(nonzero) > 1 or any(q not in (1, -1) for q in nonzero):
                return False
    return True


def s_expand(g: LieAlgebra, t: CayleyTable) -> LabeledAlgebra:
    """Expanded algebra on pairs (generator, element); dim = dim(g)·order(t).

    The table must be associative, otherwise Jacobi fails in the result.
    """
    if not is_associative(t):
        raise ValueError("table is not associative; the expansion would violate Jacobi")
    if not validate(g):
        raise ValueError("input algebra is not a Lie algebra")
    _require_monomial_input(g)

    n = t.order
    labels = tuple((i, alpha) for i in range(1, g.dim + 1) for alpha in t.elements())
    pos = {lab: p for p, lab in enumerate(labels)}
    dim = len(labels)
    zero = Fraction(0)
    c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for p, (i, alpha) in enumerate(labels):
        for q, (j, beta) in enumerate(labels):
            row = g.c[i - 1][j - 1]
            prod = t.prod(alpha, beta)
            for k in range(g.dim):
                if row[k]:
                    c[p][q][pos[(k + 1, prod)]] = row[k]
    algebra = LieAlgebra(
        tuple(tuple(tuple(r) for r in plane) for plane in c),
        tuple(label_name(lab) for lab in labels),
    )
    return LabeledAlgebra(algebra, labels, t)


def _restrict(a: LabeledAlgebra, keep: list[int], drop_to_zero: frozenset[int]) -> LabeledAlgebra:
    """Sub- or quotient algebra on the kept positions.

    Coefficients on positions in drop_to_zero are discarded (quotient);
    coefficients on any other non-kept position mean the span is not
    closed and raise.
    """
    old = a.underlying
    keep_set = set(keep)
    zero = Fraction(0)
    dim = len(keep)
    c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for pnew, p in enumerate(keep):
        for qnew, q in enumerate(keep):
            row = old.c[p][q]
            for k, coeff in enumerate(row):
                if not coeff:
                    continue
                if k in drop_to_zero:
                    continue
                if k not in keep_set:
                    raise ValueError(
                        f"bracket of {label_name(a.labels[p])} and "
                        f"{label_name(a.labels[q])} leaves the selected span"
                    )
                c[pnew][qnew][keep.index(k)] = coeff
    labels = tuple(a.labels[p] for p in keep)
    algebra = LieAlgebra(
        tuple(tuple(tuple(r) for r in plane) for plane in c),
        tuple(label_name(lab) for lab in labels),
    )
    return LabeledAlgebra(algebra, labels, a.table)


def resonant_subalgebra(
    g: LieAlgebra, grad: Grading, t: CayleyTable, d: ResonantDecomposition
) -> LabeledAlgebra:
    """Restriction of the expansion to (S0 × V0) ∪ (S1 × V1).

    Resonance makes the restricted span closed; closure is still verified
    cell by cell.
    """
    if not is_grading(g, grad):
        raise ValueError("grading is not bracket-closed for this algebra")
    if not is_resonant(t, d):
        raise ValueError("decomposition is not resonant for this table")
    full = s_expand(g, t)
    keep = [
        p
        for p, (i, alpha) in enumerate(full.labels)
        if (i in grad.v0 and alpha in d.s0) or (i in grad.v1 and alpha in d.s1)
    ]
    return _restrict(full, keep, frozenset())


def zero_reduce(a: LabeledAlgebra, z: int) -> LabeledAlgebra:
    """Quotient by the ideal spanned by the (·, z) sector of the zero z.

    Basis elements labeled (·, z) are removed and any bracket that produced
    one now produces 0.  The span is checked to be an ideal before
    quotienting.
    """
    if find_zero(a.table) != z:
        raise ValueError(f"label {z} is not the zero element of the table")
    sector = frozenset(p for p, (_, alpha) in enumerate(a.labels) if alpha == z)
    if not sector:
        raise ValueError(f"zero label {z} no longer present among the basis labels")
    old = a.underlying
    for q in sector:
        for p in range(old.dim):
            for k, coeff in enumerate(old.c[p][q]):
                if coeff and k not in sector:
                    raise ValueError("zero sector is not an ideal")
    keep = [p for p in range(old.dim) if p not in sector]
    return _restrict(a, keep, sector)


def pipeline(
    g: LieAlgebra,
    grad: Grading,
    t: CayleyTable,
    d: ResonantDecomposition,
    reduce: bool,
) -> LabeledAlgebra:
    """s_expand → resonant_subalgebra → optional zero_reduce."""
    sub = resonant_subalgebra(g, grad, t, d)
    if not reduce:
        return sub
    z = find_zero(t)
    if z is None:
        raise ValueError("reduction requested but the table has no zero element")
    return zero_reduce(sub, z)


def report(a: LabeledAlgebra, heading: str | None = None) -> str:
    """Human-readable rendering: basis labels and nonzero brackets."""
    from .liealg import render_combination

    lines = []
    if heading:
        lines.append(heading)
    lines.append(f"dimension: {a.dim}")
    lines.append("basis: " + " ".join(a.label_names()))
    names = a.label_names()
    any_bracket = False
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            row = a.underlying.c[i][j]
            if any(row):
                any_bracket = True
                lines.append(f"[{names[i]},{names[j]}] = {render_combination(row, names)}")
    if not any_bracket:
        lines.append("all brackets vanish")
    return "\n".join(lines)
