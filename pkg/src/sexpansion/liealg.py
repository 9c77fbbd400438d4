"""Lie algebras with exact rational structure constants and the Bianchi
classification of 3-dimensional real Lie algebras.

All arithmetic is Fraction-exact; the VII-family boundary tr² = 4·det and
the Killing-form signs are decided without any floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

BIANCHI_TAGS = ("I", "II", "III", "IV", "V", "VI", "VII1", "VII2", "VIII", "IX")
_PARAM_TAGS = ("VI", "VII2")


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j][k]: [X_i, X_j] = sum_k c[i][j][k] X_k.

    Indices are 0-based positions into the basis; basis_labels carry the
    display names (X1, X2, ... by default).
    """

    c: tuple[tuple[tuple[Fraction, ...], ...], ...]
    basis_labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.c)

    def bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coefficient vector of [X_i, X_j] (0-based positions)."""
        return self.c[i][j]


@dataclass(frozen=True)
class Grading:
    """Two-block partition of the basis, labels 1-based.

    Valid for an algebra when [V0,V0] ⊆ V0, [V0,V1] ⊆ V1, [V1,V1] ⊆ V0.
    """

    v0: frozenset[int]
    v1: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "v0", frozenset(int(x) for x in self.v0))
        object.__setattr__(self, "v1", frozenset(int(x) for x in self.v1))
        if not self.v0 or not self.v1:
            raise ValueError("both blocks must be nonempty")
        if self.v0 & self.v1:
            raise ValueError("blocks must be disjoint")


@dataclass(frozen=True)
class BianchiType:
    """Classification tag, with the exact invariant tr²/det of the adjoint
    action on the derived plane for the VI and VII2 families."""

    tag: str
    param: Fraction | None = None

    def __post_init__(self) -> None:
        if self.tag not in BIANCHI_TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        if (self.param is not None) != (self.tag in _PARAM_TAGS):
            raise ValueError(f"tag {self.tag} takes a parameter iff in {_PARAM_TAGS}")
        if self.param is not None:
            object.__setattr__(self, "param", Fraction(self.param))
            if self.tag == "VII2" and not (0 < self.param < 4):
                raise ValueError(f"VII2 invariant must lie in (0,4), got {self.param}")
            if self.tag == "VI" and not (self.param > 4 or self.param <= 0):
                raise ValueError(f"VI invariant must be > 4 or <= 0, got {self.param}")

    def __str__(self) -> str:
        if self.param is None:
            return self.tag
        return f"{self.tag}(tr2/det={self.param})"


def algebra_from_brackets(
    dim: int,
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction | int]],
    labels: Iterable[str] | None = None,
) -> LieAlgebra:
    """Build an algebra from 1-based brackets {(i,j): {k: coeff}} with i<j;
    antisymmetry is filled in."""
    zero = Fraction(0)
    c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), combo in brackets.items():
        if not (1 <= i < j <= dim):
            raise ValueError(f"bracket key ({i},{j}) must have 1 <= i < j <= {dim}")
        for k, q in combo.items():
            if not 1 <= k <= dim:
                raise ValueError(f"component {k} outside 1..{dim}")
            q = Fraction(q)
            c[i - 1][j - 1][k - 1] = q
            c[j - 1][i - 1][k - 1] = -q
    if labels is None:
        labels = tuple(f"X{i}" for i in range(1, dim + 1))
    else:
        labels = tuple(labels)
        if len(labels) != dim:
            raise ValueError("label count must match dim")
    return LieAlgebra(tuple(tuple(tuple(row) for row in plane) for plane in c), labels)


def abelian_2d() -> LieAlgebra:
    """The abelian 2-dimensional isometry algebra: [X1,X2] = 0."""
    return algebra_from_brackets(2, {})


def solvable_2d() -> LieAlgebra:
    """The non-abelian 2-dimensional isometry algebra: [X1,X2] = X1."""
    return algebra_from_brackets(2, {(1, 2): {1: 1}})


# both 2-dimensional inputs are graded by V0 = {X2}, V1 = {X1}
STANDARD_2D_GRADING = Grading(frozenset({2}), frozenset({1}))


def validate(a: LieAlgebra) -> bool:
    """Exact antisymmetry and Jacobi check."""
    d = a.dim
    c = a.c
    for i in range(d):
        for j in range(d):
            ci = c[i][j]
            cj = c[j][i]
            for k in range(d):
                if ci[k] != -cj[k]:
                    return False
    nz = [[[(m, q) for m, q in enumerate(c[i][j]) if q] for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                acc = [Fraction(0)] * d
                for m, q in nz[i][j]:
                    row = c[m][k]
                    for l in range(d):
                        if row[l]:
                            acc[l] += q * row[l]
                for m, q in nz[j][k]:
                    row = c[m][i]
                    for l in range(d):
                        if row[l]:
                            acc[l] += q * row[l]
                for m, q in nz[k][i]:
                    row = c[m][j]
                    for l in range(d):
                        if row[l]:
                            acc[l] += q * row[l]
                if any(acc):
                    return False
    return True


def _require_valid(a: LieAlgebra) -> None:
    if not validate(a):
        raise ValueError("structure constants violate antisymmetry or Jacobi")


def canonical_bianchi(tag: str, h: Fraction | int | None = None) -> LieAlgebra:
    """Exact bracket table of the named 3-dimensional canonical algebra.

    h is required for VI (h ≠ 0, 1) and VII2 (0 < h < 2), forbidden
    otherwise.
    """
    if tag not in BIANCHI_TAGS:
        raise ValueError(f"unknown tag {tag!r}")
    needs_h = tag in _PARAM_TAGS
    if needs_h and h is None:
        raise ValueError(f"type {tag} needs the family parameter h")
    if not needs_h and h is not None:
        raise ValueError(f"type {tag} takes no parameter")
    if h is not None:
        h = Fraction(h)
    if tag == "VI" and h in (0, 1):
        raise ValueError("type VI requires h ≠ 0, 1")
    if tag == "VII2" and not (0 < h < 2):
        raise ValueError("type VII2 requires 0 < h < 2")
    tables: dict[str, dict] = {
        "I": {},
        "II": {(2, 3): {1: 1}},
        "III": {(1, 3): {1: 1}},
        "IV": {(1, 3): {1: 1}, (2, 3): {1: 1, 2: 1}},
        "V": {(1, 3): {1: 1}, (2, 3): {2: 1}},
        "VI": {(1, 3): {1: 1}, (2, 3): {2: h}},
        "VII1": {(1, 3): {2: 1}, (2, 3): {1: -1}},
        "VII2": {(1, 3): {2: 1}, (2, 3): {1: -1, 2: h}},
        "VIII": {(1, 2): {1: 1}, (1, 3): {2: 2}, (2, 3): {3: 1}},
        "IX": {(1, 2): {3: 1}, (1, 3): {2: -1}, (2, 3): {1: 1}},
    }
    return algebra_from_brackets(3, tables[tag])


# -- exact linear algebra over the rationals ---------------------------------


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _rank(rows: list[list[Fraction]]) -> int:
    return len(_rref(rows)[0])


def _coords_in_span(basis: list[list[Fraction]], pivots: list[int], v: list[Fraction]):
    """Coordinates of v in an rref basis, or None if v lies outside."""
    coords = [v[p] for p in pivots]
    residual = list(v)
    for q, row in zip(coords, basis):
        residual = [x - q * y for x, y in zip(residual, row)]
    if any(residual):
        return None
    return coords


def _mat_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, n) if aug[i][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def ad_action(a: LieAlgebra, v: list[Fraction], j: int) -> list[Fraction]:
    """[v, X_j] for a coefficient vector v (0-based position j)."""
    out = [Fraction(0)] * a.dim
    for i, q in enumerate(v):
        if q:
            row = a.c[i][j]
            for k in range(a.dim):
                if row[k]:
                    out[k] += q * row[k]
    return out


def derived_dim(a: LieAlgebra) -> int:
    """Rank over the rationals of the span of all brackets."""
    _require_valid(a)
    vecs = [list(a.c[i][j]) for i in range(a.dim) for j in range(i + 1, a.dim)]
    if not vecs:
        return 0
    return _rank(vecs)


def _killing_matrix(a: LieAlgebra) -> list[list[Fraction]]:
    d = a.dim
    c = a.c
    B = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            s = Fraction(0)
            for l in range(d):
                for m in range(d):
                    if c[i][l][m] and c[j][m][l]:
                        s += c[i][l][m] * c[j][m][l]
            B[i][j] = B[j][i] = s
    return B


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    det = Fraction(0)
    for j in range(n):
        if m[0][j]:
            minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
            det += (-1) ** j * m[0][j] * _det(minor)
    return det


def classify3(a: LieAlgebra) -> BianchiType:
    """Bianchi type of a 3-dimensional real Lie algebra.

    Decision tree on basis-independent invariants: dimension of the derived
    algebra, centrality of the derived line, the adjoint action of a
    complement vector on the derived plane (tr²/det decides the VI/VII
    families exactly), and the Killing form signs for the simple types.
    """
    if a.dim != 3:
        raise ValueError(f"classification needs dimension 3, got {a.dim}")
    _require_valid(a)

    vecs = [list(a.c[0][1]), list(a.c[0][2]), list(a.c[1][2])]
    basis, pivots = _rref(vecs)
    dd = len(basis)

    if dd == 0:
        return BianchiType("I")

    if dd == 1:
        u = basis[0]
        central = all(not any(ad_action(a, u, j)) for j in range(3))
        return BianchiType("II") if central else BianchiType("III")

    if dd == 2:
        # derived plane of a 3-dim algebra is abelian; check defensively
        u1, u2 = basis
        comm = [Fraction(0)] * 3
        for i, qi in enumerate(u1):
            if qi:
                for j, qj in enumerate(u2):
                    if qj:
                        row = a.c[i][j]
                        for k in range(3):
                            comm[k] += qi * qj * row[k]
        if any(comm):
            raise RuntimeError("internal inconsistency: non-abelian derived plane")
        w = next(
            m for m in range(3)
            if _rank(basis + [[Fraction(int(m == k)) for k in range(3)]]) == 3
        )
        cols = []
        for u in basis:
            img = [Fraction(0)] * 3
            for j, qj in enumerate(u):
                if qj:
                    row = a.c[w][j]
                    for k in range(3):
                        img[k] += qj * row[k]
            coords = _coords_in_span(basis, pivots, img)
            if coords is None:
                raise RuntimeError("internal inconsistency: adjoint image left the derived plane")
            cols.append(coords)
        a00, a10 = cols[0]
        a01, a11 = cols[1]
        tr = a00 + a11
        det = a00 * a11 - a01 * a10
        if det == 0:
            raise RuntimeError(
                "internal inconsistency: singular adjoint action with 2-dimensional derived algebra"
            )
        disc = tr * tr - 4 * det
        if disc == 0:
            scalar = a01 == 0 and a10 == 0 and a00 == a11
            return BianchiType("V") if scalar else BianchiType("IV")
        if disc > 0:
            return BianchiType("VI", tr * tr / det)
        if tr == 0:
            return BianchiType("VII1")
        return BianchiType("VII2", tr * tr / det)

    B = _killing_matrix(a)
    d1 = B[0][0]
    d2 = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    d3 = _det(B)
    if d3 == 0:
        raise RuntimeError("internal inconsistency: degenerate Killing form with full derived algebra")
    positive = d1 > 0 and d2 > 0 and d3 > 0
    negative = d1 < 0 and d2 > 0 and d3 < 0
    return BianchiType("IX") if positive or negative else BianchiType("VIII")


def is_grading(a: LieAlgebra, g: Grading) -> bool:
    """Closure check: [V0,V0] ⊆ V0, [V0,V1] ⊆ V1, [V1,V1] ⊆ V0."""
    if g.v0 | g.v1 != set(range(1, a.dim + 1)):
        return False

    def support_in(i: int, j: int, block: frozenset[int]) -> bool:
        return all(not q or (k + 1) in block for k, q in enumerate(a.c[i - 1][j - 1]))

    for i in g.v0:
        for j in g.v0:
            if not support_in(i, j, g.v0):
                return False
        for j in g.v1:
            if not support_in(i, j, g.v1):
                return False
    for i in g.v1:
        for j in g.v1:
            if not support_in(i, j, g.v0):
                return False
    return True


def find_gradings(a: LieAlgebra) -> tuple[Grading, ...]:
    """All two-block basis partitions closed under the bracket, ordered by
    the V0 bitmask."""
    _require_valid(a)
    d = a.dim
    out = []
    for mask in range(1, (1 << d) - 1):
        v0 = frozenset(i + 1 for i in range(d) if (mask >> i) & 1)
        v1 = frozenset(range(1, d + 1)) - v0
        g = Grading(v0, v1)
        if is_grading(a, g):
            out.append(g)
    return tuple(out)


def transform_basis(a: LieAlgebra, m: list[list[Fraction | int]]) -> LieAlgebra:
    """Structure constants in the basis Y_p = sum_j m[p][j] X_j (m invertible)."""
    d = a.dim
    mat = [[Fraction(x) for x in row] for row in m]
    if len(mat) != d or any(len(r) != d for r in mat):
        raise ValueError("matrix shape must match dim")
    inv = _mat_inverse(mat)
    zero = Fraction(0)
    newc = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for p in range(d):
        for q in range(d):
            acc = [zero] * d
            for i in range(d):
                if not mat[p][i]:
                    continue
                for j in range(d):
                    f = mat[p][i] * mat[q][j]
                    if not f:
                        continue
                    row = a.c[i][j]
                    for k in range(d):
                        if row[k]:
                            acc[k] += f * row[k]
            for r in range(d):
                s = zero
                for k in range(d):
                    if acc[k]:
                        s += acc[k] * inv[k][r]
                newc[p][q][r] = s
    return LieAlgebra(tuple(tuple(tuple(r) for r in plane) for plane in newc), a.basis_labels)


# -- text format and rendering ------------------------------------------------


def _coeff_term(q: Fraction, label: str) -> str:
    if q == 1:
        return label
    if q == -1:
        return f"-{label}"
    if q.denominator == 1:
        return f"{q.numerator}{label}"
    return f"{q} {label}"


def render_combination(coeffs: Iterable[Fraction], labels: Iterable[str]) -> str:
    terms = [_coeff_term(q, lab) for q, lab in zip(coeffs, labels) if q]
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def render_brackets(a: LieAlgebra) -> str:
    """One line per nonzero bracket [Xi,Xj] with i<j."""
    lines = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if any(a.c[i][j]):
                lhs = f"[{a.basis_labels[i]},{a.basis_labels[j]}]"
                lines.append(f"{lhs} = {render_combination(a.c[i][j], a.basis_labels)}")
    if not lines:
        return "all brackets vanish"
    return "\n".join(lines)


def format_structure_constants(a: LieAlgebra, comment: str | None = None) -> str:
    """File format: dim line, then `i j k num/den` for nonzero c with i<j."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(a.dim))
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            for k in range(a.dim):
                q = a.c[i][j][k]
                if q:
                    lines.append(f"{i + 1} {j + 1} {k + 1} {q.numerator}/{q.denominator}")
    return "\n".join(lines) + "\n"


def parse_structure_constants(text: str) -> LieAlgebra:
    dim = None
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if dim is None:
            try:
                dim = int(stripped)
            except ValueError:
                raise ValueError(f"line {ln}: expected the dimension, got {stripped!r}")
            if dim < 1:
                raise ValueError(f"line {ln}: dimension must be positive")
            continue
        toks = stripped.split()
        if len(toks) != 4:
            raise ValueError(f"line {ln}: expected 'i j k num/den', got {stripped!r}")
        try:
            i, j, k = int(toks[0]), int(toks[1]), int(toks[2])
            q = Fraction(toks[3])
        except ValueError:
            raise ValueError(f"line {ln}: bad entry in {stripped!r}")
        if not (1 <= i < j <= dim) or not 1 <= k <= dim:
            raise ValueError(f"line {ln}: indices out of range (need i<j, all in 1..{dim})")
        brackets.setdefault((i, j), {})[k] = brackets.get((i, j), {}).get(k, Fraction(0)) + q
    if dim is None:
        raise ValueError("empty structure constants file")
    return algebra_from_brackets(dim, brackets)
