"""Completion of partial multiplication tables under associativity,
commutativity, a fixed zero element, and a fixed resonant decomposition,
with isomorphism-class deduplication.

The search spaces are tiny (at most n^4 symmetric fillings for the shipped
problems), so cells are enumerated in row-major order with symmetric cells
tied together and associativity re-checked incrementally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import (
    ISO,
    CayleyTable,
    PartialCayleyTable,
    canonical_key,
    find_zero,
    is_commutative,
    parse_partial_table,
)
from .census import search_completions
from .resonance import ResonantDecomposition, is_resonant


@dataclass(frozen=True)
class TemplateProblem:
    template: PartialCayleyTable
    required_zero: int
    required_decomposition: ResonantDecomposition
    require_commutative: bool = True

    def __post_init__(self) -> None:
        n = self.template.order
        if not 1 <= self.required_zero <= n:
            raise ValueError(f"zero label {self.required_zero} outside 1..{n}")
        for x in self.required_decomposition.s0 | self.required_decomposition.s1:
            if x > n:
                raise ValueError(f"decomposition label {x} outside 1..{n}")


def _validated_prefill(p: TemplateProblem) -> list[int]:
    """Flat prefill with the zero row/column forced; raises on a cell that
    already contradicts the problem."""
    n = p.template.order
    flat = list(p.template.flat())
    z = p.required_zero
    if p.require_commutative:
        for a in range(n):
            for b in range(a + 1, n):
                x, y = flat[a * n + b], flat[b * n + a]
                if x and y and x != y:
                    raise ValueError(
                        f"cell ({a + 1},{b + 1}) breaks commutativity: {x} vs {y}"
                    )
    for a in range(1, n + 1):
        for cell in ((z - 1) * n + (a - 1), (a - 1) * n + (z - 1)):
            if flat[cell] and flat[cell] != z:
                r, c = divmod(cell, n)
                raise ValueError(
                    f"cell ({r + 1},{c + 1}) holds {flat[cell]} but the zero "
                    f"element {z} forces {z}"
                )
            flat[cell] = z
    return flat


def _allowed_by_decomposition(p: TemplateProblem) -> dict[int, set[int]]:
    """Per-cell label sets implied by the three closure conditions."""
    n = p.template.order
    d = p.required_decomposition
    labels = set(range(1, n + 1))
    allowed: dict[int, set[int]] = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            permit = set(labels)
            if a in d.s0 and b in d.s0:
                permit &= d.s0
            if a in d.s0 and b in d.s1:
                permit &= d.s1
            if a in d.s1 and b in d.s1:
                permit &= d.s0
            if permit != labels:
                allowed[(a - 1) * n + (b - 1)] = permit
    return allowed


def _satisfying_completions(p: TemplateProblem) -> list[CayleyTable]:
    n = p.template.order
    flat = _validated_prefill(p)
    allowed = _allowed_by_decomposition(p)
    out: list[CayleyTable] = []

    def leaf(completed: tuple[int, ...]) -> None:
        t = CayleyTable(tuple(completed[r * n : (r + 1) * n] for r in range(n)))
        if find_zero(t) != p.required_zero:
            return
        if p.require_commutative and not is_commutative(t):
            return
        if not is_resonant(t, p.required_decomposition):
            return
        out.append(t)

    search_completions(
        flat,
        n,
        symmetric=p.require_commutative,
        allowed=allowed,
        on_complete=leaf,
    )
    return out


def complete(p: TemplateProblem) -> list[CayleyTable]:
    """All satisfying completions, one representative per isomorphism
    class, sorted by canonical form.

    The representative of a class is its lexicographically least
    completion (the search emits completions in lex order).
    """
    reps: dict[bytes, CayleyTable] = {}
    for t in _satisfying_completions(p):
        key = canonical_key(t, ISO)
        reps.setdefault(key, t)
    return [reps[key] for key in sorted(reps)]


def completion_count_raw(p: TemplateProblem) -> int:
    """Number of satisfying completions before isomorphism dedup."""
    return len(_satisfying_completions(p))


def candidate_count(p: TemplateProblem) -> int:
    """Size of the closure-only candidate space: n per free cell, with
    symmetric cells counted once when commutativity is required."""
    n = p.template.order
    flat = _validated_prefill(p)
    free = 0
    for a in range(n):
        for b in range(n):
            if flat[a * n + b] == 0 and (not p.require_commutative or a <= b):
                free += 1
    return n**free


def parse_problem(text: str) -> TemplateProblem:
    """Problem file: a table with ? holes plus header comments
    `# zero=<label>`, `# S0=<labels>`, `# S1=<labels>`, `# commutative=<bool>`."""
    meta: dict[str, str] = {}
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped.startswith("#"):
            continue
        body = stripped.lstrip("#").strip()
        if "=" in body:
            key, _, value = body.partition("=")
            meta.setdefault(key.strip().lower(), value.strip())
    template = parse_partial_table(text)
    for key in ("zero", "s0", "s1"):
        if key not in meta:
            raise ValueError(f"problem file is missing a '# {key}=...' header")

    def labels(csv: str) -> frozenset[int]:
        try:
            return frozenset(int(x) for x in csv.split(",") if x.strip())
        except ValueError:
            raise ValueError(f"bad label list {csv!r}")

    commutative = meta.get("commutative", "true").lower() in ("true", "yes", "1")
    return TemplateProblem(
        template=template,
        required_zero=int(meta["zero"]),
        required_decomposition=ResonantDecomposition(labels(meta["s0"]), labels(meta["s1"])),
        require_commutative=commutative,
    )


def format_problem(p: TemplateProblem) -> str:
    d = p.required_decomposition
    lines = [
        f"# zero={p.required_zero}",
        f"# S0={','.join(str(x) for x in sorted(d.s0))}",
        f"# S1={','.join(str(x) for x in sorted(d.s1))}",
        f"# commutative={'true' if p.require_commutative else 'false'}",
        str(p.template.order),
    ]
    for row in p.template.rows:
        lines.append(" ".join("?" if v == 0 else str(v) for v in row))
    return "\n".join(lines) + "\n"
