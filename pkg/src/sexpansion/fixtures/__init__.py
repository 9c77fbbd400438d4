"""Bundled multiplication tables and template problems.

Files live next to this module; set the SEXPANSION_FIXTURES environment
variable to a directory to override individual files by name.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from ..cayley import CayleyTable, Perm, parse_table
from ..resonance import ResonantDecomposition
from ..templates import TemplateProblem, parse_problem

FIXTURES_ENV = "SEXPANSION_FIXTURES"

TABLE_NAMES = (
    "SE2",
    "SK3",
    "SN1",
    "SN2",
    "SN3",
    "S4_10",
    "S4_12",
    "S4_13",
    "S4_28",
    "S4_42",
    "S4_43",
    "S4_44",
    "S4_45",
    "S4_64",
    "S3_1",
    "S3_2",
    "S3_3",
    "S3_6",
    "S3_7",
    "S3_9",
    "S3_10",
    "S3_12",
    "S3_15",
    "S3_16",
    "S3_17",
    "S3_18",
)

ORDER3_ABELIAN_NAMES = tuple(name for name in TABLE_NAMES if name.startswith("S3_"))

PROBLEM_NAMES = ("template_II", "template_III", "template_V")


def fixture_path(name: str) -> Path:
    override = os.environ.get(FIXTURES_ENV)
    if override:
        candidate = Path(override) / name
        if candidate.is_file():
            return candidate
    builtin = Path(__file__).parent / name
    if builtin.is_file():
        return builtin
    raise FileNotFoundError(f"no fixture named {name!r}")


def load_table(name: str) -> CayleyTable:
    return parse_table(fixture_path(name).read_text())


def load_problem(name: str) -> TemplateProblem:
    return parse_problem(fixture_path(name).read_text())


@dataclass(frozen=True)
class KnownSemigroup:
    """A hand-built semigroup with its resonant decomposition, zero element,
    and the Bianchi type its reduced expansion of the solvable start hits."""

    name: str
    decomposition: ResonantDecomposition
    zero: int
    bianchi_from_solvable: str


_D_III = ResonantDecomposition(frozenset({2, 3, 4}), frozenset({1, 4}))
_D_IIV = ResonantDecomposition(frozenset({2, 4}), frozenset({1, 3, 4}))
# SE2 keeps its original decomposition {λ0,λ2,λ3} / {λ1,λ3}, shifted up by one
_D_SE2 = ResonantDecomposition(frozenset({1, 3, 4}), frozenset({2, 4}))

KNOWN_SEMIGROUPS = (
    KnownSemigroup("SE2", _D_SE2, 4, "III"),
    KnownSemigroup("SK3", _D_III, 4, "III"),
    KnownSemigroup("SN1", _D_III, 4, "III"),
    KnownSemigroup("SN2", _D_IIV, 4, "II"),
    KnownSemigroup("SN3", _D_IIV, 4, "V"),
)

# hand-built table ≅ census table, witness maps the census table onto it
KNOWN_ISOMORPHISMS = (
    ("SN1", "S4_44", Perm((4, 1, 2, 3))),
    ("SN2", "S4_12", Perm((4, 3, 2, 1))),
    ("SN3", "S4_42", Perm((4, 1, 3, 2))),
    ("SE2", "S4_43", Perm((4, 3, 2, 1))),
    ("SK3", "S4_45", Perm((4, 1, 2, 3))),
)

# template problem -> census tables its completion classes must match
TEMPLATE_TARGETS = {
    "template_II": ("S4_10", "S4_12"),
    "template_III": ("S4_13", "S4_28", "S4_42", "S4_43", "S4_44", "S4_45", "S4_64"),
    "template_V": ("S4_42",),
}
