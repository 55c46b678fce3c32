"""The epsilon invariant of curve singularities and curve multiplicities.

epsilon counts the rank-1 torsion-free module classes of a singular
point; a rational curve contributes the product of epsilon over its
singular points to the count of rational curves in its linear system.
Three routes compute it:

* closed form binomial(p+q,p)/(p+q) for a planar unibranch point with
  local equation u^p = v^q, p and q coprime;
* exhaustive Delta-set enumeration for any value semigroup;
* a lookup table for the simple (ADE) singularities, each of which also
  decomposes into planar branches whose epsilons multiply to the table
  value.

A smooth branch is the degenerate planar point with p = q = 1 and has
epsilon 1; a node is two transversal smooth branches and also counts 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import comb, gcd, prod

from .numsg import NumericalSemigroup, semigroup_from_generators
from .qseries import yau_zaslow_coefficients
from .semimodule import enumerate_delta_sets


class CurveSpecError(ValueError):
    """A singularity or curve description failed to parse."""


class Singularity:
    """Base for the singular-point descriptors below."""

    @property
    def epsilon(self) -> int:
        raise NotImplementedError

    @property
    def delta(self) -> int | None:
        """Local delta invariant, when the descriptor determines it."""
        return None


@dataclass(frozen=True)
class PlanarPQ(Singularity):
    """Unibranch planar point u^p = v^q with p, q coprime; smooth is (1,1)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p and q must be positive, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(
                f"p and q must be coprime, got gcd({self.p}, {self.q}) "
                f"= {gcd(self.p, self.q)}; the point would not be unibranch"
            )

    @cached_property
    def epsilon(self) -> int:
        return epsilon_pq(self.p, self.q)

    @property
    def delta(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2


_ADE_INDEX_FLOOR = {"A": 1, "D": 4, "E": 6}


@dataclass(frozen=True)
class Ade(Singularity):
    """A simple singularity A_n (n>=1), D_n (n>=4), or E_6, E_7, E_8."""

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in _ADE_INDEX_FLOOR:
            raise ValueError(f"family must be A, D, or E, got {self.family!r}")
        if self.index < _ADE_INDEX_FLOOR[self.family]:
            raise ValueError(
                f"{self.family}_{self.index} is not a valid simple singularity"
            )
        if self.family == "E" and self.index not in (6, 7, 8):
            raise ValueError(f"E_{self.index} is not a simple curve singularity")

    @cached_property
    def epsilon(self) -> int:
        return epsilon_ade(self)

    @property
    def delta(self) -> int:
        # Milnor relation for simple singularities: index = 2*delta - r + 1
        return (self.index + len(branches_of_ade(self)) - 1) // 2


@dataclass(frozen=True)
class SemigroupPoint(Singularity):
    """A monomial unibranch point given by its value semigroup."""

    semigroup: NumericalSemigroup

    @cached_property
    def epsilon(self) -> int:
        return epsilon_semigroup(self.semigroup)

    @property
    def delta(self) -> int:
        return self.semigroup.genus


@dataclass(frozen=True)
class MultiBranch(Singularity):
    """A point with several branches; epsilon multiplies over them."""

    branches: tuple[Singularity, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "branches", tuple(self.branches))
        if not self.branches:
            raise ValueError("a multibranch point needs at least one branch")

    @cached_property
    def epsilon(self) -> int:
        return prod(b.epsilon for b in self.branches)


NODE = MultiBranch((PlanarPQ(1, 1), PlanarPQ(1, 1)))


def epsilon_pq(p: int, q: int) -> int:
    """Closed form binomial(p+q,p)/(p+q) for the point u^p = v^q."""
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got gcd({p}, {q}) = {gcd(p, q)}")
    total, rem = divmod(comb(p + q, p), p + q)
    assert rem == 0
    return total


def epsilon_semigroup(s: NumericalSemigroup) -> int:
    """epsilon by exhaustive count of the Delta-sets of ``s``."""
    return len(enumerate_delta_sets(s))


def epsilon_ade(sing: Ade) -> int:
    """Table of epsilon for the simple singularities."""
    fam, n = sing.family, sing.index
    if fam == "A":
        return n // 2 + 1 if n % 2 == 0 else 1
    if fam == "D":
        return 1 if n % 2 == 0 else (n - 1) // 2
    return {6: 5, 7: 2, 8: 7}[n]


def branches_of_ade(sing: Ade) -> list[PlanarPQ]:
    """Decompose a simple singularity into planar unibranch leaves.

    A_even is already unibranch of type (2, n+1); A_odd is two smooth
    branches; D_n is an A_(n-3) point plus a transversal smooth branch,
    applied recursively; E_7 is a cusp plus its tangent line.
    """
    fam, n = sing.family, sing.index
    smooth = PlanarPQ(1, 1)
    if fam == "A":
        if n % 2 == 0:
            return [PlanarPQ(2, n + 1)]
        return [smooth, smooth]
    if fam == "D":
        return branches_of_ade(Ade("A", n - 3)) + [smooth]
    if n == 6:
        return [PlanarPQ(3, 4)]
    if n == 7:
        return [PlanarPQ(2, 3), smooth]
    return [PlanarPQ(3, 5)]


@dataclass(frozen=True)
class CurveRecord:
    """A rational curve as its list of singular points."""

    label: str
    singularities: tuple[Singularity, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "singularities", tuple(self.singularities))

    @cached_property
    def multiplicity(self) -> int:
        return prod(s.epsilon for s in self.singularities)


def multiplicity(curve: CurveRecord) -> int:
    """Product of epsilon over the curve's singular points; 1 when smooth."""
    return curve.multiplicity


@dataclass(frozen=True)
class GenusSumReport:
    """Outcome of comparing a curve list against the predicted count."""

    sum: int
    expected: int
    equal: bool


def check_genus_sum(curves, g: int) -> GenusSumReport:
    """Compare the total multiplicity of ``curves`` with e(g).

    A mismatch is a reported outcome, not an error: the caller supplies
    the curve list, and this artifact has no surface model to derive it
    from.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    total = sum(c.multiplicity for c in curves)
    expected = yau_zaslow_coefficients(g)[g]
    return GenusSumReport(sum=total, expected=expected, equal=total == expected)


# --- singularity mini-language -------------------------------------------
#
# token    := "node" | ADE | PQ | SG | BRANCHES
# ADE      := ("A" | "D" | "E") integer
# PQ       := "pq(" integer "," integer ")"
# SG       := "sg(" integer ("," integer)* ")"
# BRANCHES := "branches[" token (";" token)* "]"
#
# A curve is a comma-separated token list; "node" abbreviates
# branches[pq(1,1);pq(1,1)].  Syntax problems raise CurveSpecError;
# well-formed tokens with impossible numbers (gcd > 1, bad ADE index)
# raise plain ValueError from the descriptor constructors.

_ADE_TOKEN = re.compile(r"([ADE])([0-9]+)\Z")


def _split_outside_brackets(text: str, sep: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise CurveSpecError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise CurveSpecError(f"unbalanced brackets in {text!r}")
    parts.append("".join(current))
    return parts


def _int_values(body: str, token: str) -> list[int]:
    items = [piece.strip() for piece in body.split(",")]
    if not all(re.fullmatch(r"-?[0-9]+", piece) for piece in items):
        raise CurveSpecError(f"expected a comma-separated integer list in {token!r}")
    return [int(piece) for piece in items]


def parse_singularity(token: str) -> Singularity:
    """Parse one token of the singularity mini-language."""
    tok = token.strip()
    if not tok:
        raise CurveSpecError("empty singularity token")
    if tok == "node":
        return NODE
    m = _ADE_TOKEN.fullmatch(tok)
    if m:
        return Ade(m.group(1), int(m.group(2)))
    if tok.startswith("pq(") and tok.endswith(")"):
        values = _int_values(tok[3:-1], tok)
        if len(values) != 2:
            raise CurveSpecError(f"pq takes exactly two integers, got {tok!r}")
        return PlanarPQ(values[0], values[1])
    if tok.startswith("sg(") and tok.endswith(")"):
        values = _int_values(tok[3:-1], tok)
        return SemigroupPoint(semigroup_from_generators(values))
    if tok.startswith("branches[") and tok.endswith("]"):
        inner = tok[len("branches["):-1]
        pieces = _split_outside_brackets(inner, ";")
        return MultiBranch(tuple(parse_singularity(piece) for piece in pieces))
    raise CurveSpecError(f"unrecognized singularity token {token!r}")


def parse_curve(text: str, label: str = "curve") -> CurveRecord:
    """Parse a comma-separated singularity list into a curve record."""
    if not text.strip():
        raise CurveSpecError(
            "empty curve description; a smooth curve is written pq(1,1)"
        )
    tokens = _split_outside_brackets(text, ",")
    return CurveRecord(label, tuple(parse_singularity(tok) for tok in tokens))


def parse_curve_file(text: str) -> list[CurveRecord]:
    """One curve per line; blank lines and text after ``#`` are ignored."""
    curves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        curves.append(parse_curve(line, label=f"line {lineno}"))
    return curves


def format_singularity(sing: Singularity) -> str:
    """Canonical mini-language rendering of a descriptor."""
    if isinstance(sing, Ade):
        return f"{sing.family}{sing.index}"
    if isinstance(sing, PlanarPQ):
        return f"pq({sing.p},{sing.q})"
    if isinstance(sing, SemigroupPoint):
        return "sg(" + ",".join(str(g) for g in sing.semigroup.generators) + ")"
    if isinstance(sing, MultiBranch):
        return "branches[" + ";".join(format_singularity(b) for b in sing.branches) + "]"
    raise TypeError(f"unknown singularity type {type(sing).__name__}")
