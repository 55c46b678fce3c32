"""Numerical semigroups: additive submonoids of N with finite complement.

The finite complement (the gap set) is a complete description: its size
is the genus, its maximum is the Frobenius number, and every larger
integer is a member.  For the monomial curve singularity with value
semigroup Gamma, the genus equals the local delta invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd


class InfiniteComplementError(ValueError):
    """The generators have gcd > 1, so the complement in N is infinite."""


def _normalized_generators(gens) -> tuple[int, ...]:
    gen_list = sorted({int(g) for g in gens})
    if not gen_list:
        raise ValueError("at least one generator is required")
    if gen_list[0] < 1:
        raise ValueError(f"generators must be positive, got {gen_list[0]}")
    if reduce(gcd, gen_list) != 1:
        raise InfiniteComplementError(
            f"gcd of generators {gen_list} exceeds 1; the complement is infinite"
        )
    return tuple(gen_list)


def _gap_sieve(gen_list: tuple[int, ...]) -> tuple[int, ...]:
    # Reachability sieve.  Once min(gen_list) consecutive members appear,
    # every larger integer is a member, so the sieve may stop there.
    smallest = gen_list[0]
    member = [True]
    run = 1
    n = 0
    while run < smallest:
        n += 1
        reachable = any(n >= g and member[n - g] for g in gen_list)
        member.append(reachable)
        run = run + 1 if reachable else 0
    return tuple(i for i, ok in enumerate(member) if not ok)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A semigroup held as its generator set plus its full gap set."""

    generators: tuple[int, ...]
    gap_set: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "gap_set", tuple(self.gap_set))
        gens = _normalized_generators(self.generators)
        if gens != self.generators:
            raise ValueError("generators must be a sorted set of positive ints")
        if self.gap_set != _gap_sieve(gens):
            raise ValueError(
                f"gap set {list(self.gap_set)} does not match the semigroup "
                f"generated by {list(gens)}"
            )

    @cached_property
    def _gap_lookup(self) -> frozenset[int]:
        return frozenset(self.gap_set)

    @property
    def genus(self) -> int:
        """Number of gaps; the delta invariant of the monomial curve."""
        return len(self.gap_set)

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 when there is none (the semigroup is all of N)."""
        return self.gap_set[-1] if self.gap_set else -1

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gap_lookup

    def __str__(self) -> str:
        return "⟨" + ",".join(str(g) for g in self.generators) + "⟩"


def semigroup_from_generators(gens) -> NumericalSemigroup:
    """Build the semigroup generated by ``gens``.

    The generators are kept as given (deduplicated and sorted); minimality
    is not required.  Raises ``InfiniteComplementError`` when their gcd
    exceeds 1 and ``ValueError`` for an empty or non-positive input.
    """
    gen_list = _normalized_generators(gens)
    return NumericalSemigroup(gen_list, _gap_sieve(gen_list))


def membership(s: NumericalSemigroup, n: int) -> bool:
    """True when n is a member: n >= 0 and n is not a gap."""
    return n in s
