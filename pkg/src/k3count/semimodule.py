"""Delta-sets over a numerical semigroup and their necklace classification.

A Delta-set for Gamma is a subset D of N with Gamma + D inside D whose
complement has exactly genus(Gamma) elements.  The number of these sets
is the local multiplicity invariant epsilon of the monomial curve
singularity with value semigroup Gamma.

For a two-generator semigroup <p,q> the Delta-sets biject with p-element
subsets of {1..p+q} taken up to cyclic rotation.  Each subset S drives
the offset recurrence

    a(i+1) = a(i) + q   if i is in S,
    a(i+1) = a(i) - p   otherwise,

and D is recovered as the union of the arithmetic progressions
a(s) + p*N over s in S.  Rotating S shifts the sequence a and leaves D
unchanged, so rotation classes count the sets: binomial(p+q,p)/(p+q)
exactly, the rotation action being free because gcd(p, p+q) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb, gcd

from .numsg import NumericalSemigroup, semigroup_from_generators


class InvalidModuleError(ValueError):
    """The proposed set is not closed under adding semigroup members."""


@dataclass(frozen=True)
class GammaModule:
    """A Delta-set, stored as its finite gap set N minus Delta."""

    semigroup: NumericalSemigroup
    gap_set: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gap_set", tuple(self.gap_set))
        gaps = self.gap_set
        if list(gaps) != sorted(set(gaps)) or (gaps and gaps[0] < 0):
            raise ValueError("gap set must be sorted distinct non-negative ints")
        if len(gaps) != self.semigroup.genus:
            raise InvalidModuleError(
                f"cogenus {len(gaps)} differs from the semigroup genus "
                f"{self.semigroup.genus}"
            )
        _check_closure(set(gaps), self.semigroup)

    @cached_property
    def _gap_lookup(self) -> frozenset[int]:
        return frozenset(self.gap_set)

    @property
    def min_element(self) -> int:
        """Smallest member of Delta; at most genus, since all below are gaps."""
        n = 0
        while n in self._gap_lookup:
            n += 1
        return n

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gap_lookup

    def __str__(self) -> str:
        return "gaps={" + ",".join(str(g) for g in self.gap_set) + "}"


def _check_closure(gaps: set[int], s: NumericalSemigroup) -> None:
    # Members beyond the largest gap stay members after adding a generator,
    # so checking d + generator for members d up to that gap is complete.
    top = max(gaps) if gaps else -1
    for d in range(top + 1):
        if d in gaps:
            continue
        for g in s.generators:
            if d + g <= top and (d + g) in gaps:
                raise InvalidModuleError(
                    f"not closed: {d} is a member but {d} + {g} is a gap"
                )


def normalize_translate(gaps_of_raw_delta, s: NumericalSemigroup) -> GammaModule:
    """Slide a closed set Delta' to the unique translate with full cogenus.

    Shifting Delta' by one changes its gap count by exactly one, so among
    all translates inside N exactly one has genus(Gamma) gaps.  The input
    is given by its gap set; anything not Gamma-closed is rejected.
    """
    gaps = sorted({int(g) for g in gaps_of_raw_delta})
    if gaps and gaps[0] < 0:
        raise ValueError("gap values must be non-negative")
    _check_closure(set(gaps), s)
    shift = len(gaps) - s.genus
    if shift >= 0:
        # moving left by `shift`: the positions below it must all be gaps
        if set(range(shift)) - set(gaps):
            raise InvalidModuleError(
                "cannot reach the required cogenus by translation"
            )
        new_gaps = tuple(g - shift for g in gaps if g >= shift)
    else:
        new_gaps = tuple(range(-shift)) + tuple(g - shift for g in gaps)
    return GammaModule(s, new_gaps)


def enumerate_delta_sets(s: NumericalSemigroup) -> list[GammaModule]:
    """All Delta-sets for ``s``, sorted by gap set.

    Every gap of a Delta-set is at most frobenius + genus: the minimal
    element m satisfies m <= genus (everything below it is a gap) and
    m + Gamma is contained in Delta, so no gap exceeds m + frobenius.
    The search walks positions 0..bound deciding gap or member, pruning
    when a gap would sit above member + generator, when the gap budget is
    spent, or when too few positions remain to spend it.
    """
    genus = s.genus
    bound = s.frobenius + genus
    gens = s.generators
    member = [False] * (bound + 1)
    chosen: list[int] = []
    found: list[tuple[int, ...]] = []

    def walk(pos: int, budget: int) -> None:
        if budget == 0:
            found.append(tuple(chosen))
            return
        if pos > bound or budget > bound - pos + 1:
            return
        if not any(pos >= g and member[pos - g] for g in gens):
            chosen.append(pos)
            walk(pos + 1, budget - 1)
            chosen.pop()
        member[pos] = True
        walk(pos + 1, budget)
        member[pos] = False

    walk(0, genus)
    return [GammaModule(s, gaps) for gaps in sorted(found)]


def minimal_generators(m: GammaModule) -> tuple[int, ...]:
    """Smallest G with Delta equal to the union of g + Gamma over g in G.

    An element is a generator exactly when subtracting any nonzero member
    of Gamma leaves Delta.  Elements above max gap + min nonzero member
    are never generators, which bounds the scan.
    """
    s = m.semigroup
    gaps = set(m.gap_set)
    top = max(gaps) if gaps else -1
    least = 1
    while least not in s:
        least += 1
    out = []
    for d in range(top + least + 1):
        if d in gaps:
            continue
        reachable = any(
            g in s and (d - g) not in gaps for g in range(1, d + 1)
        )
        if not reachable:
            out.append(d)
    return tuple(out)


def count_necklaces(p: int, q: int) -> int:
    """Rotation classes of p-subsets of {1..p+q}: binomial(p+q,p)/(p+q)."""
    _require_coprime(p, q)
    total, rem = divmod(comb(p + q, p), p + q)
    assert rem == 0  # rotation acts freely when gcd(p, p+q) = 1
    return total


def _require_coprime(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got gcd({p}, {q}) = {gcd(p, q)}")


@dataclass(frozen=True)
class NecklaceProfile:
    """A rotation class of p-subsets of {1..p+q} with its offset sequence.

    ``members`` is the lexicographically smallest rotation of the class
    (as a 0/1 characteristic word).  ``a_seq`` holds a(1..p+q) for that
    rotation, translated so that the progressions a(s) + p*N over
    s in members form the cogenus-normalized Delta directly.
    """

    p: int
    q: int
    members: tuple[int, ...]
    a_seq: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "a_seq", tuple(self.a_seq))
        _require_coprime(self.p, self.q)
        n = self.p + self.q
        if len(self.members) != self.p:
            raise ValueError(f"member set must have exactly {self.p} elements")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and distinct")
        if self.members and not (1 <= self.members[0] and self.members[-1] <= n):
            raise ValueError(f"members must lie in 1..{n}")
        word = _word(self.members, n)
        if word != min(word[i:] + word[:i] for i in range(n)):
            raise ValueError("members must be the least rotation of the class")
        if len(self.a_seq) != n:
            raise ValueError(f"a_seq must have length {n}")
        if len(set(self.a_seq)) != n or min(self.a_seq) < 0:
            raise ValueError("a_seq values must be distinct non-negative ints")
        in_s = set(self.members)
        for i in range(1, n + 1):
            step = self.q if i in in_s else -self.p
            if self.a_seq[i % n] != self.a_seq[i - 1] + step:
                raise ValueError(f"offset recurrence fails at position {i}")


def _word(members, n: int) -> tuple[int, ...]:
    in_s = set(members)
    return tuple(1 if i + 1 in in_s else 0 for i in range(n))


def necklace_to_delta(members, p: int, q: int) -> GammaModule:
    """Run the offset recurrence on a p-subset of {1..p+q} and read off Delta.

    The start value p*q keeps every intermediate offset non-negative (at
    most q downward steps of size p can precede anything).  The resulting
    union of progressions is translated to the unique cogenus-correct
    representative, so any rotation of the same subset lands on the same
    module.
    """
    _require_coprime(p, q)
    chosen = sorted({int(i) for i in members})
    n = p + q
    if len(chosen) != p:
        raise ValueError(f"need exactly {p} members, got {len(chosen)}")
    if chosen and not (1 <= chosen[0] and chosen[-1] <= n):
        raise ValueError(f"members must lie in 1..{n}")
    in_s = set(chosen)
    a = [0] * (n + 1)
    a[1] = p * q
    for i in range(1, n):
        a[i + 1] = a[i] + q if i in in_s else a[i] - p
    starts = [a[s] for s in chosen]
    assert min(a[1:]) >= 0 and len({v % p for v in starts}) == p
    raw_gaps = [g for v in starts for g in range(v % p, v, p)]
    return normalize_translate(raw_gaps, semigroup_from_generators((p, q)))


def delta_to_necklace(m: GammaModule, p: int, q: int) -> NecklaceProfile:
    """Recover the rotation class of a module over <p,q>.

    The p smallest members in each residue class mod p and, shifted up by
    p, the q smallest members in each class mod q form p+q distinct
    offsets.  Following "+q from the first group, -p from the second"
    traverses them in a single cycle; the positions of first-group visits
    along that cycle are the subset, read in its least rotation.
    """
    _require_coprime(p, q)
    gamma = semigroup_from_generators((p, q))
    if m.semigroup.gap_set != gamma.gap_set:
        raise ValueError(
            f"module lives over {m.semigroup}, not over {gamma}"
        )
    gaps = set(m.gap_set)

    def least_in_class(residue: int, step: int) -> int:
        v = residue
        while v in gaps:
            v += step
        return v

    p_offsets = [least_in_class(r, p) for r in range(p)]
    q_offsets = [least_in_class(r, q) + p for r in range(q)]
    values = p_offsets + q_offsets
    value_set = set(values)
    assert len(value_set) == p + q
    p_set = set(p_offsets)

    walk = [values[0]]
    for _ in range(p + q - 1):
        v = walk[-1]
        nxt = v + q if v in p_set else v - p
        assert nxt in value_set
        walk.append(nxt)
    n = p + q
    assert len(set(walk)) == n  # the successor map is a single (p+q)-cycle
    word = tuple(1 if v in p_set else 0 for v in walk)
    start = min(range(n), key=lambda i: word[i:] + word[:i])
    canon = word[start:] + word[:start]
    members = tuple(i + 1 for i, bit in enumerate(canon) if bit)
    a_seq = tuple(walk[(i + start) % n] for i in range(n))
    return NecklaceProfile(p, q, members, a_seq)
