"""Fuzzy intervals: fuzzy sets whose every cut is a crisp closed interval.

The classification ladder

    fuzzy interval  ⊂  fuzzy convex sublattice  ⊂  fuzzy sublattice

is decided by deliberately independent implementations (cut-based and
pointwise); the public ``is_*`` predicates evaluate more than one route and
assert that they agree.  On a finite carrier the first two classes
coincide, so ``classify`` can only ever report a convexity witness, never
an interval-only one — the code keeps the extra rung anyway.

Meet of fuzzy intervals is the pointwise minimum (which provably keeps
every cut an interval).  Join is *not* the pointwise maximum: it is
reconstructed from the per-grade hulls of the operand cuts, the smallest
fuzzy interval above both operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotAFuzzyInterval
from .fuzzysets import (GRADE_ONE, GRADE_ZERO, FuzzySet, _require_same_lattice,
                        format_grade)
from .intervals import CrispInterval
from .lattice import Element, FiniteLattice, format_element, iter_bits

LADDER = ("fuzzy-interval", "fuzzy-convex-sublattice", "fuzzy-sublattice", "none")


# -- violation searches (one per implementation route) ---------------------


def sublattice_violation(m: FuzzySet):
    """First pair (x, y) with M(x⊓y) ∧ M(x⊔y) < M(x) ∧ M(y), else None.

    Pointwise route: no cuts are materialized.
    """
    lat, vals = m.lattice, m.values
    n = len(lat.elements)
    for i in range(n):
        for j in range(i, n):  # the condition is symmetric in (x, y)
            a = lat.meet_index(i, j)
            b = lat.join_index(i, j)
            if min(vals[a], vals[b]) < min(vals[i], vals[j]):
                return (lat.elements[i], lat.elements[j])
    return None


def sublattice_cut_violation(m: FuzzySet):
    """First (p, x, y) with x, y in the p-cut but x⊓y or x⊔y outside it."""
    lat = m.lattice
    for p in m.thresholds():
        mask = m.cut_mask(p)
        members = list(iter_bits(mask))
        for pos, i in enumerate(members):
            for j in members[pos:]:
                if not mask >> lat.meet_index(i, j) & 1 or not mask >> lat.join_index(i, j) & 1:
                    return (p, lat.elements[i], lat.elements[j])
    return None


def is_fuzzy_sublattice(m: FuzzySet) -> bool:
    """Every cut is a sublattice; both routes are evaluated and must agree."""
    by_points = sublattice_violation(m) is None
    by_cuts = sublattice_cut_violation(m) is None
    assert by_points == by_cuts, "pointwise and cut-based sublattice tests disagree"
    return by_points


def convex_violation(m: FuzzySet):
    """First (x, y, z) with z between x⊓y and x⊔y but M(z) < M(x⊓y) ∧ M(x⊔y).

    Pointwise route.  Returns the sublattice violation pair first if there
    is one (convexity presupposes the sublattice inequality).  Scanning z
    over the whole segment, x and y included, also enforces the boundary
    equality M(x⊓y) ∧ M(x⊔y) = M(x) ∧ M(y): a strict excess would make x
    or y itself a witness.
    """
    pair = sublattice_violation(m)
    if pair is not None:
        return pair
    lat, vals = m.lattice, m.values
    n = len(lat.elements)
    for i in range(n):
        for j in range(i, n):
            a = lat.meet_index(i, j)
            b = lat.join_index(i, j)
            bound = min(vals[a], vals[b])
            for k in iter_bits(lat.between_mask(a, b)):
                if vals[k] < bound:
                    return (lat.elements[i], lat.elements[j], lat.elements[k])
    return None


def convex_cut_violation(m: FuzzySet):
    """First (p, x, y, z) with x, y in the p-cut and z in [x⊓y, x⊔y] outside it."""
    lat = m.lattice
    for p in m.thresholds():
        mask = m.cut_mask(p)
        members = list(iter_bits(mask))
        for pos, i in enumerate(members):
            for j in members[pos:]:
                segment = lat.between_mask(lat.meet_index(i, j), lat.join_index(i, j))
                outside = segment & ~mask
                if outside:
                    z = next(iter_bits(outside))
                    e = lat.elements
                    return (p, e[i], e[j], e[z])
    return None


def is_fuzzy_convex_sublattice(m: FuzzySet) -> bool:
    """Every cut is a convex sublattice; both routes must agree."""
    by_points = convex_violation(m) is None
    by_cuts = convex_cut_violation(m) is None
    assert by_points == by_cuts, "pointwise and cut-based convexity tests disagree"
    return by_points


def interval_cut_violation(m: FuzzySet):
    """First (p, z) where the p-cut omits z between its own inf and sup.

    Direct route: a cut is a closed interval exactly when it contains
    everything between its greatest lower and least upper bound.
    """
    lat = m.lattice
    for p in m.thresholds():
        mask = m.cut_mask(p)
        if not mask:
            continue
        bits = list(iter_bits(mask))
        lo = lat.meet_indices(bits)
        hi = lat.join_indices(bits)
        outside = lat.between_mask(lo, hi) & ~mask
        if outside:
            return (p, lat.elements[next(iter_bits(outside))])
    return None


def interval_endpoint_violation(m: FuzzySet):
    """Convexity plus the boundary-grade conditions M(⊓cut) ≥ min and M(⊔cut) ≥ min.

    On a finite carrier the boundary conditions are implied by convexity,
    but they are checked independently here to keep this route distinct.
    """
    witness = convex_violation(m)
    if witness is not None:
        return witness
    lat, vals = m.lattice, m.values
    for p in m.thresholds():
        mask = m.cut_mask(p)
        if not mask:
            continue
        bits = list(iter_bits(mask))
        bound = min(vals[i] for i in bits)
        lo = lat.meet_indices(bits)
        hi = lat.join_indices(bits)
        if vals[lo] < bound:
            return (p, lat.elements[lo])
        if vals[hi] < bound:
            return (p, lat.elements[hi])
    return None


def is_fuzzy_interval(m: FuzzySet) -> bool:
    """Every cut is a closed interval; three routes are evaluated and must agree.

    Route (a) inspects cut shapes directly, route (b) goes through
    convexity plus boundary grades, route (c) is cut-based convexity alone
    (equivalent on finite carriers).
    """
    a = interval_cut_violation(m) is None
    b = interval_endpoint_violation(m) is None
    c = convex_cut_violation(m) is None
    assert a == b == c, "fuzzy-interval tests disagree"
    return a


@dataclass(frozen=True)
class Classification:
    """Strongest ladder class, plus the first violation of the next one up."""
    label: str
    failed: str | None = None
    witness: tuple | None = None


def classify(m: FuzzySet) -> Classification:
    witness = sublattice_violation(m)
    if witness is not None:
        return Classification("none", "fuzzy-sublattice", witness)
    witness = convex_violation(m)
    if witness is not None:
        return Classification("fuzzy-sublattice", "fuzzy-convex-sublattice", witness)
    witness = interval_cut_violation(m)
    if witness is not None:  # unreachable on finite carriers; kept for the full ladder
        return Classification("fuzzy-convex-sublattice", "fuzzy-interval", witness)
    return Classification("fuzzy-interval")


# -- the fuzzy interval type ------------------------------------------------


@dataclass(frozen=True)
class EndpointFunctions:
    """Cut endpoints per threshold.

    ``lower`` is isotone and ``upper`` antitone in the threshold; an empty
    cut gets the crossed pair (top, bottom), consistent with folding meet
    and join over no members.
    """
    thresholds: tuple[Fraction, ...]
    lower: Mapping[Fraction, Element]
    upper: Mapping[Fraction, Element]


class FuzzyInterval:
    """A fuzzy set validated so that every cut is a crisp closed interval.

    The constructor re-validates unconditionally, so operation results are
    checked the moment they are built.
    """

    __slots__ = ("fuzzy",)

    def __init__(self, fuzzy: FuzzySet):
        witness = interval_cut_violation(fuzzy)
        if witness is not None:
            p, z = witness
            raise NotAFuzzyInterval(
                f"cut at {format_grade(p)} is not a closed interval: it omits "
                f"{format_element(z)} between its bounds")
        self.fuzzy = fuzzy

    @classmethod
    def from_interval(cls, interval: CrispInterval) -> "FuzzyInterval":
        """The {0,1}-valued indicator of a crisp interval."""
        return cls(FuzzySet.characteristic(interval.lattice, interval.members()))

    @classmethod
    def constant(cls, lattice: FiniteLattice, grade) -> "FuzzyInterval":
        return cls(FuzzySet.constant(lattice, grade))

    @property
    def lattice(self) -> FiniteLattice:
        return self.fuzzy.lattice

    @property
    def values(self):
        return self.fuzzy.values

    def __call__(self, element) -> Fraction:
        return self.fuzzy(element)

    def thresholds(self) -> tuple[Fraction, ...]:
        return self.fuzzy.thresholds()

    def cut(self, p) -> frozenset:
        return self.fuzzy.cut(p)

    def cut_interval(self, p) -> CrispInterval:
        """The p-cut as a crisp interval."""
        mask = self.fuzzy.cut_mask(p)
        lat = self.lattice
        if not mask:
            return CrispInterval._from_indices(lat, None, None)
        bits = list(iter_bits(mask))
        return CrispInterval._from_indices(lat, lat.meet_indices(bits), lat.join_indices(bits))

    def endpoint_functions(self) -> EndpointFunctions:
        lat = self.lattice
        lower: dict = {}
        upper: dict = {}
        for p in self.thresholds():
            mask = self.fuzzy.cut_mask(p)
            if mask:
                bits = list(iter_bits(mask))
                lower[p] = lat.elements[lat.meet_indices(bits)]
                upper[p] = lat.elements[lat.join_indices(bits)]
            else:
                lower[p] = lat.top
                upper[p] = lat.bottom
        return EndpointFunctions(self.thresholds(), lower, upper)

    def leq(self, other: "FuzzyInterval") -> bool:
        return self.fuzzy.leq(other.fuzzy)

    def meet(self, other: "FuzzyInterval") -> "FuzzyInterval":
        """Pointwise minimum (cutwise: intersection of the operand cuts)."""
        return FuzzyInterval(self.fuzzy.meet(other.fuzzy))

    def join(self, other: "FuzzyInterval") -> "FuzzyInterval":
        """Smallest fuzzy interval above both operands.

        Built cutwise: at every threshold of either operand take the hull
        of the two cuts, then reconstruct the membership as the largest
        threshold whose hull contains the element.  Cuts are constant
        between consecutive thresholds, so no other grade can matter.
        """
        lat = _require_same_lattice(self.lattice, other.lattice)
        values = [GRADE_ZERO] * len(lat.elements)
        for p in sorted({*self.thresholds(), *other.thresholds()}):
            hull = self.cut_interval(p) | other.cut_interval(p)
            for i in iter_bits(hull.members_mask()):
                values[i] = p
        return FuzzyInterval(FuzzySet.from_values(lat, values))

    def __eq__(self, other) -> bool:
        if isinstance(other, FuzzyInterval):
            return self.fuzzy == other.fuzzy
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.fuzzy)

    def __repr__(self) -> str:
        return f"FuzzyInterval({self.fuzzy!r})"


def meet_family(lattice: FiniteLattice,
                intervals: Iterable[FuzzyInterval]) -> FuzzyInterval:
    """Pointwise infimum of a family; the empty family gives constant 1."""
    acc = None
    for fi in intervals:
        _require_same_lattice(lattice, fi.lattice)
        acc = fi.values if acc is None else tuple(map(min, acc, fi.values))
    if acc is None:
        acc = (GRADE_ONE,) * len(lattice.elements)
    return FuzzyInterval(FuzzySet.from_values(lattice, acc))


def join_family(lattice: FiniteLattice,
                intervals: Iterable[FuzzyInterval]) -> FuzzyInterval:
    """Fold of the binary join; the empty family gives constant 0.

    Fold order is irrelevant because the binary join is associative and
    commutative (the law-verification suite checks exactly that).
    """
    acc = None
    for fi in intervals:
        _require_same_lattice(lattice, fi.lattice)
        acc = fi if acc is None else acc.join(fi)
    if acc is None:
        acc = FuzzyInterval.constant(lattice, GRADE_ZERO)
    return acc
