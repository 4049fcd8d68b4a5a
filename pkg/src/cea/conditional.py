"""Conditional objects (a|b) and their compact operational calculus.

A conditional object is stored canonically as the pair (a&b, b), so two
conditionals are equal exactly when both components match. The operators
below are closed-form: they never enumerate the underlying coset. The
coset module provides the ground-truth classwise counterparts used to
validate every formula here.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterator, Sequence

from .algebra import AtomSpace, Event, material_implies


class ConditionalObject:
    """Canonical pair (consequent, antecedent) with consequent <= antecedent.

    ``&``, ``|``, ``^``, ``~`` are the conditional meet, join, ring sum
    and complement; ``<=`` is the conditional partial order.
    """

    __slots__ = ("consequent", "antecedent")

    def __init__(self, consequent: Event, antecedent: Event):
        if not consequent <= antecedent:
            raise ValueError("consequent must be contained in the antecedent")
        self.consequent = consequent
        self.antecedent = antecedent

    @property
    def space(self) -> AtomSpace:
        return self.antecedent.space

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConditionalObject)
            and self.consequent == other.consequent
            and self.antecedent == other.antecedent
        )

    def __hash__(self) -> int:
        return hash((self.consequent.mask, self.antecedent.mask))

    def __repr__(self) -> str:
        return f"({self.consequent!r}|{self.antecedent!r})"

    def __invert__(self) -> "ConditionalObject":
        return ConditionalObject(self.antecedent & ~self.consequent, self.antecedent)

    def __xor__(self, other: "ConditionalObject") -> "ConditionalObject":
        ant = self.antecedent & other.antecedent
        return ConditionalObject((self.consequent ^ other.consequent) & ant, ant)

    def __and__(self, other: "ConditionalObject") -> "ConditionalObject":
        ant = (
            (self.antecedent & ~self.consequent)
            | (other.antecedent & ~other.consequent)
            | (self.antecedent & other.antecedent)
        )
        return ConditionalObject(self.consequent & other.consequent, ant)

    def __or__(self, other: "ConditionalObject") -> "ConditionalObject":
        cons = self.consequent | other.consequent
        return ConditionalObject(cons, cons | (self.antecedent & other.antecedent))

    def __le__(self, other: "ConditionalObject") -> bool:
        """Order by consequent growth and counter-consequent shrinkage.

        Agrees with the definitional forms A == A & C and C == A | C.
        """
        return (
            self.consequent <= other.consequent
            and (other.antecedent & ~other.consequent)
            <= (self.antecedent & ~self.consequent)
        )

    @property
    def is_embedded_event(self) -> bool:
        """True when the antecedent is 1, i.e. this is a plain event."""
        return self.antecedent.is_one


def cond(a: Event, b: Event) -> ConditionalObject:
    """The conditional object (a|b), canonicalized to (a&b, b).

    b may be the zero event; (a|0) is the whole-algebra conditional (0|0).
    """
    return ConditionalObject(a & b, b)


def embed(a: Event) -> ConditionalObject:
    """An ordinary event viewed inside the conditional space, as (a|1)."""
    return ConditionalObject(a, a.space.one)


def conjoin_all(items: Sequence[ConditionalObject]) -> ConditionalObject:
    """n-ary meet in closed form; equals any fold of the binary meet."""
    if not items:
        raise ValueError("need at least one conditional")
    cons = reduce(lambda x, y: x & y, (c.consequent for c in items))
    all_ant = reduce(lambda x, y: x & y, (c.antecedent for c in items))
    ant = all_ant
    for c in items:
        ant = ant | (c.antecedent & ~c.consequent)
    return ConditionalObject(cons & ant, ant)


def disjoin_all(items: Sequence[ConditionalObject]) -> ConditionalObject:
    """n-ary join in closed form; equals any fold of the binary join."""
    if not items:
        raise ValueError("need at least one conditional")
    cons = reduce(lambda x, y: x | y, (c.consequent for c in items))
    all_ant = reduce(lambda x, y: x & y, (c.antecedent for c in items))
    return ConditionalObject(cons, cons | all_ant)


def sum_all(items: Sequence[ConditionalObject]) -> ConditionalObject:
    """n-ary ring sum in closed form; equals any fold of the binary sum."""
    if not items:
        raise ValueError("need at least one conditional")
    cons = reduce(lambda x, y: x ^ y, (c.consequent for c in items))
    ant = reduce(lambda x, y: x & y, (c.antecedent for c in items))
    return ConditionalObject(cons & ant, ant)


def chain(first: ConditionalObject, second: ConditionalObject) -> ConditionalObject:
    """Product of two conditionals, read as chained conditioning.

    For first = (a|b&c) and second = (b|c) the product collapses to
    (a&b|c); more generally the product of (a_i|a_{i+1}) along a chain
    a_1 <= ... <= a_m telescopes to (a_1|a_m).
    """
    return first & second


def bounds(a: ConditionalObject) -> tuple[Event, Event]:
    """Smallest and largest events of the coset: (a&b, b => a)."""
    return a.consequent, material_implies(a.antecedent, a.consequent)


def bayes_components(
    b: Event, partition: Sequence[Event]
) -> list[ConditionalObject]:
    """The components (b|a_j) over a disjoint exhaustive partition.

    Checks the partition, and verifies the reconstruction identities:
    the embedded products (b|a_j) & a_j sum back to b, and agree with
    (a_j|b) & b and with the plain event a_j & b.
    """
    if not partition:
        raise ValueError("partition must be nonempty")
    space = b.space
    union = space.zero
    for i, part in enumerate(partition):
        if part & union:
            raise ValueError(f"partition elements overlap at index {i}")
        union = union | part
    if not union.is_one:
        raise ValueError("partition does not cover the space")

    comps = [cond(b, aj) for aj in partition]
    total = embed(space.zero)
    for aj, cj in zip(partition, comps):
        prod = cj & embed(aj)
        other = cond(aj, b) & embed(b)
        if not (prod == embed(aj & b) == other):
            raise AssertionError("conditional Bayes identity violated")
        total = total ^ prod
    if total != embed(b):
        raise AssertionError("partition components do not reconstruct the event")
    return comps


def conditionals(space: AtomSpace) -> Iterator[ConditionalObject]:
    """All 3^n canonical conditionals, antecedent-major ascending order."""
    for b_mask in range(1 << space.atom_count):
        for a_mask in range(b_mask + 1):
            if a_mask & ~b_mask == 0:
                yield ConditionalObject(
                    space.event_from_mask(a_mask), space.event_from_mask(b_mask)
                )
