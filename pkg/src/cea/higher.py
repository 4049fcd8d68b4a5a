"""Iterated conditionals: one conditional object conditioned on another.

An iterated conditional is the full set of conditionals X satisfying
X & C == A & C for the given pair (A, C) - the inverse image of the
one-sided product. The numerator is normalized to A & C, which always
lies below C, so stored parameters satisfy the same containment
discipline as single conditionals.

The class-reduction operator maps an iterated conditional back into the
single-conditional space by taking the union of its member cosets; the
result has a closed form which is checked against the literal union on
every call.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .algebra import AtomSpace, Event
from .conditional import ConditionalObject, cond, conditionals
from .coset import SpaceTooLargeError, expand, recognize

MAX_ITER_ATOMS = 4


class ReductionMismatchError(AssertionError):
    """The literal member-coset union disagreed with the closed form."""


class IteratedConditional:
    """Member set of (numerator | denominator) over conditional objects.

    Fields: ``numerator`` (normalized to numerator & denominator),
    ``denominator``, ``members`` (frozenset of conditionals), and
    ``beta``, the event parameter that together with the numerator pair
    characterizes the member set up to equality.
    """

    __slots__ = ("numerator", "denominator", "members", "beta")

    def __init__(
        self,
        numerator: ConditionalObject,
        denominator: ConditionalObject,
        members: frozenset[ConditionalObject],
        beta: Event,
    ):
        self.numerator = numerator
        self.denominator = denominator
        self.members = members
        self.beta = beta

    @property
    def space(self) -> AtomSpace:
        return self.numerator.space

    def __repr__(self) -> str:
        return f"({self.numerator!r}|{self.denominator!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, IteratedConditional):
            return NotImplemented
        return iter_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.numerator, self.beta))


def _beta(numerator: ConditionalObject, denominator: ConditionalObject) -> Event:
    b = numerator.antecedent
    c = denominator.consequent
    d = denominator.antecedent
    return (~b & ~d) | (~c & d)


def iter_cond(a: ConditionalObject, c: ConditionalObject) -> IteratedConditional:
    """Build (a|c) over conditionals by exhaustive member scan.

    The member predicate only sees a through a & c, so the numerator is
    stored in that normalized form. The scan covers all 3^n canonical
    pairs and is bounded to small spaces.
    """
    space = a.space
    if space.atom_count > MAX_ITER_ATOMS:
        raise SpaceTooLargeError(
            f"iterated conditionals scan 3^n pairs; bound is {MAX_ITER_ATOMS} atoms"
        )
    numerator = a & c
    members = frozenset(x for x in conditionals(space) if (x & c) == numerator)
    return IteratedConditional(numerator, c, members, _beta(numerator, c))


def iter_equal(x: IteratedConditional, y: IteratedConditional) -> bool:
    """Equality via the characteristic triple (consequent, antecedent, beta).

    Agrees with literal member-set equality; the verification suites
    check that equivalence exhaustively.
    """
    return (
        x.numerator == y.numerator
        and x.beta == y.beta
    )


def union_of_members(members: Iterable[ConditionalObject]) -> frozenset[Event]:
    """Union of the literal cosets of a class of conditionals."""
    out: set[Event] = set()
    for m in members:
        out |= expand(m).elements
    return frozenset(out)


def reduce_u(x: IteratedConditional) -> ConditionalObject:
    """Collapse an iterated conditional to a single conditional.

    Computes the literal union of the member cosets, recognizes it as a
    coset, and cross-checks the closed form: keep the numerator's
    consequent, and shrink the numerator's antecedent by the region
    where the denominator fails outright.
    """
    space = x.space
    union = union_of_members(x.members)
    literal = recognize(space, union)
    if literal is None:
        raise ReductionMismatchError("member-coset union is not a coset")
    c = x.denominator.consequent
    d = x.denominator.antecedent
    closed = cond(x.numerator.consequent, x.numerator.antecedent & ~(~c & d))
    if literal != closed:
        raise ReductionMismatchError(
            f"literal union {literal!r} differs from closed form {closed!r}"
        )
    return literal


def members_extension(
    op: Callable[[ConditionalObject, ConditionalObject], ConditionalObject],
    x: IteratedConditional,
    y: IteratedConditional,
) -> frozenset[ConditionalObject]:
    """Natural class extension of a binary conditional operation to
    iterated conditionals: apply it memberwise across both classes."""
    return frozenset(op(p, q) for p in x.members for q in y.members)


def members_complement(x: IteratedConditional) -> frozenset[ConditionalObject]:
    return frozenset(~p for p in x.members)
