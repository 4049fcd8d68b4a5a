"""Finite Boolean algebra over an indexed atom set.

Events are immutable bit-vectors over the atoms of an :class:`AtomSpace`.
The algebra carries both the lattice structure (meet, join, complement)
and the Boolean ring structure (symmetric difference as +, meet as *),
plus material implication and the subset partial order.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class MismatchedSpaceError(ValueError):
    """Raised when two events from different atom spaces are combined."""


class AtomSpace:
    """A finite Boolean algebra presented by its atoms.

    Atoms are indexed 0..n-1; every event is a subset of the atoms,
    stored as an int bitmask. Two spaces are equal when they have the
    same labels in the same order.
    """

    __slots__ = ("atom_count", "atom_labels", "full_mask", "_label_index")

    def __init__(self, atom_count: int, atom_labels: list[str] | None = None):
        if atom_count < 1:
            raise ValueError("atom space needs at least one atom")
        if atom_labels is None:
            atom_labels = [str(i) for i in range(atom_count)]
        if len(atom_labels) != atom_count:
            raise ValueError("label count does not match atom count")
        if len(set(atom_labels)) != atom_count:
            raise ValueError("atom labels must be unique")
        self.atom_count = atom_count
        self.atom_labels = list(atom_labels)
        self.full_mask = (1 << atom_count) - 1
        self._label_index = {lab: i for i, lab in enumerate(atom_labels)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AtomSpace)
            and (self is other or self.atom_labels == other.atom_labels)
        )

    def __hash__(self) -> int:
        return hash((self.atom_count, self.atom_labels[0], self.atom_labels[-1]))

    def __repr__(self) -> str:
        return f"AtomSpace({self.atom_count})"

    def event(self, atoms: Iterable[int] = ()) -> "Event":
        mask = 0
        for i in atoms:
            if not 0 <= i < self.atom_count:
                raise ValueError(f"atom index {i} out of range")
            mask |= 1 << i
        return Event(self, mask)

    def event_from_mask(self, mask: int) -> "Event":
        return Event(self, mask & self.full_mask)

    def atom_index(self, label: str) -> int:
        return self._label_index[label]

    @property
    def zero(self) -> "Event":
        return Event(self, 0)

    @property
    def one(self) -> "Event":
        return Event(self, self.full_mask)

    def atom(self, i: int) -> "Event":
        if not 0 <= i < self.atom_count:
            raise ValueError(f"atom index {i} out of range")
        return Event(self, 1 << i)

    def events(self) -> Iterator["Event"]:
        """All 2^n events in canonical (ascending bitmask) order."""
        for mask in range(1 << self.atom_count):
            yield Event(self, mask)


class Event:
    """An immutable subset of the atoms of a fixed space.

    Operators follow the Boolean ring/lattice reading:
    ``&`` meet, ``|`` join, ``^`` ring sum (symmetric difference),
    ``~`` complement, ``<=`` the subset partial order.
    """

    __slots__ = ("space", "mask")

    def __init__(self, space: AtomSpace, mask: int):
        self.space = space
        self.mask = mask

    def _coerced(self, other: "Event") -> int:
        if self.space is not other.space and self.space != other.space:
            raise MismatchedSpaceError("events belong to different atom spaces")
        return other.mask

    def __and__(self, other: "Event") -> "Event":
        return Event(self.space, self.mask & self._coerced(other))

    def __or__(self, other: "Event") -> "Event":
        return Event(self.space, self.mask | self._coerced(other))

    def __xor__(self, other: "Event") -> "Event":
        return Event(self.space, self.mask ^ self._coerced(other))

    def __invert__(self) -> "Event":
        return Event(self.space, self.space.full_mask & ~self.mask)

    def __le__(self, other: "Event") -> bool:
        return self.mask & ~self._coerced(other) == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Event)
            and self.mask == other.mask
            and (self.space is other.space or self.space == other.space)
        )

    def __hash__(self) -> int:
        return hash(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, atom_index: int) -> bool:
        return bool(self.mask >> atom_index & 1)

    def atoms(self) -> list[int]:
        return [i for i in range(self.space.atom_count) if self.mask >> i & 1]

    def cardinality(self) -> int:
        return self.mask.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == self.space.full_mask

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self.atoms()) + "}"


def meet(a: Event, b: Event) -> Event:
    return a & b


def join(a: Event, b: Event) -> Event:
    return a | b


def complement(a: Event) -> Event:
    return ~a


def symdiff(a: Event, b: Event) -> Event:
    """Ring sum: symmetric difference, the + of the Boolean ring."""
    return a ^ b


def material_implies(b: Event, a: Event) -> Event:
    """Material implication b => a, read as (not b) or a."""
    return ~b | a


def leq(a: Event, b: Event) -> bool:
    """Subset order; equivalently a == a & b."""
    return a <= b
