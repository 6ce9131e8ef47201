"""Common-subset-sum solver over families of integer multisets.

Given a family of multisets of non-negative integers, find every value s that
is a nonempty sub-multiset sum of *each* member. Per-set sum sets are computed
with the classic pseudo-polynomial trick, one big int used as a dense bit
vector (bit v set means sum v is achievable), where adding an item is a
shift-and-or. The family intersection is pruned as it goes: after the first
set, each further DP pass is capped at the largest value still alive in the
running intersection, the intersection is ANDed after every set, and the scan
aborts as soon as it empties.

The empty subset is excluded throughout, so 0 is achievable only from a
multiset that actually contains a 0 item.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoWitness

ItemMultiset = Sequence[int]
SetFamily = Sequence[ItemMultiset]


class SumSet:
    """Set of achievable nonempty sub-multiset sums, as bits of one int.

    ``capacity`` is the largest representable sum (the bit vector spans
    [0, capacity]); membership is the payload. Equality compares membership
    only, capacity is a representation bound.
    """

    __slots__ = ("capacity", "bits")

    def __init__(self, capacity: int, bits: int = 0):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        if bits < 0 or bits >> (capacity + 1):
            raise ValueError("bits outside [0, capacity]")
        self.capacity = capacity
        self.bits = bits

    @classmethod
    def from_values(cls, values: Iterable[int], capacity: int | None = None) -> "SumSet":
        vals = list(values)
        if capacity is None:
            capacity = max(vals, default=0)
        bits = 0
        for v in vals:
            if not 0 <= v <= capacity:
                raise ValueError(f"value {v} outside [0, {capacity}]")
            bits |= 1 << v
        return cls(capacity, bits)

    def __contains__(self, value: int) -> bool:
        return 0 <= value <= self.capacity and bool(self.bits >> value & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SumSet):
            return NotImplemented
        return self.bits == other.bits

    def __repr__(self) -> str:
        vals = self.values()
        shown = ", ".join(map(str, vals[:8])) + (", ..." if len(vals) > 8 else "")
        return f"SumSet(capacity={self.capacity}, {{{shown}}})"

    def values(self) -> list[int]:
        """Members in increasing order."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def issubset(self, other: "SumSet") -> bool:
        return self.bits & ~other.bits == 0

    def intersection(self, other: "SumSet") -> "SumSet":
        return SumSet(min(self.capacity, other.capacity), self.bits & other.bits)


class ResultKind(enum.Enum):
    NONE = "None"
    UNIQUE = "Unique"
    AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class MisspResult:
    """Classification of a family's common sums: zero, one, or several."""

    kind: ResultKind
    sums: tuple[int, ...]

    @classmethod
    def from_sums(cls, sums: Iterable[int]) -> "MisspResult":
        ordered = tuple(sorted(sums))
        if not ordered:
            return cls(ResultKind.NONE, ())
        if len(ordered) == 1:
            return cls(ResultKind.UNIQUE, ordered)
        return cls(ResultKind.AMBIGUOUS, ordered)

    @property
    def value(self) -> int:
        if self.kind is not ResultKind.UNIQUE:
            raise ValueError(f"result is {self.kind.value}, not Unique")
        return self.sums[0]

    def __str__(self) -> str:
        if self.kind is ResultKind.NONE:
            return "None"
        return f"{self.kind.value} " + " ".join(map(str, self.sums))


def _checked_items(items: ItemMultiset) -> list[int]:
    out = list(items)
    for x in out:
        if x < 0:
            raise ValueError(f"items must be non-negative, got {x}")
    return out


def achievable_sums(items: ItemMultiset) -> SumSet:
    """Sums of all nonempty sub-multisets of ``items``.

    Duplicates are multiset occurrences: each one shifts the DP again.
    """
    items = _checked_items(items)
    capacity = sum(items)
    bits = 0
    for x in items:
        bits |= (bits << x) | (1 << x)
    return SumSet(capacity, bits)


def common_sums(family: SetFamily) -> SumSet:
    """Intersection of achievable_sums over all sets in the family.

    Aborts early once the running intersection is empty; later sets are then
    never enumerated.
    """
    if not family:
        raise ValueError("family must contain at least one set")
    sets = [_checked_items(s) for s in family]
    capacity = min(sum(s) for s in sets)

    running = achievable_sums(sets[0]).bits
    for items in sets[1:]:
        if not running:
            break
        # Cap this pass at the largest live sum; items are non-negative, so
        # partial sums above the cap can never fall back into range.
        cap = running.bit_length() - 1
        mask = (1 << (cap + 1)) - 1
        bits = 0
        for x in items:
            bits |= (bits << x) | (1 << x)
            bits &= mask
        running &= bits

    running &= (1 << (capacity + 1)) - 1
    return SumSet(capacity, running)


def solve_missp(family: SetFamily) -> MisspResult:
    """Classify the family by how many common sums it admits."""
    return MisspResult.from_sums(common_sums(family).values())


def find_witness(items: ItemMultiset, target: int) -> list[int]:
    """One nonempty index subset of ``items`` summing exactly to ``target``.

    Returns the lexicographically smallest index list: indices are scanned
    left to right and greedily included whenever the remainder stays
    achievable from the suffix. Raises NoWitness if no subset works.
    """
    items = _checked_items(items)
    n = len(items)
    if target < 0 or target not in achievable_sums(items):
        raise NoWitness(f"no nonempty subset sums to {target}")

    if target == 0:
        return [items.index(0)]

    # suffix[i]: sums achievable from items[i:] with any (possibly empty)
    # subset, capped at target.
    mask = (1 << (target + 1)) - 1
    suffix = [0] * (n + 1)
    suffix[n] = 1
    for i in range(n - 1, -1, -1):
        suffix[i] = (suffix[i + 1] | (suffix[i + 1] << items[i])) & mask

    chosen: list[int] = []
    need = target
    for i in range(n):
        x = items[i]
        if x <= need and (suffix[i + 1] >> (need - x)) & 1:
            chosen.append(i)
            need -= x
        if need == 0:
            break
    return chosen
