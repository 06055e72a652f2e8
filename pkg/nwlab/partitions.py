"""Integer partitions with the operations used by the singular vector systems."""
# partitions.py

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering

from sympy.utilities.iterables import partitions as _sympy_partitions

from .const import MONOMIAL_CACHE_SIZE


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Partitions are ordered lexicographically on their parts, so (2) is
    larger than (1, 1).
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma list such as `2,1,1`; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(piece) for piece in text.split(",")))
        except ValueError as err:
            raise ValueError(f"invalid partition {text!r}: {err}") from err

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def distinct_parts(self) -> tuple[int, ...]:
        """Distinct parts in decreasing order."""
        return tuple(sorted(set(self.parts), reverse=True))

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def remove(self, part: int) -> Partition:
        """Remove one copy of `part`."""
        if part not in self.parts:
            raise ValueError(f"{part} is not a part of {self}")
        parts = list(self.parts)
        parts.remove(part)
        return Partition(tuple(parts))

    def add(self, part: int) -> Partition:
        return Partition(tuple(sorted(self.parts + (part,), reverse=True)))

    def __lt__(self, other: Partition) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@lru_cache(maxsize=MONOMIAL_CACHE_SIZE)
def partitions_of(weight: int) -> tuple[Partition, ...]:
    """All partitions of `weight`, largest first."""
    if weight < 0:
        return ()
    if weight == 0:
        return (Partition(()),)
    found = []
    for multiplicities in _sympy_partitions(weight):
        parts = [part for part, count in multiplicities.items() for _ in range(count)]
        found.append(Partition(tuple(sorted(parts, reverse=True))))
    return tuple(sorted(found, reverse=True))


def partitions_up_to(weight: int) -> tuple[Partition, ...]:
    """Nonempty partitions of weight 1 through `weight`."""
    return tuple(p for w in range(1, weight + 1) for p in partitions_of(w))
