"""Bar partitions, ordinary partitions and the bead set A(lambda).

Both partition types are tuple subclasses, so they hash, compare and
unpack like the part sequences they wrap.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator


class BarCoreError(ValueError):
    """Base class for every domain error raised by this package."""


class PartitionError(BarCoreError):
    pass


class ParameterError(BarCoreError):
    pass


class PreconditionError(BarCoreError):
    pass


def _as_int_tuple(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(parts)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise PartitionError(f"parts must be integers, got {x!r}")
    return out


class Partition(tuple):
    """Weakly decreasing sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = _as_int_tuple(parts)
        if any(x <= 0 for x in parts):
            raise PartitionError(f"non-positive part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({format_parts(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero past the end."""
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)


class BarPartition(tuple):
    """Strictly decreasing sequence of positive integers (an element of P_2)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = _as_int_tuple(parts)
        if any(x <= 0 for x in parts):
            raise PartitionError(f"non-positive part in {parts}")
        if any(a == b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"repeated part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts not decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"BarPartition({format_parts(self)})"

    @cached_property
    def part_set(self) -> frozenset[int]:
        return frozenset(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    def __contains__(self, x: object) -> bool:
        return x in self.part_set


def make_bar_partition(parts: Iterable[int]) -> BarPartition:
    return BarPartition(parts)


def bar_from_positive_beads(beads: Iterable[int]) -> BarPartition:
    """Bar partition whose parts are the positive members of ``beads``."""
    return BarPartition(sorted((x for x in beads if x > 0), reverse=True))


def bead_contains(lam: BarPartition, x: int) -> bool:
    """Membership of ``x`` in A(lam): positive parts, plus -y for each y not a part."""
    if x > 0:
        return x in lam.part_set
    if x < 0:
        return -x not in lam.part_set
    return False


def beads_in_window(lam: BarPartition, lo: int, hi: int) -> set[int]:
    if lo > hi:
        raise ParameterError(f"empty window [{lo}, {hi}]")
    parts = lam.part_set
    return {x for x in range(lo, hi + 1)
            if (x > 0 and x in parts) or (x < 0 and -x not in parts)}


def conjugate(alpha: Iterable[int]) -> Partition:
    alpha = tuple(alpha)
    if not alpha:
        return Partition()
    return Partition(sum(1 for a in alpha if a > j) for j in range(alpha[0]))


def _strict_partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            yield (first,) + rest


def enumerate_bar_partitions(n: int) -> list[BarPartition]:
    """All strict partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ParameterError("n must be non-negative")
    return [BarPartition(t) for t in _strict_partitions(n, n)]


def bar_partitions_up_to(max_n: int) -> Iterator[BarPartition]:
    for n in range(max_n + 1):
        yield from enumerate_bar_partitions(n)


def format_parts(parts: Iterable[int]) -> str:
    return ",".join(str(x) for x in parts)


def parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc


def parse_bar_partition(text: str) -> BarPartition:
    return BarPartition(parse_parts(text))


def parse_partition(text: str) -> Partition:
    return Partition(parse_parts(text))
