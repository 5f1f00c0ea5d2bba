"""p-bars, p-bar-cores, p-sets and p-quotients of bar partitions.

Residues are indexed absolutely: component ``i`` of a quotient and entry
``i`` of a p-set belong to the runner of integers congruent to i mod p.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .ordinary import runner_partition
from .partitions import (
    BarPartition,
    ParameterError,
    Partition,
    PreconditionError,
    bar_from_positive_beads,
    bead_contains,
    beads_in_window,
    conjugate,
)


def check_bar_length(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ParameterError(f"bar length must be odd >= 3, got {p}")


class BarMove(NamedTuple):
    """A removable p-bar: ``("single", x)`` moves part x to x-p, ``("pair", x)``
    removes parts x and p-x (x the larger)."""

    kind: str
    part: int


@dataclass(frozen=True)
class BarQuotient:
    """p-tuple of quotient components; component 0 is a bar partition."""

    components: tuple

    @property
    def p(self) -> int:
        return len(self.components)

    def __getitem__(self, j: int):
        return self.components[j % self.p]

    def __iter__(self):
        return iter(self.components)

    @property
    def weight(self) -> int:
        # a p-bar in component 0 counts once; runners j and -j share each bar
        rest = sum(sum(c) for c in self.components[1:])
        return sum(self.components[0]) + rest // 2

    def to_json(self) -> dict:
        return {"components": [list(c) for c in self.components], "bar_component": 0}

    @classmethod
    def from_json(cls, data) -> "BarQuotient":
        comps = data["components"] if isinstance(data, dict) else data
        return make_quotient(comps)


def make_quotient(components: Sequence[Iterable[int]]) -> BarQuotient:
    comps = list(components)
    if len(comps) < 3:
        raise ParameterError("a p-quotient needs at least 3 components")
    return BarQuotient((BarPartition(comps[0]),) + tuple(Partition(c) for c in comps[1:]))


def removable_p_bars(lam: BarPartition, p: int) -> list[BarMove]:
    check_bar_length(p)
    moves = []
    for x in lam:
        if x >= p and not bead_contains(lam, x - p):
            moves.append(BarMove("single", x))
    for x in lam:
        if p / 2 < x < p and (p - x) in lam:
            moves.append(BarMove("pair", x))
    return moves


def remove_p_bar(lam: BarPartition, p: int, move: BarMove) -> BarPartition:
    if move not in removable_p_bars(lam, p):
        raise PreconditionError(f"{move} is not a removable {p}-bar of {lam}")
    parts = set(lam)
    parts.discard(move.part)
    if move.kind == "single":
        if move.part != p:
            parts.add(move.part - p)
    else:
        parts.discard(p - move.part)
    return BarPartition(sorted(parts, reverse=True))


def _window_floor(lam: BarPartition) -> int:
    # every integer <= floor lies in A(lam)
    return -lam.largest - 1


def p_set(lam: BarPartition, p: int) -> tuple[int, ...]:
    """Delta_{i mod p} lam for i = 0..p-1: the first gap on each runner of the core."""
    check_bar_length(p)
    floor = _window_floor(lam)
    top = lam.largest
    out = []
    for r in range(p):
        start = floor + 1 + ((r - floor - 1) % p)
        count = sum(1 for x in range(start, top + 1, p) if bead_contains(lam, x))
        out.append(start + p * count)
    return tuple(out)


def core_from_p_set(delta: Sequence[int]) -> BarPartition:
    """The p-bar-core whose runner r is filled exactly below delta[r]."""
    p = len(delta)
    return BarPartition(sorted((x for x in range(1, max(delta) + 1) if x < delta[x % p]),
                               reverse=True))


def p_bar_core(lam: BarPartition, p: int) -> BarPartition:
    return core_from_p_set(p_set(lam, p))


def p_bar_weight(lam: BarPartition, p: int) -> int:
    return (lam.size - p_bar_core(lam, p).size) // p


def is_p_bar_core(lam: BarPartition, p: int) -> bool:
    check_bar_length(p)
    return not removable_p_bars(lam, p)


def weight_pairs(lam: BarPartition, p: int) -> list[tuple[int, int]]:
    """All (x, a) with x in A(lam), a >= 1 and x - a*p not in A(lam)."""
    check_bar_length(p)
    floor = _window_floor(lam)
    pairs = []
    for x in sorted(beads_in_window(lam, floor + 1, lam.largest), reverse=True):
        a = 1
        while x - a * p > floor:
            if not bead_contains(lam, x - a * p):
                pairs.append((x, a))
            a += 1
    return pairs


def p_quotient(lam: BarPartition, p: int) -> BarQuotient:
    check_bar_length(p)
    delta = p_set(lam, p)
    zero = BarPartition(sorted((x // p for x in lam if x % p == 0), reverse=True))
    floor = _window_floor(lam)
    comps: list = [zero]
    for j in range(1, p):
        beads = sorted((x for x in range(floor + 1 + ((j - floor - 1) % p), lam.largest + 1, p)
                        if bead_contains(lam, x)), reverse=True)
        parts = [(b - delta[j]) // p + i for i, b in enumerate(beads, start=1)]
        comps.append(Partition(x for x in parts if x > 0))
    return BarQuotient(tuple(comps))


def p_quotient_by_gaps(lam: BarPartition, p: int) -> BarQuotient:
    """Same quotient, read as gaps above each bead; an independent route."""
    check_bar_length(p)
    floor = _window_floor(lam)
    beads = beads_in_window(lam, floor - p, lam.largest)
    comps: list = [BarPartition(sorted((x // p for x in lam if x % p == 0), reverse=True))]
    for j in range(1, p):
        start = floor - p + ((j - floor + p) % p)
        comps.append(runner_partition(beads, range(start, lam.largest + p, p)))
    return BarQuotient(tuple(comps))


def reconstruct(core: BarPartition, quotient: BarQuotient | Sequence, p: int) -> BarPartition:
    """The unique bar partition with the given p-bar-core and p-quotient."""
    check_bar_length(p)
    if not isinstance(quotient, BarQuotient):
        quotient = make_quotient(quotient)
    if quotient.p != p:
        raise ParameterError(f"quotient has {quotient.p} components, expected {p}")
    if not is_p_bar_core(core, p):
        raise PreconditionError(f"{core} is not a {p}-bar-core")
    for j in range(1, p):
        if conjugate(quotient[j]) != quotient[p - j]:
            raise PreconditionError(
                f"quotient components {j} and {p - j} are not conjugate")
    delta = p_set(core, p)
    beads = {p * y for y in quotient[0]}
    for j in range(1, p):
        comp = quotient[j]
        i = 1
        while True:
            x = p * (comp.part(i) - i) + delta[j]
            if x <= 0 and i > len(comp):
                break
            beads.add(x)
            i += 1
    return bar_from_positive_beads(beads)
