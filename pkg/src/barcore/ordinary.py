"""James' machinery for ordinary partitions: beta-sets, hooks, cores, quotients."""
from __future__ import annotations

from typing import Iterable

from .partitions import BarPartition, ParameterError, Partition, conjugate


def _check_modulus(s: int) -> None:
    if s < 2:
        raise ParameterError(f"hook length must be >= 2, got {s}")


def beta_set_window(alpha: Iterable[int], k: int = 0, count: int = 1) -> list[int]:
    """The ``count`` largest elements of B^alpha_k = {alpha_i - i + k : i >= 1}."""
    alpha = Partition(alpha)
    return [alpha.part(i) - i + k for i in range(1, count + 1)]


def beta_charge(beads: set[int], floor: int) -> int:
    """Charge r with ``beads`` = B^gamma_r, assuming every integer <= floor is a bead."""
    return floor + sum(1 for x in beads if x > floor) + 1


def partition_from_beads(beads: set[int], floor: int) -> tuple[Partition, int]:
    """(gamma, r) with B^gamma_r equal to ``beads`` (complete below ``floor``)."""
    r = beta_charge(beads, floor)
    above = sorted((x for x in beads if x > floor), reverse=True)
    parts = [x + i - r for i, x in enumerate(above, start=1)]
    return Partition(x for x in parts if x > 0), r


def hook_lengths(alpha: Iterable[int]) -> list[list[int]]:
    """Row-major grid: entry [i][j] is the hook length of node (i+1, j+1)."""
    alpha = Partition(alpha)
    conj = conjugate(alpha)
    return [[alpha[i] - j + conj[j] - i - 1 for j in range(alpha[i])]
            for i in range(len(alpha))]


def _push_beads_up(beads: list[int], s: int) -> list[int]:
    # beads are >= 0 and every negative position counts as occupied
    counts = [0] * s
    for b in beads:
        counts[b % s] += 1
    return [r + s * t for r in range(s) for t in range(counts[r])]


def s_core(alpha: Iterable[int], s: int) -> Partition:
    _check_modulus(s)
    alpha = Partition(alpha)
    n = len(alpha)
    beads = [alpha[i] - (i + 1) + n for i in range(n)]
    pushed = sorted(_push_beads_up(beads, s), reverse=True)
    return Partition(x for x in (b + i - n for i, b in enumerate(pushed, 1)) if x > 0)


def s_weight(alpha: Iterable[int], s: int) -> int:
    alpha = Partition(alpha)
    return (alpha.size - s_core(alpha, s).size) // s


def runner_partition(beads: set[int], positions: Iterable[int]) -> Partition:
    """Read one abacus runner as a 1-abacus.

    ``positions`` lists the runner's positions top to bottom, starting at
    or above its first gap; the i-th part is the number of gaps above the
    i-th lowest bead.
    """
    parts = []
    gaps = 0
    for x in positions:
        if x in beads:
            if gaps:
                parts.append(gaps)
        else:
            gaps += 1
    return Partition(reversed(parts))


def s_quotient(alpha: Iterable[int], s: int) -> tuple[Partition, ...]:
    """The s-quotient read off B^alpha_0, component j on the runner of residue j."""
    _check_modulus(s)
    alpha = Partition(alpha)
    n = len(alpha)
    beads = {alpha[i] - (i + 1) for i in range(n)}
    lo = -n - s  # everything at or below -n-1 is a bead
    beads.update(range(lo, -n))
    top = alpha.part(1)
    out = []
    for j in range(s):
        start = lo + ((j - lo) % s)
        out.append(runner_partition(beads, range(start, top + s, s)))
    return tuple(out)


def double(lam: Iterable[int]) -> Partition:
    """D(lam): union of [(l1+1, l2+2, ...)] and [(l1, l2+1, ...)']."""
    lam = BarPartition(lam)
    first = [x + i for i, x in enumerate(lam, start=1)]
    second = conjugate([x + i for i, x in enumerate(lam)])
    rows = max(len(first), len(second))
    return Partition(max(first[i] if i < len(first) else 0,
                         second[i] if i < len(second) else 0) for i in range(rows))


def is_s_core(alpha: Iterable[int], s: int) -> bool:
    return all(h != s for row in hook_lengths(alpha) for h in row)
