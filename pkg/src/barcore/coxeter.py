"""Level-q action of the affine Coxeter group W_p (type C~_{(p-1)/2}).

Two commuting copies act on bar partitions: the P side (generators
delta_0..delta_{(p-1)/2}, residues mod p, shifts by q) and the Q side
(generators eps_0..eps_{(q-1)/2}, residues mod q, shifts by p).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .bars import check_bar_length
from .partitions import BarPartition, ParameterError, bar_from_positive_beads, bead_contains


@dataclass(frozen=True)
class ActionParams:
    p: int
    q: int

    def __post_init__(self):
        check_bar_length(self.p)
        check_bar_length(self.q)
        if math.gcd(self.p, self.q) != 1:
            raise ParameterError(f"p={self.p} and q={self.q} are not coprime")

    def swapped(self) -> "ActionParams":
        return ActionParams(self.q, self.p)

    def side(self, side: str) -> tuple[int, int]:
        """(modulus, level) of the generators on ``side``."""
        if side == "P":
            return self.p, self.q
        if side == "Q":
            return self.q, self.p
        raise ParameterError(f"unknown side {side!r}")


class Generator(NamedTuple):
    side: str
    index: int

    def __str__(self) -> str:
        return f"{self.side}{self.index}"


def parse_generator(token: str) -> Generator:
    token = token.strip()
    if len(token) < 2 or token[0].upper() not in "PQ" or not token[1:].isdigit():
        raise ParameterError(f"bad generator {token!r}; expected e.g. P0 or Q2")
    return Generator(token[0].upper(), int(token[1:]))


def parse_word(text: str | Sequence[str]) -> list[Generator]:
    if isinstance(text, str):
        text = [t for t in text.replace(" ", ",").split(",") if t]
    return [parse_generator(t) for t in text]


def generators(params: ActionParams, side: str) -> list[Generator]:
    m, _ = params.side(side)
    return [Generator(side, i) for i in range((m - 1) // 2 + 1)]


def act(i: int, x: int, modulus: int, level: int) -> int:
    """delta_i applied to the integer x, for W_modulus acting at ``level``."""
    if not 0 <= i <= (modulus - 1) // 2:
        raise ParameterError(f"generator index {i} out of range for modulus {modulus}")
    r = x % modulus
    if i == 0:
        if r == level % modulus:
            return x - 2 * level
        if r == -level % modulus:
            return x + 2 * level
        return x
    if r == (i + 1) * level % modulus or r == -i * level % modulus:
        return x - level
    if r == i * level % modulus or r == -(i + 1) * level % modulus:
        return x + level
    return x


def generator_apply_int(params: ActionParams, side: str, i: int, x: int) -> int:
    m, level = params.side(side)
    return act(i, x, m, level)


def act_on_partition(i: int, lam: BarPartition, modulus: int, level: int) -> BarPartition:
    """The bar partition with bead set delta_i A(lam)."""
    # each bead moves by at most 2*level, so positive images come from this window
    reach = 2 * level
    lo, hi = -reach, lam.largest + reach
    return bar_from_positive_beads(
        y for x in range(lo, hi + 1) if bead_contains(lam, x)
        for y in (act(i, x, modulus, level),) if y > 0)


def generator_apply(params: ActionParams, side: str, i: int, lam: BarPartition) -> BarPartition:
    m, level = params.side(side)
    return act_on_partition(i, lam, m, level)


def word_apply(params: ActionParams, word: Iterable[Generator | str], lam: BarPartition) -> BarPartition:
    """Apply the letters of ``word`` left to right."""
    if isinstance(word, str):
        word = parse_word(word)
    for g in word:
        if isinstance(g, str):
            g = parse_generator(g)
        lam = generator_apply(params, g.side, g.index, lam)
    return lam


def _relations(m: int) -> list[tuple[str, list[int], list[int]]]:
    """Defining relations of W_m as (name, lhs word, rhs word), applied right to left."""
    n = (m - 1) // 2
    rels = []
    for i in range(n + 1):
        rels.append((f"d{i}^2=1", [i, i], []))
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            rels.append((f"d{i}d{j}=d{j}d{i}", [i, j], [j, i]))
    for i in range(1, n - 1):
        rels.append((f"braid3({i},{i + 1})", [i, i + 1, i], [i + 1, i, i + 1]))
    if m > 3:
        rels.append(("braid4(0,1)", [0, 1, 0, 1], [1, 0, 1, 0]))
        rels.append((f"braid4({n - 1},{n})", [n - 1, n, n - 1, n], [n, n - 1, n, n - 1]))
    return rels


def check_relations(params: ActionParams, window: int) -> list[tuple[str, str, int]]:
    """Pointwise check of every defining relation on [-window, window].

    Returns the violations as (side, relation, x); empty means all hold.
    """
    if window < params.p * params.q:
        raise ParameterError("window must be at least p*q")
    bad = []
    for side in ("P", "Q"):
        m, level = params.side(side)
        for name, lhs, rhs in _relations(m):
            for x in range(-window, window + 1):
                a = x
                for i in reversed(lhs):
                    a = act(i, a, m, level)
                b = x
                for i in reversed(rhs):
                    b = act(i, b, m, level)
                if a != b:
                    bad.append((side, name, x))
    return bad


def relation_names(m: int) -> list[str]:
    return [name for name, _, _ in _relations(m)]


def _measure(lam: BarPartition, how: str) -> int:
    return lam.largest if how == "largest" else lam.size


def orbit_bfs(params: ActionParams, lam: BarPartition, groups: str = "Both",
              max_size: int | None = None, *, measure: str = "largest",
              slack: int | None = None) -> dict[BarPartition, tuple[Generator, ...]]:
    """Bounded slice of the orbit of ``lam``, with one witness word per member.

    Members are kept when their measure (largest part by default, or
    ``measure="size"`` for |lam|) is at most ``max_size``. The search itself
    may pass through partitions up to ``max_size + slack``; the default slack
    is twice the largest shift a generator can make (``max_size`` itself when
    measuring by size).
    """
    if measure not in ("largest", "size"):
        raise ParameterError(f"unknown measure {measure!r}")
    sides = {"P": ["P"], "Q": ["Q"], "Both": ["P", "Q"]}.get(groups)
    if sides is None:
        raise ParameterError(f"groups must be P, Q or Both, got {groups!r}")
    if max_size is None:
        max_size = _measure(lam, measure)
    if max_size < _measure(lam, measure):
        raise ParameterError("max_size is below the starting partition")
    if slack is None:
        shift = max(2 * params.side(s)[1] for s in sides)
        slack = 2 * shift if measure == "largest" else max_size
    gens = [g for s in sides for g in generators(params, s)]
    limit = max_size + slack
    seen = {lam: ()}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        word = seen[cur]
        for g in gens:
            nxt = generator_apply(params, g.side, g.index, cur)
            if nxt in seen or _measure(nxt, measure) > limit:
                continue
            seen[nxt] = word + (g,)
            queue.append(nxt)
    kept = {mu: w for mu, w in seen.items() if _measure(mu, measure) <= max_size}
    return dict(sorted(kept.items(), key=lambda kv: (kv[0].size, kv[0])))
