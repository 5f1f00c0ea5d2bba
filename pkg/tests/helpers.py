"""Strategies, independent oracles and frozen orbit-grid data shared by the tests."""
from __future__ import annotations

from hypothesis import strategies as st

from barcore.partitions import BarPartition, Partition


def bar_partitions(max_part: int = 20, max_len: int = 8):
    return st.sets(st.integers(1, max_part), max_size=max_len).map(
        lambda s: BarPartition(sorted(s, reverse=True)))


def partitions(max_part: int = 8, max_len: int = 8):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: Partition(sorted(xs, reverse=True)))


def strict_partition_count(n: int) -> int:
    """Number of subsets of {1..n} summing to n, by subset-sum counting."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


def bar_moves_from_definition(parts: frozenset, p: int) -> list[frozenset]:
    """Every partition reachable by removing one p-bar, straight from the definition."""
    out = []
    for x in parts:
        if x == p:
            out.append(parts - {x})
        elif x > p and (x - p) not in parts:
            out.append((parts - {x}) | {x - p})
        if x < p and x != p - x and (p - x) in parts and x > p - x:
            out.append(parts - {x, p - x})
    return out


def all_cores_by_search(lam, p: int) -> set[BarPartition]:
    """Cores reached along every removal order; a singleton if the core is well defined."""
    seen = set()
    cores = set()
    stack = [frozenset(lam)]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        nxt = bar_moves_from_definition(cur, p)
        if not nxt:
            cores.add(BarPartition(sorted(cur, reverse=True)))
        stack.extend(nxt)
    return cores


def hooks_divisible_by(alpha, s: int) -> int:
    """Count of nodes whose hook length is a multiple of s, from the diagram directly."""
    alpha = list(alpha)
    cols = [sum(1 for a in alpha if a > j) for j in range(alpha[0])] if alpha else []
    return sum(1 for i, row in enumerate(alpha) for j in range(row)
               if (row - j + cols[j] - i - 1) % s == 0)


# Printed (p=3, q=5) orbit grid: label -> (X, alpha, beta) read off the grid
# position. Rows give (X, alpha), columns give beta.
GRID35 = {
    (17, 14, 11, 8, 5, 2): ({1}, (1,), ()),
    (23, 14, 11, 8, 5, 3, 2): ({1}, (1,), (1,)),
    (7, 4, 1): ({1}, (), ()),
    (13, 4, 3, 1): ({1}, (), (1,)),
    (16, 7, 6, 1): ({1}, (), (2,)),
    (16, 13, 6, 3, 1): ({1}, (), (2, 1)),
    (2,): (set(), (), ()),
    (8, 3): (set(), (), (1,)),
    (11, 6, 2, 1): (set(), (), (2,)),
    (11, 8, 6, 3, 1): (set(), (), (2, 1)),
    (5, 2): (set(), (1,), ()),
    (8, 5, 3): (set(), (1,), (1,)),
    (11, 6, 5, 2, 1): (set(), (1,), (2,)),
    (11, 8, 6, 5, 3, 1): (set(), (1,), (2, 1)),
    (10, 7, 4, 1): (None, (2,), ()),
    (13, 10, 4, 3, 1): (None, (2,), (1,)),
    (16, 10, 7, 6, 1): (None, (2,), (2,)),
    (16, 13, 10, 6, 3, 1): (None, (2,), (2, 1)),
    (19, 9, 7, 4): ({1}, (), (3,)),
    (14, 9, 4, 2): (set(), (), (3,)),
    (14, 9, 5, 4, 2): (set(), (1,), (3,)),
    (19, 10, 9, 7, 4): (None, (2,), (3,)),
    (19, 13, 9, 4, 3): ({1}, (), (3, 1)),
    (14, 9, 8, 4, 3): (set(), (), (3, 1)),
    (14, 9, 8, 5, 4, 3): (set(), (1,), (3, 1)),
    (19, 13, 10, 9, 4, 3): (None, (2,), (3, 1)),
    (22, 12, 7, 4, 2, 1): ({1}, (), (4,)),
    (17, 12, 7, 2): (set(), (), (4,)),
    (17, 12, 7, 5, 2): (set(), (1,), (4,)),
    (22, 12, 10, 7, 4, 2, 1): (None, (2,), (4,)),
}

# Printed (3,5) labels in the row X={1}, alpha=(1) that are not bar partitions in
# C_{3,5}, paired with the members sitting at those grid positions.
GRID35_MISPRINTS = {
    (26, 17, 11, 8, 6, 5): ((26, 17, 11, 8, 6, 5, 2), (2,)),
    (26, 23, 11, 6, 5, 3, 2): ((26, 23, 11, 8, 6, 5, 3, 2), (2, 1)),
    (29, 17, 14, 9, 8, 5): ((29, 17, 14, 9, 8, 5, 2), (3,)),
    (29, 23, 14, 9, 5, 3, 2): ((29, 23, 14, 9, 8, 5, 3, 2), (3, 1)),
    (32, 17, 14, 12, 11, 5, 2, 1): ((32, 17, 14, 12, 11, 5, 2), (4,)),
}

# Printed (p=5, q=3) orbit grid: every label.
GRID53_LABELS = [
    (1,), (4,), (7, 2, 1), (7, 4, 2), (3, 1), (4, 3), (13, 8, 3, 1), (13, 8, 4, 3),
    (6, 1), (7, 6, 2, 1), (16, 11, 6, 1), (16, 11, 7, 6, 2, 1), (6, 3, 1),
    (13, 8, 6, 3, 1), (16, 11, 6, 3, 1), (16, 13, 11, 8, 6, 3, 1), (9, 4), (9, 7, 4, 2),
    (19, 14, 9, 4), (9, 4, 3), (13, 9, 8, 4, 3), (19, 14, 9, 4, 3),
    (19, 14, 13, 9, 8, 4, 3), (12, 7, 2, 1), (12, 7, 4, 2), (22, 17, 12, 7, 2, 1),
    (22, 17, 12, 7, 4, 2),
]


def core_by_definition(lam, p: int) -> BarPartition:
    """Remove p-bars one at a time, using the first legal move each step."""
    cur = frozenset(lam)
    while True:
        nxt = bar_moves_from_definition(cur, p)
        if not nxt:
            return BarPartition(sorted(cur, reverse=True))
        cur = min(nxt, key=sorted)
