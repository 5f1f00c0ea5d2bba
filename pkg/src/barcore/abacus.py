"""Text rendering of the p-runner abacus of A(lambda).

Columns run through residues (p+1)/2, ..., p-1, 0, 1, ..., (p-1)/2, so row t
covers the integers t*p - (p-1)/2 .. t*p + (p-1)/2 and row 0 holds position 0.
Cells are 'b' (bead), 'n' (no bead) and 'o' (position 0).
"""
from __future__ import annotations

from dataclasses import dataclass

from .bars import check_bar_length
from .partitions import BarPartition, ParameterError, bead_contains


@dataclass(frozen=True)
class AbacusRendering:
    p: int
    first_row: int
    rows: tuple[str, ...]

    @property
    def text(self) -> str:
        return "\n".join(self.rows)

    def row(self, t: int) -> str:
        return self.rows[t - self.first_row]

    def positions(self) -> range:
        half = (self.p - 1) // 2
        last = self.first_row + len(self.rows) - 1
        return range(self.first_row * self.p - half, last * self.p + half + 1)


def row_integers(t: int, p: int) -> list[int]:
    half = (p - 1) // 2
    return list(range(t * p - half, t * p + half + 1))


def default_rows(lam: BarPartition, p: int) -> tuple[int, int]:
    """Rows above and below the zero row that show every non-trivial position."""
    reach = lam.largest // p + 1
    return reach, reach


def render_abacus(lam: BarPartition, p: int, rows_above: int | None = None,
                  rows_below: int | None = None) -> AbacusRendering:
    check_bar_length(p)
    up, down = default_rows(lam, p)
    up = up if rows_above is None else rows_above
    down = down if rows_below is None else rows_below
    if up < 0 or down < 0:
        raise ParameterError("row counts must be non-negative")
    rows = []
    for t in range(-up, down + 1):
        rows.append("".join("o" if x == 0 else "b" if bead_contains(lam, x) else "n"
                            for x in row_integers(t, p)))
    return AbacusRendering(p, -up, tuple(rows))


def parse_abacus(rows: str | list[str], p: int, first_row: int) -> set[int]:
    """Bead positions covered by ``rows``, the first of which is row ``first_row``."""
    check_bar_length(p)
    if isinstance(rows, str):
        rows = rows.split()
    beads = set()
    for k, line in enumerate(rows):
        if len(line) != p or set(line) - set("bno"):
            raise ParameterError(f"bad abacus row {line!r}")
        for ch, x in zip(line, row_integers(first_row + k, p)):
            if (ch == "o") != (x == 0):
                raise ParameterError(f"zero marker misplaced in row {line!r}")
            if ch == "b":
                beads.add(x)
    return beads
