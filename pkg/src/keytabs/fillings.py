"""Fillings of diagrams and the statistics read off them.

Key-diagram statistics (maj, coinv and friends) follow the row-upward
drawing convention fixed in :mod:`keytabs.shapes`.  Two cells of a key
diagram *attack* each other when they share a column, or sit in adjacent
columns with the left cell strictly higher.  A filling is non-attacking
when attacking cells carry distinct values and no first-column value
exceeds its row index.

Triples of a key diagram consist of a row-adjacent pair x = (r,c),
y = (r,c+1) together with a third cell z, either above x in a strictly
shorter row (Type I) or below y in a weakly shorter row (Type II); the
pair may also be a basement pair, x being the phantom cell left of a
first-column cell y = (r,1) carrying the row index r as its value, in
which case z = (r',1) runs over the lower cells of column 1 in weakly
shorter rows.  A triple is a co-inversion triple when

    1 + [y > x] - [x < z] - [z < y]  =  1,

i.e. when the values satisfy x < y < z or z < x <= y (basement pairs
compare through the row index, which for values of basement triples
reduces the test to z > y).  Each triple contains exactly two attacking
pairs, and summing the rule over all triples yields the closed formula
of :func:`coinv_by_formula`.

Young-diagram triples are a same-row pair u = (r,c1), v = (r,c2) with
c1 < c2 at any distance, plus w = (r-1,c1) when r > 1.  An inversion
triple is a bottom-row pair with the larger value on the left, or a
three-cell triple oriented counterclockwise; equivalently the word
(u, v, w) has an odd number of inversions.

All fillings are immutable; every statistic is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from keytabs.shapes import KEY, YOUNG, Cell, Composition, Diagram, WeakComposition


@dataclass(frozen=True)
class Filling:
    """An assignment of positive integers to the cells of a diagram.

    Entries are stored per row, bottom row first, left to right.
    """

    diagram: Diagram
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(int(e) for e in row) for row in self.rows))
        if len(self.rows) != self.diagram.n_rows:
            raise ValueError("row count does not match diagram")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != self.diagram.row_length(r):
                raise ValueError(f"row {r} has {len(row)} entries, expected {self.diagram.row_length(r)}")
            if any(e < 1 for e in row):
                raise ValueError("entries must be positive")

    @classmethod
    def _trusted(cls, diagram: Diagram, rows: tuple[tuple[int, ...], ...]) -> "Filling":
        """Constructor bypassing validation; rows must already fit the diagram."""
        self = object.__new__(cls)
        object.__setattr__(self, "diagram", diagram)
        object.__setattr__(self, "rows", rows)
        return self

    @classmethod
    def from_rows(cls, kind: str, rows: list[list[int]] | tuple) -> "Filling":
        lengths = tuple(len(row) for row in rows)
        diagram = Diagram(kind, lengths)
        return cls(diagram, tuple(tuple(row) for row in rows))

    @classmethod
    def from_text(cls, kind: str, text: str) -> "Filling":
        """Parse ``"1,6;2;3,4,2;;;5,5"``: rows bottom to top, ``;``-separated."""
        rows = []
        for chunk in text.strip().split(";"):
            chunk = chunk.strip()
            rows.append([int(e) for e in chunk.split(",")] if chunk else [])
        return cls.from_rows(kind, rows)

    def to_text(self) -> str:
        return ";".join(",".join(str(e) for e in row) for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()

    def entry(self, cell: Cell) -> int:
        return self.rows[cell.row - 1][cell.col - 1]

    def __getitem__(self, cell: Cell) -> int:
        return self.entry(cell)

    @property
    def n_cells(self) -> int:
        return self.diagram.n_cells

    def cells_with_entries(self) -> Iterator[tuple[Cell, int]]:
        for cell in self.diagram.cells():
            yield cell, self.entry(cell)

    def column_reading_word(self) -> tuple[int, ...]:
        return tuple(self.entry(c) for c in self.diagram.cells_column_order())

    def is_standard(self) -> bool:
        word = sorted(e for _, e in self.cells_with_entries())
        return word == list(range(1, self.n_cells + 1))

    def position_of(self) -> dict[int, Cell]:
        """Entry -> cell lookup; requires a standard filling."""
        if not self.is_standard():
            raise ValueError("positions are only well-defined for standard fillings")
        return {e: c for c, e in self.cells_with_entries()}

    def wt(self, nvars: int | None = None) -> WeakComposition:
        """Weak composition counting occurrences of 1..nvars (default: row count)."""
        n = self.diagram.n_rows if nvars is None else nvars
        counts = [0] * n
        for _, e in self.cells_with_entries():
            if e > n:
                raise ValueError(f"entry {e} exceeds variable count {n}")
            counts[e - 1] += 1
        return WeakComposition(counts)

    def with_entries(self, overrides: Mapping[Cell, int]) -> "Filling":
        rows = [list(row) for row in self.rows]
        for cell, value in overrides.items():
            rows[cell.row - 1][cell.col - 1] = value
        return Filling._trusted(self.diagram, tuple(tuple(row) for row in rows))

    def swap_values(self, a: int, b: int) -> "Filling":
        rows = tuple(
            tuple(b if e == a else a if e == b else e for e in row) for row in self.rows
        )
        return Filling._trusted(self.diagram, rows)


# ---------------------------------------------------------------------------
# key-diagram statistics


def _require_key(T: Filling) -> None:
    if T.diagram.kind != KEY:
        raise ValueError("statistic defined on key diagrams only")


def _require_young(T: Filling) -> None:
    if T.diagram.kind != YOUNG:
        raise ValueError("statistic defined on Young diagrams only")


def attacking_pairs(diagram: Diagram) -> Iterator[tuple[Cell, Cell]]:
    """Attacking cell pairs, first component earlier in column reading order."""
    rl = diagram.row_lengths
    for c in range(1, diagram.width + 1):
        col = [Cell(r, c) for r in range(1, diagram.n_rows + 1) if rl[r - 1] >= c]
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                yield col[i], col[j]
        for left in col:
            for r in range(1, left.row):
                if rl[r - 1] >= c + 1:
                    yield left, Cell(r, c + 1)


def is_non_attacking(T: Filling) -> bool:
    _require_key(T)
    for r, row in enumerate(T.rows, start=1):
        if row and row[0] > r:
            return False
    return all(T.entry(u) != T.entry(v) for u, v in attacking_pairs(T.diagram))


def key_triples(diagram: Diagram) -> Iterator[tuple[Cell | None, Cell, Cell]]:
    """Triples (x, y, z); ``x is None`` marks a basement pair.

    Regular: x,y row adjacent, z above x in a strictly shorter row
    (Type I) or below y in a weakly shorter row (Type II).  Basement:
    y = (r,1), z = (r',1) below y in a weakly shorter row.
    """
    if diagram.kind != KEY:
        raise ValueError("key triples need a key diagram")
    rl = diagram.row_lengths
    for r, length in enumerate(rl, start=1):
        for c in range(1, length):
            x, y = Cell(r, c), Cell(r, c + 1)
            for rp in range(r + 1, diagram.n_rows + 1):
                if rl[rp - 1] >= c and rl[rp - 1] < length:
                    yield x, y, Cell(rp, c)
            for rp in range(1, r):
                if rl[rp - 1] >= c + 1 and rl[rp - 1] <= length:
                    yield x, y, Cell(rp, c + 1)
        if length >= 1:
            for rp in range(1, r):
                if rl[rp - 1] >= 1 and rl[rp - 1] <= length:
                    yield None, Cell(r, 1), Cell(rp, 1)


def is_co_inversion(T: Filling, x: Cell | None, y: Cell, z: Cell) -> bool:
    """Per-triple test 1 + [y > x] - [x < z] - [z < y] == 1."""
    ey, ez = T.entry(y), T.entry(z)
    if x is None:
        return ez > ey
    ex = T.entry(x)
    return 1 + (ey > ex) - (ex < ez) - (ez < ey) == 1


def coinv(T: Filling) -> int:
    """Number of co-inversion triples."""
    _require_key(T)
    return sum(1 for x, y, z in key_triples(T.diagram) if is_co_inversion(T, x, y, z))


def maj(T: Filling) -> int:
    """Sum of legs of cells whose value strictly exceeds their left neighbour.

    First-column cells have no left neighbour and never contribute; for
    non-attacking fillings this agrees with comparing against the row
    index, since first-column values are bounded by it.
    """
    _require_key(T)
    total = 0
    for r, row in enumerate(T.rows, start=1):
        for c in range(1, len(row)):
            if row[c] > row[c - 1]:
                total += T.diagram.leg(Cell(r, c + 1))
    return total


def descent_cells(T: Filling) -> set[Cell]:
    """Cells with a strictly smaller left neighbour (column >= 2)."""
    _require_key(T)
    out = set()
    for r, row in enumerate(T.rows, start=1):
        for c in range(1, len(row)):
            if row[c] > row[c - 1]:
                out.add(Cell(r, c + 1))
    return out


def coinv_by_formula(T: Filling) -> int:
    """Co-inversion count via arms and attacking inversion pairs.

    Validated interpretation: sum of arm over all cells, plus arm over the
    cells with a strictly smaller left neighbour, minus the number of
    attacking pairs whose earlier cell (column reading order) carries the
    smaller value.  Agrees with :func:`coinv` on every non-attacking
    filling checked exhaustively at small cell counts.
    """
    _require_key(T)
    d = T.diagram
    total = sum(d.arm(c) for c in d.cells())
    total += sum(d.arm(c) for c in descent_cells(T))
    total -= sum(1 for u, v in attacking_pairs(d) if T.entry(u) < T.entry(v))
    return total


def weak_descent_composition(T: Filling) -> WeakComposition | None:
    """Weak descent composition of a standard filling of a key diagram.

    Returns ``None`` for virtual fillings (some block lands below row 1).
    The decreasing word n..1 is cut between e+1 and e whenever e+1 sits
    weakly right of e; blocks are then parked at rows determined by the
    first cell of each block, top block first.
    """
    _require_key(T)
    pos = T.position_of()
    n = T.n_cells
    n_rows = T.diagram.n_rows
    if n == 0:
        return WeakComposition((0,) * n_rows)
    blocks: list[list[int]] = [[n]]
    for e in range(n - 1, 0, -1):
        if pos[e + 1].col >= pos[e].col:
            blocks.append([e])
        else:
            blocks[-1].append(e)
    parts = [0] * n_rows
    t_prev: int | None = None
    for block in blocks:
        head = pos[block[0]]
        if t_prev is None:
            t = head.row if head.col == 1 else n_rows
        else:
            t = min(head.row, t_prev - 1) if head.col == 1 else t_prev - 1
        if t < 1:
            return None
        parts[t - 1] = len(block)
        t_prev = t
    return WeakComposition(parts)


def is_virtual(T: Filling) -> bool:
    return weak_descent_composition(T) is None


def is_key_tableau(T: Filling) -> bool:
    """Columns distinct, rows weakly decreasing, and every inversion in a
    column is witnessed by a larger right neighbour below."""
    _require_key(T)
    for row in T.rows:
        if any(row[c] < row[c + 1] for c in range(len(row) - 1)):
            return False
    rl = T.diagram.row_lengths
    for c in range(1, T.diagram.width + 1):
        col_cells = [Cell(r, c) for r in range(1, T.diagram.n_rows + 1) if rl[r - 1] >= c]
        values = [T.entry(cell) for cell in col_cells]
        if len(set(values)) != len(values):
            return False
        for lo in range(len(col_cells)):
            for hi in range(lo + 1, len(col_cells)):
                i, k = T.entry(col_cells[hi]), T.entry(col_cells[lo])
                if i < k:
                    right = Cell(col_cells[lo].row, c + 1)
                    if right not in T.diagram or T.entry(right) <= i:
                        return False
    return True


def is_semistandard_key_tableau(T: Filling) -> bool:
    """Key tableau in which no entry exceeds its row index."""
    if not is_key_tableau(T):
        return False
    return all(e <= cell.row for cell, e in T.cells_with_entries())


def is_key_tabloid(T: Filling) -> bool:
    """Non-attacking filling with no co-inversion triples."""
    return is_non_attacking(T) and coinv(T) == 0


def is_standard_key_tabloid(T: Filling) -> bool:
    """Bijective filling with no co-inversion triples (no basement bound)."""
    return T.is_standard() and coinv(T) == 0


# ---------------------------------------------------------------------------
# Young-diagram statistics


def comaj(U: Filling) -> int:
    """Sum of legs of cells weakly smaller than the cell directly below."""
    _require_young(U)
    total = 0
    for r in range(2, U.diagram.n_rows + 1):
        for c in range(1, U.diagram.row_length(r) + 1):
            if U.rows[r - 1][c - 1] <= U.rows[r - 2][c - 1]:
                total += U.diagram.leg(Cell(r, c))
    return total


def young_triples(diagram: Diagram) -> Iterator[tuple[Cell, Cell, Cell | None]]:
    """Same-row pairs at any distance plus the cell below the left member
    (``None`` in the bottom row)."""
    if diagram.kind != YOUNG:
        raise ValueError("young triples need a Young diagram")
    for r, length in enumerate(diagram.row_lengths, start=1):
        for c1 in range(1, length + 1):
            for c2 in range(c1 + 1, length + 1):
                below = Cell(r - 1, c1) if r > 1 else None
                yield Cell(r, c1), Cell(r, c2), below


def inv(U: Filling) -> int:
    """Number of inversion triples of a filling of a Young diagram.

    The parity rule below is total, but ties inside a triple make the
    count convention-dependent; the generating-function callers only ever
    pass standard fillings.
    """
    _require_young(U)
    total = 0
    for u, v, w in young_triples(U.diagram):
        eu, ev = U.entry(u), U.entry(v)
        if w is None:
            total += eu > ev
        else:
            ew = U.entry(w)
            total += ((eu > ev) + (eu > ew) + (ev > ew)) % 2
    return total


def descent_composition(U: Filling) -> Composition:
    """Runs of a standard Young filling between descents.

    i is a descent when i+1 precedes i in the row reading word (rows top
    to bottom, each left to right): i+1 in a strictly higher row, or in
    the same row weakly to the left.  On standard Young tableaux this is
    the usual "i+1 weakly left of i" rule.
    """
    _require_young(U)
    pos = U.position_of()
    n = U.n_cells
    descents = set()
    for i in range(1, n):
        hi, lo = pos[i + 1], pos[i]
        if hi.row > lo.row or (hi.row == lo.row and hi.col < lo.col):
            descents.add(i)
    return Composition.from_descent_set(descents, n)


def is_young_tableau(U: Filling, bound: int | None = None) -> bool:
    """Rows weakly increase, columns strictly increase upward; entries <= bound."""
    _require_young(U)
    if bound is not None and any(e > bound for _, e in U.cells_with_entries()):
        return False
    for row in U.rows:
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
    for r in range(2, U.diagram.n_rows + 1):
        for c in range(1, U.diagram.row_length(r) + 1):
            if U.rows[r - 1][c - 1] <= U.rows[r - 2][c - 1]:
                return False
    return True


def is_standard_young_tableau(U: Filling) -> bool:
    return U.is_standard() and is_young_tableau(U)


def is_standard_young_tabloid(U: Filling) -> bool:
    """Bijective filling of a Young diagram with no inversion triples."""
    return U.is_standard() and inv(U) == 0
