"""Integer shapes and the cell geometry of key and Young diagrams.

Diagrams live in the quarter plane with rows counted 1, 2, ... from the
bottom upward and columns 1, 2, ... from the left.  A key diagram has one
left-justified row per part of a weak composition; trailing zero rows are
meaningful (they change the number of rows and hence every row-indexed
statistic).  A Young diagram is the same picture for a partition.

All values are immutable after construction and every operation is a pure
function, so everything here may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    """A lattice cell; ``row`` counts from 1 at the bottom, ``col`` from 1 at the left."""

    row: int
    col: int


def _parse_paren_ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"{what} must look like '(2,0,3)', got {text!r}")
    inner = text[1:-1].strip().rstrip(",")
    if not inner:
        return ()
    try:
        return tuple(int(p) for p in inner.split(","))
    except ValueError as exc:
        raise ValueError(f"bad {what} {text!r}") from exc


@dataclass(frozen=True)
class WeakComposition:
    """A sequence of nonnegative integers of fixed length >= 1.

    Trailing zeros are significant: (2,1,2) and (2,1,2,0) are different
    objects indexing different diagrams and polynomials.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if len(self.parts) == 0:
            raise ValueError("a weak composition has at least one part")
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "WeakComposition":
        return cls(_parse_paren_ints(text, "weak composition"))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def flatten(self) -> "Composition":
        """Remove zero parts, preserving order."""
        return Composition(tuple(p for p in self.parts if p > 0))

    def sort_to_partition(self) -> "Partition":
        """The nonzero parts in weakly decreasing order."""
        return Partition(tuple(sorted((p for p in self.parts if p > 0), reverse=True)))

    def column_lengths(self) -> "Partition":
        """j-th part counts rows of length >= j; equals conjugate(sort)."""
        width = max(self.parts, default=0)
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1))
        )

    def dominates(self, other: "WeakComposition") -> bool:
        """Prefix-sum comparison; both sequences must have the same length."""
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {self} vs {other}")
        run_self = run_other = 0
        for a, b in zip(self.parts, other.parts):
            run_self += a
            run_other += b
            if run_self < run_other:
                return False
        return True

    def pad(self, m: int) -> "WeakComposition":
        """Prepend ``m`` zero rows below the diagram."""
        if m < 0:
            raise ValueError("padding must be nonnegative")
        return WeakComposition((0,) * m + self.parts)

    def strip_pad(self, m: int) -> "WeakComposition":
        """Remove ``m`` leading parts, all of which must be zero."""
        if m < 0 or m >= len(self.parts):
            raise ValueError(f"cannot strip {m} rows from {self}")
        if any(p != 0 for p in self.parts[:m]):
            raise ValueError(f"{self} does not start with {m} zero parts")
        return WeakComposition(self.parts[m:])


@dataclass(frozen=True)
class Composition:
    """A sequence of strictly positive integers; may be empty."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(_parse_paren_ints(text, "composition"))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def prefix_sums(self) -> tuple[int, ...]:
        out, run = [], 0
        for p in self.parts:
            run += p
            out.append(run)
        return tuple(out)

    def refines(self, coarser: "Composition") -> bool:
        """True when consecutive groups of our parts sum to ``coarser``'s parts."""
        if self.total != coarser.total:
            return False
        return set(coarser.prefix_sums()) <= set(self.prefix_sums())

    def reverse(self) -> "Composition":
        return Composition(self.parts[::-1])

    def descent_set(self) -> frozenset[int]:
        """Proper prefix sums, viewing a composition of n as a subset of {1..n-1}."""
        return frozenset(s for s in self.prefix_sums() if s < self.total)

    @classmethod
    def from_descent_set(cls, subset: frozenset[int] | set[int], n: int) -> "Composition":
        cuts = sorted(s for s in subset if 0 < s < n) + [n]
        prev = 0
        parts = []
        for s in cuts:
            parts.append(s - prev)
            prev = s
        return cls(tuple(parts)) if n > 0 else cls(())


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers (trailing zeros dropped)."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(_parse_paren_ints(text, "partition"))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        width = self.parts[0] if self.parts else 0
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1))
        )

    def as_weak_composition(self, length: int | None = None) -> WeakComposition:
        n = len(self.parts) if length is None else length
        if n < len(self.parts) or n < 1:
            raise ValueError(f"length {n} too short for {self}")
        return WeakComposition(self.parts + (0,) * (n - len(self.parts)))


KEY = "key"
YOUNG = "young"


@dataclass(frozen=True)
class Diagram:
    """Cell geometry shared by key diagrams (weak compositions) and Young diagrams."""

    kind: str
    row_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (KEY, YOUNG):
            raise ValueError(f"unknown diagram kind {self.kind!r}")
        object.__setattr__(self, "row_lengths", tuple(int(p) for p in self.row_lengths))
        if any(p < 0 for p in self.row_lengths):
            raise ValueError("negative row length")
        if self.kind == YOUNG:
            rl = self.row_lengths
            if any(rl[i] < rl[i + 1] for i in range(len(rl) - 1)):
                raise ValueError(f"Young rows must weakly decrease upward: {rl}")

    @classmethod
    def key(cls, shape: WeakComposition) -> "Diagram":
        return cls(KEY, shape.parts)

    @classmethod
    def young(cls, shape: Partition) -> "Diagram":
        return cls(YOUNG, shape.parts)

    @property
    def n_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def n_cells(self) -> int:
        return sum(self.row_lengths)

    @property
    def width(self) -> int:
        return max(self.row_lengths, default=0)

    def key_shape(self) -> WeakComposition:
        if self.kind != KEY:
            raise ValueError("not a key diagram")
        return WeakComposition(self.row_lengths)

    def young_shape(self) -> Partition:
        if self.kind != YOUNG:
            raise ValueError("not a Young diagram")
        return Partition(self.row_lengths)

    def row_length(self, r: int) -> int:
        return self.row_lengths[r - 1]

    def column_length(self, c: int) -> int:
        return sum(1 for p in self.row_lengths if p >= c)

    def __contains__(self, cell: Cell) -> bool:
        return (
            1 <= cell.row <= self.n_rows
            and 1 <= cell.col <= self.row_lengths[cell.row - 1]
        )

    def cells(self) -> Iterator[Cell]:
        """Row-major, bottom row first."""
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield Cell(r, c)

    def cells_column_order(self) -> Iterator[Cell]:
        """Leftmost column bottom to top, then the next column, and so on."""
        for c in range(1, self.width + 1):
            for r, length in enumerate(self.row_lengths, start=1):
                if length >= c:
                    yield Cell(r, c)

    def _require(self, cell: Cell) -> None:
        if cell not in self:
            raise ValueError(f"cell {cell} outside diagram {self.row_lengths}")

    def leg(self, cell: Cell) -> int:
        """Key: cells weakly right in the row.  Young: cells weakly above in the column."""
        self._require(cell)
        if self.kind == KEY:
            return self.row_lengths[cell.row - 1] - cell.col + 1
        return self.column_length(cell.col) - cell.row + 1

    def arm(self, cell: Cell) -> int:
        """Cells below in the same column in a weakly shorter row, plus cells above
        one column to the left in a strictly shorter row.  Key diagrams only."""
        if self.kind != KEY:
            raise ValueError("arm is defined on key diagrams only")
        self._require(cell)
        rl = self.row_lengths
        mine = rl[cell.row - 1]
        below = sum(
            1
            for r in range(1, cell.row)
            if rl[r - 1] >= cell.col and rl[r - 1] <= mine
        )
        above_left = 0
        if cell.col >= 2:
            above_left = sum(
                1
                for r in range(cell.row + 1, self.n_rows + 1)
                if rl[r - 1] >= cell.col - 1 and rl[r - 1] < mine
            )
        return below + above_left
