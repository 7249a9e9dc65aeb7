"""Generators for tableau and tabloid families, plus (de)standardization.

Families on key diagrams:

* ``SSKT`` -- semi-standard key tableaux (key tableaux, entries bounded by
  the row index); their monomials generate the key polynomial.
* ``SKT``  -- standard (bijective) key tableaux.
* ``SSKD`` -- semi-standard key tabloids: non-attacking fillings with
  values in 1..len(shape) and no co-inversion triples.
* ``SKD``  -- standard key tabloids: bijective fillings with no
  co-inversion triples (no first-column bound).

Families on Young diagrams: ``SSYT`` (entry bound required), ``SYT``,
``SYD`` (bijective, no inversion triples), ``STD`` (all bijective
fillings).

Enumeration backtracks over cells in column reading order with
incremental constraint checks; every triple becomes checkable exactly
when its row-adjacent right cell is placed.  Output order is
lexicographic by column reading word and is part of the contract.
Generators for distinct shapes are independent and may run concurrently.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from keytabs import fillings as fl
from keytabs.fillings import Filling
from keytabs.shapes import KEY, YOUNG, Cell, Diagram, Partition, WeakComposition

KEY_FAMILIES = ("SSKT", "SKT", "SSKD", "SKD")
YOUNG_FAMILIES = ("SSYT", "SYT", "SYD", "STD")
FAMILIES = KEY_FAMILIES + YOUNG_FAMILIES


def generate(family: str, shape: WeakComposition | Partition, bound: int | None = None) -> tuple[Filling, ...]:
    """All members of the family on ``shape``, in column-reading-word order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family in KEY_FAMILIES:
        if not isinstance(shape, WeakComposition):
            raise ValueError(f"{family} needs a weak composition shape")
        if family == "SSYT":
            raise AssertionError
        return _generate_key(family, shape.parts)
    if not isinstance(shape, Partition):
        raise ValueError(f"{family} needs a partition shape")
    if family == "SSYT":
        if bound is None:
            raise ValueError("SSYT needs an entry bound")
        return _generate_young(family, shape.parts, bound)
    if bound is not None:
        raise ValueError(f"{family} takes no entry bound")
    return _generate_young(family, shape.parts, 0)


def count(family: str, shape, bound: int | None = None) -> int:
    return len(generate(family, shape, bound))


# ---------------------------------------------------------------------------
# key-diagram backtracking


def _column_order(row_lengths: tuple[int, ...]) -> list[Cell]:
    width = max(row_lengths, default=0)
    return [
        Cell(r, c)
        for c in range(1, width + 1)
        for r in range(1, len(row_lengths) + 1)
        if row_lengths[r - 1] >= c
    ]


def _completed_key_triples(row_lengths: tuple[int, ...], cell: Cell) -> list[tuple[Cell | None, Cell, Cell]]:
    """Triples whose cells are all placed once ``cell`` is; ``cell`` is always
    the pair's right member (``x is None`` for basement pairs)."""
    r, c = cell
    n_rows = len(row_lengths)
    mine = row_lengths[r - 1]
    out: list[tuple[Cell | None, Cell, Cell]] = []
    if c == 1:
        for rp in range(1, r):
            if row_lengths[rp - 1] >= 1 and row_lengths[rp - 1] <= mine:
                out.append((None, cell, Cell(rp, 1)))
        return out
    x, y = Cell(r, c - 1), Cell(r, c)
    for rp in range(r + 1, n_rows + 1):
        if row_lengths[rp - 1] >= c - 1 and row_lengths[rp - 1] < mine:
            out.append((x, y, Cell(rp, c - 1)))
    for rp in range(1, r):
        if row_lengths[rp - 1] >= c and row_lengths[rp - 1] <= mine:
            out.append((x, y, Cell(rp, c)))
    return out


def _iter_key_fillings(
    row_lengths: tuple[int, ...],
    *,
    bijective: bool,
    entry_bound: int | None,
    basement: bool,
    coinv_free: bool,
    rows_decrease: str | None,
) -> Iterator[Filling]:
    """Backtracking core for key-diagram families.

    rows_decrease: None, "weak" or "strict" (left neighbour comparison).
    For non-bijective runs the non-attacking conditions are always
    enforced; bijective runs skip them except the optional basement.
    """
    diagram = Diagram(KEY, row_lengths)
    order = _column_order(row_lengths)
    n_cells = diagram.n_cells
    if n_cells == 0:
        yield Filling(diagram, tuple(() for _ in row_lengths))
        return
    triple_sites = [_completed_key_triples(row_lengths, cell) for cell in order]
    grid: list[list[int]] = [[0] * L for L in row_lengths]
    used: set[int] = set()

    def value(cell: Cell) -> int:
        return grid[cell.row - 1][cell.col - 1]

    def candidates(idx: int) -> Iterator[int]:
        r, c = order[idx]
        if bijective:
            top = n_cells
        else:
            top = entry_bound if entry_bound is not None else len(row_lengths)
        if basement and c == 1:
            top = min(top, r)
        for v in range(1, top + 1):
            if bijective and v in used:
                continue
            yield v

    def admissible(idx: int, v: int) -> bool:
        r, c = order[idx]
        if rows_decrease and c >= 2:
            left = grid[r - 1][c - 2]
            if rows_decrease == "weak" and v > left:
                return False
            if rows_decrease == "strict" and v >= left:
                return False
        if not bijective:
            # same column below (cells above are not yet placed)
            for rp in range(1, r):
                if row_lengths[rp - 1] >= c and grid[rp - 1][c - 1] == v:
                    return False
            # adjacent column to the left, strictly higher
            if c >= 2:
                for rp in range(r + 1, len(row_lengths) + 1):
                    if row_lengths[rp - 1] >= c - 1 and grid[rp - 1][c - 2] == v:
                        return False
        if coinv_free:
            grid[r - 1][c - 1] = v
            try:
                for x, y, z in triple_sites[idx]:
                    ey, ez = value(y), value(z)
                    if x is None:
                        if ez > ey:
                            return False
                    else:
                        ex = value(x)
                        if 1 + (ey > ex) - (ex < ez) - (ez < ey) == 1:
                            return False
            finally:
                grid[r - 1][c - 1] = 0
        return True

    def rec(idx: int) -> Iterator[Filling]:
        if idx == n_cells:
            yield Filling._trusted(diagram, tuple(tuple(row) for row in grid))
            return
        r, c = order[idx]
        for v in candidates(idx):
            if not admissible(idx, v):
                continue
            grid[r - 1][c - 1] = v
            if bijective:
                used.add(v)
            yield from rec(idx + 1)
            grid[r - 1][c - 1] = 0
            used.discard(v)

    yield from rec(0)


def iter_non_attacking(shape: WeakComposition) -> Iterator[Filling]:
    """All non-attacking fillings with values in 1..len(shape), lazily."""
    yield from _iter_key_fillings(
        shape.parts,
        bijective=False,
        entry_bound=len(shape),
        basement=True,
        coinv_free=False,
        rows_decrease=None,
    )


@lru_cache(maxsize=None)
def _generate_key(family: str, row_lengths: tuple[int, ...]) -> tuple[Filling, ...]:
    if family == "SSKD":
        out = _iter_key_fillings(
            row_lengths, bijective=False, entry_bound=len(row_lengths),
            basement=True, coinv_free=True, rows_decrease=None,
        )
        return tuple(out)
    if family == "SKD":
        out = _iter_key_fillings(
            row_lengths, bijective=True, entry_bound=None,
            basement=False, coinv_free=True, rows_decrease=None,
        )
        return tuple(out)
    if family == "SSKT":
        raw = _iter_key_fillings(
            row_lengths, bijective=False, entry_bound=len(row_lengths),
            basement=True, coinv_free=False, rows_decrease="weak",
        )
        # basement + weakly decreasing rows bound every entry by its row index
        return tuple(T for T in raw if fl.is_semistandard_key_tableau(T))
    if family == "SKT":
        raw = _iter_key_fillings(
            row_lengths, bijective=True, entry_bound=None,
            basement=False, coinv_free=False, rows_decrease="strict",
        )
        return tuple(T for T in raw if fl.is_key_tableau(T))
    raise AssertionError(family)


# ---------------------------------------------------------------------------
# Young-diagram backtracking


def _completed_young_triples(row_lengths: tuple[int, ...], cell: Cell) -> list[tuple[Cell, Cell, Cell | None]]:
    r, c = cell
    out = []
    for c1 in range(1, c):
        out.append((Cell(r, c1), cell, Cell(r - 1, c1) if r > 1 else None))
    return out


def _iter_young_fillings(
    row_lengths: tuple[int, ...],
    *,
    bijective: bool,
    entry_bound: int,
    rows_increase: str | None,
    cols_increase: bool,
    inv_free: bool,
) -> Iterator[Filling]:
    diagram = Diagram(YOUNG, row_lengths)
    order = _column_order(row_lengths)
    n_cells = diagram.n_cells
    if n_cells == 0:
        yield Filling(diagram, tuple(() for _ in row_lengths))
        return
    triple_sites = [_completed_young_triples(row_lengths, cell) for cell in order]
    grid: list[list[int]] = [[0] * L for L in row_lengths]
    used: set[int] = set()

    def rec(idx: int) -> Iterator[Filling]:
        if idx == n_cells:
            yield Filling._trusted(diagram, tuple(tuple(row) for row in grid))
            return
        r, c = order[idx]
        top = n_cells if bijective else entry_bound
        for v in range(1, top + 1):
            if bijective and v in used:
                continue
            if rows_increase and c >= 2:
                left = grid[r - 1][c - 2]
                if rows_increase == "weak" and v < left:
                    continue
                if rows_increase == "strict" and v <= left:
                    continue
            if cols_increase and r >= 2 and v <= grid[r - 2][c - 1]:
                continue
            if inv_free:
                grid[r - 1][c - 1] = v
                bad = False
                for u, y, w in triple_sites[idx]:
                    eu, ev = grid[u.row - 1][u.col - 1], v
                    if w is None:
                        if eu > ev:
                            bad = True
                            break
                    else:
                        ew = grid[w.row - 1][w.col - 1]
                        if ((eu > ev) + (eu > ew) + (ev > ew)) % 2 == 1:
                            bad = True
                            break
                grid[r - 1][c - 1] = 0
                if bad:
                    continue
            grid[r - 1][c - 1] = v
            if bijective:
                used.add(v)
            yield from rec(idx + 1)
            grid[r - 1][c - 1] = 0
            used.discard(v)
        return

    yield from rec(0)


@lru_cache(maxsize=None)
def _generate_young(family: str, row_lengths: tuple[int, ...], bound: int) -> tuple[Filling, ...]:
    if family == "SSYT":
        out = _iter_young_fillings(
            row_lengths, bijective=False, entry_bound=bound,
            rows_increase="weak", cols_increase=True, inv_free=False,
        )
    elif family == "SYT":
        out = _iter_young_fillings(
            row_lengths, bijective=True, entry_bound=0,
            rows_increase="strict", cols_increase=True, inv_free=False,
        )
    elif family == "SYD":
        out = _iter_young_fillings(
            row_lengths, bijective=True, entry_bound=0,
            rows_increase=None, cols_increase=False, inv_free=True,
        )
    elif family == "STD":
        out = _iter_young_fillings(
            row_lengths, bijective=True, entry_bound=0,
            rows_increase=None, cols_increase=False, inv_free=False,
        )
    else:
        raise AssertionError(family)
    return tuple(out)


# ---------------------------------------------------------------------------
# standardization


def _standardize_order(T: Filling) -> list[Cell]:
    """Cells sorted by value, ties right to left; the relabelling order."""
    return sorted(
        (cell for cell, _ in T.cells_with_entries()),
        key=lambda cell: (T.entry(cell), -cell.col),
    )


def standardize(T: Filling, family: str, check: bool = True) -> Filling:
    """Relabel a semi-standard key tableau/tabloid to its standard image.

    For k = 1, 2, ... the cells holding k are relabelled from right to
    left with the next unused labels.  ``family`` is ``"key_tableau"``
    or ``"key_tabloid"``; membership of the input is enforced unless the
    caller already knows it (``check=False``).
    """
    if family == "key_tableau":
        if check and not fl.is_semistandard_key_tableau(T):
            raise ValueError("input is not a semi-standard key tableau")
    elif family == "key_tabloid":
        if check and not (
            fl.is_key_tabloid(T)
            and all(e <= T.diagram.n_rows for _, e in T.cells_with_entries())
        ):
            raise ValueError("input is not a semi-standard key tabloid")
    else:
        raise ValueError(f"unknown family {family!r}")
    overrides = {cell: label for label, cell in enumerate(_standardize_order(T), start=1)}
    return T.with_entries(overrides)


def destandardize(S: Filling, b: WeakComposition, family: str) -> Filling:
    """The unique semi-standard preimage of ``S`` under standardize with weight ``b``.

    Requires ``b >= des(S)`` in dominance order with ``flat(b)`` refining
    ``flat(des(S))``; raises ``ValueError`` otherwise (in particular for
    virtual ``S``, whose fibre is empty).
    """
    if family == "key_tableau":
        if not (S.is_standard() and fl.is_key_tableau(S)):
            raise ValueError("input is not a standard key tableau")
    elif family == "key_tabloid":
        if not fl.is_standard_key_tabloid(S):
            raise ValueError("input is not a standard key tabloid")
    else:
        raise ValueError(f"unknown family {family!r}")
    if len(b) != S.diagram.n_rows:
        raise ValueError("weight length must match the number of rows")
    des = fl.weak_descent_composition(S)
    if des is None:
        raise ValueError("virtual filling: no semi-standard preimages")
    if not (b.dominates(des) and b.flatten().refines(des.flatten())):
        raise ValueError(f"weight {b} is not a slide refinement of {des}")

    # group the nonzero parts of b consecutively against the block sizes
    block_sizes = list(des.flatten())
    value_of_label: dict[int, int] = {}
    label = 1
    position = 0  # index into b.parts
    for size in block_sizes:
        remaining = size
        while remaining > 0:
            while b[position] == 0:
                position += 1
            part = b[position]
            if part > remaining:
                raise ValueError(f"flat({b}) does not refine flat({des})")
            for _ in range(part):
                value_of_label[label] = position + 1
                label += 1
            remaining -= part
            position += 1
    pos = S.position_of()
    result = S.with_entries({pos[lab]: v for lab, v in value_of_label.items()})

    kind = "key_tableau" if family == "key_tableau" else "key_tabloid"
    if standardize(result, kind) != S or result.wt() != b:
        raise AssertionError("destandardize produced an inconsistent filling")
    return result
