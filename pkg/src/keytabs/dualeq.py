"""Weak dual equivalence on standard key tabloids.

The involutions psi_i (1 < i < n) act on bijective fillings of key
diagrams by locating the cells holding i-1, i, i+1 in column reading
order, say b, c, d, and then: fixing the filling when c holds i; cycling
the three values so that i moves between b and d when b and d attack or
sit adjacent in a row; otherwise swapping i with whichever of i-1, i+1
sits in c's complement.  Orbits of standard key tabloids under all psi_i
are the equivalence classes; after enough zero-padding every member has
a weak descent composition and each class's slide generating polynomial
is a single key polynomial, indexed by the descent composition of the
class's unique Yamanouchi member.

phi maps standard key tableaux to standard Young tableaux (drop boxes,
sort columns, complement the values); theta maps standard key tabloids
to standard Young tabloids by complementing column entry sets into row
entry sets and re-sorting each row the unique inversion-free way.

Class computation per shape is a pure job; distinct shapes may run
concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from keytabs import bases
from keytabs import families as fam
from keytabs import fillings as fl
from keytabs.bases import Expansion
from keytabs.fillings import Filling
from keytabs.polyring import QT, Poly
from keytabs.shapes import KEY, YOUNG, Cell, Diagram, Partition, WeakComposition


class UniquenessError(RuntimeError):
    """A search that must have exactly one solution found zero or several."""


# ---------------------------------------------------------------------------
# the involutions


def _attacking_or_row_adjacent(u: Cell, v: Cell) -> bool:
    if u.col == v.col:
        return True
    left, right = (u, v) if u.col < v.col else (v, u)
    if right.col == left.col + 1:
        if left.row > right.row:
            return True  # attacking
        if left.row == right.row:
            return True  # row adjacent
    return False


def psi(i: int, T: Filling) -> Filling:
    """The i-th weak dual equivalence involution on a bijective filling."""
    if T.diagram.kind != KEY:
        raise ValueError("psi acts on key diagrams")
    n = T.n_cells
    if not 1 < i < n:
        raise ValueError(f"psi index {i} out of range 1 < i < {n}")
    pos = T.position_of()
    trio = sorted((pos[i - 1], pos[i], pos[i + 1]), key=lambda cell: (cell.col, cell.row))
    b, c, d = trio
    if T.entry(c) == i:
        return T
    if _attacking_or_row_adjacent(b, d):
        # cycle the three values so that i leaves b for d or d for b
        vb, vc, vd = T.entry(b), T.entry(c), T.entry(d)
        if vb == i:
            return T.with_entries({b: vc, c: vd, d: vb})
        return T.with_entries({b: vd, c: vb, d: vc})
    if T.entry(c) == i + 1:
        return T.swap_values(i - 1, i)
    return T.swap_values(i, i + 1)


def pad_filling(T: Filling, m: int) -> Filling:
    """Shift all rows up by ``m`` empty rows; entries unchanged."""
    if T.diagram.kind != KEY:
        raise ValueError("padding applies to key diagrams")
    if m < 0:
        raise ValueError("padding must be nonnegative")
    return Filling(
        Diagram(KEY, (0,) * m + T.diagram.row_lengths),
        ((),) * m + T.rows,
    )


def unpad_filling(T: Filling, m: int) -> Filling:
    rl = T.diagram.row_lengths
    if any(rl[:m]) or len(rl) <= m:
        raise ValueError(f"cannot remove {m} rows from shape {rl}")
    return Filling(Diagram(KEY, rl[m:]), T.rows[m:])


is_virtual = fl.is_virtual


# ---------------------------------------------------------------------------
# equivalence classes


@dataclass(frozen=True)
class EquivalenceClass:
    """A psi-orbit of standard key tabloids of one shape.

    ``members`` are the unpadded tabloids; ``pad`` is the smallest shift
    making every member non-virtual; ``label`` is the weak descent
    composition of the Yamanouchi member at that padding, whose key
    polynomial is the class's slide generating polynomial.  ``key_label``
    strips the padding back off, or is ``None`` when the label has
    support inside the padded rows (the class then contributes nothing
    at the original length).
    """

    members: tuple[Filling, ...]
    maj: int
    pad: int
    label: WeakComposition
    key_label: WeakComposition | None
    yamanouchi: Filling

    @property
    def size(self) -> int:
        return len(self.members)


def orbit(T: Filling) -> tuple[Filling, ...]:
    """The psi-orbit of a standard key tabloid, in reading-word order."""
    n = T.n_cells
    seen = {T}
    queue = [T]
    while queue:
        cur = queue.pop()
        for i in range(2, n):
            nxt = psi(i, cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return tuple(sorted(seen, key=lambda f: f.column_reading_word()))


def yamanouchi_of_class(members: tuple[Filling, ...]) -> Filling:
    """The unique member whose descent composition indexes the class's key
    polynomial; every member must be non-virtual."""
    descents = [fl.weak_descent_composition(T) for T in members]
    if any(d is None for d in descents):
        raise ValueError("class has virtual members; pad before extracting")
    n = members[0].diagram.n_rows
    total = Poly.zero(n)
    for d in descents:
        total = total + bases.slide(d, n)
    if not total:
        raise UniquenessError("class slide sum vanished")
    exps, _ = total.leading_min_grlex()
    label = WeakComposition(exps)
    if bases.key(label) != total:
        raise UniquenessError(
            f"class slide sum is not a single key polynomial (candidate {label})"
        )
    matches = [T for T, d in zip(members, descents) if d == label]
    if len(matches) != 1:
        raise UniquenessError(
            f"expected exactly one member with descent composition {label}, found {len(matches)}"
        )
    return matches[0]


def classes(a: WeakComposition) -> tuple[EquivalenceClass, ...]:
    """Partition of the standard key tabloids of shape ``a`` into psi-orbits,
    each annotated through its minimally padded Yamanouchi member."""
    remaining = set(fam.generate("SKD", a))
    out = []
    while remaining:
        seed = min(remaining, key=lambda f: f.column_reading_word())
        members = orbit(seed)
        remaining -= set(members)
        majs = {fl.maj(T) for T in members}
        if len(majs) != 1:
            raise AssertionError(f"maj not constant on a class of {a}")
        cap = max(a.total, 1)
        for m in range(0, cap + 1):
            padded = tuple(pad_filling(T, m) for T in members)
            if all(not is_virtual(T) for T in padded):
                break
        else:
            raise AssertionError(f"padding cap reached for shape {a}")
        yam_padded = yamanouchi_of_class(padded)
        label = fl.weak_descent_composition(yam_padded)
        key_label: WeakComposition | None
        if m == 0:
            key_label = label
        elif all(p == 0 for p in label.parts[:m]):
            key_label = label.strip_pad(m)
        else:
            key_label = None
        out.append(
            EquivalenceClass(
                members=members,
                maj=majs.pop(),
                pad=m,
                label=label,
                key_label=key_label,
                yamanouchi=unpad_filling(yam_padded, m),
            )
        )
    return tuple(sorted(out, key=lambda c: (c.maj, c.label.parts)))


def key_expansion(a: WeakComposition) -> Expansion:
    """Key-basis expansion of the specialized Macdonald polynomial built
    from the dual equivalence classes.

    Classes whose padded label keeps support inside the padding rows are
    entirely virtual at the original length and contribute nothing; this
    is asserted rather than assumed.
    """
    coeffs: dict[WeakComposition, QT] = {}
    for cls in classes(a):
        if cls.key_label is None:
            if any(not is_virtual(T) for T in cls.members):
                raise AssertionError(
                    f"non-liftable class of {a} has a non-virtual member"
                )
            continue
        cur = coeffs.get(cls.key_label, QT.zero())
        coeffs[cls.key_label] = cur + QT.q(cls.maj)
    return Expansion.from_dict("key", coeffs)


# ---------------------------------------------------------------------------
# bijections to the symmetric side


def phi(T: Filling) -> Filling:
    """Standard key tableaux -> standard Young tableaux of the sorted shape.

    Boxes drop to the bottom of their columns, each column is sorted to
    decrease bottom to top, and values are complemented (i -> n-i+1).
    """
    if not (T.is_standard() and fl.is_key_tableau(T)):
        raise ValueError("phi is defined on standard key tableaux")
    n = T.n_cells
    shape = T.diagram.key_shape().sort_to_partition()
    heights = shape.conjugate()
    columns = []
    for c in range(1, T.diagram.width + 1):
        entries = [
            T.entry(Cell(r, c))
            for r in range(1, T.diagram.n_rows + 1)
            if T.diagram.row_lengths[r - 1] >= c
        ]
        entries.sort(reverse=True)
        columns.append([n - e + 1 for e in entries])
    rows = tuple(
        tuple(columns[c][r] for c in range(len(columns)) if heights[c] > r)
        for r in range(len(shape))
    )
    result = Filling(Diagram(YOUNG, shape.parts), rows)
    if not fl.is_standard_young_tableau(result):
        raise AssertionError("phi image is not a standard Young tableau")
    return result


def _unique_row_arrangement(shape: Partition, row_sets: list[set[int]]) -> Filling:
    """The unique standard Young tabloid with the given row entry sets."""
    diagram = Diagram(YOUNG, shape.parts)
    solutions: list[tuple[tuple[int, ...], ...]] = []

    def ok_row(r: int, row: tuple[int, ...], below: tuple[int, ...] | None) -> bool:
        for c1 in range(len(row)):
            for c2 in range(c1 + 1, len(row)):
                if below is None:
                    if row[c1] > row[c2]:
                        return False
                else:
                    eu, ev, ew = row[c1], row[c2], below[c1]
                    if ((eu > ev) + (eu > ew) + (ev > ew)) % 2 == 1:
                        return False
        return True

    def rec(r: int, rows: list[tuple[int, ...]]) -> None:
        if len(solutions) > 1:
            return
        if r > len(shape):
            solutions.append(tuple(rows))
            return
        below = rows[-1] if rows else None
        for perm in itertools.permutations(sorted(row_sets[r - 1])):
            if ok_row(r, perm, below if r > 1 else None):
                rec(r + 1, rows + [perm])

    rec(1, [])
    if len(solutions) != 1:
        raise UniquenessError(
            f"expected one inversion-free arrangement, found {len(solutions)}"
        )
    return Filling(diagram, solutions[0])


def theta(T: Filling) -> Filling:
    """Standard key tabloids -> standard Young tabloids of the conjugate
    sorted shape, complementing column entry sets into row entry sets."""
    if not fl.is_standard_key_tabloid(T):
        raise ValueError("theta is defined on standard key tabloids")
    n = T.n_cells
    mu = T.diagram.key_shape().column_lengths()
    row_sets = []
    for c in range(1, T.diagram.width + 1):
        col = {
            n - T.entry(Cell(r, c)) + 1
            for r in range(1, T.diagram.n_rows + 1)
            if T.diagram.row_lengths[r - 1] >= c
        }
        row_sets.append(col)
    result = _unique_row_arrangement(mu, row_sets)
    if not fl.is_standard_young_tabloid(result):
        raise AssertionError("theta image is not a standard Young tabloid")
    return result
