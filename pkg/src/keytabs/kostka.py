"""Symmetric and nonsymmetric Kostka-Foulkes tables and their identities.

The symmetric table collects the Schur coefficients of the q = 0
transformed Macdonald polynomial; the nonsymmetric table collects the
key-basis coefficients of the t = 0 nonsymmetric Macdonald polynomial.
Coefficient polynomials are stored with exponents in one canonical slot;
``param`` records the display name ('q' or 't'), so renaming the
parameter is metadata only and comparisons never mix gradings silently.

The refinement identity: for a weak composition b with column lengths
mu, provided no dual equivalence class of b is lost to virtuality,

    K[lambda, mu](t)  =  sum over a with sort(flat(a)) = lambda' of K[a, b](t).

The stability identity: the padded key expansions of E_b(X;q,0)
stabilize, and grouping the stable table by sort(flat(label)) matches
conjugating the Schur expansion of the Hall-Littlewood polynomial of
sort(b)' with t renamed q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from keytabs import bases
from keytabs import dualeq
from keytabs.polyring import QT
from keytabs.shapes import Partition, WeakComposition


@dataclass(frozen=True)
class KostkaTable:
    """Change-of-basis coefficients, labels to integer polynomials.

    ``kind`` is 'symmetric' (partition labels) or 'nonsymmetric' (weak
    composition labels); ``param`` names the grading variable.
    """

    kind: str
    shape: Partition | WeakComposition
    param: str
    entries: tuple[tuple[Partition | WeakComposition, QT], ...]

    @classmethod
    def from_dict(cls, kind: str, shape, param: str, entries: dict) -> "KostkaTable":
        items = tuple(sorted(((lab, c) for lab, c in entries.items() if c), key=lambda kv: kv[0].parts))
        return cls(kind, shape, param, items)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, label) -> QT:
        return self.as_dict().get(label, QT.zero())

    def rename_param(self, name: str) -> "KostkaTable":
        return KostkaTable(self.kind, self.shape, name, self.entries)

    def __str__(self) -> str:
        return "\n".join(
            f"{lab} : {c.param_str((self.param, '_'))}" for lab, c in self.entries
        )


def kostka_foulkes(mu: Partition) -> KostkaTable:
    """Schur expansion of the Hall-Littlewood polynomial of ``mu``; the
    grading parameter is stored canonically and displayed as t."""
    n = max(mu.total, 1)
    expansion = bases.expand_in_basis(bases.hall_littlewood(mu, n), "schur")
    entries = {lab: c.swap_qt() for lab, c in expansion.coeffs}
    table = KostkaTable.from_dict("symmetric", mu, "t", entries)
    for lab, c in table.entries:
        if not c.is_nonnegative():
            raise AssertionError(f"negative Kostka-Foulkes coefficient at {lab}")
    return table


def ns_kostka(b: WeakComposition) -> KostkaTable:
    """Key expansion of the specialized nonsymmetric Macdonald polynomial,
    computed through dual equivalence classes and cross-checked against
    triangular peeling."""
    from_classes = dualeq.key_expansion(b)
    from_peeling = bases.expand_in_basis(bases.macdonald_q0(b), "key")
    if from_classes.coeffs != from_peeling.coeffs:
        raise AssertionError(
            f"class-based and peeled key expansions disagree for {b}"
        )
    return KostkaTable.from_dict("nonsymmetric", b, "q", dict(from_classes.coeffs))


@dataclass(frozen=True)
class RefinementRow:
    lam: Partition
    lhs: QT
    rhs: QT

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RefinementReport:
    shape: WeakComposition
    mu: Partition
    hypothesis_ok: bool
    dropped_labels: tuple[WeakComposition, ...]
    rows: tuple[RefinementRow, ...]

    @property
    def identity_holds(self) -> bool:
        return all(row.equal for row in self.rows)

    @property
    def ok(self) -> bool:
        """Failure only when the hypothesis holds and the identity breaks."""
        return self.identity_holds or not self.hypothesis_ok


def _partitions_of(n: int) -> list[Partition]:
    def rec(n: int, mx: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, mx), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(n, n)]


def refinement_check(b: WeakComposition) -> RefinementReport:
    """Compare the Kostka-Foulkes column of mu = column_lengths(b) with the
    sums of nonsymmetric entries over labels flattening-and-sorting to the
    conjugate.  When some class of b has a virtual Yamanouchi element the
    hypothesis fails; both sides are still reported, nothing is asserted.
    """
    mu = b.column_lengths()
    cls = dualeq.classes(b)
    dropped = tuple(c.label for c in cls if c.key_label is None)
    hypothesis_ok = not dropped
    sym = kostka_foulkes(mu)
    ns = ns_kostka(b)
    rows = []
    for lam in _partitions_of(b.total):
        rhs = QT.zero()
        for label, coeff in ns.entries:
            if label.sort_to_partition() == lam.conjugate():
                rhs = rhs + coeff
        rows.append(RefinementRow(lam=lam, lhs=sym[lam], rhs=rhs))
    return RefinementReport(
        shape=b, mu=mu, hypothesis_ok=hypothesis_ok,
        dropped_labels=dropped, rows=tuple(rows),
    )


@dataclass(frozen=True)
class StabilityRow:
    lam: Partition
    lhs: QT
    rhs: QT

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class StabilityReport:
    shape: WeakComposition
    rows: tuple[StabilityRow, ...]
    padding_ok: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.equal for r in self.rows) and all(self.padding_ok.values())


def stable_ns_kostka(a: WeakComposition) -> dict[Partition, QT]:
    """Schur-label table of the stabilized key expansion: every class
    contributes q^maj at sort(flat(label)), virtual or not (padding is
    internal, and sort(flat) is padding-invariant)."""
    out: dict[Partition, QT] = {}
    for cls in dualeq.classes(a):
        lam = cls.label.sort_to_partition()
        out[lam] = out.get(lam, QT.zero()) + QT.q(cls.maj)
    return out


def stability_check(a: WeakComposition) -> StabilityReport:
    """Verify the stable limit of the padded key expansions of E(X;q,0).

    Left side: the stabilized class table grouped by sorted flattened
    labels.  Right side: the Schur expansion of the Hall-Littlewood
    polynomial of sort(a)' with t renamed q, conjugated label-wise.
    Also verifies that padding by m = 1, 2 extends the finite table
    consistently: lifted labels keep their coefficients and any extra
    labels come from classes that are virtual at the original length.
    """
    lhs = stable_ns_kostka(a)
    hl_table = kostka_foulkes(a.sort_to_partition().conjugate()).rename_param("q")
    rhs = {lab.conjugate(): c for lab, c in hl_table.entries}
    labels = sorted(set(lhs) | set(rhs), key=lambda p: p.parts)
    rows = tuple(
        StabilityRow(lam=lab, lhs=lhs.get(lab, QT.zero()), rhs=rhs.get(lab, QT.zero()))
        for lab in labels
    )
    padding_ok: dict[int, bool] = {}
    base = ns_kostka(a).as_dict()
    for m in (1, 2):
        padded = ns_kostka(a.pad(m)).as_dict()
        good = all(padded.get(lab.pad(m), QT.zero()) == c for lab, c in base.items())
        for lab, c in padded.items():
            if all(p == 0 for p in lab.parts[:m]):
                if base.get(lab.strip_pad(m), QT.zero()) != c:
                    good = False
        padding_ok[m] = good
    return StabilityReport(shape=a, rows=rows, padding_ok=padding_ok)
