"""Generating polynomials and change of basis.

Constructors for fundamental slide polynomials, fundamental
quasisymmetric polynomials, key polynomials, Schur polynomials, the
t = 0 specialization of the nonsymmetric Macdonald polynomials, and the
transformed (Hall-Littlewood at q = 0) symmetric Macdonald polynomials.
Symmetric and quasisymmetric objects are truncated to an explicit
variable count; degree-n identities are faithful once n reaches the
degree.

``expand_in_basis`` peels a polynomial against a graded basis and is
used as the independent change-of-basis oracle: slide and key bases are
peeled at the graded-lex smallest monomial (their labels are dominance
minima), the Schur basis at the largest.  Membership failure raises
:class:`SpanError` carrying the residual.

All constructors are pure; distinct shapes may be expanded concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from keytabs import families as fam
from keytabs import fillings as fl
from keytabs.polyring import QT, Poly, grlex_key
from keytabs.shapes import Composition, Partition, WeakComposition


class SpanError(ValueError):
    """Polynomial is not in the span of the requested basis."""

    def __init__(self, message: str, residual: Poly):
        super().__init__(message)
        self.residual = residual


class DenominatorVanishes(ArithmeticError):
    """A parameter point makes a denominator of the evaluation formula zero."""


# ---------------------------------------------------------------------------
# slide and quasisymmetric polynomials


def _placements(beta: tuple[int, ...], nvars: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of length nvars whose nonzero parts read ``beta``."""

    def rec(i: int, slot: int) -> Iterator[tuple[int, ...]]:
        if i == len(beta):
            yield (0,) * (nvars - slot)
            return
        for s in range(slot, nvars - (len(beta) - i) + 1):
            for rest in rec(i + 1, s + 1):
                yield (0,) * (s - slot) + (beta[i],) + rest

    yield from rec(0, 0)


def _refinements(alpha: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All compositions refining ``alpha`` (consecutive groups sum to parts)."""

    def comps(n: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in comps(n - first):
                yield (first,) + rest

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(alpha):
            yield ()
            return
        for head in comps(alpha[i]):
            for rest in rec(i + 1):
                yield head + rest

    yield from rec(0)


@lru_cache(maxsize=None)
def slide(a: WeakComposition | None, nvars: int | None = None) -> Poly:
    """Fundamental slide polynomial; the virtual label (``None``) gives 0.

    Sum of X^b over weak compositions b of the same length that dominate
    ``a`` and whose flattening refines flat(a).
    """
    if a is None:
        if nvars is None:
            raise ValueError("virtual slide polynomial needs an explicit variable count")
        return Poly.zero(nvars)
    n = len(a) if nvars is None else nvars
    if n != len(a):
        raise ValueError("slide polynomials live in len(a) variables")
    terms = {}
    for beta in _refinements(a.flatten().parts):
        for b in _placements(beta, n):
            if WeakComposition(b).dominates(a):
                terms[b] = QT.one()
    return Poly(n, terms)


@lru_cache(maxsize=None)
def quasifund(alpha: Composition, nvars: int) -> Poly:
    """Fundamental quasisymmetric polynomial in ``nvars`` variables."""
    if len(alpha) > nvars and alpha.parts:
        return Poly.zero(nvars)
    terms = {}
    for beta in _refinements(alpha.parts):
        for b in _placements(beta, nvars):
            terms[b] = QT.one()
    return Poly(nvars, terms)


# ---------------------------------------------------------------------------
# key polynomials and nonsymmetric Macdonald specializations


@lru_cache(maxsize=None)
def key(a: WeakComposition) -> Poly:
    """Key polynomial: weight generating polynomial of the semi-standard
    key tableaux."""
    n = len(a)
    terms: dict[tuple[int, ...], QT] = {}
    for T in fam.generate("SSKT", a):
        exps = T.wt().parts
        terms[exps] = terms.get(exps, QT.zero()) + QT.one()
    return Poly(n, terms)


def key_via_slides(a: WeakComposition) -> Poly:
    """Same polynomial as :func:`key`, summed over standard key tableaux
    by slide polynomials of their weak descent compositions."""
    n = len(a)
    total = Poly.zero(n)
    for T in fam.generate("SKT", a):
        total = total + slide(fl.weak_descent_composition(T), n)
    return total


@lru_cache(maxsize=None)
def macdonald_q0(a: WeakComposition) -> Poly:
    """Specialized nonsymmetric Macdonald polynomial E(X;q,0): q^maj-graded
    weight sum over the semi-standard key tabloids."""
    n = len(a)
    terms: dict[tuple[int, ...], QT] = {}
    for T in fam.generate("SSKD", a):
        exps = T.wt().parts
        terms[exps] = terms.get(exps, QT.zero()) + QT.q(fl.maj(T))
    return Poly(n, terms)


def macdonald_q0_via_slides(a: WeakComposition) -> Poly:
    """Same polynomial as :func:`macdonald_q0`, summed over standard key
    tabloids by q^maj-weighted slide polynomials."""
    n = len(a)
    total = Poly.zero(n)
    for T in fam.generate("SKD", a):
        total = total + slide(fl.weak_descent_composition(T), n) * QT.q(fl.maj(T))
    return total


# ---------------------------------------------------------------------------
# symmetric polynomials


@lru_cache(maxsize=None)
def schur(lam: Partition, nvars: int) -> Poly:
    """Schur polynomial: weight generating polynomial of SSYT with entries
    bounded by ``nvars``."""
    terms: dict[tuple[int, ...], QT] = {}
    for T in fam.generate("SSYT", lam, nvars):
        exps = T.wt(nvars).parts
        terms[exps] = terms.get(exps, QT.zero()) + QT.one()
    return Poly(nvars, terms)


def schur_via_gessel(lam: Partition, nvars: int) -> Poly:
    """Same polynomial as :func:`schur`, via descent compositions of
    standard Young tableaux."""
    total = Poly.zero(nvars)
    for T in fam.generate("SYT", lam):
        total = total + quasifund(fl.descent_composition(T), nvars)
    return total


@lru_cache(maxsize=None)
def hall_littlewood(mu: Partition, nvars: int) -> Poly:
    """Transformed Hall-Littlewood polynomial H(X;0,t): t^comaj-graded sum
    of fundamental quasisymmetric polynomials over standard Young tabloids."""
    total = Poly.zero(nvars)
    for T in fam.generate("SYD", mu):
        total = total + quasifund(fl.descent_composition(T), nvars) * QT.t(fl.comaj(T))
    return total


@lru_cache(maxsize=None)
def macdonald_full(mu: Partition, nvars: int) -> Poly:
    """Transformed Macdonald polynomial H(X;q,t) summed over all standard
    fillings, graded by q^inv t^comaj."""
    total = Poly.zero(nvars)
    for T in fam.generate("STD", mu):
        total = total + quasifund(fl.descent_composition(T), nvars) * QT.term(fl.inv(T), fl.comaj(T))
    return total


# ---------------------------------------------------------------------------
# exact evaluation of the full nonsymmetric Macdonald polynomial


def evaluate_E_full_many(
    a: WeakComposition,
    points: list[tuple[list[Fraction], Fraction, Fraction]],
) -> list[Fraction]:
    """Evaluate the full nonsymmetric Macdonald polynomial at several
    (x, q, t) points in one pass over the non-attacking fillings."""
    prepared = []
    for xs, q, t in points:
        xs = [Fraction(x) for x in xs]
        if len(xs) != len(a):
            raise ValueError(f"expected {len(a)} coordinates, got {len(xs)}")
        prepared.append((xs, Fraction(q), Fraction(t)))
    totals = [Fraction(0)] * len(prepared)
    diagram = None
    factor_cache: list[dict] = [dict() for _ in prepared]
    for T in fam.iter_non_attacking(a):
        if diagram is None:
            diagram = T.diagram
            cells = list(diagram.cells())
            legs_arms = {cell: (diagram.leg(cell) + 1, diagram.arm(cell) + 1) for cell in cells}
        mj = fl.maj(T)
        cv = fl.coinv(T)
        wt = T.wt().parts
        factor_cells = []
        for cell in cells:
            e = T.entry(cell)
            left = T.rows[cell.row - 1][cell.col - 2] if cell.col >= 2 else cell.row
            if e != left:
                factor_cells.append(legs_arms[cell])
        for k, (xs, q, t) in enumerate(prepared):
            if cv > 0 and t == 0:
                continue
            term = q**mj * t**cv
            if term == 0:
                continue
            cache = factor_cache[k]
            for la in factor_cells:
                factor = cache.get(la)
                if factor is None:
                    den = 1 - q ** la[0] * t ** la[1]
                    if den == 0:
                        raise DenominatorVanishes(
                            f"denominator vanishes at q={q}, t={t} for {a}"
                        )
                    factor = (1 - t) / den
                    cache[la] = factor
                term *= factor
            for x, e in zip(xs, wt):
                if e:
                    term *= x**e
            totals[k] += term
    return totals


def evaluate_E_full(
    a: WeakComposition,
    xs: list[Fraction],
    q: Fraction,
    t: Fraction,
) -> Fraction:
    """Exact value of the two-parameter nonsymmetric Macdonald polynomial.

    Direct summation over the non-attacking fillings with values in
    1..len(a): each filling contributes

        q^maj t^coinv X^wt  *  prod (1-t) / (1 - q^(leg+1) t^(arm+1))

    with the product over cells whose value differs from the value to
    their left, the row index standing in left of the first column.
    Raises :class:`DenominatorVanishes` when the point kills a
    denominator.
    """
    return evaluate_E_full_many(a, [(xs, q, t)])[0]


# ---------------------------------------------------------------------------
# expansions


@dataclass(frozen=True)
class Expansion:
    """Map from basis labels to integer q,t-coefficients."""

    basis: str
    coeffs: tuple[tuple[WeakComposition | Partition, QT], ...]

    @classmethod
    def from_dict(cls, basis: str, coeffs: dict) -> "Expansion":
        items = tuple(sorted(((lab, c) for lab, c in coeffs.items() if c), key=lambda kv: kv[0].parts))
        return cls(basis, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __getitem__(self, label) -> QT:
        return self.as_dict().get(label, QT.zero())

    def labels(self) -> list:
        return [lab for lab, _ in self.coeffs]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return "\n".join(f"{lab} : {c}" for lab, c in self.coeffs)


_BASIS_KINDS = ("key", "slide", "schur")


def expand_in_basis(p: Poly, basis: str) -> Expansion:
    """Expand ``p`` by greedy triangular peeling; exact and order-independent.

    Every slide and key polynomial has its label as graded-lex smallest
    monomial with coefficient 1 (all other monomials strictly dominate),
    and every Schur polynomial has its label as graded-lex largest, so
    repeatedly peeling that monomial terminates with the expansion or
    proves non-membership.
    """
    if basis not in _BASIS_KINDS:
        raise ValueError(f"unknown basis {basis!r}")
    remainder = p
    out: dict = {}
    guard = 0
    while remainder:
        guard += 1
        if guard > 100000:
            raise AssertionError("peeling failed to terminate")
        if basis == "schur":
            exps, coeff = remainder.leading_max_grlex()
            stripped = list(exps)
            while stripped and stripped[-1] == 0:
                stripped.pop()
            if any(stripped[i] < stripped[i + 1] for i in range(len(stripped) - 1)):
                raise SpanError(f"leading monomial {exps} is not a partition", remainder)
            label = Partition(tuple(stripped))
            base = schur(label, p.nvars)
        else:
            exps, coeff = remainder.leading_min_grlex()
            label = WeakComposition(exps)
            base = key(label) if basis == "key" else slide(label)
        out[label] = out.get(label, QT.zero()) + coeff
        remainder = remainder - base * coeff
        if remainder.coefficient(exps):
            raise AssertionError("peeling made no progress")
    return Expansion.from_dict(basis, out)


def omega_on_schur(e: Expansion) -> Expansion:
    """Conjugate every label of a Schur expansion; coefficients unchanged."""
    if e.basis != "schur":
        raise ValueError("omega acts on Schur expansions")
    return Expansion.from_dict("schur", {lab.conjugate(): c for lab, c in e.coeffs})


def is_F_stable(a: WeakComposition) -> bool:
    """True when zero-padding does not change the number of nonzero slide
    terms of the key polynomial (no virtual standard key tableau appears)."""
    def nonvirtual_count(shape: WeakComposition) -> int:
        return sum(
            1 for T in fam.generate("SKT", shape)
            if fl.weak_descent_composition(T) is not None
        )

    return nonvirtual_count(a) == nonvirtual_count(a.pad(1))
