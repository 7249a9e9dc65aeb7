"""Exact sparse polynomials in x_1..x_n with integer q,t-coefficients.

Coefficients are integer polynomials in two grading parameters q and t
(:class:`QT`); Python integers are arbitrary precision, so arithmetic is
exact at any scale.  Monomials are ordered graded-lexicographically for
serialization and basis elimination.  Values are immutable and freely
shareable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction


class QT:
    """Integer polynomial in the parameters q and t."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned: dict[tuple[int, int], int] = {}
        for (qe, te), c in (terms or {}).items():
            if qe < 0 or te < 0:
                raise ValueError("parameter exponents must be nonnegative")
            if c != 0:
                cleaned[(int(qe), int(te))] = int(c)
        self._terms = cleaned

    @classmethod
    def zero(cls) -> "QT":
        return cls()

    @classmethod
    def one(cls) -> "QT":
        return cls({(0, 0): 1})

    @classmethod
    def integer(cls, c: int) -> "QT":
        return cls({(0, 0): c})

    @classmethod
    def q(cls, k: int = 1) -> "QT":
        return cls({(k, 0): 1})

    @classmethod
    def t(cls, k: int = 1) -> "QT":
        return cls({(0, k): 1})

    @classmethod
    def term(cls, qe: int, te: int, c: int = 1) -> "QT":
        return cls({(qe, te): c})

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QT.integer(other)
        if not isinstance(other, QT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QT | int") -> "QT":
        if isinstance(other, int):
            other = QT.integer(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QT(out)

    __radd__ = __add__

    def __neg__(self) -> "QT":
        return QT({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "QT | int") -> "QT":
        if isinstance(other, int):
            other = QT.integer(other)
        return self + (-other)

    def __mul__(self, other: "QT | int") -> "QT":
        if isinstance(other, int):
            other = QT.integer(other)
        out: dict[tuple[int, int], int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                k = (q1 + q2, t1 + t2)
                out[k] = out.get(k, 0) + c1 * c2
        return QT(out)

    __rmul__ = __mul__

    def drop_t(self) -> "QT":
        """Kill every term with a positive t exponent."""
        return QT({k: c for k, c in self._terms.items() if k[1] == 0})

    def drop_q(self) -> "QT":
        return QT({k: c for k, c in self._terms.items() if k[0] == 0})

    def swap_qt(self) -> "QT":
        return QT({(te, qe): c for (qe, te), c in self._terms.items()})

    def uses_q(self) -> bool:
        return any(qe > 0 for qe, _ in self._terms)

    def uses_t(self) -> bool:
        return any(te > 0 for _, te in self._terms)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        total = Fraction(0)
        for (qe, te), c in self._terms.items():
            total += c * q**qe * t**te
        return total

    def param_str(self, names: tuple[str, str] = ("q", "t")) -> str:
        """Canonical string such as ``q^2*t + 2*q - 3`` (terms by ascending exponents)."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for (qe, te), c in self.items():
            atoms: list[str] = []
            for exp, name in ((qe, names[0]), (te, names[1])):
                if exp == 1:
                    atoms.append(name)
                elif exp > 1:
                    atoms.append(f"{name}^{exp}")
            if not atoms or abs(c) != 1:
                atoms.insert(0, str(abs(c)))
            body = "*".join(atoms)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.param_str()

    def __repr__(self) -> str:
        return f"QT({self.param_str()})"


def grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class Poly:
    """Sparse polynomial in x_1..x_nvars with :class:`QT` coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], QT] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = int(nvars)
        cleaned: dict[tuple[int, ...], QT] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} has wrong length (nvars={self.nvars})")
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            if not isinstance(coeff, QT):
                coeff = QT.integer(coeff)
            if coeff:
                cleaned[exps] = coeff
        self._terms = cleaned

    # -- constructors

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: QT.one()})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: QT | int = 1) -> "Poly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff if isinstance(coeff, QT) else QT.integer(coeff)})

    @classmethod
    def x(cls, i: int, nvars: int) -> "Poly":
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x_{i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls.monomial(exps)

    # -- basic protocol

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: tuple[int, ...]) -> QT:
        return self._terms.get(tuple(exps), QT.zero())

    def monomials(self) -> list[tuple[tuple[int, ...], QT]]:
        """Terms in descending graded-lexicographic order (leading first)."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # -- arithmetic

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            cur = out.get(exps)
            out[exps] = coeff if cur is None else cur + coeff
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | QT | int") -> "Poly":
        if isinstance(other, (QT, int)):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], QT] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(exps)
                out[exps] = prod if cur is None else cur + prod
        return Poly(self.nvars, out)

    def __rmul__(self, other: "QT | int") -> "Poly":
        return self.scale(other)

    def scale(self, coeff: QT | int) -> "Poly":
        if isinstance(coeff, int):
            coeff = QT.integer(coeff)
        return Poly(self.nvars, {e: c * coeff for e, c in self._terms.items()})

    # -- specializations and evaluation

    def drop_t(self) -> "Poly":
        return Poly(self.nvars, {e: c.drop_t() for e, c in self._terms.items()})

    def drop_q(self) -> "Poly":
        return Poly(self.nvars, {e: c.drop_q() for e, c in self._terms.items()})

    def swap_qt(self) -> "Poly":
        return Poly(self.nvars, {e: c.swap_qt() for e, c in self._terms.items()})

    def evaluate(self, xs: Iterable[Fraction], q: Fraction = Fraction(0), t: Fraction = Fraction(0)) -> Fraction:
        xs = [Fraction(x) for x in xs]
        if len(xs) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(xs)}")
        q, t = Fraction(q), Fraction(t)
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            v = coeff.evaluate(q, t)
            for x, e in zip(xs, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def leading_min_grlex(self) -> tuple[tuple[int, ...], QT]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = min(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    def leading_max_grlex(self) -> tuple[tuple[int, ...], QT]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=grlex_key)
        return exps, self._terms[exps]

    # -- serialization

    def to_text(self) -> str:
        """Expanded sum of terms, leading (grlex-largest) x-monomial first."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for exps, coeff in self.monomials():
            xatoms = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exps, start=1)
                if e > 0
            ]
            for (qe, te), c in coeff.items():
                atoms = []
                if qe == 1:
                    atoms.append("q")
                elif qe > 1:
                    atoms.append(f"q^{qe}")
                if te == 1:
                    atoms.append("t")
                elif te > 1:
                    atoms.append(f"t^{te}")
                atoms += xatoms
                if not atoms or abs(c) != 1:
                    atoms.insert(0, str(abs(c)))
                body = "*".join(atoms)
                if not chunks:
                    chunks.append(body if c > 0 else f"-{body}")
                else:
                    chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    _ATOM = re.compile(r"^(?:(?P<int>\d+)|(?P<var>[qt]|x\d+)(?:\^(?P<exp>\d+))?)$")

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "Poly":
        text = text.strip()
        if text in ("", "0"):
            return cls.zero(nvars)
        tokens = text.replace("- ", "+ -").split("+")
        terms: dict[tuple[int, ...], QT] = {}
        for token in tokens:
            token = token.strip()
            if not token:
                continue
            sign = 1
            while token.startswith("-"):
                sign = -sign
                token = token[1:].strip()
            c, qe, te = 1, 0, 0
            exps = [0] * nvars
            for atom in token.split("*"):
                m = cls._ATOM.match(atom.strip())
                if not m:
                    raise ValueError(f"bad term atom {atom!r}")
                if m.group("int") is not None:
                    c *= int(m.group("int"))
                    continue
                var = m.group("var")
                e = int(m.group("exp") or 1)
                if var == "q":
                    qe += e
                elif var == "t":
                    te += e
                else:
                    i = int(var[1:])
                    if not 1 <= i <= nvars:
                        raise ValueError(f"variable {var} out of range (nvars={nvars})")
                    exps[i - 1] += e
            key = tuple(exps)
            cur = terms.get(key, QT.zero())
            terms[key] = cur + QT.term(qe, te, sign * c)
        return cls(nvars, terms)

    def to_structured(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exps": list(exps), "coeff": [[qe, te, c] for (qe, te), c in coeff.items()]}
                for exps, coeff in self.monomials()
            ],
        }

    @classmethod
    def from_structured(cls, data: dict) -> "Poly":
        terms = {
            tuple(item["exps"]): QT({(qe, te): c for qe, te, c in item["coeff"]})
            for item in data["terms"]
        }
        return cls(data["nvars"], terms)

    def to_json(self) -> str:
        return json.dumps(self.to_structured(), separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_text()})"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))
