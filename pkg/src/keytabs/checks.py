"""Exhaustive property suites over bounded shape families.

The shape universe for a bound k is every weak composition with at most
k cells and at most k parts (trailing zeros included, since row count
changes the statistics); the partition universe is every partition of at
most k.  Each suite walks its universe and returns one result row; a
failure message pinpoints the first offending shape and filling.

Suites for one shape are independent of every other shape, so the
runner can fan shapes out to worker processes (``jobs``).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from keytabs import bases
from keytabs import dualeq
from keytabs import families as fam
from keytabs import fillings as fl
from keytabs import kostka
from keytabs.polyring import QT, Poly
from keytabs.shapes import Partition, WeakComposition

DEFAULT_MAX_CELLS = 6
DEFAULT_SEED = 20250810


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def shape_universe(max_cells: int) -> list[WeakComposition]:
    out = []
    for n in range(1, max_cells + 1):
        for parts in itertools.product(range(max_cells + 1), repeat=n):
            if sum(parts) <= max_cells:
                out.append(WeakComposition(parts))
    return out


def partition_universe(max_total: int) -> list[Partition]:
    def rec(n: int, mx: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, mx), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest

    return [Partition(p) for tot in range(1, max_total + 1) for p in rec(tot, tot)]


# ---------------------------------------------------------------------------
# per-shape workers (module level so process pools can pickle them)


def _shape_failures(parts: tuple[int, ...]) -> list[tuple[str, str]]:
    a = WeakComposition(parts)
    n = len(a)
    failures: list[tuple[str, str]] = []

    def fail(suite: str, message: str) -> None:
        failures.append((suite, f"{a}: {message}"))

    sskd = fam.generate("SSKD", a)
    skd = fam.generate("SKD", a)
    sskt = fam.generate("SSKT", a)
    skt = fam.generate("SKT", a)

    # specialization to the key polynomial
    E = bases.macdonald_q0(a)
    kappa = bases.key(a)
    if E.drop_q() != kappa:
        fail("mac-key", "E(X;q,0) at q=0 differs from the key polynomial")
    if bases.key_via_slides(a) != kappa:
        fail("mac-key", "slide construction of the key polynomial differs")

    # standardization fibers and the slide expansion
    if bases.macdonald_q0_via_slides(a) != E:
        fail("fibers", "tabloid slide expansion differs from the monomial sum")
    fibers: dict[fl.Filling, Poly] = {}
    for T in sskd:
        S = fam.standardize(T, "key_tabloid", check=False)
        cur = fibers.get(S, Poly.zero(n))
        fibers[S] = cur + Poly.monomial(T.wt().parts, QT.q(fl.maj(T)))
    skd_set = set(skd)
    for S, poly in fibers.items():
        if S not in skd_set:
            fail("fibers", f"standardization left the tabloid family at {S}")
        expected = bases.slide(fl.weak_descent_composition(S), n) * QT.q(fl.maj(S))
        if poly != expected:
            fail("fibers", f"fiber of {S} has wrong generating polynomial")
    for S in skd:
        if S not in fibers and fl.weak_descent_composition(S) is not None:
            fail("fibers", f"non-virtual tabloid {S} has empty fiber")

    # characterizations
    if set(sskt) != {T for T in fam.iter_non_attacking(a) if fl.maj(T) == 0 and fl.coinv(T) == 0}:
        fail("characterizations", "SSKT differs from the maj=coinv=0 fillings")
    if set(skt) != {T for T in skd if fl.maj(T) == 0}:
        fail("characterizations", "SKT differs from the maj=0 tabloids")

    # psi involutions
    cells = a.total
    for T in skd:
        images = {}
        for i in range(2, cells):
            U = dualeq.psi(i, T)
            images[i] = U
            if dualeq.psi(i, U) != T:
                fail("psi", f"psi_{i} is not an involution at {T}")
            if fl.maj(U) != fl.maj(T) or fl.coinv(U) != 0:
                fail("psi", f"psi_{i} broke a statistic at {T}")
            if not U.is_standard():
                fail("psi", f"psi_{i} image not standard at {T}")
        for i in range(2, cells):
            for j in range(i + 3, cells):
                if dualeq.psi(j, images[i]) != dualeq.psi(i, images[j]):
                    fail("psi", f"psi_{i} and psi_{j} do not commute at {T}")
        if fl.maj(T) == 0:
            for i in range(2, cells):
                if images[i] not in set(skt):
                    fail("psi", f"psi_{i} left the tableau family at {T}")

    # dual equivalence classes and both key expansions
    try:
        cls = dualeq.classes(a)
    except Exception as exc:  # pragma: no cover - reported as a failure
        fail("classes", f"class computation failed: {exc}")
        cls = ()
    for c in cls:
        padded = [dualeq.pad_filling(T, c.pad) for T in c.members]
        total = Poly.zero(n + c.pad)
        for T in padded:
            total = total + bases.slide(fl.weak_descent_composition(T), n + c.pad)
        if total != bases.key(c.label):
            fail("classes", f"class slide sum is not the key polynomial {c.label}")
    try:
        kostka.ns_kostka(a)  # internally compares classes against peeling
    except AssertionError as exc:
        fail("classes", str(exc))

    # coinv formula on every non-attacking filling
    for T in fam.iter_non_attacking(a):
        if fl.coinv(T) != fl.coinv_by_formula(T):
            fail("coinv-formula", f"mismatch at {T}")
            break

    # full evaluation oracle at t = 0
    rng = random.Random((DEFAULT_SEED,) + parts)
    points = []
    for _ in range(3):
        xs = [Fraction(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(n)]
        q = Fraction(rng.randint(0, 6), rng.randint(1, 6))
        points.append((xs, q, Fraction(0)))
    for (xs, q, _), lhs in zip(points, bases.evaluate_E_full_many(a, points)):
        if lhs != E.evaluate(xs, q=q):
            fail("eval-full", f"t=0 evaluation differs at xs={xs}, q={q}")

    # phi and theta
    sort_a = a.sort_to_partition()
    if a.total:
        images = [dualeq.phi(T) for T in skt]
        if len(set(images)) != len(skt) or set(images) != set(fam.generate("SYT", sort_a)):
            fail("phi-theta", "phi is not a bijection onto the standard Young tableaux")
        for T, U in zip(skt, images):
            d = fl.weak_descent_composition(T)
            if d is not None and fl.descent_composition(U) != d.flatten().reverse():
                fail("phi-theta", f"phi descent identity fails at {T}")
        timages = [dualeq.theta(T) for T in skd]
        if len(set(timages)) != len(skd) or set(timages) != set(
            fam.generate("SYD", a.column_lengths())
        ):
            fail("phi-theta", "theta is not a bijection onto the standard Young tabloids")
        full = frozenset(range(1, a.total))
        for T, U in zip(skd, timages):
            d = fl.weak_descent_composition(T)
            if d is None:
                continue
            lhs = d.flatten().reverse().descent_set()
            if lhs != full - fl.descent_composition(U).descent_set():
                fail("phi-theta", f"theta descent complement fails at {T}")
            if fl.comaj(U) != fl.maj(T):
                fail("phi-theta", f"theta does not carry maj to comaj at {T}")

    return failures


def _partition_failures(mu_parts: tuple[int, ...]) -> list[tuple[str, str]]:
    mu = Partition(mu_parts)
    n = mu.total
    failures: list[tuple[str, str]] = []

    def fail(suite: str, message: str) -> None:
        failures.append((suite, f"{mu}: {message}"))

    if bases.schur(mu, n) != bases.schur_via_gessel(mu, n):
        fail("schur", "SSYT and Gessel constructions differ")
    syt = set(fam.generate("SYT", mu))
    alt = {
        U for U in fam.generate("STD", mu) if fl.comaj(U) == 0 and fl.inv(U) == 0
    }
    if syt != alt:
        fail("schur", "SYT differs from the comaj=inv=0 fillings")

    H = bases.macdonald_full(mu, n)
    if H.drop_q() != bases.hall_littlewood(mu, n):
        fail("qt-symmetry", "q=0 slice of the full polynomial is not Hall-Littlewood")
    expansion = bases.expand_in_basis(H, "schur")
    lhs = {lab.conjugate(): c for lab, c in expansion.coeffs}
    conj = bases.expand_in_basis(bases.macdonald_full(mu.conjugate(), n), "schur")
    rhs = {lab: c.swap_qt() for lab, c in conj.coeffs}
    if lhs != rhs:
        fail("qt-symmetry", "omega H(q,t) differs from the conjugate at (t,q)")

    table = kostka.kostka_foulkes(mu)
    for lab, c in table.entries:
        if not c.is_nonnegative():
            fail("kostka-foulkes", f"negative coefficient at {lab}")
        t0 = c.drop_q()  # canonical slot is q
        expected = QT.one() if lab == mu else QT.zero()
        if t0 != expected:
            fail("kostka-foulkes", f"t=0 slice at {lab} is {t0}")
    if table[mu] == QT.zero():
        fail("kostka-foulkes", "diagonal entry missing")

    return failures


def _refinement_result(parts: tuple[int, ...]) -> tuple[tuple[int, ...], bool, bool]:
    report = kostka.refinement_check(WeakComposition(parts))
    return parts, report.hypothesis_ok, report.identity_holds


def _positivity_failures(parts: tuple[int, ...]) -> list[tuple[str, str]]:
    a = WeakComposition(parts)
    failures = []
    table = kostka.ns_kostka(a)
    for lab, c in table.entries:
        if not c.is_nonnegative():
            failures.append(("positivity", f"{a}: negative coefficient at {lab}"))
    if table[a].constant_term() != 1:
        failures.append(("positivity", f"{a}: diagonal constant term is not 1"))
    q0 = {lab: c.drop_q() for lab, c in table.entries if c.drop_q()}
    if q0 != {a: QT.one()}:
        failures.append(("positivity", f"{a}: q=0 slice is not the indicator"))
    return failures


_SUITE_NAMES = {
    "mac-key": "E(X;0,0) equals the key polynomial (both constructions)",
    "fibers": "standardization fibers and tabloid slide expansion",
    "characterizations": "tableau and tabloid characterizations",
    "psi": "psi involutions: involutive, commuting, statistic-preserving",
    "classes": "class slide sums are key polynomials; classes match peeling",
    "coinv-formula": "co-inversion formula equals the triple count",
    "eval-full": "full Macdonald evaluation matches E(X;q,0) at t=0",
    "phi-theta": "phi and theta bijections with descent identities",
    "schur": "Schur constructions and SYT characterization",
    "qt-symmetry": "omega-conjugated q,t-symmetry of the full polynomials",
    "kostka-foulkes": "Kostka-Foulkes positivity and t=0 indicator",
    "positivity": "nonsymmetric Kostka positivity and q=0 indicator",
    "refinement": "refinement of Kostka-Foulkes by nonsymmetric tables",
}


def _map_jobs(worker, items, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(worker, items, chunksize=8)
    else:
        for item in items:
            yield worker(item)


def run_all(max_cells: int = DEFAULT_MAX_CELLS, jobs: int = 1) -> list[CheckResult]:
    """Run every suite over the bounded universes; one result per suite."""
    shapes = [a.parts for a in shape_universe(max_cells)]
    partitions = [p.parts for p in partition_universe(max_cells)]
    tally: dict[str, list[str]] = {key: [] for key in _SUITE_NAMES}

    for failures in _map_jobs(_shape_failures, shapes, jobs):
        for suite, message in failures:
            tally[suite].append(message)
    for failures in _map_jobs(_partition_failures, partitions, jobs):
        for suite, message in failures:
            tally[suite].append(message)
    for failures in _map_jobs(_positivity_failures, shapes, jobs):
        for suite, message in failures:
            tally[suite].append(message)

    asserted = passed = 0
    for parts, hypothesis_ok, identity_holds in _map_jobs(_refinement_result, shapes, jobs):
        if hypothesis_ok:
            asserted += 1
            if identity_holds:
                passed += 1
            else:
                tally["refinement"].append(f"{WeakComposition(parts)}: identity fails")

    results = []
    for key, name in _SUITE_NAMES.items():
        failures = tally[key]
        if key == "refinement":
            detail = f"{passed}/{asserted} hypothesis-passing shapes verified, {len(shapes) - asserted} reported only"
        elif key in ("schur", "qt-symmetry", "kostka-foulkes"):
            detail = f"{len(partitions)} partitions checked"
        else:
            detail = f"{len(shapes)} shapes checked"
        if failures:
            detail = failures[0] + (f" (+{len(failures) - 1} more)" if len(failures) > 1 else "")
        results.append(CheckResult(name=name, ok=not failures, detail=detail))
    return results
