"""Named verification suites over one (m, n), reported uniformly.

Each suite re-derives a family of claims exactly (no floats, no sampling
except the documented division spot-checks) and reports pass/fail with a
counterexample payload when one exists.  The CLI prints the reports as
JSON; timing stays out of the JSON so output is byte-stable.
"""

import random
import time
from collections import Counter
from dataclasses import dataclass

from .bijection import phi, psi
from .dissections import (
    DEFAULT_MAX_MN,
    Dissection,
    enumerate_dissections,
    is_final,
    make_q0,
    reflect,
)
from .dyck import enumerate_dyck, is_dyck
from .errors import PolyflipError, SizeGuardExceeded, VerificationFailure
from .polynomials import (
    divides,
    exact_quotient,
    expand,
    involution_image,
    poly_for_dissection,
)
from .poset import (
    apex_chords_avoid_downset_check,
    build_poset,
    cover_count_check,
    descend_to_fan,
    expected_maximal_chain_count,
    initial_factorization_check,
    interval_decompose,
    interval_structure,
    is_lattice,
    lemma_descent_witness,
    maximal_chain_count,
    mobius,
    upper_ideal_iso_check,
    width_cover_check,
    width_factorization_check,
)
from .qsym import verify_basis_graded
from .series import (
    fuss_catalan,
    rank_polynomial,
    residuals_vanish,
    series_F,
    series_G,
    series_I,
    series_T,
)

SERIES_ORDER = 8
INTERVAL_SUITE_MAX_MN = 10


@dataclass
class VerificationReport:
    suite: str
    m: int
    n: int
    passed: bool
    counterexample: object = None
    detail: str | None = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "n": self.n,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


def _run(suite: str, m: int, n: int, check) -> VerificationReport:
    start = time.perf_counter()
    try:
        detail = check()
        report = VerificationReport(suite, m, n, True, None, detail)
    except SizeGuardExceeded:
        raise
    except VerificationFailure as exc:
        payload = exc.args[1] if len(exc.args) > 1 else None
        report = VerificationReport(suite, m, n, False, payload, str(exc.args[0]))
    except PolyflipError as exc:
        report = VerificationReport(
            suite, m, n, False, None, f"{type(exc).__name__}: {exc}"
        )
    report.seconds = time.perf_counter() - start
    return report


def _fail(message: str, counterexample=None):
    raise VerificationFailure(message, counterexample)


def suite_poset(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> VerificationReport:
    def check():
        poset = build_poset(m, n, max_mn)
        size = len(poset.elements)
        if size != fuss_catalan(m, n):
            _fail(f"{size} elements, expected {fuss_catalan(m, n)}")
        bottoms = [
            q for i, q in enumerate(poset.elements) if not poset.covers_down[i]
        ]
        if bottoms != [make_q0(m, n)]:
            _fail(f"minimum not unique: {bottoms}", [q.to_json() for q in bottoms])
        for i, q in enumerate(poset.elements):
            for j in poset.covers_up[i]:
                if poset.ranks[j] != poset.ranks[i] + 1:
                    _fail(f"cover {q} -> {poset.elements[j]} skips a rank")
        cover_count_check(poset)
        chains = maximal_chain_count(poset)
        if chains != expected_maximal_chain_count(m, n):
            _fail(
                f"{chains} maximal chains, expected "
                f"{expected_maximal_chain_count(m, n)}"
            )
        q0 = make_q0(m, n)
        for q in poset.elements:
            if q == q0:
                continue
            lemma_descent_witness(q)
            chain = descend_to_fan(q)
            if len(chain) != q.rank + 1:
                _fail(f"descent from {q} took {len(chain) - 1} steps", q.to_json())
        census = Counter(poset.ranks)
        want = rank_polynomial(m, n)
        got = tuple(census.get(k, 0) for k in range(n))
        if got != want:
            _fail(f"rank census {got} != {want}")
        slice_n = series_G(m, n).coefficient(n)
        if tuple(slice_n.int_coeffs()) != want:
            _fail(f"rank series slice {slice_n.text()} != {want}")
        ambient, _ = is_lattice(poset)
        return f"ambient_lattice={ambient} (observed, not asserted)"

    return _run("poset", m, n, check)


def suite_bijection(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> VerificationReport:
    def check():
        dissections = enumerate_dissections(m, n, max_mn)
        vectors = enumerate_dyck(m, n, max_mn)
        if len(vectors) != fuss_catalan(m, n):
            _fail(f"{len(vectors)} admissible vectors, expected Fuss-Catalan")
        for v in vectors:
            q = psi(m, v)
            if phi(q) != v:
                _fail(f"phi(psi({v})) = {phi(q)}", list(v))
        images = set()
        for q in dissections:
            v = phi(q)
            if not is_dyck(m, v):
                _fail(f"phi({q}) = {v} is not admissible", q.to_json())
            if psi(m, v) != q:
                _fail(f"psi(phi({q})) differs", q.to_json())
            images.add(v)
        if images != set(vectors):
            _fail("leading exponent vectors do not match the admissible set")
        return f"round-trips on {len(dissections)} dissections"

    return _run("bijection", m, n, check)


def suite_divisibility(
    m: int, n: int, max_mn: int = DEFAULT_MAX_MN, samples: int = 120
) -> VerificationReport:
    def check():
        poset = build_poset(m, n, max_mn)
        polys = [poly_for_dissection(q) for q in poset.elements]
        for q, p in zip(poset.elements, polys):
            if len(p.factors) != q.rank:
                _fail(f"{q}: {len(p.factors)} factors, rank {q.rank}", q.to_json())
        size = len(poset.elements)
        for i in range(size):
            for j in range(size):
                rel = divides(polys[i], polys[j])
                if rel != poset.leq(poset.elements[i], poset.elements[j]):
                    _fail(
                        f"divisibility and order disagree on "
                        f"({poset.elements[i]}, {poset.elements[j]})",
                        [poset.elements[i].to_json(), poset.elements[j].to_json()],
                    )
        rng = random.Random(10007 * m + n)
        pairs = [(i, j) for i in range(size) for j in range(size) if i != j]
        rng.shuffle(pairs)
        checked = 0
        for i, j in pairs:
            if checked >= samples:
                break
            quotient = exact_quotient(expand(polys[j]), expand(polys[i]))
            if (quotient is not None) != divides(polys[i], polys[j]):
                _fail(
                    "long division disagrees with factor containment",
                    [poset.elements[i].to_json(), poset.elements[j].to_json()],
                )
            checked += 1
        canonical = {p.factors for p in polys}
        for q, p in zip(poset.elements, polys):
            image, sign = involution_image(p)
            if image.factors not in canonical:
                _fail(f"involution image of {q} escapes the family", q.to_json())
            if sign != (-1) ** q.rank:
                _fail(f"involution sign on {q} is {sign}", q.to_json())
            if image != poly_for_dissection(reflect(q)):
                _fail(f"involution image of {q} is not its mirror", q.to_json())
        return f"checked {size * size} pairs, {checked} divisions"

    return _run("divisibility", m, n, check)


def suite_qsym(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> VerificationReport:
    def check():
        report = verify_basis_graded(m, n)
        degrees = report["degrees"]
        total = sum(row["admissible"] for row in degrees)
        if total != fuss_catalan(m, n):
            _fail(f"admissible total {total} != Fuss-Catalan")
        return f"degrees 0..{n} certified"

    return _run("qsym", m, n, check)


def suite_intervals(
    m: int, n: int, max_mn: int = INTERVAL_SUITE_MAX_MN
) -> VerificationReport:
    def check():
        poset = build_poset(m, n, max_mn)
        count = 0
        for iv in poset.all_intervals():
            count += 1
            interval_structure(iv)
            if mobius(iv) not in (-1, 0, 1):
                _fail(
                    f"Mobius value {mobius(iv)} at [{iv.bottom_q}, {iv.top_q}]",
                    [iv.bottom_q.to_json(), iv.top_q.to_json()],
                )
            interval_decompose(iv)
        expect = series_I(m, n).coefficient(n)
        if count != expect:
            _fail(f"{count} intervals, series says {expect}")
        width_cover_check(poset)
        for q in poset.elements:
            upper_ideal_iso_check(poset, q)
            initial_factorization_check(poset, q)
            if is_final(q):
                width_factorization_check(poset, q)
                apex_chords_avoid_downset_check(poset, q)
        return f"{count} intervals certified"

    return _run("intervals", m, n, check)


def suite_series(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> VerificationReport:
    def check():
        order = max(SERIES_ORDER, n)
        if not residuals_vanish(m, order):
            _fail(f"fixed-point residuals do not vanish to order {order}")
        t = series_T(m, order)
        for k in range(1, order + 1):
            if t.coefficient(k) != fuss_catalan(m, k):
                _fail(f"T coefficient {k} differs from the closed form")
        f = series_F(m, order)
        g = series_G(m, order)
        for k in range(1, order + 1):
            if tuple(g.coefficient(k).int_coeffs()) != rank_polynomial(m, k):
                _fail(f"G slice {k} differs from the rank polynomial")
        ones = sum(g.coefficient(n).int_coeffs())
        if ones != t.coefficient(n):
            _fail("G at z=1 disagrees with T")
        if m * n <= max_mn:
            finals = [
                q for q in enumerate_dissections(m, n, max_mn) if is_final(q)
            ]
            if len(finals) != f.coefficient(n):
                _fail(f"{len(finals)} final dissections, series says "
                      f"{f.coefficient(n)}")
        if m * n <= INTERVAL_SUITE_MAX_MN:
            poset = build_poset(m, n, max_mn)
            count = sum(1 for _ in poset.all_intervals())
            if count != series_I(m, order).coefficient(n):
                _fail(f"{count} intervals disagree with the composed series")
        return f"orders up to {order} certified"

    return _run("series", m, n, check)


SUITES = {
    "poset": suite_poset,
    "bijection": suite_bijection,
    "divisibility": suite_divisibility,
    "qsym": suite_qsym,
    "intervals": suite_intervals,
    "series": suite_series,
}


def run_suite(name: str, m: int, n: int, **kwargs) -> list[VerificationReport]:
    if name == "all":
        return [fn(m, n, **kwargs) for fn in SUITES.values()]
    return [SUITES[name](m, n, **kwargs)]
