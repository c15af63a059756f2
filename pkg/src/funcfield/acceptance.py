"""The acceptance suite: one callable per criterion, shared by pytest and CLI.

Each criterion function returns an AcceptanceResult; run_all executes every
criterion in order and prints one pass/fail line each.  All expected values
are exact and pinned here, never recomputed from the code path under test.
"""

from __future__ import annotations

import decimal
import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .asymptotics import mq_ratio_sequence, splitting_place_feasible, t_of
from .carlitz import carlitz_action_of, compose, specialize, torsion_polynomial
from .factor import count_roots_in_ext, factorize, is_irreducible
from .field import make_field
from .genus import (cyclotomic_genus, cyclotomic_genus_via_hurwitz,
                    prime_power_torsion_genus, prime_torsion_genus)
from .intbounds import geometric_samples
from .poly import Poly
from .ramification import (abelian_different_lower_bound, conductor_exponent,
                           conductor_via_identity, different_exponent,
                           enumerate_filtrations)
from .towers import builtin_tower, tower_summary

_SAMPLE_FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2)}


@dataclass
class AcceptanceResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  criterion {self.number}: {self.name} ({self.elapsed:.2f}s) {self.detail}"


def _random_nonzero_poly(field, max_deg, rng):
    deg = rng.randrange(0, max_deg + 1)
    keys = [rng.randrange(field.q) for _ in range(deg)]
    keys.append(rng.randrange(1, field.q))
    return Poly(field, keys)


def criterion_1_module_axioms() -> AcceptanceResult:
    """action(M+N) = action(M)+action(N) and action(MN) = action(M) o action(N)."""
    start = time.monotonic()
    rng = random.Random(20240917)
    pairs = 0
    ok = True
    detail = ""
    for q, (p, s) in _SAMPLE_FIELDS.items():
        F = make_field(p, s, 0)
        for _ in range(70):
            M = _random_nonzero_poly(F, 4, rng)
            N = _random_nonzero_poly(F, 4, rng)
            S = M + N
            if not S.is_zero():
                if carlitz_action_of(S) != carlitz_action_of(M) + carlitz_action_of(N):
                    ok, detail = False, f"additivity broke at q={q} M={M} N={N}"
                    break
            if carlitz_action_of(M * N) != compose(carlitz_action_of(M),
                                                   carlitz_action_of(N)):
                ok, detail = False, f"multiplicativity broke at q={q} M={M} N={N}"
                break
            pairs += 1
        if not ok:
            break
    elapsed = time.monotonic() - start
    if ok and elapsed >= 10.0:
        ok, detail = False, f"runtime {elapsed:.2f}s exceeds 10s budget"
    if ok:
        detail = f"{pairs} random pairs, q in {{2,3,4}}, deg <= 4"
    return AcceptanceResult(1, "carlitz-module-axioms", ok, elapsed, detail)


def criterion_2_torsion_degree() -> AcceptanceResult:
    """z-degree of the torsion polynomial is q**deg(M) and d/dz recovers M."""
    start = time.monotonic()
    rng = random.Random(4047)
    checked = 0
    ok = True
    detail = ""
    for q, (p, s) in _SAMPLE_FIELDS.items():
        F = make_field(p, s, 0)
        for _ in range(60):
            M = _random_nonzero_poly(F, 4, rng)
            rho = torsion_polynomial(M)
            if rho.z_degree() != q ** M.degree or rho.z_derivative() != M:
                ok, detail = False, f"failed at q={q}, M={M}"
                break
            checked += 1
        if not ok:
            break
    if ok:
        detail = f"{checked} sampled moduli"
    return AcceptanceResult(2, "torsion-degree-separability", ok,
                            time.monotonic() - start, detail)


def criterion_3_torsion_counts() -> AcceptanceResult:
    """Good-place specializations have exactly q**deg(M) torsion points."""
    start = time.monotonic()
    ok = True
    detail = ""
    checked = 0
    for q in (2, 3):
        p, s = _SAMPLE_FIELDS[q]
        F = make_field(p, s, 0)
        F2 = make_field(p, 2 * s, 0)
        moduli = []
        for d in (1, 2):
            for low in itertools.product(range(q), repeat=d):
                for lead in range(1, q):
                    moduli.append(Poly(F, tuple(low) + (lead,)))
        for M in moduli:
            op = carlitz_action_of(M)
            target = q ** M.degree
            for K in (F, F2):
                Mk = M.lift(K)
                for alpha in K.elements():
                    if Mk(alpha).is_zero():
                        continue
                    spec = specialize(op, alpha)
                    if spec.derivative().is_zero():
                        ok, detail = False, f"inseparable at good place M={M} alpha={alpha}"
                        break
                    full = None
                    for m_ext in range(1, 65):
                        if count_roots_in_ext(spec, m_ext) == target:
                            full = m_ext
                            break
                    if full is None:
                        ok, detail = False, f"no splitting extension for M={M} alpha={alpha}"
                        break
                    checked += 1
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    elapsed = time.monotonic() - start
    if ok and elapsed >= 5.0:
        ok, detail = False, f"runtime {elapsed:.2f}s exceeds 5s budget"
    if ok:
        detail = f"{checked} (modulus, place) specializations"
    return AcceptanceResult(3, "torsion-counting-good-places", ok, elapsed, detail)


def criterion_4_genus_triangle() -> AcceptanceResult:
    """Closed form, expanded forms and Hurwitz reassembly agree exactly."""
    start = time.monotonic()
    ok = True
    detail = ""
    cells = 0
    for q in (2, 3, 4, 5, 7, 8, 9):
        for d in range(1, 7):
            direct = cyclotomic_genus(q, d, 1)
            if direct != prime_torsion_genus(q, d) or \
               direct != cyclotomic_genus_via_hurwitz(q, d, 1):
                ok, detail = False, f"n=1 mismatch at q={q}, d={d}"
                break
            cells += 1
            for n in range(2, 5):
                direct = cyclotomic_genus(q, d, n)
                if direct != prime_power_torsion_genus(q, d, n) or \
                   direct != cyclotomic_genus_via_hurwitz(q, d, n):
                    ok, detail = False, f"mismatch at q={q}, d={d}, n={n}"
                    break
                cells += 1
            if not ok:
                break
        if not ok:
            break
    if ok:
        detail = f"{cells} exact cells"
    return AcceptanceResult(4, "genus-formula-triangle", ok,
                            time.monotonic() - start, detail)


def criterion_5_mq_estimator() -> AcceptanceResult:
    """Family-d ratios stay above 2 on [5, 200] and land within 0.1 of 2."""
    start = time.monotonic()
    ok = True
    detail = ""
    for q in (2, 3):
        rows = mq_ratio_sequence(q, "d", range(5, 201), precision=20)
        for row in rows:
            if row.skipped or not row.ratio > 2:
                ok, detail = False, f"ratio not above 2 at q={q}, d={row.index}"
                break
        if not ok:
            break
        final = rows[-1].ratio
        if abs(final - 2) >= decimal.Decimal("0.1"):
            ok, detail = False, f"|ratio-2| = {abs(final - 2)} at q={q}, d=200"
            break
    if ok:
        detail = "q in {2,3}, d in [5,200], 20-digit decimals"
    return AcceptanceResult(5, "mq-estimator-trend", ok,
                            time.monotonic() - start, detail)


def criterion_6_towers() -> AcceptanceResult:
    """Both towers reproduce the published locus, bounds and first genus."""
    start = time.monotonic()
    ok = True
    detail = ""
    runs = 0
    for name, qs, g1 in (("y3", (5, 7, 11, 13), 2), ("y4", (3, 5, 7, 9), 3)):
        for q in qs:
            s = tower_summary(builtin_tower(name, q))
            base = s["lambda"].base
            x = Poly.x(base)
            expected = {x.keys, (base.neg_k(1), 1), None}  # classes of 0, 1, infinity
            if name == "y3":
                unit_poly = Poly(base, (1, 1, 1))
            else:
                unit_poly = Poly(base, (1, 0, 1))
            for factor_poly, _ in factorize(unit_poly):
                expected.add(factor_poly.keys)
            got = {pt.ident() for pt in s["lambda"]}
            if got != expected:
                ok, detail = False, f"{name} q={q}: locus {s['lambda'].render()}"
                break
            if s["degree_sum"] != 5 or s["gamma_bound"] != Fraction(3, 2) \
               or s["bq_lower"] != Fraction(2, 3) or s["first_step_genus"] != g1:
                ok, detail = False, f"{name} q={q}: numbers off"
                break
            runs += 1
        if not ok:
            break
    elapsed = time.monotonic() - start
    if ok and elapsed >= 30.0:
        ok, detail = False, f"runtime {elapsed:.2f}s exceeds 30s budget"
    if ok:
        detail = f"{runs} tower instances, locus/gamma/Bq/first-genus exact"
    return AcceptanceResult(6, "tower-reproduction", ok, elapsed, detail)


def criterion_7_ramification_identity() -> AcceptanceResult:
    """Conductor identity, wild bound and the different lower bound, exhaustively."""
    start = time.monotonic()
    ok = True
    detail = ""
    count = 0
    for p in (2, 3, 5):
        for w in (1, 2):
            for b in range(1, 5):
                if gcd(b, p) != 1:
                    continue
                for filt in enumerate_filtrations(b, p, w, 6):
                    d = different_exponent(filt)
                    c = conductor_exponent(filt)
                    ident = conductor_via_identity(filt)
                    if ident != c:
                        ok, detail = False, f"identity broke at {filt} (p={p})"
                        break
                    if Fraction(c) > Fraction(2 * d, filt.e):
                        ok, detail = False, f"c > 2d/e at {filt} (p={p})"
                        break
                    if c >= 2 and d < abelian_different_lower_bound(c, b, p, w):
                        ok, detail = False, f"different bound broke at {filt} (p={p})"
                        break
                    count += 1
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    if ok:
        detail = f"{count} filtrations, exhaustive and exact"
    return AcceptanceResult(7, "ramification-identity", ok,
                            time.monotonic() - start, detail)


def criterion_8_splitting_feasibility() -> AcceptanceResult:
    """Feasibility holds across the (q, genus) grid; fails under t = 4."""
    start = time.monotonic()
    ok = True
    detail = ""
    count = 0
    genera = geometric_samples(2, 10 ** 5, 40)
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 25):
        for g in genera:
            report = splitting_place_feasible(q, g)
            if not report.feasible or report.params.t != t_of(q, g):
                ok, detail = False, f"feasibility failed at q={q}, g={g}"
                break
            count += 1
        if not ok:
            break
    if ok and splitting_place_feasible(2, 2, t=4).feasible:
        ok, detail = False, "t=4 override unexpectedly feasible"
    if ok:
        detail = f"{count} (q, g) cells plus the t=4 counterexample"
    return AcceptanceResult(8, "splitting-place-feasibility", ok,
                            time.monotonic() - start, detail)


def criterion_9_kernel_oracles() -> AcceptanceResult:
    """Factorization round-trips and extension root counts match brute force."""
    start = time.monotonic()
    rng = random.Random(90125)
    fields = [make_field(2, 1, 0), make_field(3, 1, 0), make_field(2, 2, 0),
              make_field(5, 1, 0), make_field(7, 1, 0), make_field(2, 3, 0),
              make_field(3, 2, 0)]
    ok = True
    detail = ""
    for trial in range(1000):
        F = rng.choice(fields)
        deg = rng.randrange(1, 13)
        keys = [rng.randrange(F.q) for _ in range(deg)] + [rng.randrange(1, F.q)]
        f = Poly(F, keys)
        product = Poly.constant(F, f.leading_key())
        for g, mult in factorize(f):
            if not (g.is_monic() and is_irreducible(g)):
                ok, detail = False, f"non-irreducible factor for {f} over {F!r}"
                break
            product = product * g ** mult
        if not ok or product != f:
            if ok:
                ok, detail = False, f"round-trip failed for {f} over {F!r} (trial {trial})"
            break
    count_checks = 0
    if ok:
        for trial in range(40):
            F = rng.choice(fields)
            deg = rng.randrange(1, 13)
            keys = [rng.randrange(F.q) for _ in range(deg)] + [rng.randrange(1, F.q)]
            f = Poly(F, keys)
            m = 1
            while F.q ** (m + 1) <= 4096:
                m += 1
            for m_ext in range(1, m + 1):
                K = make_field(F.p, F.s * m_ext, 0)
                fk = f.lift(K)
                brute = sum(1 for e in K.elements() if fk.eval_k(e.key) == 0)
                if count_roots_in_ext(f, m_ext) != brute:
                    ok, detail = False, f"root count mismatch for {f}, m={m_ext}"
                    break
                count_checks += 1
            if not ok:
                break
    if ok:
        detail = f"1000 round-trips, {count_checks} exhaustive root counts"
    return AcceptanceResult(9, "kernel-oracles", ok,
                            time.monotonic() - start, detail)


CRITERIA = (
    criterion_1_module_axioms,
    criterion_2_torsion_degree,
    criterion_3_torsion_counts,
    criterion_4_genus_triangle,
    criterion_5_mq_estimator,
    criterion_6_towers,
    criterion_7_ramification_identity,
    criterion_8_splitting_feasibility,
    criterion_9_kernel_oracles,
)


def run_all(emit=print) -> list[AcceptanceResult]:
    results = []
    for criterion in CRITERIA:
        result = criterion()
        results.append(result)
        emit(result.line())
    return results
