import random

import pytest

from funcfield.factor import (count_roots_in_ext, factorize, is_irreducible,
                              minimal_polynomial, roots_in)
from funcfield.field import embed, make_field
from funcfield.poly import Poly

F2 = make_field(2, 1, 0)
F3 = make_field(3, 1, 0)
F4 = make_field(2, 2, 0)
F9 = make_field(3, 2, 0)


def test_factorize_obvious_split():
    f = Poly(F2, (0, 1, 1))  # x^2 + x
    assert [(str(g), m) for g, m in factorize(f)] == [("x", 1), ("1 + x", 1)]


def test_factorize_irreducible_quadratic_f3():
    # -1 is a non-square mod 3: no residue is a root
    f = Poly(F3, (1, 0, 1))
    assert all((a * a + 1) % 3 != 0 for a in range(3))
    assert factorize(f) == [(f, 1)]


def test_factorize_x4_plus_x_over_f2():
    f = Poly(F2, (0, 1, 0, 0, 1))
    got = [(str(g), m) for g, m in factorize(f)]
    assert got == [("x", 1), ("1 + x", 1), ("1 + x + x^2", 1)]


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(Poly.zero(F2))


def test_factorize_handles_multiplicities_and_char_p_powers():
    f = Poly(F3, (0, 1)) ** 3 * Poly(F3, (1, 1)) ** 2
    got = factorize(f)
    assert got == [(Poly(F3, (0, 1)), 3), (Poly(F3, (1, 1)), 2)]


def test_factorize_roundtrip_random():
    rng = random.Random(1234)
    fields = [F2, F3, F4, make_field(5, 1, 0), F9]
    for _ in range(300):
        F = rng.choice(fields)
        deg = rng.randrange(1, 13)
        keys = [rng.randrange(F.q) for _ in range(deg)] + [rng.randrange(1, F.q)]
        f = Poly(F, keys)
        product = Poly.constant(F, f.leading_key())
        factors = factorize(f)
        assert factors == sorted(factors, key=lambda fm: fm[0].sort_key())
        for g, m in factors:
            assert g.is_monic()
            assert is_irreducible(g)
            product = product * g ** m
        assert product == f


def test_roots_in_base_field():
    assert [e.key for e in roots_in(Poly(F2, (0, 1, 1)), F2)] == [0, 1]
    assert roots_in(Poly(F2, (1, 1, 1)), F2) == []


def test_roots_in_extension():
    roots = roots_in(Poly(F3, (1, 0, 1)), F9)
    assert len(roots) == 2
    assert roots[0].key < roots[1].key
    for r in roots:
        assert (r * r + F9.one()).is_zero()
    # brute-force oracle over all 9 elements
    brute = sorted(e.key for e in F9.elements() if (e * e + F9.one()).is_zero())
    assert [r.key for r in roots] == brute


def test_roots_multiplicity_suppressed():
    f = Poly(F3, (1, 1)) ** 4
    assert [e.key for e in roots_in(f, F3)] == [2]


def test_count_roots_examples():
    assert count_roots_in_ext(Poly(F3, (0, 2, 0, 1)), 1) == 3  # z^3 - z
    assert count_roots_in_ext(Poly(F2, (1, 1, 1)), 2) == 2
    assert count_roots_in_ext(Poly(F2, (0, 0, 0, 1)), 5) == 1
    with pytest.raises(ValueError):
        count_roots_in_ext(Poly(F2, (1, 1)), 0)
    with pytest.raises(ValueError):
        count_roots_in_ext(Poly.zero(F2), 1)


def test_count_roots_matches_exhaustion():
    rng = random.Random(77)
    for _ in range(25):
        F = rng.choice((F2, F3, F4))
        deg = rng.randrange(1, 9)
        keys = [rng.randrange(F.q) for _ in range(deg)] + [rng.randrange(1, F.q)]
        f = Poly(F, keys)
        m = rng.randrange(1, 4)
        if F.q ** m > 4096:
            continue
        K = make_field(F.p, F.s * m, 0)
        fk = f.lift(K)
        brute = sum(1 for e in K.elements() if fk.eval_k(e.key) == 0)
        assert count_roots_in_ext(f, m) == brute


def test_irreducibility_criterion_matches_root_absence():
    # monic quadratics and cubics over GF(3): irreducible iff no root
    for c0 in range(3):
        for c1 in range(3):
            f = Poly(F3, (c0, c1, 1))
            has_root = any(f.eval_k(a) == 0 for a in range(3))
            assert is_irreducible(f) == (not has_root)


def test_minimal_polynomial_degrees_and_roots():
    gen = F9.gen()
    mp = minimal_polynomial(gen, F3)
    assert mp.degree == 2 and mp.is_monic()
    assert mp.lift(F9)(gen).is_zero()
    # an element of the prime subfield has a linear minimal polynomial
    mp1 = minimal_polynomial(embed(F3.element(2), F9), F3)
    assert mp1 == Poly(F3, (1, 1))  # x + 1 vanishes at 2
