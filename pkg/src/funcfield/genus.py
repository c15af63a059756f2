"""Closed-form genus and degree evaluators.

Every evaluator works in exact integers or rationals and returns the raw
formula value; interpreting a value as a genus (even parity, non-negative)
is a separate validation step, so a misapplied formula surfaces as an
explicit error instead of a silently rounded number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .carlitz import DivisorShape, euler_phi_divisor


class GenusParityError(ValueError):
    """Raised when a 2g-2 value cannot belong to any curve."""


@dataclass(frozen=True)
class GenusResult:
    """An exact genus, carried together with its 2g-2 form."""

    two_g_minus_2: int
    g: int

    @classmethod
    def from_two_g_minus_2(cls, value: int) -> "GenusResult":
        if value % 2 != 0:
            raise GenusParityError(f"2g-2 = {value} is odd")
        if value < -2:
            raise GenusParityError(f"2g-2 = {value} is below -2")
        return cls(value, (value + 2) // 2)


@dataclass(frozen=True)
class RamSummary:
    """Ramification data rows (place degree, different exponent, place count)."""

    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for deg, d, count in self.entries:
            if deg < 1 or count < 1 or d < 0:
                raise ValueError("invalid ramification summary entry")

    @classmethod
    def of(cls, *entries: tuple[int, int, int]) -> "RamSummary":
        return cls(tuple(entries))

    @classmethod
    def empty(cls) -> "RamSummary":
        return cls(())

    def different_degree(self) -> int:
        return sum(deg * d * count for deg, d, count in self.entries)


def hurwitz(n: int, g_base: int, ram: RamSummary) -> GenusResult:
    """Hurwitz genus formula: 2g - 2 = n*(2*g_base - 2) + deg Diff."""
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    value = n * (2 * g_base - 2) + ram.different_degree()
    return GenusResult.from_two_g_minus_2(value)


def cyclotomic_phi(q: int, d: int, n: int) -> int:
    """Euler function of the n-th power of a degree-d irreducible modulus."""
    return q ** ((n - 1) * d) * (q ** d - 1)


def cyclotomic_genus(q: int, d: int, n: int) -> GenusResult:
    """Genus of the torsion field for a degree-d prime modulus to the n.

    2g - 2 = q**(d(n-1)) * [(qdn - dn - q) * (q**d - 1)/(q - 1) - d].
    """
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    repunit = (q ** d - 1) // (q - 1)
    value = q ** (d * (n - 1)) * ((q * d * n - d * n - q) * repunit - d)
    return GenusResult.from_two_g_minus_2(value)


def prime_torsion_genus(q: int, d: int) -> GenusResult:
    """Same genus for a prime modulus (n = 1), assembled from its Hurwitz terms:
    full extension degree q**d - 1, finite-place different q**d - 2, and the
    tame infinite places contributing (q-2)/(q-1) * (q**d - 1)."""
    if d < 1:
        raise ValueError("need d >= 1")
    repunit = (q ** d - 1) // (q - 1)
    value = (q ** d - 1) * (-2) + (q ** d - 2) * d + (q - 2) * repunit
    return GenusResult.from_two_g_minus_2(value)


def prime_power_torsion_genus(q: int, d: int, n: int) -> GenusResult:
    """The n >= 2 analogue of prime_torsion_genus, from the same Hurwitz terms."""
    if n < 2:
        raise ValueError("this expansion assumes n >= 2")
    if d < 1:
        raise ValueError("need d >= 1")
    m = (q ** d - 1) * q ** (d * (n - 1))
    repunit = (q ** d - 1) // (q - 1)
    value = (m * (-2)
             + (n * m - q ** (d * (n - 1))) * d
             + (q - 2) * repunit * q ** (d * (n - 1)))
    return GenusResult.from_two_g_minus_2(value)


def cyclotomic_ram_summary(q: int, d: int, n: int) -> RamSummary:
    """Ramification of the torsion field over the rational field.

    One totally ramified finite place of degree d with different exponent
    n*(q**d-1)*q**(d(n-1)) - q**(d(n-1)), and phi(P**n)/(q-1) infinite places
    of degree 1, each tame of index q-1 (different exponent q-2).
    """
    phi = cyclotomic_phi(q, d, n)
    d_finite = n * (q ** d - 1) * q ** (d * (n - 1)) - q ** (d * (n - 1))
    entries = [(d, d_finite, 1)]
    if q > 2:
        entries.append((1, q - 2, phi // (q - 1)))
    return RamSummary.of(*entries)


def cyclotomic_genus_via_hurwitz(q: int, d: int, n: int) -> GenusResult:
    """Reassemble the torsion-field genus through the generic Hurwitz formula."""
    return hurwitz(cyclotomic_phi(q, d, n), 0, cyclotomic_ram_summary(q, d, n))


def s_infinity_class_number(h_E: int, t: int) -> int:
    """Order of the fractional ideal class group of the holomorphy ring away
    from a degree-t place: t * h_E.  This is the degree datum for an empty
    conductor, which the ray class formulas below deliberately exclude."""
    if h_E < 1 or t < 1:
        raise ValueError("class number and place degree must be >= 1")
    return t * h_E


def ray_class_degree(h_E: int, t: int, q: int, D: DivisorShape) -> Fraction:
    """Degree of the ray class field with conductor bound D and a split
    degree-t place: h_E * t * phi(D) / (q - 1).

    Exact rational; a caller asserting a field degree must check integrality.
    """
    if D.is_empty():
        raise ValueError("ray class formulas require a positive conductor divisor")
    if h_E < 1 or t < 1:
        raise ValueError("class number and place degree must be >= 1")
    return Fraction(h_E * t * euler_phi_divisor(D, q), q - 1)


def ray_class_genus(h_E: int, g_E: int, q: int, D: DivisorShape) -> Fraction:
    """Genus of the same ray class field, as an exact rational.

    g = 1 + h_E/(2q-2) * [phi(D) * (2*g_E - 2 + deg D) - w], where w depends
    on whether D is supported at a single place.  Non-integral outputs are
    returned as-is; they flag an out-of-range application of the formula.
    """
    if D.is_empty():
        raise ValueError("ray class formulas require a positive conductor divisor")
    phi_D = euler_phi_divisor(D, q)
    if len(D.places) == 1:
        deg1, _ = D.places[0]
        phi_Q1 = euler_phi_divisor(DivisorShape.of((deg1, 1)), q)
        w = (Fraction(phi_D, phi_Q1) - q - 2) * deg1
    else:
        w = Fraction(0)
        for deg, _ in D.places:
            phi_Q = euler_phi_divisor(DivisorShape.of((deg, 1)), q)
            w += Fraction(phi_D * deg, phi_Q)
    return 1 + Fraction(h_E, 2 * q - 2) * (phi_D * (2 * g_E - 2 + D.degree()) - w)
