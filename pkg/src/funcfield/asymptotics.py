"""Quantitative bounds as executable checks.

Everything stated as an inequality is decided in exact arithmetic: powers
q**(k/2) and q**(k/4) are either integral (k divisible by 4), eliminated by
raising both sides of a comparison to an integer power, or replaced by
integer ceilings in a direction that preserves the claimed bound.  Base-q
logarithms enter only through integer floor/ceiling brackets.  Displayed
estimator ratios are high-precision decimals and always carry an
approximation marker.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

from .genus import prime_power_torsion_genus, prime_torsion_genus
from .intbounds import ceil_log, ceil_root, floor_log, scaled_power_le


@dataclass(frozen=True)
class ChebotarevParams:
    """Inputs of the explicit Frobenius place-counting bound."""

    q: int            # constant field size
    k: int            # target place degree
    m: int            # Galois extension degree
    g_f: int          # genus of the top field
    g_e: int          # genus of the base field
    d: int            # degree of the base field over the rational field
    conj_size: int    # size of the Frobenius conjugacy class

    def __post_init__(self):
        if min(self.q, self.k, self.m, self.d, self.conj_size) < 1:
            raise ValueError("q, k, m, d and conj_size must be positive")
        if self.g_f < 0 or self.g_e < 0:
            raise ValueError("genera must be non-negative")
        if self.conj_size > self.m:
            raise ValueError("conjugacy class cannot exceed the group order")


def chebotarev_lower(params: ChebotarevParams) -> Fraction:
    """Exact rational lower bound on the number of degree-k places with a
    prescribed Frobenius class.

    Main term |C|/(km) * q**k minus the error budget
    2|C|/(km)*(m+g_F)*q**(k/2) + m*(2g_E+1)*q**(k/4) + g_F + dm.
    When k is not divisible by 4 the irrational powers in the subtracted
    terms are rounded up by integer root ceilings, so the returned value is
    still a valid lower bound.
    """
    q, k, m = params.q, params.k, params.m
    c = params.conj_size
    qk = q ** k
    if k % 4 == 0:
        q_half = q ** (k // 2)
        q_quarter = q ** (k // 4)
    else:
        q_half = ceil_root(qk, 2)
        q_quarter = ceil_root(qk, 4)
    main = Fraction(c, k * m) * qk
    error = (Fraction(2 * c, k * m) * (m + params.g_f) * q_half
             + m * (2 * params.g_e + 1) * q_quarter
             + params.g_f + params.d * m)
    return main - error


def t_of(q: int, g_f: int) -> int:
    """Auxiliary place degree: the least t with q**t >= g_f**6 * q**18.

    This is the exact-integer characterization of ceil(6*log_q(g_f) + 18);
    no floating point is involved.
    """
    if g_f < 2:
        raise ValueError("auxiliary degree is defined for genus >= 2")
    return 18 + ceil_log(q, g_f ** 6)


@dataclass(frozen=True)
class AbelianBoundParams:
    """Parameter set driving the split-place feasibility check."""

    q: int
    g_f: int
    m_f: int
    t: int

    def __post_init__(self):
        if self.g_f < 2:
            raise ValueError("needs genus >= 2")
        if min(self.q, self.m_f, self.t) < 1:
            raise ValueError("q, m_f and t must be positive")


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    holds: bool


@dataclass(frozen=True)
class FeasibilityReport:
    params: AbelianBoundParams
    g_e: int
    d: int
    checks: tuple[InequalityCheck, ...]
    feasible: bool


def splitting_place_feasible(q: int, g_f: int, t: int | None = None) -> FeasibilityReport:
    """Check that a completely split place of degree t = t_of(q, g_f) exists.

    With the worst-case instantiation m_F = 4*g_F + 4, g_E = g_F and
    d = (2*g_F + 1)*t, the main Chebotarev term dominates when the four
    component inequalities below hold; each is decided exactly (irrational
    powers eliminated by raising to integer powers).  Pass an explicit t to
    probe failure below the prescribed degree.
    """
    if g_f < 2:
        raise ValueError("feasibility is defined for genus >= 2")
    if t is None:
        t = t_of(q, g_f)
    m_f = 4 * g_f + 4
    g_e = g_f
    d = (2 * g_f + 1) * t
    qt = q ** t
    budget = Fraction(qt, 4 * m_f * t)  # one quarter of the main term

    half_term = Fraction(2, m_f * t) * (m_f + g_f)
    c1 = InequalityCheck("frobenius-error-q^(t/2)",
                         scaled_power_le(half_term, q, t, 2, budget))
    quarter_term = Fraction(m_f * (2 * g_e + 1))
    c2 = InequalityCheck("base-field-error-q^(t/4)",
                         scaled_power_le(quarter_term, q, t, 4, budget))
    c3 = InequalityCheck("genus-term", Fraction(g_f) < budget)
    c4 = InequalityCheck("degree-term", Fraction(d * m_f) <= budget)
    checks = (c1, c2, c3, c4)
    return FeasibilityReport(
        params=AbelianBoundParams(q=q, g_f=g_f, m_f=m_f, t=t),
        g_e=g_e, d=d, checks=checks,
        feasible=all(c.holds for c in checks))


@dataclass(frozen=True)
class MfLogBound:
    """Upper bound on log_q of the largest abelian subgroup order."""

    q: int
    t: int
    g_e: int
    conductor_degree: int
    affine: int          # 3*g_E + conductor degree
    log_ceil: int        # ceil(log_q t)
    upper_int: int       # integer upper bound on log_q m_F
    m_f_bound: int       # the equivalent bound m_F <= t * q**affine


def mf_log_upper_bound(q: int, t: int, g_e: int, conductor_degree: int) -> MfLogBound:
    """log_q m_F <= log_q t + 3*g_E + conductor degree.

    The log_q t term is carried both symbolically (via the exact integer
    bound m_F <= t * q**affine) and as the integer ceiling.
    """
    if t < 1:
        raise ValueError("place degree t must be >= 1")
    if g_e < 0 or conductor_degree < 0:
        raise ValueError("genus and conductor degree must be non-negative")
    affine = 3 * g_e + conductor_degree
    log_ceil = ceil_log(q, t)
    return MfLogBound(q=q, t=t, g_e=g_e, conductor_degree=conductor_degree,
                      affine=affine, log_ceil=log_ceil,
                      upper_int=log_ceil + affine,
                      m_f_bound=t * q ** affine)


@dataclass(frozen=True)
class GenusBoundBracket:
    """Exact bracket around a genus lower bound containing integer logs."""

    coefficient: Fraction
    lower: Fraction
    upper: Fraction
    exact: bool

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("bound is not exact; use the bracket ends")
        return self.lower


def genus_lower_bound(q: int, m_f: int, t: int, parity: str) -> GenusBoundBracket:
    """coef * m_F * log_q m_F - coef * m_F * log_q t - m_F + 1.

    coef is 1/4 in even characteristic and 1/3 in odd.  The two logarithms
    are bracketed by integer floor/ceiling pairs; lower and upper coincide
    when both m_F and t are powers of q.
    """
    if m_f < 1 or t < 1:
        raise ValueError("m_f and t must be >= 1")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    coef = Fraction(1, 4) if parity == "even" else Fraction(1, 3)
    lo_m, hi_m = floor_log(q, m_f), ceil_log(q, m_f)
    lo_t, hi_t = floor_log(q, t), ceil_log(q, t)
    lower = coef * m_f * lo_m - coef * m_f * hi_t - m_f + 1
    upper = coef * m_f * hi_m - coef * m_f * lo_t - m_f + 1
    return GenusBoundBracket(coefficient=coef, lower=lower, upper=upper,
                             exact=lower == upper)


@dataclass(frozen=True)
class MqRatioRow:
    """One estimator row: group order m, genus g, and m*log_q(m)/g."""

    index: int
    m: int
    g: int
    ratio: decimal.Decimal | None
    skipped: bool


def _ratio_decimal(m: int, g: int, q: int, precision: int) -> decimal.Decimal:
    with decimal.localcontext() as ctx:
        ctx.prec = precision + 15
        D = decimal.Decimal
        val = D(m) * D(m).ln() / D(q).ln() / D(g)
        return +val.quantize(D(1).scaleb(-precision))


def mq_ratio_sequence(q: int, family: str, indices, d: int | None = None,
                      precision: int = 20) -> list[MqRatioRow]:
    """Estimator rows for the two torsion-field families.

    family "d": prime modulus of varying degree (index is d, n = 1), with
    m = q**d - 1.  family "n": fixed modulus degree d, varying exponent n
    (index is n >= 2), with m = (q**d - 1) * q**((n-1)d).  Rows whose genus
    is not positive are flagged and carry no ratio.
    """
    if family not in ("d", "n"):
        raise ValueError("family must be 'd' or 'n'")
    if precision < 6:
        raise ValueError("precision must be >= 6")
    rows = []
    for index in indices:
        if family == "d":
            m = q ** index - 1
            g = prime_torsion_genus(q, index).g
        else:
            if d is None:
                raise ValueError("family 'n' requires the fixed degree d")
            if index < 2:
                raise ValueError("family 'n' starts at n = 2")
            m = (q ** d - 1) * q ** ((index - 1) * d)
            g = prime_power_torsion_genus(q, d, index).g
        if g <= 0 or m <= 1:
            rows.append(MqRatioRow(index=index, m=m, g=g, ratio=None, skipped=True))
        else:
            rows.append(MqRatioRow(index=index, m=m, g=g,
                                   ratio=_ratio_decimal(m, g, q, precision),
                                   skipped=False))
    return rows


def hasse_weil_class_bound(q: int, g_e: int) -> int:
    """Exact integer ceiling of (1 + sqrt(q))**(2*g_E).

    Computed in Z[sqrt(q)]: expand ((1+q) + 2*sqrt(q))**g_E to a + b*sqrt(q)
    with integer a, b, then return a + ceil(sqrt(b*b*q)).
    """
    if g_e < 0:
        raise ValueError("genus must be non-negative")
    if g_e == 0:
        return 1
    # ((1 + sqrt(q))^2)^g = ((1+q) + 2 sqrt(q))^g by binary exponentiation
    a, b = 1, 0
    base_a, base_b = 1 + q, 2
    e = g_e
    while e:
        if e & 1:
            a, b = a * base_a + b * base_b * q, a * base_b + b * base_a
        base_a, base_b = (base_a * base_a + base_b * base_b * q,
                          2 * base_a * base_b)
        e >>= 1
    return a + ceil_root(b * b * q, 2)
