"""Closed-form series builders and coefficient-exact identity checks.

Each check assembles both sides of one identity as :class:`TriSeries`
values and reports whether their difference is identically zero under the
caps.  Because the arithmetic is exact, a passing check proves the identity
for every retained coefficient; there is no tolerance anywhere.

Truncation bounds for the infinite sums are derived from the least q-order
(or exact z-degree) of the n-th summand and are noted where each sum is
assembled.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from time import perf_counter

from .partitions import (
    durfee_gf,
    enumerate_partitions,
    kmeasure,
    measure_gf,
    sylvester_counts,
)
from .series import (
    Monomial,
    Q,
    TriSeries,
    YQ,
    Z,
    _fmt_coeff,
    pochhammer_finite,
    pochhammer_infinite,
)

FAMILIES = ("all", "distinct")


# ------------------------------------------------------------ closed forms


def partition_measure_gf_sum(k: int, qcap: int) -> TriSeries:
    """Alternating-sum closed form of sum y^len z^{k-measure} q^size over
    all partitions:

        1/(yq;q)_inf * sum_n (-1)^n y^n q^{n(n+1)/2} (z;q^{k-1})_n / (q;q)_n

    The n-th summand has least q-order n(n+1)/2, which bounds the sum.
    k = 1 uses the step-0 product (z;q^0)_n = (1-z)^n.
    """
    if k < 1:
        raise ValueError("k must be positive")
    total = TriSeries.zero(qcap)
    n = 0
    while n * (n + 1) // 2 <= qcap:
        front = Monomial(1 if n % 2 == 0 else -1, q=n * (n + 1) // 2, y=n)
        term = pochhammer_finite(Z, k - 1, n, qcap).times_monomial(front)
        total = total + term / pochhammer_finite(Q, 1, n, qcap)
        n += 1
    return total / pochhammer_infinite(YQ, 1, qcap)


def partition_measure_gf_product(k: int, qcap: int, zcap: int) -> TriSeries:
    """Product-form counterpart for k >= 2:

        (z;q^{k-1})_inf * sum_n z^n / ((q^{k-1};q^{k-1})_n (yq;q)_{(k-1)n})

    Each summand carries exactly z^n, so n <= zcap exhausts the z-cap and
    every coefficient with z-exponent <= zcap is exact.  k = 1 is rejected:
    the base q^0 makes both Pochhammers degenerate.
    """
    if k < 2:
        raise ValueError("degenerate base q^0")
    if zcap is None:
        raise ValueError("a bounded zcap is required")
    base = Monomial(1, q=k - 1)
    total = TriSeries.zero(qcap, zcap)
    for n in range(zcap + 1):
        term = TriSeries.from_monomial(Monomial(1, z=n), qcap, zcap)
        term = term / pochhammer_finite(base, k - 1, n, qcap, zcap)
        term = term / pochhammer_finite(YQ, 1, (k - 1) * n, qcap, zcap)
        total = total + term
    return total * pochhammer_infinite(Z, k - 1, qcap, zcap)


def distinct_measure_gf_sum(k: int, qcap: int) -> TriSeries:
    """Alternating-sum closed form of sum y^len z^{k-measure} q^size over
    partitions into distinct parts:

        (-yq;q)_inf * sum_n (-1)^n y^n q^n (z;q^k)_n / (q;q)_n

    The n-th summand has least q-order n, which bounds the sum.
    """
    if k < 1:
        raise ValueError("k must be positive")
    total = TriSeries.zero(qcap)
    for n in range(qcap + 1):
        front = Monomial(1 if n % 2 == 0 else -1, q=n, y=n)
        term = pochhammer_finite(Z, k, n, qcap).times_monomial(front)
        total = total + term / pochhammer_finite(Q, 1, n, qcap)
    return total * pochhammer_infinite(Monomial(-1, q=1, y=1), 1, qcap)


def distinct_measure_gf_product(k: int, qcap: int, zcap: int) -> TriSeries:
    """Product-form counterpart for the distinct family, any k >= 1:

        (z;q^k)_inf * sum_n (-yq;q)_{kn} z^n / (q^k;q^k)_n

    As in the partition case, the summand carries exactly z^n, so the sum
    stops at n = zcap.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if zcap is None:
        raise ValueError("a bounded zcap is required")
    total = TriSeries.zero(qcap, zcap)
    for n in range(zcap + 1):
        term = pochhammer_finite(Monomial(-1, q=1, y=1), 1, k * n, qcap, zcap)
        term = term.times_monomial(Monomial(1, z=n))
        term = term / pochhammer_finite(Monomial(1, q=k), k, n, qcap, zcap)
        total = total + term
    return total * pochhammer_infinite(Z, k, qcap, zcap)


def durfee_gf_closed(qcap: int) -> TriSeries:
    """Closed form of sum y^len z^{durfee side} q^size over all partitions:

        sum_n y^n z^n q^{n^2} / ((yq;q)_n (q;q)_n)

    A square of side n contributes q-order n^2, which bounds the sum.
    """
    total = TriSeries.zero(qcap)
    n = 0
    while n * n <= qcap:
        term = TriSeries.from_monomial(Monomial(1, q=n * n, y=n, z=n), qcap)
        term = term / pochhammer_finite(YQ, 1, n, qcap)
        total = total + term / pochhammer_finite(Q, 1, n, qcap)
        n += 1
    return total


def qdiff_residual(k: int, qcap: int, family: str = "all") -> TriSeries:
    """Residual of the q-difference equation satisfied by the enumerated
    generating function g(y) = sum y^len z^{k-measure} q^size:

        all:       g(y) - g(yq) - yzq/(yq;q)_k * g(yq^k)
        distinct:  g(y) - g(yq) - yzq*(-yq^2;q)_{k-1} * g(yq^k)

    The equation encodes removing all parts of size at most k from a
    partition with smallest part 1.  The residual must be the zero series.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    g = measure_gf(qcap, k, family)
    advanced = g.scale_y(k)
    yzq = Monomial(1, q=1, y=1, z=1)
    if family == "all":
        rhs = (advanced / pochhammer_finite(YQ, 1, k, qcap)).times_monomial(yzq)
    else:
        ear = pochhammer_finite(Monomial(-1, q=2, y=1), 1, k - 1, qcap)
        rhs = (advanced * ear).times_monomial(yzq)
    return g - g.scale_y(1) - rhs


# ------------------------------------------------------------ reports


@dataclass
class Mismatch:
    """First failing coefficient of a check, in (q, y, z) scan order.

    Scalar-per-n checks (parity counts, histograms) reuse the slots as
    (n, statistic value, 0).
    """

    q_exp: int
    y_exp: int
    z_exp: int
    lhs: int | Fraction
    rhs: int | Fraction

    def to_dict(self):
        return {
            "q_exp": self.q_exp,
            "y_exp": self.y_exp,
            "z_exp": self.z_exp,
            "lhs": _fmt_coeff(self.lhs),
            "rhs": _fmt_coeff(self.rhs),
        }

    def __str__(self):
        return (
            f"q^{self.q_exp} y^{self.y_exp} z^{self.z_exp}: "
            f"{_fmt_coeff(self.lhs)} != {_fmt_coeff(self.rhs)}"
        )


@dataclass
class IdentityReport:
    """Outcome of one verification run."""

    name: str
    k: int | None
    qcap: int
    zcap: int | None
    passed: bool
    first_failure: Mismatch | None
    elapsed: float

    def to_dict(self):
        return {
            "name": self.name,
            "k": self.k,
            "qcap": self.qcap,
            "zcap": self.zcap,
            "passed": self.passed,
            "first_failure": (
                None if self.first_failure is None else self.first_failure.to_dict()
            ),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def _verdict(name, k, lhs, rhs, qcap, zcap, started) -> IdentityReport:
    diff = lhs - rhs
    if diff.is_zero():
        fail = None
    else:
        j, e, f, _ = diff.terms()[0]
        fail = Mismatch(j, e, f, lhs.coefficient(j, e, f), rhs.coefficient(j, e, f))
    return IdentityReport(
        name, k, qcap, zcap, fail is None, fail, perf_counter() - started
    )


def _value_verdict(name, k, qcap, zcap, fail, started) -> IdentityReport:
    return IdentityReport(
        name, k, qcap, zcap, fail is None, fail, perf_counter() - started
    )


# --------------------------------------------------- theorem-level checks


def sum_form_check(k: int, qcap: int, family: str = "all", name=None) -> IdentityReport:
    """Alternating-sum closed form against the enumerated generating function."""
    started = perf_counter()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "all":
        lhs = partition_measure_gf_sum(k, qcap)
    else:
        lhs = distinct_measure_gf_sum(k, qcap)
    rhs = measure_gf(qcap, k, family)
    return _verdict(name or f"sum-form[{family}]", k, lhs, rhs, qcap, None, started)


def product_form_check(
    k: int, qcap: int, zcap: int, family: str = "all", name=None
) -> IdentityReport:
    """Product form against the sum form, on z-exponents up to zcap."""
    started = perf_counter()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "all":
        lhs = partition_measure_gf_product(k, qcap, zcap)
        rhs = partition_measure_gf_sum(k, qcap)
    else:
        lhs = distinct_measure_gf_product(k, qcap, zcap)
        rhs = distinct_measure_gf_sum(k, qcap)
    return _verdict(
        name or f"product-form[{family}]", k, lhs, rhs, qcap, zcap, started
    )


def qdiff_check(k: int, qcap: int, family: str = "all", name=None) -> IdentityReport:
    """q-difference equation residual must vanish identically."""
    started = perf_counter()
    residual = qdiff_residual(k, qcap, family)
    zero = TriSeries.zero(qcap)
    return _verdict(name or f"qdiff[{family}]", k, residual, zero, qcap, None, started)


def equidistribution_check(qcap: int, name=None) -> IdentityReport:
    """Joint (length, 2-measure) distribution equals joint (length, Durfee)."""
    started = perf_counter()
    lhs = measure_gf(qcap, 2, "all")
    rhs = durfee_gf(qcap)
    return _verdict(name or "durfee-equidistribution", None, lhs, rhs, qcap, None, started)


def durfee_closed_check(qcap: int, name=None) -> IdentityReport:
    """Durfee-square closed form against the enumerated Durfee series."""
    started = perf_counter()
    lhs = durfee_gf_closed(qcap)
    rhs = durfee_gf(qcap)
    return _verdict(name or "durfee-closed-form", None, lhs, rhs, qcap, None, started)


def parity_check(qcap: int, name=None) -> IdentityReport:
    """Three-way signed-count agreement, coefficient by coefficient:

    (i) the excess of partitions of n with len + 2-measure even over odd,
    (ii) the number of partitions of n into distinct odd parts,
    (iii) the q^n coefficient of (-q;q^2)_inf.
    """
    started = perf_counter()
    product = pochhammer_infinite(Monomial(-1, q=1), 2, qcap)
    fail = None
    for n in range(qcap + 1):
        signed = 0
        for parts in enumerate_partitions(n):
            signed += -1 if (len(parts) + kmeasure(parts, 2)) % 2 else 1
        odd_distinct = sum(1 for _ in enumerate_partitions(n, "distinct-odd"))
        coeff = product.coefficient(n)
        if signed != odd_distinct:
            fail = Mismatch(n, 0, 0, signed, odd_distinct)
            break
        if odd_distinct != coeff:
            fail = Mismatch(n, 0, 0, odd_distinct, coeff)
            break
    return _value_verdict(name or "parity-distinct-odd", None, qcap, None, fail, started)


def nonnegativity_check(
    k: int, qcap: int, family: str = "all", name=None
) -> IdentityReport:
    """Every coefficient of the closed-form series is a nonnegative integer.

    For the partition family both inner-Pochhammer variants are covered:
    the step-(k-1) series at parameter k and the step-k one, which is the
    same family at parameter k+1.
    """
    started = perf_counter()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "all":
        series_list = [
            partition_measure_gf_sum(k, qcap),
            partition_measure_gf_sum(k + 1, qcap),
        ]
    else:
        series_list = [distinct_measure_gf_sum(k, qcap)]
    fail = None
    for series in series_list:
        for j, e, f, c in series.terms():
            integral = not (isinstance(c, Fraction) and c.denominator != 1)
            if not integral or c < 0:
                fail = Mismatch(j, e, f, c, 0)
                break
        if fail:
            break
    return _value_verdict(name or f"nonnegative[{family}]", k, qcap, None, fail, started)


def sylvester_check(n_max: int, name=None) -> IdentityReport:
    """Sylvester's histogram equality for every n <= n_max."""
    started = perf_counter()
    fail = None
    for n in range(n_max + 1):
        by_distinct, by_runs = sylvester_counts(n)
        if by_distinct != by_runs:
            r = min(
                v for v in set(by_distinct) | set(by_runs)
                if by_distinct.get(v, 0) != by_runs.get(v, 0)
            )
            fail = Mismatch(n, r, 0, by_distinct.get(r, 0), by_runs.get(r, 0))
            break
    return _value_verdict(name or "sylvester-runs", None, n_max, None, fail, started)


# --------------------------------------------- building-block identities


def euler_first_sides(t: Monomial, qcap: int, zcap=None):
    """Both sides of sum_m t^m/(q;q)_m = 1/(t;q)_inf.

    The m-th summand has least q-order m*t.q and z-degree at least m*t.z,
    so t must carry a positive q-exponent, or carry z under a bounded zcap.
    """
    if not (t.q >= 1 or (t.q == 0 and t.z >= 1 and zcap is not None)):
        raise ValueError("sum does not terminate: parameter needs q-order or a z-cap")
    lhs = TriSeries.zero(qcap, zcap)
    m = 0
    while True:
        mono = t.pow(m)
        if mono.q > qcap or (t.q == 0 and mono.z > zcap):
            break
        term = TriSeries.from_monomial(mono, qcap, zcap)
        lhs = lhs + term / pochhammer_finite(Q, 1, m, qcap, zcap)
        m += 1
    rhs = pochhammer_infinite(t, 1, qcap, zcap).invert()
    return lhs, rhs


def euler_first(t: Monomial, qcap: int, zcap=None, name=None) -> IdentityReport:
    started = perf_counter()
    lhs, rhs = euler_first_sides(t, qcap, zcap)
    return _verdict(name or f"euler-first[t={t}]", None, lhs, rhs, qcap, zcap, started)


def euler_second_sides(t: Monomial, qcap: int, zcap=None):
    """Both sides of sum_m (-t)^m q^{m(m-1)/2}/(q;q)_m = (t;q)_inf.

    Here the q^{m(m-1)/2} factor bounds the sum for any non-constant t.
    """
    if t.q == 0 and t.y == 0 and t.z == 0:
        raise ValueError("constant parameter")
    lhs = TriSeries.zero(qcap, zcap)
    m = 0
    while m * (m - 1) // 2 + m * t.q <= qcap:
        base = t.pow(m)
        mono = Monomial(
            Fraction(-1) ** m * base.coeff, base.q + m * (m - 1) // 2, base.y, base.z
        )
        term = TriSeries.from_monomial(mono, qcap, zcap)
        lhs = lhs + term / pochhammer_finite(Q, 1, m, qcap, zcap)
        m += 1
    rhs = pochhammer_infinite(t, 1, qcap, zcap)
    return lhs, rhs


def euler_second(t: Monomial, qcap: int, zcap=None, name=None) -> IdentityReport:
    started = perf_counter()
    lhs, rhs = euler_second_sides(t, qcap, zcap)
    return _verdict(name or f"euler-second[t={t}]", None, lhs, rhs, qcap, zcap, started)


def bailey_daum_sides(a: Monomial, qcap: int, zcap=None):
    """Both sides of the summation

        sum_n (a;q)_n q^{n(n+1)/2} / (q;q)_n = (-q;q)_inf (aq;q^2)_inf

    The q^{n(n+1)/2} factor bounds the sum regardless of a.
    """
    lhs = TriSeries.zero(qcap, zcap)
    n = 0
    while n * (n + 1) // 2 <= qcap:
        term = pochhammer_finite(a, 1, n, qcap, zcap)
        term = term.times_monomial(Monomial(1, q=n * (n + 1) // 2))
        lhs = lhs + term / pochhammer_finite(Q, 1, n, qcap, zcap)
        n += 1
    rhs = pochhammer_infinite(Monomial(-1, q=1), 1, qcap, zcap)
    rhs = rhs * pochhammer_infinite(a.shift_q(1), 2, qcap, zcap)
    return lhs, rhs


def bailey_daum(a: Monomial, qcap: int, zcap=None, name=None) -> IdentityReport:
    started = perf_counter()
    lhs, rhs = bailey_daum_sides(a, qcap, zcap)
    return _verdict(name or f"bailey-daum[a={a}]", None, lhs, rhs, qcap, zcap, started)


def heine_limit_sides(qcap: int, zcap: int):
    """Both sides of the limiting transformation

        (z;q)_inf sum_n z^n/((q;q)_n (yq;q)_n)
            = sum_n y^n z^n q^{n^2} / ((yq;q)_n (q;q)_n)

    The left sum's n-th summand carries exactly z^n (n <= zcap); the right
    sum is bounded by q-order n^2.
    """
    if zcap is None:
        raise ValueError("a bounded zcap is required")
    lhs = TriSeries.zero(qcap, zcap)
    for n in range(zcap + 1):
        term = TriSeries.from_monomial(Monomial(1, z=n), qcap, zcap)
        term = term / pochhammer_finite(Q, 1, n, qcap, zcap)
        lhs = lhs + term / pochhammer_finite(YQ, 1, n, qcap, zcap)
    lhs = lhs * pochhammer_infinite(Z, 1, qcap, zcap)
    rhs = TriSeries.zero(qcap, zcap)
    n = 0
    while n * n <= qcap:
        term = TriSeries.from_monomial(Monomial(1, q=n * n, y=n, z=n), qcap, zcap)
        term = term / pochhammer_finite(YQ, 1, n, qcap, zcap)
        rhs = rhs + term / pochhammer_finite(Q, 1, n, qcap, zcap)
        n += 1
    return lhs, rhs


def heine_limit(qcap: int, zcap: int, name=None) -> IdentityReport:
    started = perf_counter()
    lhs, rhs = heine_limit_sides(qcap, zcap)
    return _verdict(name or "heine-limit", None, lhs, rhs, qcap, zcap, started)


def generalized_heine_sides(
    a: Monomial, b: Monomial, c: Monomial, t: Monomial, h: int, qcap: int, zcap=None
):
    """Both sides of the two-base transformation

        sum_n (a;q^h)_n (b;q)_{hn} t^n / ((q^h;q^h)_n (c;q)_{hn})
            = (b;q)_inf (at;q^h)_inf / ((c;q)_inf (t;q^h)_inf)
              * sum_n (c/b;q)_n (t;q^h)_n b^n / ((q;q)_n (at;q^h)_n)

    Monomial parameters only: c/b must again be a monomial with
    nonnegative exponents.  t and c need positive q-order so the left sum
    terminates (least q-order n*t.q) and every divisor is a formal unit;
    b needs positive q-order, or a z-exponent under a bounded zcap, to
    bound the right sum.
    """
    if h < 1:
        raise ValueError("step must be positive")
    if t.q < 1 or c.q < 1:
        raise ValueError("t and c must carry a positive q-exponent")
    if b.coeff == 0:
        raise ValueError("parameter specialization unsupported")
    if not (b.q >= 1 or (b.z >= 1 and zcap is not None)):
        raise ValueError("sum does not terminate: b needs q-order or a z-cap")
    try:
        ratio = c.divide(b)
    except ValueError:
        raise ValueError("parameter specialization unsupported") from None
    at = a * t
    step = Monomial(1, q=h)

    lhs = TriSeries.zero(qcap, zcap)
    n = 0
    while n * t.q <= qcap:  # t^n gives the least q-order of the summand
        term = pochhammer_finite(a, h, n, qcap, zcap)
        term = term * pochhammer_finite(b, 1, h * n, qcap, zcap)
        term = term.times_monomial(t.pow(n))
        term = term / pochhammer_finite(step, h, n, qcap, zcap)
        term = term / pochhammer_finite(c, 1, h * n, qcap, zcap)
        lhs = lhs + term
        n += 1

    prefactor = pochhammer_infinite(b, 1, qcap, zcap)
    if at.coeff != 0:
        prefactor = prefactor * pochhammer_infinite(at, h, qcap, zcap)
    prefactor = prefactor / pochhammer_infinite(c, 1, qcap, zcap)
    prefactor = prefactor / pochhammer_infinite(t, h, qcap, zcap)
    tail = TriSeries.zero(qcap, zcap)
    n = 0
    while n * b.q <= qcap and (b.q >= 1 or n * b.z <= zcap):
        term = pochhammer_finite(ratio, 1, n, qcap, zcap)
        term = term * pochhammer_finite(t, h, n, qcap, zcap)
        term = term.times_monomial(b.pow(n))
        term = term / pochhammer_finite(Q, 1, n, qcap, zcap)
        term = term / pochhammer_finite(at, h, n, qcap, zcap)
        tail = tail + term
        n += 1
    return lhs, prefactor * tail


def generalized_heine(
    a: Monomial,
    b: Monomial,
    c: Monomial,
    t: Monomial,
    h: int,
    qcap: int,
    zcap=None,
    name=None,
) -> IdentityReport:
    started = perf_counter()
    lhs, rhs = generalized_heine_sides(a, b, c, t, h, qcap, zcap)
    label = name or f"heine-general[a={a},b={b},c={c},t={t},h={h}]"
    return _verdict(label, None, lhs, rhs, qcap, zcap, started)


# -------------------------------------------------------------- the suite

# Standard parameter sets exercised by `verify` and the acceptance tests.
EULER_FIRST_PARAMS = (Q, YQ, Monomial(1, q=2, z=1))
EULER_SECOND_PARAMS = (Q, YQ, Z)
BAILEY_DAUM_PARAMS = (Monomial(-1), Q, YQ)
HEINE_GENERAL_PARAMS = (
    ("h=1", dict(a=YQ, b=Q, c=Monomial(1, q=2), t=Monomial(1, q=1, z=1), h=1)),
    ("h=2", dict(a=Q, b=Q, c=Monomial(1, q=3), t=Monomial(1, q=2), h=2)),
    ("a=0", dict(a=Monomial(0), b=Q, c=Monomial(1, q=2), t=Q, h=1)),
)

_CHECK_FUNCS = {
    "sum-form": sum_form_check,
    "product-form": product_form_check,
    "qdiff": qdiff_check,
    "nonnegative": nonnegativity_check,
    "durfee-equidistribution": equidistribution_check,
    "durfee-closed-form": durfee_closed_check,
    "parity-distinct-odd": parity_check,
    "sylvester-runs": sylvester_check,
    "euler-first": euler_first,
    "euler-second": euler_second,
    "bailey-daum": bailey_daum,
    "heine-limit": heine_limit,
    "heine-general": generalized_heine,
}


def default_tasks(qcap: int, zcap: int, ks) -> list[tuple[str, str, dict]]:
    """The full verification suite as (name, check key, kwargs) triples."""
    tasks = []
    for k in ks:
        for family in FAMILIES:
            tasks.append(
                (f"sum-form[{family}]", "sum-form",
                 dict(k=k, qcap=qcap, family=family))
            )
            if family == "distinct" or k >= 2:
                tasks.append(
                    (f"product-form[{family}]", "product-form",
                     dict(k=k, qcap=qcap, zcap=zcap, family=family))
                )
            tasks.append(
                (f"qdiff[{family}]", "qdiff", dict(k=k, qcap=qcap, family=family))
            )
            tasks.append(
                (f"nonnegative[{family}]", "nonnegative",
                 dict(k=k, qcap=qcap, family=family))
            )
    tasks.append(("durfee-equidistribution", "durfee-equidistribution", dict(qcap=qcap)))
    tasks.append(("durfee-closed-form", "durfee-closed-form", dict(qcap=qcap)))
    tasks.append(("parity-distinct-odd", "parity-distinct-odd", dict(qcap=qcap)))
    tasks.append(("sylvester-runs", "sylvester-runs", dict(n_max=qcap)))
    for t in EULER_FIRST_PARAMS:
        tasks.append((f"euler-first[t={t}]", "euler-first", dict(t=t, qcap=qcap, zcap=zcap)))
    for t in EULER_SECOND_PARAMS:
        tasks.append((f"euler-second[t={t}]", "euler-second", dict(t=t, qcap=qcap, zcap=zcap)))
    for a in BAILEY_DAUM_PARAMS:
        tasks.append((f"bailey-daum[a={a}]", "bailey-daum", dict(a=a, qcap=qcap)))
    tasks.append(("heine-limit", "heine-limit", dict(qcap=qcap, zcap=zcap)))
    for label, params in HEINE_GENERAL_PARAMS:
        tasks.append(
            (f"heine-general[{label}]", "heine-general",
             dict(qcap=qcap, zcap=zcap, **params))
        )
    return tasks


def run_task(task) -> IdentityReport:
    name, key, kwargs = task
    return _CHECK_FUNCS[key](name=name, **kwargs)


def run_suite(tasks, jobs: int = 1) -> list[IdentityReport]:
    """Run checks (in parallel when jobs > 1) and sort deterministically."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_task, tasks))
    else:
        reports = [run_task(task) for task in tasks]
    return sorted(reports, key=lambda r: (r.name, r.k if r.k is not None else 0))


# ------------------------------------------------------------ rendering


def reports_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_csv(reports) -> str:
    lines = ["name,k,qcap,zcap,passed,first_failure"]
    for r in reports:
        ff = "" if r.first_failure is None else str(r.first_failure)
        k = "" if r.k is None else str(r.k)
        zcap = "" if r.zcap is None else str(r.zcap)
        lines.append(f'{r.name},{k},{r.qcap},{zcap},{r.passed},"{ff}"')
    return "\n".join(lines)


def reports_table(reports) -> str:
    """Fixed-width human-readable report table (no timings: deterministic)."""
    rows = [("IDENTITY", "K", "QCAP", "ZCAP", "STATUS", "FIRST FAILURE")]
    for r in reports:
        rows.append(
            (
                r.name,
                "-" if r.k is None else str(r.k),
                str(r.qcap),
                "-" if r.zcap is None else str(r.zcap),
                "pass" if r.passed else "FAIL",
                "" if r.first_failure is None else str(r.first_failure),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    out = []
    for row in rows:
        cells = [row[i].ljust(widths[i]) for i in range(5)]
        out.append(("  ".join(cells) + "  " + row[5]).rstrip())
    return "\n".join(out)
