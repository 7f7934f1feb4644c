"""Regularisation: the polynomial decomposition of H1 over H0 for both
products, symbolic T-polynomials, and the comparison maps between the
harmonic, shuffle and integral-representation regularisations.

``decompose`` peels an H1 polynomial into the unique coefficients a_i in
H0 with  p = sum_i a_i * y^(*i)  (product powers of y; under the harmonic
product y means the depth-one weight-one word).  The peeling removes the
highest trailing power of y in each round, so it terminates, and the
result is exact in rational arithmetic.

The gamma-series map rho and its star companion act coefficientwise on
numeric T-polynomials through the exponential series
exp(sum_{n>=2} (-1)^n zeta(n) x^n / n); Euler's constant never appears
because it cancels in that form.  Their mismatch rho* o rho^{-1} is
supported on even powers of pi, which :func:`sin_correction` predicts and
:func:`compare_star_regs` checks numerically.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .numeval import (
    DEFAULT_CONFIG,
    EvalConfig,
    NumericValue,
    ZERO,
    mzv_num,
    reg_values,
)
from .reports import Report
from .words import (
    EMPTY_WORD,
    NcPoly,
    harmonic,
    harmonic_power_z1,
    index_of_word,
    s_map,
    shuffle,
    weight,
    word_of_index,
    y_power,
)

PRODUCTS = ("sh", "ast")


def _product(a: NcPoly, b: NcPoly, product: str) -> NcPoly:
    if product == "sh":
        return shuffle(a, b)
    if product == "ast":
        return harmonic(a, b)
    raise ValueError(f"unknown product {product!r}")


def _trailing_y(w: int) -> int:
    """Number of trailing y letters of a packed word."""
    if w == EMPTY_WORD:
        return 0
    t = 0
    while (w >> t) & 1:
        t += 1
    return min(t, weight(w))


def _split_trailing(w: int, product: str) -> tuple[int, int]:
    """(stripped word, trailing degree) for the relevant product."""
    if product == "sh":
        t = _trailing_y(w)
        return w >> t, t
    k = index_of_word(w)
    t = 0
    while t < len(k) and k[len(k) - 1 - t] == 1:
        t += 1
    return word_of_index(k[: len(k) - t]), t


def y_product_power(n: int, product: str) -> NcPoly:
    """The n-fold product power of y (n! y^n under shuffle)."""
    if product == "sh":
        return NcPoly({y_power(n): factorial(n)})
    return harmonic_power_z1(n)


def decompose(p: NcPoly, product: str = "sh") -> list[NcPoly]:
    """Unique a_0..a_n in H0 with p = sum a_i * y^(product-power i)."""
    if product not in PRODUCTS:
        raise ValueError(f"unknown product {product!r}")
    if not p.is_h1():
        raise ValueError("decompose needs an H1 polynomial")
    out: dict[int, NcPoly] = {}
    rem = p
    while rem:
        split = [(_split_trailing(w, product), w, c) for w, c in rem.terms.items()]
        n = max(t for (_, t), _, _ in split)
        top = NcPoly({sw: c for (sw, t), _, c in split if t == n})
        a_n = top / factorial(n)
        out[n] = a_n
        rem = rem - _product(a_n, y_product_power(n, product), product)
        if rem:
            nxt = max(_split_trailing(w, product)[1] for w in rem.terms)
            if nxt >= n:
                raise AssertionError("peeling failed to reduce trailing degree")
    deg = max(out, default=0)
    return [out.get(i, NcPoly.zero()) for i in range(deg + 1)]


def recompose(parts: list[NcPoly], product: str) -> NcPoly:
    """Inverse of :func:`decompose` (for round-trip checks)."""
    acc = NcPoly.zero()
    for i, a in enumerate(parts):
        if a:
            acc = acc + _product(a, y_product_power(i, product), product)
    return acc


@dataclass
class RegPolynomial:
    """Symbolic regularisation polynomial: T-degree -> H0 polynomial."""

    product: str
    coeffs: dict[int, NcPoly] = field(default_factory=dict)

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def coefficient(self, i: int) -> NcPoly:
        return self.coeffs.get(i, NcPoly.zero())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RegPolynomial)
            and self.product == other.product
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({self.coeffs[i]})*T^{i}" for i in sorted(self.coeffs))


def reg_T(p: NcPoly, product: str = "sh") -> RegPolynomial:
    """Symbolic regularisation of an H1 polynomial as a polynomial in T."""
    parts = decompose(p, product)
    coeffs = {}
    for i, a in enumerate(parts):
        if a:
            if not a.is_h0():
                raise AssertionError("decomposition left a non-admissible coefficient")
            coeffs[i] = a
    return RegPolynomial(product, coeffs)


# -- the gamma-series maps on numeric T-polynomials ---------------------


class NumericPolyT:
    """Polynomial in T with NumericValue coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, NumericValue] | None = None):
        self.coeffs = {i: v for i, v in (coeffs or {}).items() if v.value != 0.0 or v.err != 0.0}

    @classmethod
    def monomial(cls, n: int, c: float = 1.0) -> "NumericPolyT":
        return cls({n: NumericValue(c, 0.0)})

    def coefficient(self, i: int) -> NumericValue:
        return self.coeffs.get(i, ZERO)

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other: "NumericPolyT") -> "NumericPolyT":
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, ZERO) + v
        return NumericPolyT(out)

    def __sub__(self, other: "NumericPolyT") -> "NumericPolyT":
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, ZERO) - v
        return NumericPolyT(out)

    def max_residual(self, other: "NumericPolyT") -> float:
        degs = set(self.coeffs) | set(other.coeffs)
        return max(
            (abs(self.coefficient(i).value - other.coefficient(i).value) for i in degs),
            default=0.0,
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{self.coeffs[i].value:.12g}*T^{i}" for i in sorted(self.coeffs))


def numeric_reg_poly(p: NcPoly, product: str, cfg: EvalConfig = DEFAULT_CONFIG) -> NumericPolyT:
    """Numeric T-polynomial of the regularisation of p."""
    return NumericPolyT(reg_values(p, product, cfg))


def default_zeta_source(cfg: EvalConfig = DEFAULT_CONFIG) -> Callable[[int], float]:
    """Single zeta values from the library's own corrected summation."""
    return lambda n: mzv_num((n,), cfg=cfg).value


def a_coeffs(max_deg: int, zeta_source: Callable[[int], float] | None = None) -> list[float]:
    """Taylor coefficients of exp(sum_{n>=2} (-1)^n zeta(n) x^n / n)."""
    if zeta_source is None:
        zeta_source = default_zeta_source()
    c = [0.0, 0.0] + [
        ((-1) ** n) * zeta_source(n) / n for n in range(2, max_deg + 1)
    ]
    a = [1.0] + [0.0] * max_deg
    for m in range(1, max_deg + 1):
        a[m] = sum(j * c[j] * a[m - j] for j in range(1, m + 1)) / m
    return a


def _reciprocal(series: list[float]) -> list[float]:
    if series[0] == 0:
        raise ValueError("series has no constant term")
    inv = [1.0 / series[0]] + [0.0] * (len(series) - 1)
    for m in range(1, len(series)):
        inv[m] = -sum(series[j] * inv[m - j] for j in range(1, m + 1)) / series[0]
    return inv


def _alternate(series: list[float]) -> list[float]:
    return [(-1) ** i * v for i, v in enumerate(series)]


RHO_KINDS = ("rho", "rho_inv", "rho_star", "rho_star_inv")


def rho_coeffs(
    which: str, max_deg: int, zeta_source: Callable[[int], float] | None = None
) -> list[float]:
    """Series coefficients characterising each map: rho multiplies the
    exponential generating kernel by A(x), rho_inv by 1/A(x), rho_star by
    1/A(-x), rho_star_inv by A(-x)."""
    a = a_coeffs(max_deg, zeta_source)
    if which == "rho":
        return a
    if which == "rho_inv":
        return _reciprocal(a)
    if which == "rho_star":
        return _reciprocal(_alternate(a))
    if which == "rho_star_inv":
        return _alternate(a)
    raise ValueError(f"unknown map {which!r}")


def _falling(n: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= n - i
    return out


def rho_apply(
    p: NumericPolyT, which: str, zeta_source: Callable[[int], float] | None = None
) -> NumericPolyT:
    """Apply rho / rho_inv / rho_star / rho_star_inv coefficientwise:
    T^n maps to sum_j coeff_j * n!/(n-j)! * T^(n-j)."""
    deg = p.degree()
    coef = rho_coeffs(which, deg, zeta_source)
    out: dict[int, NumericValue] = {}
    for n, v in p.coeffs.items():
        for j in range(n + 1):
            if coef[j] == 0.0:
                continue
            c = coef[j] * _falling(n, j)
            out[n - j] = out.get(n - j, ZERO) + v.scaled(c)
    return NumericPolyT(out)


def sin_correction(n: int) -> NumericPolyT:
    """Predicted rho_star(rho_inv(T^n)): the even pi-power series
    sum_m (-1)^m pi^(2m)/(2m+1)! applied as a coefficient kernel."""
    out: dict[int, NumericValue] = {}
    for m in range(0, n // 2 + 1):
        c = (-1) ** m * math.pi ** (2 * m) / factorial(2 * m + 1) * _falling(n, 2 * m)
        out[n - 2 * m] = NumericValue(c, 0.0)
    return NumericPolyT(out)


def verify_reg_relation(which: str, k, cfg: EvalConfig = DEFAULT_CONFIG) -> Report:
    """Numeric check that the shuffle T-polynomial is rho of the harmonic
    one, for the plain z-word of k ("plain") or its contraction-sum star
    word ("star")."""
    t0 = time.perf_counter()
    k = tuple(k)
    p = NcPoly.from_index(k)
    if which == "star":
        p = s_map(p)
    elif which != "plain":
        raise ValueError(f"unknown relation {which!r}")
    lhs = numeric_reg_poly(p, "sh", cfg)
    rhs = rho_apply(numeric_reg_poly(p, "ast", cfg), "rho")
    degs = sorted(set(lhs.coeffs) | set(rhs.coeffs))
    resid = [abs(lhs.coefficient(i).value - rhs.coefficient(i).value) for i in degs] or [0.0]
    errs = [lhs.coefficient(i).err + rhs.coefficient(i).err for i in degs] or [0.0]
    tol = cfg.tolerance(1e-6)
    return Report(
        identity=f"rho-comparison-{which}",
        index=k,
        order=None,
        residuals=resid,
        tolerance=tol,
        passed=all(r <= tol + e for r, e in zip(resid, errs)),
        elapsed_ms=(time.perf_counter() - t0) * 1000,
    )


def compare_star_regs(k, cfg: EvalConfig = DEFAULT_CONFIG) -> Report:
    """Check that the integral-representation star regularisation equals
    rho_star o rho_inv of the contraction-sum shuffle regularisation, and
    that the correction kernel matches the sine series.
    """
    from .tseries import w_star  # deferred: tseries only needed here

    t0 = time.perf_counter()
    k = tuple(k)
    lhs = numeric_reg_poly(w_star(k), "sh", cfg)
    base = numeric_reg_poly(s_map(NcPoly.from_index(k)), "sh", cfg)
    rhs = rho_apply(rho_apply(base, "rho_inv"), "rho_star")
    degs = sorted(set(lhs.coeffs) | set(rhs.coeffs))
    resid = [abs(lhs.coefficient(i).value - rhs.coefficient(i).value) for i in degs] or [0.0]
    errs = [lhs.coefficient(i).err + rhs.coefficient(i).err for i in degs] or [0.0]

    # correction kernel against the sine series, up to the degree in play
    corr_res = []
    for n in range(base.degree() + 1):
        got = rho_apply(rho_apply(NumericPolyT.monomial(n), "rho_inv"), "rho_star")
        corr_res.append(got.max_residual(sin_correction(n)))
    resid += corr_res
    errs += [1e-12] * len(corr_res)

    tol = cfg.tolerance(1e-6)
    return Report(
        identity="reg-star-compare",
        index=k,
        order=None,
        residuals=resid,
        tolerance=tol,
        passed=all(r <= tol + e for r, e in zip(resid, errs)),
        elapsed_ms=(time.perf_counter() - t0) * 1000,
    )
