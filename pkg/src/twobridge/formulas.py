"""Closed forms, recursions and averages over 2-bridge knots of fixed crossing number.

Everything returned as a count or an average is exact (``int`` or
:class:`~fractions.Fraction`). The only floating-point quantities are the
root/coefficient constants of the even-tuple recursions and the closed-form
evaluation built on them, which exists as a numerical cross-check.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import census


def _kron(a: int, b: int) -> int:
    return 1 if a == b else 0


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def jacobsthal(n: int) -> int:
    """``j(n) = (2^n - (-1)^n) / 3``; ``j(n) = j(n-1) + 2 j(n-2)``."""
    if n < 0:
        raise ValueError("jacobsthal needs n >= 0")
    return _as_int(Fraction(2 ** n - (-1) ** n, 3), f"j({n})")


def ernst_sumners(c: int) -> int:
    """Number of 2-bridge knots with crossing number ``c``, mirrors counted separately."""
    if c < 3:
        raise ValueError("2-bridge knots have at least 3 crossings")
    if c % 2 == 0:
        value = Fraction(2 ** (c - 2) - 1, 3)
    elif c % 4 == 1:
        value = Fraction(2 ** (c - 2) + 2 ** ((c - 1) // 2), 3)
    else:
        value = Fraction(2 ** (c - 2) + 2 ** ((c - 1) // 2) + 2, 3)
    return _as_int(value, f"|K_{c}|")


def closed_W(c: int) -> int:
    """Sum of ``w`` over ``K(c)``, valid for ``c >= 4``."""
    if c < 4:
        raise ValueError("closed form for W(c) holds for c >= 4")
    return c * 2 ** (c - 4)


def closed_Z(c: int) -> int:
    """Sum of ``z`` over ``K(c)``, valid for ``c >= 6``."""
    if c < 6:
        raise ValueError("closed form for Z(c) holds for c >= 6")
    sign = (-1) ** c
    value = (Fraction(3 * c - 8, 27) * 2 ** (c - 4) + Fraction(14, 27) * sign
             - Fraction(2, 3) * sign * _kron(1, c % 3))
    return _as_int(value, f"Z({c})")


# c = 7, 9 are the seeds of the palindromic recursion; 3 and 5 precede it.
_WP_SEEDS = {3: 2, 5: 2, 7: 14, 9: 34}
_ZP_SEEDS = {3: 0, 5: 0, 7: 2, 9: 4}


def _palindromic_d(c: int) -> int:
    if c < 3:
        raise ValueError("palindromic sums are tabulated for c >= 3")
    return (c - 1) // 2


def closed_WP(c: int) -> int:
    """Sum of ``w`` over ``K^P(c)``: zero for even ``c``, closed form for odd ``c >= 11``."""
    d = _palindromic_d(c)
    if c % 2 == 0:
        return 0
    if c < 11:
        return _WP_SEEDS[c]
    value = Fraction(1 + 3 * d, 3) * 2 ** (d - 1) - Fraction(2, 3) * (-1) ** d
    return _as_int(value, f"WP({c})")


def closed_ZP(c: int) -> int:
    d = _palindromic_d(c)
    if c % 2 == 0:
        return 0
    if c < 11:
        return _ZP_SEEDS[c]
    sign = (-1) ** d
    value = (Fraction(3 * d + 1, 27) * 2 ** (d - 1) - Fraction(14, 27) * sign
             + Fraction(2, 3) * sign * (_kron(1, d % 3) + 3 * _kron(2, d % 3)))
    return _as_int(value, f"ZP({c})")


# -- average unoriented genus ---------------------------------------------

@dataclass(frozen=True)
class WZTotals:
    W: int
    Z: int
    WP: int
    ZP: int


@lru_cache(maxsize=None)
def wz_totals(c: int) -> WZTotals:
    """``W, Z, W^P, Z^P`` at ``c``: enumerated below 11 crossings, closed forms from 11 on."""
    if c < 3:
        raise ValueError("c >= 3 required")
    if c < 11:
        t = census.census_totals(c)
        return WZTotals(t.W, t.Z, t.WP, t.ZP)
    return WZTotals(closed_W(c), closed_Z(c), closed_WP(c), closed_ZP(c))


def _average_from_totals(c: int, t: WZTotals) -> Fraction:
    return Fraction(t.W - t.Z + t.WP - t.ZP, 2 * ernst_sumners(c))


def average_unoriented(c: int) -> Fraction:
    """Average unoriented genus over 2-bridge knots with ``c`` crossings.

    Computed as ``(W - Z + W^P - Z^P) / (2 |K_c|)``; the reversal pairs in
    ``K(c)`` name one knot twice, palindromes only once.
    """
    return _average_from_totals(c, wz_totals(c))


def average_unoriented_census(c: int) -> Fraction:
    """Same average, always from a full tuple enumeration."""
    t = census.census_totals(c)
    return _average_from_totals(c, WZTotals(t.W, t.Z, t.WP, t.ZP))


def _check_eps1_range(c: int) -> None:
    if c < 11:
        raise ValueError("the closed form for eps1 holds for c >= 11")


def epsilon1(c: int) -> Fraction:
    """Closed-form error term in ``average_unoriented(c) = c/3 + 1/9 + eps1(c)``, ``c >= 11``.

    With ``d = (c - 1) / 2``:

    * ``c`` even: ``(c - 2 + 3 [c = 1 mod 3]) / (3 (2^(c-2) - 1))``
    * ``c = 1 mod 4``: ``-(2^(d+1) + 4 + 18 [d = 2 mod 3]) / (9 (2^(c-2) + 2^d))``
    * ``c = 3 mod 4``: ``-(2^(d+1) + 6c + 2 - 18 ([d = 1 mod 3] + 2 [d = 2 mod 3]))
      / (9 (2^(c-2) + 2^d + 2))``

    The denominators are ``6 |K_c|`` in the odd cases. See
    :func:`epsilon1_odd_as_printed` for the variant these odd branches replace.
    """
    _check_eps1_range(c)
    d = (c - 1) // 2
    if c % 2 == 0:
        return Fraction(c - 2 + 3 * _kron(1, c % 3), 3 * (2 ** (c - 2) - 1))
    if c % 4 == 1:
        num = -(2 ** (d + 1)) - 4 - 18 * _kron(2, d % 3)
        return Fraction(num, 9 * (2 ** (c - 2) + 2 ** d))
    num = -(2 ** (d + 1)) - 6 * c - 2 + 18 * (_kron(1, d % 3) + 2 * _kron(2, d % 3))
    return Fraction(num, 9 * (2 ** (c - 2) + 2 ** d + 2))


def epsilon1_odd_as_printed(c: int) -> Fraction:
    """The odd-``c`` branches in their widely quoted form, kept for comparison.

    They carry ``(6d + 3) 2^(d+1)`` in the numerator and ``-2^d`` in the
    denominator, and disagree with the direct average for every odd ``c``.
    """
    _check_eps1_range(c)
    if c % 2 == 0:
        return epsilon1(c)
    d = (c - 1) // 2
    if c % 4 == 1:
        num = (6 * d + 3) * 2 ** (d + 1) - 4 - 18 * _kron(2, d % 3)
        return Fraction(num, 9 * (2 ** (c - 2) - 2 ** d))
    num = (6 * d + 3) * 2 ** (d + 1) - 6 * c - 2 + 18 * (_kron(1, d % 3) + 2 * _kron(2, d % 3))
    return Fraction(num, 9 * (2 ** (c - 2) - 2 ** d + 2))


def average_unoriented_closed(c: int) -> Fraction:
    return Fraction(c, 3) + Fraction(1, 9) + epsilon1(c)


# -- even tuples and the crosscap correction ------------------------------

@dataclass(frozen=True)
class ECounts:
    c: int
    E: int
    delta: int
    KE: int
    KEP: int


# rows of the tabulated small cases: c -> (|E|, |K^E| - |L^E|)
_E_SEEDS = {1: (0, 0), 2: (0, 0), 3: (0, 0), 4: (2, -2), 5: (0, 0), 6: (2, -2), 7: (2, 2)}
_KEP_SEEDS = {c: 0 for c in range(1, 15)}
_KEP_SEEDS.update({7: 2, 11: 2, 13: 2})


@lru_cache(maxsize=None)
def _e_delta(c: int) -> tuple[int, int]:
    if c in _E_SEEDS:
        return _E_SEEDS[c]
    e = [_e_delta(c - i) for i in (2, 3, 4)]
    return e[0][0] + e[1][0] + e[2][0], e[0][1] - e[1][1] - e[2][1]


@lru_cache(maxsize=None)
def _kep(c: int) -> int:
    if c in _KEP_SEEDS:
        return _KEP_SEEDS[c]
    return _kep(c - 4) + _kep(c - 6) + _kep(c - 8)


def recursive_E_counts(c: int) -> ECounts:
    """``|E(c)|``, ``Delta(c)``, ``|K^E(c)|`` and ``|K^EP(c)|`` from the integer recursions."""
    if c < 1:
        raise ValueError("recursive_E_counts needs c >= 1")
    for k in range(1, c + 1):
        # fill the caches bottom-up so deep c does not recurse deeply
        _e_delta(k)
        _kep(k)
    E, delta = _e_delta(c)
    KE = _as_int(Fraction(E + delta, 2), f"|K^E({c})|")
    return ECounts(c, E, delta, KE, _kep(c))


def gap_knot_count(c: int) -> Fraction:
    """Knots with ``c`` crossings whose crosscap number exceeds the unoriented genus."""
    n = recursive_E_counts(c)
    return Fraction(n.KE + n.KEP, 2)


def epsilon2(c: int) -> Fraction:
    """Share of ``c``-crossing 2-bridge knots with crosscap number = unoriented genus + 1."""
    if c < 3:
        raise ValueError("c >= 3 required")
    return gap_knot_count(c) / ernst_sumners(c)


def average_crosscap(c: int) -> Fraction:
    return average_unoriented(c) + epsilon2(c)


@dataclass(frozen=True)
class ClosedFormConstants:
    alpha: float
    beta: float
    omega: complex
    x: tuple[complex, complex, complex, complex]
    y: tuple[complex, complex, complex, complex]
    u: tuple[complex, complex, complex, complex]
    v: tuple[complex, complex, complex, complex]


def _cramer(nodes, rhs) -> tuple[complex, ...]:
    vander = np.array([[n ** r for n in nodes] for r in range(4)], dtype=complex)
    det = np.linalg.det(vander)
    out = []
    for i in range(4):
        m = vander.copy()
        m[:, i] = rhs
        out.append(complex(np.linalg.det(m) / det))
    return tuple(out)


@lru_cache(maxsize=None)
def closed_form_constants() -> ClosedFormConstants:
    """Roots of ``x^4 - x^2 - x - 1`` and ``x^4 - x^2 + x + 1`` by radicals, plus
    the coefficients fitting ``|E(c)|`` and ``Delta(c)`` at ``c = 4..7``."""
    alpha = ((29 + 3 * math.sqrt(93)) / 2) ** (1 / 3)
    beta = -(((25 + 3 * math.sqrt(69)) / 2) ** (1 / 3))
    omega = cmath.exp(1j * math.pi / 3)
    # x3, y3 are the members of each conjugate pair with negative imaginary part
    x3 = (1 - alpha * omega - 1 / (alpha * omega)) / 3
    y3 = (1 - beta / omega - omega / beta) / 3
    x = (-1 + 0j, complex((1 + alpha + 1 / alpha) / 3), x3, x3.conjugate())
    y = (-1 + 0j, complex((1 + beta + 1 / beta) / 3), y3, y3.conjugate())
    seeds = [_E_SEEDS[c] for c in range(4, 8)]
    u = _cramer(x, [s[0] for s in seeds])
    v = _cramer(y, [s[1] for s in seeds])
    return ClosedFormConstants(alpha, beta, omega, x, y, u, v)


def exact_minus_one_coefficients() -> tuple[Fraction, Fraction]:
    """Exact weights of the ``(-1)^(c-4)`` mode in ``|E(c)|`` and ``Delta(c)``.

    Applying the cubic factor of each characteristic polynomial to the seed
    values kills every other mode; what is left is the weight times the
    cubic evaluated at -1.
    """
    e = {c: _E_SEEDS[c][0] for c in range(4, 8)}
    dl = {c: _E_SEEDS[c][1] for c in range(4, 8)}
    # x^3 - x^2 - 1 at -1 is -3; x^3 - x^2 + 1 at -1 is -1
    u1 = Fraction(e[7] - e[6] - e[4], -3)
    v1 = Fraction(dl[7] - dl[6] + dl[4], -1)
    return u1, v1


def gap_knot_count_closed(c: int) -> float:
    """Floating evaluation of :func:`gap_knot_count` from roots and coefficients.

    ``|K^E(c)| = (1/2) sum(ui xi^(c-4) + vi yi^(c-4))`` and, for odd ``c``,
    ``|K^EP(c)| = sum ui xi^((c+1)/2 - 4)``, so the count is
    ``(1/4) sum(ui xi^((c-7)/2) (xi^((c-1)/2) + 2 [c odd]) + vi yi^(c-4))``.
    Half-integer powers use the principal branch consistently, so the product
    of the two ``xi`` powers is ``xi^(c-4)`` for even ``c`` as well.
    """
    if c < 7:
        raise ValueError("the closed form is used for c >= 7")
    k = closed_form_constants()
    odd = c % 2
    total = 0j
    for xi, yi, ui, vi in zip(k.x, k.y, k.u, k.v):
        total += ui * xi ** ((c - 7) / 2) * (xi ** ((c - 1) / 2) + 2 * odd) + vi * yi ** (c - 4)
    return (total / 4).real


def epsilon2_closed_numeric(c: int) -> float:
    """Approximate ``eps2(c)`` from the closed form; see :func:`epsilon2` for the exact value."""
    return gap_knot_count_closed(c) / ernst_sumners(c)


# -- table rows -----------------------------------------------------------

@dataclass(frozen=True)
class AggregateRow:
    c: int
    K_count: int
    W: int
    Z: int
    WP: int
    ZP: int
    GammaBar: Fraction
    eps1: Fraction
    KE: int
    KEP: int
    eps2: Fraction
    gammaBar: Fraction

    @property
    def d(self) -> int | None:
        return (self.c - 1) // 2 if self.c % 2 else None


TABLE_COLUMNS = ("c", "K_count", "W", "Z", "WP", "ZP", "GammaBar", "eps1", "KE", "KEP", "eps2", "gammaBar")


def aggregate_row(c: int) -> AggregateRow:
    """One row of the census table.

    ``eps1`` is the closed form from 11 crossings on and
    ``GammaBar - c/3 - 1/9`` below that.
    """
    t = wz_totals(c)
    gamma_bar = _average_from_totals(c, t)
    eps1 = epsilon1(c) if c >= 11 else gamma_bar - Fraction(c, 3) - Fraction(1, 9)
    n = recursive_E_counts(c)
    eps2 = epsilon2(c)
    return AggregateRow(c, ernst_sumners(c), t.W, t.Z, t.WP, t.ZP, gamma_bar, eps1,
                        n.KE, n.KEP, eps2, gamma_bar + eps2)
