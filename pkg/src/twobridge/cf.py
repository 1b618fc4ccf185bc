"""Continued fractions for 2-bridge links.

A 2-bridge link ``L(p/q)`` is identified by a reduced fraction with
``0 < p < q``. Three continued-fraction spellings of the same fraction are
used throughout the package:

``add``
    ``p/q = 1/(a1 + 1/(a2 + ...))``. The *positive additive* form is the
    unique odd-length expansion with every ``ai > 0``; it describes the
    4-plat diagram.
``sub``
    ``p/q = 1/(b1 - 1/(b2 - ...))``. The *positive subtractive* form has
    every ``bi >= 2`` and is what the genus formula reads.
``even``
    a subtractive expansion whose entries are all even. For a knot exactly
    one of ``p/q`` and ``(p - q)/q`` has such an expansion with
    ``|ei| >= 2``.

Fractions are plain :class:`fractions.Fraction` values.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from itertools import combinations
from typing import Sequence


class ContinuedFractionError(ValueError):
    """Raised for malformed continued fractions or out-of-range fractions."""


class LinkClass(enum.Enum):
    KNOT = "knot"
    TWO_COMPONENT_LINK = "link"

    @property
    def components(self) -> int:
        return 1 if self is LinkClass.KNOT else 2


FORMS = ("add", "sub", "even")


def _nested(coeffs: Sequence[int], sign: int) -> tuple[int, int]:
    # Returns (num, den) of 1/(c1 + sign/(c2 + sign/(...))) without reducing.
    num, den = 0, 1
    for i in range(len(coeffs) - 1, -1, -1):
        # value so far is num/den; new value is 1/(ci + sign*num/den)
        new_den = coeffs[i] * den + sign * num
        if new_den == 0:
            raise ContinuedFractionError(
                f"zero denominator while nesting; offending prefix {list(coeffs[:i + 1])}"
            )
        num, den = den, new_den
    return num, den


def _reduced(num: int, den: int) -> Fraction:
    if den < 0:
        num, den = -num, -den
    return Fraction(num, den)


def eval_additive(coeffs: Sequence[int]) -> Fraction:
    """Evaluate ``[a1, ..., ak]`` with additive nesting; ``[]`` is ``0``."""
    if any(a == 0 for a in coeffs):
        raise ContinuedFractionError(f"additive coefficients must be nonzero: {list(coeffs)}")
    return _reduced(*_nested(coeffs, +1))


def eval_subtractive(coeffs: Sequence[int]) -> Fraction:
    """Evaluate ``[b1, ..., bk]_-`` with subtractive nesting; ``[]`` is ``0``."""
    if any(abs(b) < 2 for b in coeffs):
        raise ContinuedFractionError(f"subtractive coefficients need |b| >= 2: {list(coeffs)}")
    num, den = _nested(coeffs, -1)
    # |b| >= 2 keeps every partial denominator away from zero
    assert den != 0
    return _reduced(num, den)


def subtractive_denominator_parity(coeffs: Sequence[int]) -> int:
    """Parity of the reduced denominator of ``[b1, ..., bk]_-``.

    Works mod 2 on the continuant, which equals the reduced denominator up
    to sign since consecutive continuants are coprime.
    """
    num, den = 0, 1
    for b in reversed(coeffs):
        num, den = den, (b * den + num) & 1
    return den


def normalize(f: Fraction | int) -> Fraction:
    """Map a nonzero fraction to its representative ``0 < p < q``.

    ``L(p/q)`` only depends on ``p mod q``. Integers (``q == 1``) name the
    trivial link and are rejected.
    """
    f = Fraction(f)
    if f.denominator == 1:
        raise ContinuedFractionError(f"{f} does not name a 2-bridge link with 0 < p < q")
    return Fraction(f.numerator % f.denominator, f.denominator)


def _check_unit_interval(f: Fraction) -> None:
    if not 0 < f < 1:
        raise ContinuedFractionError(f"expected 0 < p/q < 1, got {f}")


def to_positive_additive(f: Fraction) -> list[int]:
    """Odd-length all-positive additive expansion of ``0 < p/q < 1``."""
    f = Fraction(f)
    _check_unit_interval(f)
    p, q = f.numerator, f.denominator
    coeffs = []
    # Euclid on q/p gives the regular expansion, last term >= 2
    a, b = q, p
    while b:
        coeffs.append(a // b)
        a, b = b, a % b
    if len(coeffs) % 2 == 0:
        # [..., ak] = [..., ak - 1, 1]
        coeffs[-1] -= 1
        coeffs.append(1)
    return coeffs


def additive_to_subtractive(coeffs: Sequence[int]) -> list[int]:
    """Rewrite a positive additive expansion into the positive subtractive one.

    ``[a1, a2, ..., a_{2k+1}]_+`` becomes
    ``[a1 + 1, 2^(a2 - 1), a3 + 2, ..., 2^(a_{2k} - 1), a_{2k+1} + 1]_-``.
    A single coefficient maps to itself since ``1/a`` reads the same both ways.
    """
    n = len(coeffs)
    if n % 2 == 0 or any(a <= 0 for a in coeffs):
        raise ContinuedFractionError(f"not a positive additive expansion: {list(coeffs)}")
    if n == 1:
        return list(coeffs)
    out: list[int] = []
    for i, a in enumerate(coeffs):
        if i % 2 == 1:
            out.extend([2] * (a - 1))
        elif i == 0 or i == n - 1:
            out.append(a + 1)
        else:
            out.append(a + 2)
    return out


def to_positive_subtractive(f: Fraction) -> list[int]:
    """Positive subtractive expansion (all entries >= 2) of ``0 < p/q < 1``."""
    return additive_to_subtractive(to_positive_additive(f))


def to_even_subtractive(f: Fraction) -> list[int]:
    """The all-even subtractive expansion of a knot fraction.

    The expansion evaluates to ``p/q`` when ``p`` is even and to ``(p - q)/q``
    otherwise. Each step picks the unique even integer within distance 1 of
    the running value and recurses on the reciprocal of the remainder.
    """
    f = Fraction(f)
    _check_unit_interval(f)
    p, q = f.numerator, f.denominator
    if q % 2 == 0:
        raise ContinuedFractionError(
            f"{f} is a two-component link; the even form is only built for knots"
        )
    start = p if p % 2 == 0 else p - q
    x = Fraction(q, start)
    coeffs = []
    while True:
        # nearest even integer; x is never an odd integer here
        e = 2 * round(x / 2)
        if abs(x - e) >= 1:
            raise AssertionError(f"no even integer within 1 of {x}")
        coeffs.append(e)
        rest = e - x
        if rest == 0:
            return coeffs
        x = 1 / rest


def crossing_number(coeffs: Sequence[int]) -> int:
    """Crossing number of ``L[b1, ..., bk]_-`` for a subtractive expansion.

    ``sum |bi|`` minus one for every adjacent pair of equal sign; for an
    all-positive expansion that is ``sum bi - (k - 1)``.
    """
    if any(abs(b) < 2 for b in coeffs):
        raise ContinuedFractionError(f"subtractive coefficients need |b| >= 2: {list(coeffs)}")
    total = sum(abs(b) for b in coeffs)
    total -= sum(1 for x, y in zip(coeffs, coeffs[1:]) if (x > 0) == (y > 0))
    return total


def fractions_with_crossing_number(c: int) -> list[Fraction]:
    """Every ``0 < p/q < 1`` whose standard diagram has ``c`` crossings, sorted.

    These are exactly the values of the odd-length compositions of ``c``
    read as positive additive expansions, each fraction once.
    """
    if c < 2:
        raise ValueError("2-bridge links have at least two crossings")
    out = []
    for k in range(0, c, 2):
        for cuts in combinations(range(1, c), k):
            bounds = (0,) + cuts + (c,)
            out.append(eval_additive([bounds[i + 1] - bounds[i] for i in range(k + 1)]))
    return sorted(out)


def classify(f: Fraction) -> LinkClass:
    f = Fraction(f)
    _check_unit_interval(f)
    return LinkClass.KNOT if f.denominator % 2 else LinkClass.TWO_COMPONENT_LINK


def is_equivalent(f1: Fraction, f2: Fraction) -> bool:
    """Schubert's classification: same ``q`` and ``p == p'`` or ``pp' == 1`` mod ``q``."""
    f1, f2 = Fraction(f1), Fraction(f2)
    q = f1.denominator
    if q != f2.denominator:
        return False
    p1, p2 = f1.numerator, f2.numerator
    return (p1 - p2) % q == 0 or (p1 * p2 - 1) % q == 0


# -- string forms ---------------------------------------------------------

_CF_RE = re.compile(r"^\s*(add|sub|even)\s*:\s*\[\s*(.*?)\s*\]\s*$")
_FRAC_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def format_cf(form: str, coeffs: Sequence[int]) -> str:
    if form not in FORMS:
        raise ContinuedFractionError(f"unknown form tag {form!r}")
    return f"{form}:[{','.join(str(int(c)) for c in coeffs)}]"


def parse_cf(text: str) -> tuple[str, list[int]]:
    m = _CF_RE.match(text)
    if not m:
        raise ContinuedFractionError(f"cannot parse continued fraction {text!r}")
    body = m.group(2)
    try:
        coeffs = [int(tok) for tok in body.split(",")] if body else []
    except ValueError:
        raise ContinuedFractionError(f"cannot parse continued fraction {text!r}") from None
    return m.group(1), coeffs


def evaluate_cf(form: str, coeffs: Sequence[int]) -> Fraction:
    if form == "add":
        return eval_additive(coeffs)
    if form in ("sub", "even"):
        if form == "even" and any(c % 2 for c in coeffs):
            raise ContinuedFractionError(f"even form has odd entries: {list(coeffs)}")
        return eval_subtractive(coeffs)
    raise ContinuedFractionError(f"unknown form tag {form!r}")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` or a tagged continued fraction into a reduced fraction.

    No normalization is applied; see :func:`normalize`.
    """
    m = _FRAC_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ContinuedFractionError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _CF_RE.match(text):
        return evaluate_cf(*parse_cf(text))
    raise ContinuedFractionError(f"cannot parse {text!r} as a fraction or continued fraction")
