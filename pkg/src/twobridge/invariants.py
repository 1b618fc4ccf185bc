"""Unoriented genus and crosscap number of 2-bridge links from their fractions."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import cf


class Method(enum.Enum):
    FORMULA = "formula"
    REDUCTION = "reduction"
    ORACLE = "oracle"


@dataclass(frozen=True)
class WZCount:
    w: int
    z: int

    @property
    def genus(self) -> int:
        return self.w - self.z


@dataclass(frozen=True)
class InvariantReport:
    fraction: Fraction
    crossing_number: int
    link_class: cf.LinkClass
    w: int
    z: int
    unoriented_genus: int
    crosscap: int | None
    method: Method

    def as_record(self) -> dict:
        """Flat JSON-ready record; the fraction is written as ``"p/q"``."""
        return {
            "fraction": cf.format_fraction(self.fraction),
            "crossing_number": self.crossing_number,
            "components": self.link_class.components,
            "w": self.w,
            "z": self.z,
            "unoriented_genus": self.unoriented_genus,
            "crosscap": self.crosscap,
            "method": self.method.value,
        }


def _check_positive_subtractive(coeffs: Sequence[int]) -> None:
    if not coeffs:
        raise ValueError("empty continued fraction")
    if any(b < 2 for b in coeffs):
        raise ValueError(f"positive subtractive entries must be >= 2: {list(coeffs)}")


def compute_wz(coeffs: Sequence[int]) -> WZCount:
    """Count ``w`` and ``z`` for a positive subtractive expansion.

    ``w`` is the number of maximal runs of 2's plus the number of entries
    >= 3. ``z`` is the number of maximal runs of 3's with a 2 immediately on
    both sides.
    """
    _check_positive_subtractive(coeffs)
    b = list(coeffs)
    k = len(b)
    w = sum(1 for i in range(k) if b[i] == 2 and (i == 0 or b[i - 1] != 2))
    w += sum(1 for x in b if x >= 3)
    z = 0
    i = 0
    while i < k:
        if b[i] == 3:
            j = i
            while j + 1 < k and b[j + 1] == 3:
                j += 1
            if i > 0 and j + 1 < k and b[i - 1] == 2 and b[j + 1] == 2:
                z += 1
            i = j + 1
        else:
            i += 1
    return WZCount(w, z)


def unoriented_genus(coeffs: Sequence[int]) -> int:
    return compute_wz(coeffs).genus


def unoriented_genus_by_reduction(coeffs: Sequence[int]) -> int:
    """Unoriented genus by repeatedly shortening the expansion from the right.

    A last entry >= 3 is dropped; a trailing block of 2's after an entry
    ``bj >= 3`` collapses to ``[..., bj - 1]``. Each step adds one. A single
    twist region (``[b]`` or all 2's) is a torus link with genus 1.
    """
    _check_positive_subtractive(coeffs)
    b = list(coeffs)
    genus = 1
    while True:
        if len(b) == 1 or all(x == 2 for x in b):
            return genus
        if b[-1] >= 3:
            b.pop()
        else:
            j = max(i for i, x in enumerate(b) if x >= 3)
            b = b[:j] + [b[j] - 1]
        genus += 1


def crosscap_condition_even_form(coeffs: Sequence[int]) -> bool:
    """True when every entry of the even expansion has ``|e| >= 4``."""
    if not coeffs or any(e % 2 or abs(e) < 2 for e in coeffs):
        raise ValueError(f"not an even subtractive expansion: {list(coeffs)}")
    return all(abs(e) >= 4 for e in coeffs)


def crosscap_knot(f: Fraction) -> int:
    """Crosscap number of a 2-bridge knot with at least three crossings."""
    f = cf.normalize(f)
    if cf.classify(f) is not cf.LinkClass.KNOT:
        raise ValueError(f"{f} is a two-component link; use the state-sum oracle")
    sub = cf.to_positive_subtractive(f)
    if cf.crossing_number(sub) < 3:
        raise ValueError(f"{f} has fewer than three crossings")
    genus = unoriented_genus(sub)
    return genus + 1 if crosscap_condition_even_form(cf.to_even_subtractive(f)) else genus


def formula_report(f: Fraction) -> InvariantReport:
    """Invariant report from the continued-fraction formulas alone.

    ``crosscap`` is left as ``None`` for two-component links, which need the
    exhaustive oracle.
    """
    f = cf.normalize(f)
    sub = cf.to_positive_subtractive(f)
    wz = compute_wz(sub)
    kind = cf.classify(f)
    cr = cf.crossing_number(sub)
    crosscap = crosscap_knot(f) if kind is cf.LinkClass.KNOT and cr >= 3 else None
    return InvariantReport(f, cr, kind, wz.w, wz.z, wz.genus, crosscap, Method.FORMULA)
