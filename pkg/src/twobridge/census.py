"""Tuple censuses of 2-bridge knot diagrams and the recursive bijections on them.

``K(c)`` holds the positive subtractive tuples ``(b1, ..., bk)`` (all
``bi >= 2``) with ``sum bi - (k - 1) == c`` that give knots; every knot with
crossing number ``c`` appears once per reading direction. ``K^P(c)`` is the
palindromic part. ``E(c)`` holds the signed even tuples with all
``|ei| >= 4``, split by length parity into knots ``K^E`` and links ``L^E``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import cf
from .invariants import compute_wz

Tuple = tuple[int, ...]


class Family(enum.Enum):
    K = "K"
    KP = "KP"
    E = "E"
    KE = "KE"
    LE = "LE"
    KEP = "KEP"


def is_knot_tuple(t: Sequence[int]) -> bool:
    return cf.subtractive_denominator_parity(t) == 1


def tuple_crossings(t: Sequence[int]) -> int:
    return cf.crossing_number(t)


def _compositions(total: int) -> Iterator[Tuple]:
    # positive subtractive tuples whose entries minus one sum to total
    if total == 0:
        yield ()
        return
    for part in range(1, total + 1):
        for rest in _compositions(total - part):
            yield (part + 1,) + rest


def enumerate_K(c: int) -> list[Tuple]:
    """All of ``K(c)`` in lexicographic order."""
    if c < 2:
        raise ValueError("K(c) is defined for c >= 2")
    return sorted(t for t in _compositions(c - 1) if is_knot_tuple(t))


def enumerate_KP(c: int) -> list[Tuple]:
    """Palindromic members of ``K(c)``, built from half-tuples."""
    if c < 2:
        raise ValueError("K^P(c) is defined for c >= 2")
    total = c - 1
    out = []
    for middle in range(0, total + 1):
        rest = total - middle
        if rest % 2:
            continue
        for half in _compositions(rest // 2):
            if middle:
                t = half + (middle + 1,) + half[::-1]
            else:
                if not half:
                    continue
                t = half + half[::-1]
            if is_knot_tuple(t):
                out.append(t)
    return sorted(out)


def ends_with(t: Sequence[int], pattern: Sequence[int | str]) -> bool:
    """Suffix test where ``"3+"`` style entries mean "at least 3"."""
    if len(pattern) > len(t):
        return False
    for x, p in zip(t[len(t) - len(pattern):], pattern):
        if isinstance(p, str):
            if x < int(p.rstrip("+")):
                return False
        elif x != p:
            return False
    return True


def palindrome_ends_with(t: Sequence[int], pattern: Sequence[int | str]) -> bool:
    """Suffix test for palindromes; both copies of the suffix may share the middle entry."""
    return len(t) >= 2 * len(pattern) - 1 and ends_with(t, pattern)


# -- the bijection g = f1 | f2 | f3 | f4 ----------------------------------

def g_branch(t: Sequence[int]) -> int:
    """Which of f1..f4 applies to ``t``, from its ending."""
    t = tuple(t)
    if t[-1] == 2:
        if len(t) >= 2 and t[-2] == 2:
            return 1
        return 2
    if t[-1] == 3:
        return 3
    return 4


def apply_g(t: Sequence[int]) -> Tuple:
    """Send ``t`` in ``K(c)`` to ``K(c-2)``, ``K(c-1)`` or ``K(c-2)``."""
    t = tuple(t)
    if tuple_crossings(t) < 5:
        raise ValueError(f"g is defined on K(c) for c >= 5; {t} has fewer crossings")
    branch = g_branch(t)
    if branch == 1:
        return t[:-2]
    if branch == 2:
        return t[:-2] + (t[-2] - 1, 2)
    if branch == 3:
        return t[:-2] + (t[-2] + 1,)
    return t[:-1] + (t[-1] - 2,)


def invert_g(image: Sequence[int], branch: int) -> Tuple:
    """Inverse of the ``branch``-th piece of g."""
    s = tuple(image)
    if branch == 1:
        return s + (2, 2)
    if branch == 2:
        if s[-1] != 2:
            raise ValueError(f"f2 images end in 2: {s}")
        return s[:-2] + (s[-2] + 1, 2)
    if branch == 3:
        if s[-1] < 3:
            raise ValueError(f"f3 images end in an entry >= 3: {s}")
        return s[:-1] + (s[-1] - 1, 3)
    if branch == 4:
        return s[:-1] + (s[-1] + 2,)
    raise ValueError(f"no branch {branch}")


# -- the palindromic bijection gP = p1 | p2 | p3 | p4 ---------------------

def gP_branch(t: Sequence[int]) -> int:
    t = tuple(t)
    if t[-1] == 2:
        if len(t) >= 3 and t[-2] == 2:
            return 1
        return 2
    if t[-1] == 3:
        return 3
    return 4


def apply_gP(t: Sequence[int]) -> Tuple:
    """Palindrome-preserving bijection ``K^P(c) -> K^P(c-4) | K^P(c-2) | K^P(c-4)``."""
    t = tuple(t)
    if t != t[::-1]:
        raise ValueError(f"{t} is not a palindrome")
    if tuple_crossings(t) < 7:
        raise ValueError(f"gP is defined on K^P(c) for c >= 7; {t} has fewer crossings")
    k = len(t)
    branch = gP_branch(t)
    if branch == 1:
        return t[2:-2]
    if branch == 2:
        if k == 3:
            return (2, t[1] - 2, 2)
        return (2, t[1] - 1) + t[2:-2] + (t[-2] - 1, 2)
    if branch == 3:
        if k == 3:
            return (t[1] + 2,)
        return (t[1] + 1,) + t[2:-2] + (t[-2] + 1,)
    if k == 1:
        return (t[0] - 4,)
    return (t[0] - 2,) + t[1:-1] + (t[-1] - 2,)


def invert_gP(image: Sequence[int], branch: int) -> Tuple:
    s = tuple(image)
    k = len(s)
    if branch == 1:
        return (2, 2) + s + (2, 2)
    if branch == 2:
        if k == 3:
            return (2, s[1] + 2, 2)
        return (2, s[1] + 1) + s[2:-2] + (s[-2] + 1, 2)
    if branch == 3:
        if k == 1:
            return (3, s[0] - 2, 3)
        return (3, s[0] - 1) + s[1:-1] + (s[-1] - 1, 3)
    if branch == 4:
        if k == 1:
            return (s[0] + 4,)
        return (s[0] + 2,) + s[1:-1] + (s[-1] + 2,)
    raise ValueError(f"no branch {branch}")


def delta_wz_of_g(t: Sequence[int]) -> tuple[int, int]:
    """``(w(t) - w(g(t)), z(t) - z(g(t)))``."""
    before, after = compute_wz(t), compute_wz(apply_g(t))
    return before.w - after.w, before.z - after.z


def delta_wz_of_gP(t: Sequence[int]) -> tuple[int, int]:
    before, after = compute_wz(t), compute_wz(apply_gP(t))
    return before.w - after.w, before.z - after.z


# -- totals ---------------------------------------------------------------

@dataclass(frozen=True)
class CensusTotals:
    c: int
    count: int
    W: int
    Z: int
    count_P: int
    WP: int
    ZP: int

    def as_record(self) -> dict:
        return {
            "c": self.c, "count": self.count, "W": self.W, "Z": self.Z,
            "count_P": self.count_P, "WP": self.WP, "ZP": self.ZP,
        }


def _sum_wz(tuples: Sequence[Tuple]) -> tuple[int, int]:
    W = Z = 0
    for t in tuples:
        wz = compute_wz(t)
        W += wz.w
        Z += wz.z
    return W, Z


def census_totals(c: int) -> CensusTotals:
    """Sums of ``w`` and ``z`` over ``K(c)`` and over its palindromes."""
    K = enumerate_K(c)
    KP = enumerate_KP(c)
    W, Z = _sum_wz(K)
    WP, ZP = _sum_wz(KP)
    return CensusTotals(c, len(K), W, Z, len(KP), WP, ZP)


# -- signed even tuples ---------------------------------------------------

def _even_tuples(budget: int, prev_sign: int) -> Iterator[Tuple]:
    if budget == 0:
        yield ()
        return
    for sign in (1, -1):
        # an adjacent pair of equal sign shares one crossing
        saving = 1 if sign == prev_sign else 0
        size = 4
        while size - saving <= budget:
            for rest in _even_tuples(budget - size + saving, sign):
                yield (sign * size,) + rest
            size += 2


def enumerate_E(c: int) -> list[Tuple]:
    """``E(c)`` in lexicographic order; ``E(0)`` is ``[()]``."""
    if c < 0:
        raise ValueError("E(c) needs c >= 0")
    return sorted(_even_tuples(c, 0))


@dataclass(frozen=True)
class EvenFamilies:
    E: list[Tuple]
    KE: list[Tuple]
    LE: list[Tuple]
    KEP: list[Tuple]


def enumerate_E_families(c: int) -> EvenFamilies:
    E = enumerate_E(c)
    KE = [t for t in E if len(t) % 2 == 0]
    LE = [t for t in E if len(t) % 2 == 1]
    KEP = [t for t in KE if t == t[::-1]]
    return EvenFamilies(E, KE, LE, KEP)


def enumerate_family(c: int, family: Family) -> list[Tuple]:
    if family is Family.K:
        return enumerate_K(c)
    if family is Family.KP:
        return enumerate_KP(c)
    fam = enumerate_E_families(c)
    return {Family.E: fam.E, Family.KE: fam.KE, Family.LE: fam.LE, Family.KEP: fam.KEP}[family]
