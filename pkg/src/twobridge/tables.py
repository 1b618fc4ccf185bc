"""Expected ``(dw, dz)`` for the reduction bijections g and gP, as suffix patterns.

Entries are spelled as characters ``"2"``, ``"3"``, ``"4"`` and ``"5"`` for
anything >= 5, so "at least 3" is ``[345]`` and "at least 4" is ``[45]``.
Rows are tried in order; a tuple matching no row has zero change. Rows
written ``^...$`` match the whole tuple, the rest match a suffix.

For palindromes a suffix row only applies when the tuple is long enough to
hold the suffix at both ends, sharing at most the middle entry.

This is deliberately independent of :mod:`census`: it reads the tables, not
the code that the tables describe.
"""
from __future__ import annotations

import re
from typing import Sequence

G_DW = {
    1: [(r"[345]22", 1)],
    2: [(r"232", 2), (r"[345]32", 1)],
    3: [(r"[345]23", 1), (r"[345]3", 1)],
    4: [(r"24", 1)],
}
G_DZ = {
    1: [(r"23+22", 1)],
    2: [(r"232", 1), (r"23*42", -1)],
    3: [(r"23+23", 1)],
    4: [(r"23+4", -1)],
}
GP_DW = {
    1: [(r"[345]22", 2)],
    2: [(r"^2332$", 3), (r"232", 4), (r"[345]32", 2)],
    3: [(r"[345]23", 2), (r"[345]3", 2)],
    4: [(r"24", 2)],
}
GP_DZ = {
    1: [(r"^223+22$", 1), (r"23+22", 2)],
    2: [(r"^2332$", 1), (r"232", 2), (r"^243*42$", -1), (r"23*42", -2)],
    3: [(r"^323+23$", 1), (r"23+23", 2)],
    4: [(r"23+4", -2), (r"^43+4$", -1)],
}

# (4, 4) at c = 7 has dw = 1 under p4 but matches no row; the palindromic
# tables hold from c = 9 on.
GP_TABLE_FROM = 9


def spell(t: Sequence[int]) -> str:
    return "".join(str(min(x, 5)) for x in t)


def _longest_suffix(pattern: str, s: str) -> int | None:
    for start in range(len(s)):
        if re.fullmatch(pattern, s[start:]):
            return len(s) - start
    return None


def matches_suffix(t: Sequence[int], pattern: str) -> bool:
    return _longest_suffix(pattern, spell(t)) is not None


def _lookup(rows, t: Sequence[int], palindromic: bool) -> int:
    s = spell(t)
    for pattern, value in rows:
        if pattern.startswith("^"):
            if re.fullmatch(pattern[1:-1], s):
                return value
            continue
        n = _longest_suffix(pattern, s)
        if n is None or (palindromic and len(t) < 2 * n - 1):
            continue
        return value
    return 0


def expected_g(t: Sequence[int], branch: int) -> tuple[int, int]:
    return _lookup(G_DW[branch], t, False), _lookup(G_DZ[branch], t, False)


def expected_gP(t: Sequence[int], branch: int) -> tuple[int, int]:
    return _lookup(GP_DW[branch], t, True), _lookup(GP_DZ[branch], t, True)
