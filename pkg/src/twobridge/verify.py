"""Full verification run: every identity the package relies on, checked over a range.

Each check returns ``None`` on success or a short counterexample string
(``subject: expected X, got Y``). :func:`run_checks` runs them in a fixed
order and returns the results; nothing here prints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import cf, census, formulas, invariants, oracle, tables

MIN_MAX_C = 7


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _first(items: Iterable[str | None]) -> str | None:
    for item in items:
        if item is not None:
            return item
    return None


def _mismatch(subject, expected, got) -> str | None:
    if expected == got:
        return None
    return f"{subject}: expected {expected}, got {got}"


# -- continued fractions and invariants -----------------------------------

def check_conversions(max_c: int) -> str | None:
    golden = _first([
        _mismatch("23/85 add", [3, 1, 2, 3, 2], cf.to_positive_additive(Fraction(23, 85))),
        _mismatch("23/85 sub", [4, 4, 2, 2, 3], cf.to_positive_subtractive(Fraction(23, 85))),
    ])
    if golden:
        return golden
    for c in range(2, max_c + 1):
        for f in cf.fractions_with_crossing_number(c):
            add = cf.to_positive_additive(f)
            sub = cf.additive_to_subtractive(add)
            bad = _first([
                _mismatch(f"{f} add", f, cf.eval_additive(add)),
                _mismatch(f"{f} sub", f, cf.eval_subtractive(sub)),
                _mismatch(f"{f} crossings", c, cf.crossing_number(sub)),
            ])
            if bad:
                return bad
            if cf.classify(f) is cf.LinkClass.KNOT:
                even = cf.to_even_subtractive(f)
                target = f if f.numerator % 2 == 0 else f - 1
                bad = _mismatch(f"{f} even", target, cf.eval_subtractive(even))
                if bad:
                    return bad
    return None


def check_reduction_genus(max_c: int) -> str | None:
    for c in range(2, max_c + 1):
        for f in cf.fractions_with_crossing_number(c):
            sub = cf.to_positive_subtractive(f)
            bad = _mismatch(f"{f} genus", invariants.unoriented_genus(sub),
                            invariants.unoriented_genus_by_reduction(sub))
            if bad:
                return bad
    return None


# -- census ---------------------------------------------------------------

def check_cardinalities(max_c: int) -> str | None:
    j = formulas.jacobsthal
    prev_run = {}
    for c in range(3, max_c + 1):
        K = census.enumerate_K(c)
        KP = census.enumerate_KP(c)
        checks = [
            _mismatch(f"|K({c})|", 2 * j(c - 2), len(K)),
            _mismatch(f"(|K({c})|+|K^P({c})|)/2", formulas.ernst_sumners(c), Fraction(len(K) + len(KP), 2)),
            _mismatch(f"|K^P({c})|", 2 * j((c - 1) // 2) if c % 2 else 0, len(KP)),
            _mismatch(f"|K_2({c})|", j(c - 2), sum(1 for t in K if t[-1] == 2)),
            _mismatch(f"|K_3bar({c})|", j(c - 2), sum(1 for t in K if t[-1] >= 3)),
            _mismatch(f"knot test on K({c})", True, all(census.is_knot_tuple(t) for t in K)),
        ]
        if c >= 4:
            checks += [
                _mismatch(f"|K_22({c})|", 2 * j(c - 4), sum(1 for t in K if census.ends_with(t, (2, 2)))),
                _mismatch(f"|K_4bar({c})|", 2 * j(c - 4), sum(1 for t in K if t[-1] >= 4)),
            ]
        run = sum(1 for t in K if tables.matches_suffix(t, r"23+22"))
        prev_run[c] = run
        if c >= 6:
            expected = prev_run[c - 2] + j(c - 6) + (-1) ** c * (1 if c % 3 == 0 else 0)
            checks.append(_mismatch(f"|K_(2 3^m 2 2)({c})|", expected, run))
        bad = _first(checks)
        if bad:
            return bad
    return None


def check_g_bijection(max_c: int) -> str | None:
    for c in range(5, max_c + 1):
        images: dict[int, list] = {1: [], 2: [], 3: [], 4: []}
        for t in census.enumerate_K(c):
            branch = census.g_branch(t)
            s = census.apply_g(t)
            if census.invert_g(s, branch) != t:
                return f"{t}: f{branch} does not invert"
            images[branch].append(s)
        expected = {
            1: census.enumerate_K(c - 2),
            2: [t for t in census.enumerate_K(c - 1) if t[-1] == 2],
            3: [t for t in census.enumerate_K(c - 1) if t[-1] >= 3],
            4: census.enumerate_K(c - 2),
        }
        for branch in images:
            bad = _mismatch(f"image of f{branch} on K({c})", expected[branch], sorted(images[branch]))
            if bad:
                return bad
    return None


def check_gP_bijection(max_c: int) -> str | None:
    for c in range(7, max_c + 1, 2):
        images: dict[int, list] = {1: [], 2: [], 3: [], 4: []}
        for t in census.enumerate_KP(c):
            branch = census.gP_branch(t)
            s = census.apply_gP(t)
            if census.invert_gP(s, branch) != t:
                return f"{t}: p{branch} does not invert"
            if s != s[::-1]:
                return f"{t}: p{branch} image {s} is not a palindrome"
            images[branch].append(s)
        expected = {
            1: census.enumerate_KP(c - 4),
            2: [t for t in census.enumerate_KP(c - 2) if t[-1] == 2],
            3: [t for t in census.enumerate_KP(c - 2) if t[-1] >= 3],
            4: census.enumerate_KP(c - 4),
        }
        for branch in images:
            bad = _mismatch(f"image of p{branch} on K^P({c})", expected[branch], sorted(images[branch]))
            if bad:
                return bad
    return None


def check_delta_tables(max_c: int) -> str | None:
    for c in range(5, max_c + 1):
        for t in census.enumerate_K(c):
            branch = census.g_branch(t)
            bad = _mismatch(f"{t} under f{branch}", tables.expected_g(t, branch), census.delta_wz_of_g(t))
            if bad:
                return bad
    return None


def check_delta_tables_palindromic(max_c: int) -> str | None:
    for c in range(tables.GP_TABLE_FROM, max_c + 1, 2):
        for t in census.enumerate_KP(c):
            branch = census.gP_branch(t)
            bad = _mismatch(f"{t} under p{branch}", tables.expected_gP(t, branch), census.delta_wz_of_gP(t))
            if bad:
                return bad
    return None


def check_even_families(max_c: int) -> str | None:
    for c in range(1, max_c + 1):
        fam = census.enumerate_E_families(c)
        if any(len(t) % 2 for t in fam.KE) or any(len(t) % 2 == 0 for t in fam.LE):
            return f"E({c}): knot/link split by length parity broken"
        if any(cf.crossing_number(t) != c for t in fam.E):
            return f"E({c}): tuple with the wrong crossing number"
        n = formulas.recursive_E_counts(c)
        bad = _mismatch(f"E counts at c={c}", (n.E, n.delta, n.KE, n.KEP),
                        (len(fam.E), len(fam.KE) - len(fam.LE), len(fam.KE), len(fam.KEP)))
        if bad:
            return bad
    return None


# -- formulas -------------------------------------------------------------

def check_wz_closed_forms(max_c: int) -> str | None:
    for c in range(3, max_c + 1):
        t = census.census_totals(c)
        checks = [_mismatch(f"WP({c})", formulas.closed_WP(c), t.WP),
                  _mismatch(f"ZP({c})", formulas.closed_ZP(c), t.ZP)]
        if c >= 4:
            checks.append(_mismatch(f"W({c})", formulas.closed_W(c), t.W))
        if c >= 6:
            checks.append(_mismatch(f"Z({c})", formulas.closed_Z(c), t.Z))
        bad = _first(checks)
        if bad:
            return bad
    return None


def check_palindromic_closed_forms(max_c: int) -> str | None:
    for c in range(3, max_c + 1, 2):
        KP = census.enumerate_KP(c)
        WP = sum(invariants.compute_wz(t).w for t in KP)
        ZP = sum(invariants.compute_wz(t).z for t in KP)
        bad = _first([_mismatch(f"WP({c})", formulas.closed_WP(c), WP),
                      _mismatch(f"ZP({c})", formulas.closed_ZP(c), ZP)])
        if bad:
            return bad
    return None


def check_epsilon1(max_c: int) -> str | None:
    for c in range(11, max_c + 1):
        bad = _mismatch(f"average unoriented genus at c={c}", formulas.average_unoriented_census(c),
                        formulas.average_unoriented_closed(c))
        if bad:
            return bad
    return None


def check_epsilon2_pipeline(max_c: int) -> str | None:
    k = formulas.closed_form_constants()
    u1, v1 = formulas.exact_minus_one_coefficients()
    checks = [
        _mismatch("eps2(7)", Fraction(1, 7), formulas.epsilon2(7)),
        _mismatch("u1", Fraction(2, 3), u1),
        _mismatch("v1", Fraction(-2), v1),
        None if abs(k.u[1] - 0.727) < 1e-3 else f"u2: expected 0.727 +- 0.001, got {k.u[1]}",
        None if abs(k.u[0] - float(u1)) < 1e-9 and abs(k.v[0] - float(v1)) < 1e-9
        else f"u1, v1 from Cramer's rule: got {k.u[0]}, {k.v[0]}",
    ]
    for i, (x, y) in enumerate(zip(k.x, k.y), 1):
        rx = abs(x ** 4 - x ** 2 - x - 1)
        ry = abs(y ** 4 - y ** 2 + y + 1)
        if max(rx, ry) > 1e-12:
            checks.append(f"root residual at i={i}: {rx:.3g}, {ry:.3g}")
    bad = _first(checks)
    if bad:
        return bad
    for c in range(7, max(40, max_c) + 1):
        exact = float(formulas.gap_knot_count(c))
        approx = formulas.gap_knot_count_closed(c)
        if abs(approx - exact) > 1e-6 * max(1.0, exact):
            return f"gap count at c={c}: expected {exact}, got {approx}"
    return None


# -- oracle ---------------------------------------------------------------

def check_oracle(oracle_max_c: int, budget: int) -> str | None:
    for c in range(3, oracle_max_c + 1):
        for f in cf.fractions_with_crossing_number(c):
            d = oracle.diagram_for(f)
            res = oracle.oracle_invariants(d, budget)
            rep = invariants.formula_report(f)
            top = (1 << c) - 1
            checks = [
                _mismatch(f"{f} checkerboard circles", c + 2,
                          oracle.count_state_circles(d, 0) + oracle.count_state_circles(d, top)),
                _mismatch(f"{f} oracle genus", rep.unoriented_genus, res.gamma_unoriented),
            ]
            if rep.crosscap is not None:
                checks.append(_mismatch(f"{f} oracle crosscap", rep.crosscap, res.crosscap))
            gap = res.crosscap == res.gamma_unoriented + 1
            for s in res.minimal_states:
                if oracle.cycle_condition(oracle.state_graph(d, s)) != gap:
                    checks.append(f"{f} state {s}: cycle condition disagrees with crosscap gap")
                    break
            if gap and res.minimal_state_count != 1:
                checks.append(f"{f}: cycle condition holds but {res.minimal_state_count} minimal states")
            bad = _first(checks)
            if bad:
                return bad
    return None


def check_bruteforce_averages(oracle_max_c: int, budget: int) -> str | None:
    for c in range(3, oracle_max_c + 1):
        sums = {}
        for name, tuples in (("K", census.enumerate_K(c)), ("KP", census.enumerate_KP(c))):
            genus = crosscap = 0
            for t in tuples:
                res = oracle.oracle_invariants(oracle.diagram_for(cf.eval_subtractive(t)), budget)
                genus += res.gamma_unoriented
                crosscap += res.crosscap
            sums[name] = (genus, crosscap)
        denom = 2 * formulas.ernst_sumners(c)
        bad = _first([
            _mismatch(f"average genus at c={c}", formulas.average_unoriented(c),
                      Fraction(sums["K"][0] + sums["KP"][0], denom)),
            _mismatch(f"average crosscap at c={c}", formulas.average_crosscap(c),
                      Fraction(sums["K"][1] + sums["KP"][1], denom)),
        ])
        if bad:
            return bad
    return None


def plan(max_c: int, oracle_max_c: int, budget: int = oracle.DEFAULT_BUDGET
         ) -> list[tuple[str, str, Callable[[], str | None]]]:
    """The ordered list of checks for a run: (name, scope, thunk)."""
    if max_c < MIN_MAX_C:
        raise ValueError(f"--max-c must be at least {MIN_MAX_C}")
    if oracle_max_c > budget:
        raise oracle.BudgetExceeded(oracle_max_c, budget)
    pal_c = max(21, max_c)
    e_c = max(26, max_c)
    steps = [
        ("continued-fraction round trips", f"2 <= c <= {max_c}", lambda: check_conversions(max_c)),
        ("w - z equals the reduction genus", f"2 <= c <= {max_c}", lambda: check_reduction_genus(max_c)),
        ("tuple-set cardinalities", f"3 <= c <= {max_c}", lambda: check_cardinalities(max_c)),
        ("g is a bijection onto K(c-2) + K(c-1) + K(c-2)", f"5 <= c <= {max_c}",
         lambda: check_g_bijection(max_c)),
        ("gP is a bijection onto K^P(c-4) + K^P(c-2) + K^P(c-4)", f"odd 7 <= c <= {pal_c}",
         lambda: check_gP_bijection(pal_c)),
        ("(dw, dz) under g match the tables", f"5 <= c <= {max_c}", lambda: check_delta_tables(max_c)),
        ("(dw, dz) under gP match the tables", f"odd {tables.GP_TABLE_FROM} <= c <= {pal_c}",
         lambda: check_delta_tables_palindromic(pal_c)),
        ("W, Z closed forms vs enumeration", f"4 <= c <= {max_c} (Z from 6)",
         lambda: check_wz_closed_forms(max_c)),
        ("WP, ZP closed forms vs enumeration", f"odd 3 <= c <= {pal_c}",
         lambda: check_palindromic_closed_forms(pal_c)),
        ("average genus closed form vs direct sum", f"11 <= c <= {max_c}", lambda: check_epsilon1(max_c)),
        ("even-tuple recursions vs enumeration", f"1 <= c <= {e_c}", lambda: check_even_families(e_c)),
        ("eps2 exact values, roots and closed form", f"7 <= c <= {max(40, max_c)}",
         lambda: check_epsilon2_pipeline(max_c)),
    ]
    if oracle_max_c >= 3:
        steps += [
            ("state-sum oracle vs formulas and cycle criterion", f"3 <= c <= {oracle_max_c}",
             lambda: check_oracle(oracle_max_c, budget)),
            ("oracle averages vs formula averages", f"3 <= c <= {oracle_max_c}",
             lambda: check_bruteforce_averages(oracle_max_c, budget)),
        ]
    return steps


def run_checks(max_c: int, oracle_max_c: int, budget: int = oracle.DEFAULT_BUDGET) -> list[CheckResult]:
    return [CheckResult(name, scope, thunk()) for name, scope, thunk in plan(max_c, oracle_max_c, budget)]
