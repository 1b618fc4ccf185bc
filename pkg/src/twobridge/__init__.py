"""Unoriented genus and crosscap number of 2-bridge knots and links.

Modules:

* :mod:`twobridge.cf` -- continued fractions and fraction bookkeeping
* :mod:`twobridge.invariants` -- genus and crosscap number from continued fractions
* :mod:`twobridge.oracle` -- exhaustive Kauffman-state sweep on the 4-plat diagram
* :mod:`twobridge.census` -- tuple families and the bijections between them
* :mod:`twobridge.formulas` -- closed forms, recursions and averages
* :mod:`twobridge.verify` -- the full identity check behind ``twobridge verify``
"""
from .cf import (
    ContinuedFractionError,
    LinkClass,
    classify,
    crossing_number,
    is_equivalent,
    normalize,
    parse_fraction,
    to_even_subtractive,
    to_positive_additive,
    to_positive_subtractive,
)
from .invariants import InvariantReport, compute_wz, crosscap_knot, formula_report, unoriented_genus
from .oracle import BudgetExceeded, OracleResult, build_diagram, diagram_for, oracle_invariants
from .formulas import average_crosscap, average_unoriented, epsilon1, epsilon2, ernst_sumners

__version__ = "0.1.0"
