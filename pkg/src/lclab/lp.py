"""Exact rational linear-inequality feasibility via Fourier-Motzkin.

Problem sizes here are tiny (at most a handful of variables), so the
doubly-exponential worst case of elimination never bites, and everything
stays in exact ``Fraction`` arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def rational_feasible(inequalities, n_vars: int) -> bool:
    """Decide whether {x in Q^n : c . x >= rhs for all (c, rhs)} is nonempty.

    Each inequality is a pair (coefficients, rhs); all comparisons are
    non-strict. Equalities should be passed as two opposite inequalities.
    """
    rows = [
        ([Fraction(c) for c in coeffs], Fraction(rhs))
        for coeffs, rhs in inequalities
    ]
    for var in range(n_vars):
        lowers = []  # x_var >= value(rest)
        uppers = []  # x_var <= value(rest)
        keep = []
        for coeffs, rhs in rows:
            c = coeffs[var]
            if c == 0:
                keep.append((coeffs, rhs))
                continue
            scaled = ([x / abs(c) for x in coeffs], rhs / abs(c))
            if c > 0:
                lowers.append(scaled)
            else:
                uppers.append(scaled)
        for lo_c, lo_r in lowers:
            for up_c, up_r in uppers:
                coeffs = [a + b for a, b in zip(lo_c, up_c)]
                coeffs[var] = Fraction(0)
                keep.append((coeffs, lo_r + up_r))
        rows = keep
    return all(rhs <= 0 for _, rhs in rows)


def cone_membership(generators, target) -> bool:
    """Is ``target`` a nonnegative rational combination of ``generators``?"""
    if not generators:
        return all(x == 0 for x in target)
    m = len(generators)
    n = len(target)
    ineqs = []
    for j in range(m):
        coeffs = [Fraction(0)] * m
        coeffs[j] = Fraction(1)
        ineqs.append((coeffs, Fraction(0)))
    for c in range(n):
        coeffs = [Fraction(g[c]) for g in generators]
        ineqs.append((coeffs, Fraction(target[c])))
        ineqs.append(([-x for x in coeffs], Fraction(-target[c])))
    return rational_feasible(ineqs, m)
