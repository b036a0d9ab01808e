"""Task dispatch: execute a parsed problem and assemble its report.

Tasks run in declared order. A precondition violation in one task is
recorded as a structured error without aborting the remaining tasks; an
internal consistency failure is likewise recorded and dominates the exit
code. Exit codes: 0 all ok, 3 some precondition violation, 4 some
internal-consistency failure.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .cech import (
    chamber_decomposition,
    cd_vs_dim,
    iterated_cohomology_check,
    koszul_colimit_check,
    local_cohomology_report,
)
from .duality import injective_hull_check, top_nonvanishing_criterion
from .errors import InternalConsistencyError, LclabError, PreconditionError
from .monomial import MonomialIdeal, MonomialSequence, is_regular_sequence
from .problem import Problem, parse_monomial, render_monomial
from .report import report_skeleton
from .semigroup import (
    converse_search,
    fraction_field_membership,
    saturation_check,
    saturation_criterion_check,
)
from .verify import run_battery

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


def _sequence_of(problem: Problem) -> MonomialSequence:
    if not problem.sequence:
        raise PreconditionError("this task needs a nonempty sequence")
    return MonomialSequence(problem.sequence)


def _task_local_cohomology(problem, field, opts):
    ideal = problem.ideal()
    seq = _sequence_of(problem)
    cap = opts.get("chamber_cap", 10**6)
    decomp = chamber_decomposition(ideal, seq, field, cap)
    report = local_cohomology_report(ideal, seq, field, cap)
    chambers = []
    for ch in decomp.chambers:
        intervals = [
            list(decomp.interval_bounds(c, k)) for c, k in enumerate(ch.index)
        ]
        chambers.append({"intervals": intervals, "dims": list(ch.dims)})
    return {
        "cd": report.cd,
        "verdicts": [
            {
                "j": v.j,
                "nonzero": v.nonzero,
                "witness": list(v.witness) if v.witness else None,
            }
            for v in report.verdicts
        ],
        "chambers": chambers,
    }


def _task_cd_vs_dim(problem, field, opts):
    cd, dim, equal = cd_vs_dim(problem.ideal(), field)
    return {"cd": cd, "dim": dim, "equal": equal}


def _task_koszul_limit(problem, field, opts):
    agrees = koszul_colimit_check(
        problem.ideal(), _sequence_of(problem), problem.box_radius, field
    )
    return {"agrees": agrees, "box_radius": problem.box_radius}


def _task_composite(problem, field, opts):
    seq = _sequence_of(problem)
    split = opts.get("composite_split", seq.length)
    if not 1 <= split <= seq.length:
        raise PreconditionError(
            f"composite_split must be in 1..{seq.length}, got {split}"
        )
    inner = MonomialSequence(seq.items[:split])
    outer = seq.items[split:]
    agrees = iterated_cohomology_check(
        problem.ideal(), inner, outer, problem.box_radius, field
    )
    return {
        "agrees": agrees,
        "split": split,
        "box_radius": problem.box_radius,
    }


def _task_lemma1(problem, field, opts):
    rep = top_nonvanishing_criterion(problem.ideal(), _sequence_of(problem), field)
    return {
        "applicable": rep.applicable,
        "h_nonzero": rep.h_nonzero,
        "rank": rep.rank,
        "rank_ok": rep.rank_ok,
        "hom_nonzero": rep.hom_nonzero,
        "equivalence_holds": rep.equivalence_holds,
    }


def _task_theorem2(problem, field, opts):
    if not problem.ideal().is_zero():
        raise PreconditionError(
            "theorem2 requires the zero ideal (the ring must be a domain)"
        )
    rep = saturation_criterion_check(problem.n, _sequence_of(problem), field)
    return {
        "h_nonzero": rep.h_nonzero,
        "rank": rep.rank,
        "rank_ok": rep.rank_ok,
        "saturated": rep.saturated,
        "witness": list(rep.witness) if rep.witness else None,
        "implication_holds": rep.implication_holds,
    }


def _task_saturation(problem, field, opts):
    seq = _sequence_of(problem)
    rep = saturation_check(
        seq.exponent_matrix(), hilbert_cap=opts.get("hilbert_cap", 10**4)
    )
    return {
        "rank": rep.rank,
        "dim_subring": rep.dim_subring,
        "saturated": rep.saturated,
        "witness": list(rep.witness) if rep.witness else None,
        "hilbert_basis": [list(b) for b in rep.hilbert_basis],
    }


def _task_regular_sequence(problem, field, opts):
    regular = is_regular_sequence(_sequence_of(problem), problem.ideal())
    return {"regular": regular}


def _task_fraction_field(problem, field, opts):
    seq = _sequence_of(problem)
    if "polynomial" not in opts:
        raise PreconditionError(
            "fraction_field needs options.polynomial"
        )
    poly = [
        (
            parse_monomial(mono, problem.variables, "options.polynomial").exps,
            Fraction(coeff),
        )
        for mono, coeff in opts["polynomial"]
    ]
    bound = opts.get("degree_bound", 3)
    res = fraction_field_membership(poly, seq.exponent_matrix(), bound)
    witness = None
    if res.witness is not None:
        witness = [
            [
                render_monomial_from_exps(e, problem.variables),
                str(c),
            ]
            for e, c in res.witness
        ]
    return {"verdict": res.verdict, "witness": witness, "degree_bound": bound}


def render_monomial_from_exps(exps, variables):
    from .monomial import Monomial

    return render_monomial(Monomial(tuple(exps)), variables)


def _task_a2_check(problem, field, opts):
    i = opts.get("a2_i", min(problem.n, 3))
    holds = injective_hull_check(i, min(problem.box_radius, 3), field)
    return {"i": i, "holds": holds}


def _task_converse_search(problem, field, opts):
    n = opts.get("converse_n", problem.n)
    max_degree = opts.get("converse_max_degree", 2)
    max_i = opts.get("converse_max_i", 2)
    found = converse_search(n, max_degree, max_i, field)
    return {
        "n": n,
        "max_degree": max_degree,
        "max_i": max_i,
        "candidates": [
            {
                "sequence": [list(e) for e in exps],
                "rank": rep.rank,
                "saturated": rep.saturated,
                "h_nonzero": rep.h_nonzero,
            }
            for exps, rep in found
        ],
    }


_TASKS = {
    "local_cohomology": _task_local_cohomology,
    "cd_vs_dim": _task_cd_vs_dim,
    "koszul_limit": _task_koszul_limit,
    "composite": _task_composite,
    "lemma1": _task_lemma1,
    "theorem2": _task_theorem2,
    "saturation": _task_saturation,
    "regular_sequence": _task_regular_sequence,
    "fraction_field": _task_fraction_field,
    "a2_check": _task_a2_check,
    "converse_search": _task_converse_search,
}


def run(problem: Problem, seed: int = 0, with_timings: bool = False):
    """Execute all tasks; returns (report dict, exit code)."""
    field = problem.field()
    report = report_skeleton(field.describe(), seed)
    report["problem"] = problem.to_dict()
    results = []
    exit_code = EXIT_OK
    opts = problem.options_dict()
    for task in problem.tasks:
        entry = {"task": task}
        started = time.monotonic()
        try:
            entry["status"] = "ok"
            entry["data"] = _TASKS[task](problem, field, opts)
        except InternalConsistencyError as exc:
            entry["status"] = "internal-error"
            entry["error"] = {"kind": "internal", "message": str(exc)}
            exit_code = EXIT_INTERNAL
        except PreconditionError as exc:
            entry["status"] = "precondition-error"
            entry["error"] = {"kind": "precondition", "message": str(exc)}
            if exit_code != EXIT_INTERNAL:
                exit_code = EXIT_PRECONDITION
        if with_timings:
            entry["timing_ms"] = round(
                (time.monotonic() - started) * 1000, 3
            )
        results.append(entry)
    report["results"] = results
    return report, exit_code


def run_verification(seed: int = 0, field_desc: str = "rational",
                     quick: bool = False):
    """Run the battery; returns (report dict, exit code)."""
    from .fields import field_from_spec

    field = field_from_spec(field_desc)
    checks = run_battery(seed=seed, quick=quick, field=field)
    all_passed = all(c.passed for c in checks)
    report = report_skeleton(field.describe(), seed)
    report["checks"] = [c.as_dict() for c in checks]
    report["all_passed"] = all_passed
    return report, (EXIT_OK if all_passed else 1)
