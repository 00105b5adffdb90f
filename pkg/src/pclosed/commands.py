"""Command dispatch: deterministic text reports and exit codes.

Exit codes: 0 success, 1 parse/usage error, 2 mathematical failure
(e.g. a non-principal extension, a failed structural check), 3 budget
exceeded.  Reports are `key = value` lines followed by rendered lists,
byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import assoc as assocmod
from . import picard as picardmod
from . import solutions as solmod
from .field import FieldCtx
from .foliation import Foliation, foliation_closure, foliation_of_subalgebra
from .poly import Poly, Ring, monomial_basis_leq
from .problem import ParseError, Problem, parse_problem, parse_poly

COMMANDS = ("closure", "pi", "check", "assoc", "bound", "theta", "selftest")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_BUDGET = 3


@dataclass
class RunResult:
    report: str
    exit_code: int


class UsageError(Exception):
    pass


def run(command: str, problem_text=None, expr=None, max_deg=None) -> RunResult:
    """Execute a command against a problem file's text."""
    try:
        if command not in COMMANDS:
            raise UsageError(f"unknown command {command!r}")
        if command == "selftest":
            return _selftest()
        if problem_text is None:
            raise UsageError(f"command {command!r} needs a problem file")
        problem = parse_problem(problem_text)
        if max_deg is not None:
            problem.max_deg = int(max_deg)
        handler = {
            "closure": _closure,
            "pi": _pi,
            "check": _check,
            "assoc": _assoc,
            "bound": _bound,
            "theta": _theta,
        }[command]
        return handler(problem, expr)
    except (ParseError, UsageError) as exc:
        return RunResult(f"error = {exc}\n", EXIT_USAGE)
    except solmod.BudgetExceeded as exc:
        return RunResult(f"error = {exc}\n", EXIT_BUDGET)
    except (
        picardmod.PicardError,
        solmod.SolutionError,
        assocmod.AssocError,
    ) as exc:
        return RunResult(f"error = {exc}\n", EXIT_MATH)


def _seed_foliation(problem: Problem) -> Foliation:
    if not problem.derivations:
        raise UsageError("problem declares no derivations")
    return foliation_closure(list(problem.derivations.values()))


def _render_class(coords) -> str:
    return "(" + ", ".join(str(c) for c in coords) + ")"


def _closure(problem: Problem, expr) -> RunResult:
    fol = _seed_foliation(problem)
    lines = [
        "command = closure",
        f"closure_rank_gens = {fol.rank_gens()}",
        "generators:",
    ]
    lines += [f"  {d.render()}" for d in fol.gens]
    lines.append("p_power_coeffs:")
    for i, row in enumerate(fol.p_coeffs, start=1):
        lines.append(f"  row_{i} = " + "; ".join(c.render() for c in row))
    return RunResult("\n".join(lines) + "\n", EXIT_OK)


def _pi_data(problem: Problem, fol: Foliation):
    sols = solmod.enumerate_solutions(fol, problem.max_deg, problem.budget)
    basis = solmod.pi_basis(fol, sols)
    bound = solmod.pi_dim_bound(fol)
    return sols, basis, bound


def _pi(problem: Problem, expr) -> RunResult:
    fol = _seed_foliation(problem)
    sols, basis, bound = _pi_data(problem, fol)
    lines = [
        "command = pi",
        f"max_deg = {problem.max_deg}",
        f"solutions_enumerated = {len(sols)}",
        f"dim_Pi_lower = {basis.dim}",
        f"dim_Pi_upper = {bound}",
        f"exact = {'true' if basis.dim == bound else 'false'}",
        "basis: " + (", ".join(f.render() for f in basis.reps) if basis.reps else "-"),
    ]
    return RunResult("\n".join(lines) + "\n", EXIT_OK)


def _check(problem: Problem, expr) -> RunResult:
    if not expr:
        raise UsageError("check needs an expression")
    f = parse_poly(expr, problem.ring)
    if f.is_zero():
        raise UsageError("check needs a nonzero polynomial")
    fol = _seed_foliation(problem)
    lv = solmod.is_algebraic_solution(f, fol)
    lines = [
        "command = check",
        f"input = {f.render()}",
        f"first_integral = {'true' if solmod.is_first_integral(f, fol) else 'false'}",
        f"algebraic_solution = {'true' if lv is not None else 'false'}",
    ]
    if lv is not None:
        lines.append(f"l_vector = {lv.render()}")
    return RunResult("\n".join(lines) + "\n", EXIT_OK)


def _assoc(problem: Problem, expr) -> RunResult:
    fol = _seed_foliation(problem)
    _, basis, _ = _pi_data(problem, fol)
    aset = assocmod.associated_polynomials(fol, basis)
    report = assocmod.verify_structure(fol, basis)
    lines = [
        "command = assoc",
        f"s = {basis.dim}",
    ]
    for i, poly in enumerate(aset.polys, start=1):
        lines.append(f"P_{i} = {poly.render()}")
    lines += [
        f"check_closed_form = {'pass' if report.closed_form_ok else 'fail'}",
        f"check_vanishing = {'pass' if report.vanishing_ok else 'fail'}",
        f"check_iterate_identity = {'pass' if report.iterate_identity_ok else 'fail'}",
        f"check_p_power_identity = "
        f"{'pass' if report.p_power_identity_ok else 'fail'}",
    ]
    code = EXIT_OK if report.passed else EXIT_MATH
    return RunResult("\n".join(lines) + "\n", code)


def _bound(problem: Problem, expr) -> RunResult:
    fol = _seed_foliation(problem)
    lines = [
        "command = bound",
        f"closure_rank_gens = {fol.rank_gens()}",
    ]
    for i, d in enumerate(fol.gens, start=1):
        deg = d.degree()
        lines.append(f"deg_gen_{i} = {int(deg) if deg != float('-inf') else '-inf'}")
    lines.append(f"pi_dim_bound = {solmod.pi_dim_bound(fol)}")
    return RunResult("\n".join(lines) + "\n", EXIT_OK)


def _theta(problem: Problem, expr) -> RunResult:
    if not problem.subalgebra:
        raise UsageError("theta needs a subalgebra line")
    if not problem.ideal:
        raise UsageError("theta needs an ideal line")
    fol = foliation_of_subalgebra(problem.ring, problem.subalgebra)
    _, basis, bound = _pi_data(problem, fol)
    prob = picardmod.SandwichProblem(problem.subalgebra, fol, basis)
    ideal = picardmod.FractionalIdeal(problem.ideal)
    gen = picardmod.extend_and_principalize(ideal, fol)
    if gen is None:
        raise picardmod.NotPrincipal("extension to A is not principal")
    coords = solmod.pi_class(gen, basis)
    nonzero = any(coords)
    lines = [
        "command = theta",
        f"f_b_rank_gens = {fol.rank_gens()}",
        f"dim_Pi_lower = {basis.dim}",
        f"dim_Pi_upper = {bound}",
        f"dim_ker_pi_bound = {basis.dim}",
        f"principal_generator = {gen.render()}",
        f"theta_class = {_render_class(coords)}",
        f"theta_status = {'nonzero' if nonzero else 'zero'}",
    ]
    return RunResult("\n".join(lines) + "\n", EXIT_OK)


# --- built-in selftest ---

SELFTEST_6_1_CASE1 = """\
field p=2 ext=1
ring x,y
deriv D = x ; y
option max_deg=3
"""

SELFTEST_6_1_CASE2 = """\
field p=2 ext=2 modulus=1,1,1
ring x,y
deriv D = x ; g*y
option max_deg=2
"""

SELFTEST_6_2 = """\
field p=2 ext=1
ring x,y
deriv D = x^2 ; 1
subalgebra = x^2, y^2, x + x^2*y
ideal = x^2, x + x^2*y
option max_deg=3
"""


def _selftest() -> RunResult:
    checks = []

    def record(name, ok):
        checks.append((name, ok))

    res = run("pi", SELFTEST_6_1_CASE1)
    record(
        "pi_rational_slope",
        res.exit_code == 0
        and "dim_Pi_lower = 1" in res.report
        and "dim_Pi_upper = 1" in res.report,
    )
    res = run("pi", SELFTEST_6_1_CASE2)
    record(
        "pi_irrational_slope",
        res.exit_code == 0
        and "dim_Pi_lower = 2" in res.report
        and "dim_Pi_upper = 2" in res.report,
    )
    res = run("closure", SELFTEST_6_1_CASE2)
    record("closure_diagonal", res.exit_code == 0 and "closure_rank_gens = 2" in res.report)
    res = run("theta", SELFTEST_6_2)
    record(
        "theta_nontrivial_class",
        res.exit_code == 0
        and "theta_class = (1)" in res.report
        and "theta_status = nonzero" in res.report,
    )
    res = run("assoc", SELFTEST_6_2)
    record("assoc_structure", res.exit_code == 0)

    # vanishing-decomposition round trip on a few random coefficient tuples
    rng = random.Random(20260823)
    ok = True
    for p in (2, 3):
        ctx = FieldCtx(p, 1)
        base = Ring(ctx, ("x", "y"))
        for s in (1, 2):
            ext = base.with_aux(s)
            coeffs = [_random_poly(rng, ext, 2) for _ in range(s)]
            target = ext.zero()
            for alpha, a in enumerate(coeffs):
                unit = [0] * ext.nvars
                unit[ext.n + alpha] = 1
                t = ext.monomial(tuple(unit))
                target = target + a * (t**p - t)
            got = assocmod.decompose_vanishing(target)
            if got != coeffs:
                ok = False
    record("vanishing_decomposition", ok)

    lines = ["command = selftest"]
    all_ok = True
    for name, passed in checks:
        lines.append(f"{name} = {'pass' if passed else 'fail'}")
        all_ok = all_ok and passed
    lines.append(f"selftest = {'pass' if all_ok else 'fail'}")
    return RunResult("\n".join(lines) + "\n", EXIT_OK if all_ok else EXIT_MATH)


def _random_poly(rng, ring: Ring, max_deg: int) -> Poly:
    monos = monomial_basis_leq(ring, max_deg)
    terms = {}
    for m in monos:
        if rng.random() < 0.4:
            c = rng.choice(ring.ctx.elements)
            if c:
                terms[m] = c
    return Poly(ring, terms)
