"""Claim audit: evaluates the catalog of textbook claims on one table.

Each claim is an equation between two term sums.  The audit scans every
basis tuple in lexicographic order and records the complete list of failing
tuples with both side values; the first entry doubles as the headline
witness.  Claims whose usual statements assume a Zinbiel table are still
evaluated when the table fails its orientation check; the report is then
marked vacuous rather than suppressed.

Both orientation relations (left_relation, right_relation) are always
evaluated side by side: their usual attribution to an orientation is
contested, and the audit reports rather than decides.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import AlgebraTable
from .identities import Identity, eval_terms_raw, parse_term_sum
from .reports import Verdict, format_assignment, format_vector, vector_jsonable
from .tensors import Vector


@dataclass(frozen=True)
class ClaimSpec:
    name: str
    lhs: str
    rhs: str
    target: str  # "product" or "symmetrized product"


# Claim list, in report order.  rhs == "" means "equals zero".
CLAIMS: tuple[ClaimSpec, ...] = (
    ClaimSpec("right_zinbiel", "(x (y z))", "((x y) z) + ((y x) z)", "product"),
    ClaimSpec("left_zinbiel", "((x y) z)", "(x (y z)) + (x (z y))", "product"),
    ClaimSpec("left_relation", "(x (y z))", "(y (x z))", "product"),
    ClaimSpec("right_relation", "((x y) z)", "((x z) y)", "product"),
    ClaimSpec("derived_1", "(x (z y))", "((x z) y) + ((z x) y)", "product"),
    ClaimSpec("derived_2", "(z (x y))", "((x z) y) + ((z x) y)", "product"),
    ClaimSpec("derived_3", "(z (y x))", "((y z) x) + ((z y) x)", "product"),
    ClaimSpec("derived_4", "(x (y z))", "(y (x z))", "product"),
    ClaimSpec("aguiar_commutative", "(x y)", "(y x)", "symmetrized product"),
    ClaimSpec("aguiar_associative", "((x y) z)", "(x (y z))", "symmetrized product"),
    ClaimSpec(
        "lie_admissible",
        "(x (y z)) - (x (z y)) - ((y z) x) + ((z y) x) "
        "+ (y (z x)) - (y (x z)) - ((z x) y) + ((x z) y) "
        "+ (z (x y)) - (z (y x)) - ((x y) z) + ((y x) z)",
        "",
        "product",
    ),
    ClaimSpec(
        "center_symmetric", "((x y) z) - (x (y z))", "((z y) x) - (z (y x))", "product"
    ),
)

_ORIENTATION_CLAIM = {"right": "right_zinbiel", "left": "left_zinbiel"}


@dataclass(frozen=True)
class AuditReport:
    subject: str
    orientation: str
    vacuous: bool
    claims: tuple[Verdict, ...]

    def verdict_for(self, name: str) -> Verdict:
        for v in self.claims:
            if v.name == name:
                return v
        raise KeyError(name)


def _merge_sides(lhs_src: str, rhs_src: str):
    lhs_vars, lhs_terms = parse_term_sum(lhs_src)
    if rhs_src:
        rhs_vars, rhs_terms = parse_term_sum(rhs_src)
    else:
        rhs_vars, rhs_terms = (), ()
    seen: dict[str, None] = {}
    for name in lhs_vars + rhs_vars:
        seen.setdefault(name)
    variables = tuple(seen)
    residual_terms = lhs_terms + tuple((-c, t) for c, t in rhs_terms)
    return variables, lhs_terms, rhs_terms, residual_terms


def _failure_text(spec: ClaimSpec, assignment, lhs_val, rhs_val, residual) -> str:
    where = format_assignment(assignment)
    if not spec.rhs:
        return f"at {where}: residual = {format_vector(residual)}"
    return f"at {where}: lhs = {format_vector(lhs_val)}, rhs = {format_vector(rhs_val)}"


def evaluate_claim(table: AlgebraTable, spec: ClaimSpec, target_name: str) -> Verdict:
    """Verdict of lhs == rhs with the complete failing-tuple list attached.

    Witness text is the lexicographically first failure; witness data lists
    every failure.  The full list is what makes audit reports diffable
    evidence rather than spot checks, and these tables are small enough
    that a complete scan is cheap.
    """
    variables, lhs_terms, rhs_terms, residual_terms = _merge_sides(spec.lhs, spec.rhs)
    one = Fraction(1)
    failures = []
    headline = None
    for assignment in product(range(table.dim), repeat=len(variables)):
        env = {name: {idx: one} for name, idx in zip(variables, assignment)}
        acc = eval_terms_raw(table, residual_terms, env)
        if acc:
            lhs_val = Vector(table.dim, eval_terms_raw(table, lhs_terms, env))
            rhs_val = Vector(table.dim, eval_terms_raw(table, rhs_terms, env))
            residual = Vector(table.dim, acc)
            if headline is None:
                headline = (
                    f"at {format_assignment(assignment)}: "
                    f"lhs = {format_vector(lhs_val)}, rhs = {format_vector(rhs_val)}, "
                    f"residual = {format_vector(residual)}"
                )
            failures.append(
                {
                    "tuple": list(assignment),
                    "text": _failure_text(spec, assignment, lhs_val, rhs_val, residual),
                    "lhs": vector_jsonable(lhs_val),
                    "rhs": vector_jsonable(rhs_val),
                    "residual": vector_jsonable(residual),
                }
            )
    if not failures:
        return Verdict(spec.name, True)
    data = {
        "variables": list(variables),
        "target": target_name,
        "failure_count": len(failures),
        "failures": failures,
    }
    return Verdict(spec.name, False, headline, data)


def audit_claims(
    algebra: AlgebraTable,
    orientation: str,
    *,
    claims: list[str] | None = None,
    subject: str = "algebra",
    workers: int = 1,
) -> AuditReport:
    """Run the claim catalog against one table.

    ``orientation`` selects which Zinbiel check gates the vacuous flag; the
    gate is evaluated even when a claim filter leaves it out of the report.
    Claims are independent, so ``workers`` > 1 fans them out; the report
    order is fixed either way.
    """
    if orientation not in _ORIENTATION_CLAIM:
        raise ValueError(f"orientation must be 'left' or 'right', got {orientation!r}")
    sym = algebra.symmetrize()
    selected = [c for c in CLAIMS if claims is None or c.name in claims]
    if claims is not None:
        unknown = set(claims) - {c.name for c in CLAIMS}
        if unknown:
            raise ValueError(f"unknown claim(s): {', '.join(sorted(unknown))}")

    def run(spec: ClaimSpec) -> Verdict:
        table = sym if spec.target == "symmetrized product" else algebra
        return evaluate_claim(table, spec, spec.target)

    if workers > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, selected))
    else:
        results = [run(spec) for spec in selected]

    gate_name = _ORIENTATION_CLAIM[orientation]
    by_name = {v.name: v for v in results}
    if gate_name in by_name:
        gate_holds = by_name[gate_name].holds
    else:
        gate_holds = run(next(c for c in CLAIMS if c.name == gate_name)).holds
    return AuditReport(subject, orientation, not gate_holds, tuple(results))


def audit_report_text(report: AuditReport) -> str:
    lines = [
        f"claim audit: {report.subject}",
        f"orientation: {report.orientation}",
        f"status: {'vacuous (orientation check fails)' if report.vacuous else 'applicable'}",
    ]
    width = max((len(v.name) for v in report.claims), default=0)
    by_name = {c.name: c for c in CLAIMS}
    for v in report.claims:
        mark = "HOLDS" if v.holds else "FAILS"
        line = f"  {v.name.ljust(width)}  {mark}"
        if not v.holds and v.witness_data:
            count = v.witness_data["failure_count"]
            line += f" ({count} failing basis tuple{'s' if count != 1 else ''})"
        if by_name[v.name].target == "symmetrized product":
            line += " (on symmetrized product)"
        lines.append(line)
        if not v.holds and v.witness_data:
            for failure in v.witness_data["failures"]:
                lines.append(f"      {failure['text']}")
    return "\n".join(lines) + "\n"


def audit_report_jsonable(report: AuditReport) -> dict:
    return {
        "kind": "audit_report",
        "subject": report.subject,
        "orientation": report.orientation,
        "vacuous": report.vacuous,
        "claims": [
            {
                "claim": v.name,
                "verdict": "holds" if v.holds else "fails",
                "witness": v.witness_data,
            }
            for v in report.claims
        ],
    }
