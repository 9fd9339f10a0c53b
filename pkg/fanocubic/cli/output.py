"""
Report rendering
~~~~~~~~~~~~~~~~

Reports are odin resources; JSON output goes through the odin JSON codec
and tables through a renderer registered per resource type.

"""
from odin.codecs import json_codec
from typing import Any, Callable, Dict, Iterable, Tuple, Type, Union

from ..constants import OutputFormat
from ..hodge import HodgeDiamond, fano_hodge_summands, render_diamond
from ..resources import (
    DecomposabilityReport,
    ErrorReport,
    HodgeReport,
    ReportCollection,
    SymbolicReport,
    VerificationReport,
    ZetaReport,
)

Renderer = Callable[[Any], str]

RENDERERS: Dict[Type, Renderer] = {}


def renderer(resource_type: Type) -> Callable[[Renderer], Renderer]:
    """
    Register the table renderer of a resource type.
    """
    def inner(func: Renderer) -> Renderer:
        RENDERERS[resource_type] = func
        return func
    return inner


def render(report: Any, output_format: Union[OutputFormat, str]=OutputFormat.Table) -> str:
    if OutputFormat(output_format) is OutputFormat.Json:
        return json_codec.dumps(report, include_type_field=False, indent=2, sort_keys=True) + '\n'
    try:
        func = RENDERERS[type(report)]
    except KeyError:
        return f"{report}\n"
    return func(report)


def key_values(pairs: Iterable[Tuple[str, Any]], indent: str='') -> str:
    pairs = [(k, v) for k, v in pairs if v is not None]
    width = max((len(k) for k, _ in pairs), default=0)
    return ''.join(f"{indent}{k.ljust(width)}  {v}\n" for k, v in pairs)


@renderer(VerificationReport)
def render_verification(report: VerificationReport) -> str:
    output = key_values((
        ('relation', report.relation),
        ('formula', report.formula),
        ('cubic', report.cubic),
        ('field', f"F_{report.prime}" if report.prime else None),
        ('dimension', report.dimension),
        ('lhs', report.lhs),
        ('rhs', report.rhs),
    ))
    if report.breakdown:
        output += "breakdown\n" + key_values(report.breakdown.items(), indent='  ')
    if report.environment:
        output += key_values((('environment', report.environment),))
    for note in report.notes or ():
        output += f"note  {note}\n"
    return output + key_values((('verdict', report.verdict),))


@renderer(ReportCollection)
def render_collection(report: ReportCollection) -> str:
    parts = [f"{report.title}\n"]
    parts.extend(render_verification(r) for r in report.reports)
    parts.append(f"verdict  {report.verdict}\n")
    return '\n'.join(parts)


@renderer(DecomposabilityReport)
def render_decomposability(report: DecomposabilityReport) -> str:
    output = key_values((
        ('Psi', report.psi),
        ('h^{1,1}', report.h11),
        ('factorizations', ', '.join(report.factorizations or ()) or 'none'),
        ('Sym^2 curve genus', report.genus),
        ('Sym^2 curve h^{1,1}', report.sym2_h11),
        ('Hilb^2 candidate', report.hilb2_candidate),
    ))
    for note in report.notes or ():
        output += f"note  {note}\n"
    return output + key_values((('verdict', report.verdict),))


@renderer(HodgeReport)
def render_hodge(report: HodgeReport) -> str:
    d = report.dimension
    cubic = HodgeDiamond.from_json(report.cubic)
    fano = HodgeDiamond.from_json(report.fano)
    parts = [
        f"Smooth cubic {d}-fold Y\n",
        render_diamond(cubic),
        f"Fano variety of lines F(Y), dimension {2 * d - 4}\n",
        render_diamond(fano, fano_hodge_summands(d)),
        key_values((
            ('Psi(Y)', report.cubic_psi),
            ('Psi(F(Y))', report.fano_psi),
            ('betti(Y)', ' '.join(map(str, report.cubic_betti))),
            ('betti(F(Y))', ' '.join(map(str, report.fano_betti))),
            ('chi(Y)', report.cubic_euler),
            ('chi(F(Y))', f"{report.fano_euler} (from chi(Y): {report.euler_formula})"),
        )),
    ]
    if report.decomposability:
        parts.append("Product screens\n" + render_decomposability(report.decomposability))
    return '\n'.join(parts)


@renderer(SymbolicReport)
def render_symbolic(report: SymbolicReport) -> str:
    lines = []
    for case in report.cases:
        lines.append(f"{case['verdict']:<4}  {case['identity']} [{case['case']}]")
        if case['verdict'] != 'pass':
            lines.append(f"      lhs = {case['lhs']}")
            lines.append(f"      rhs = {case['rhs']}")
    lines.append(f"{report.suite}: {report.passed} passed, {report.failed} failed")
    lines.append(f"verdict  {report.verdict}")
    return '\n'.join(lines) + '\n'


@renderer(ZetaReport)
def render_zeta(report: ZetaReport) -> str:
    header = key_values((
        ('cubic', report.cubic),
        ('field', f"F_{report.prime}"),
        ('dimension', report.dimension),
    ))
    rows = [('m', 'N_m', '#Sym^m')]
    rows += [(str(m), str(n), str(s))
             for m, (n, s) in enumerate(zip(report.point_counts, report.sym_counts), start=1)]
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    table = ''.join(' | '.join(c.rjust(w) for c, w in zip(row, widths)) + '\n' for row in rows)
    checks = ''
    for check in report.checks:
        label = check.relation
        if check.breakdown and 'm' in check.breakdown:
            label += f" m={check.breakdown['m']}"
        checks += f"{check.verdict:<4}  {label}: {check.lhs} = {check.rhs}\n"
    return header + table + checks + f"verdict  {report.verdict}\n"


@renderer(ErrorReport)
def render_error(report: ErrorReport) -> str:
    return f"error: {report.message}\n"
