import odin

from odin.exceptions import NON_FIELD_ERRORS, ValidationError
from odin.utils import field_iter, field_iter_items
from typing import Any, Dict, List, Mapping, Sequence

from .constants import ExitCode, OutputFormat, Parity, Relation, Verdict
from .utils.sequences import dict_filter


def _choices(enum_type) -> tuple:
    return tuple((m.value, m.value) for m in enum_type)


class VerificationReport(odin.Resource):
    """
    A relation checked on concrete data: both sides and the verdict.
    """
    relation = odin.StringField(choices=_choices(Relation), verbose_name="Relation checked")
    formula = odin.StringField(null=True, verbose_name="Human readable relation")
    cubic = odin.StringField(null=True, verbose_name="Cubic identifier")
    prime = odin.IntegerField(null=True, verbose_name="Base field order")
    dimension = odin.IntegerField(null=True, verbose_name="Hypersurface dimension")
    lhs = odin.StringField(verbose_name="Left hand side")
    rhs = odin.StringField(verbose_name="Right hand side")
    breakdown = odin.DictField(null=True, verbose_name="Per-term values")
    environment = odin.DictField(null=True, verbose_name="Realization environment")
    verdict = odin.StringField(choices=_choices(Verdict), verbose_name="pass iff lhs == rhs")
    wall_time = odin.FloatField(null=True, verbose_name="Seconds spent computing")
    notes = odin.ListField(null=True, verbose_name="Caveats")

    @classmethod
    def compare(cls, relation: Relation, lhs: Any, rhs: Any, **kwargs) -> 'VerificationReport':
        """
        Build a report for `relation`; the verdict is pass iff lhs == rhs.
        """
        return cls(
            relation=relation.value,
            formula=relation.formula,
            lhs=str(lhs),
            rhs=str(rhs),
            verdict=(Verdict.Pass if lhs == rhs else Verdict.Fail).value,
            **kwargs
        )

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.Pass.value


class DecomposabilityReport(odin.Resource):
    """
    Numeric screens on a Psi-polynomial ruling out product decompositions.
    """
    dimension = odin.IntegerField()
    psi = odin.StringField(verbose_name="Psi-polynomial")
    h11 = odin.IntegerField(null=True)
    factorizations = odin.ListField(null=True, verbose_name="Nontrivial factorizations found")
    genus = odin.IntegerField(null=True, verbose_name="Genus of a Sym^2 of a curve candidate")
    sym2_h11 = odin.IntegerField(null=True, verbose_name="h^{1,1} of Sym^2 of that curve")
    hilb2_candidate = odin.DictField(null=True, verbose_name="Hilb^2 of a surface candidate")
    notes = odin.ListField(null=True)
    verdict = odin.StringField(choices=_choices(Verdict))


class HodgeReport(odin.Resource):
    """
    Hodge numbers of a smooth cubic d-fold and its Fano variety of lines.
    """
    dimension = odin.IntegerField()
    cubic = odin.DictField(verbose_name="h^{p,q} of Y keyed by 'p,q'")
    fano = odin.DictField(verbose_name="h^{p,q} of F(Y) keyed by 'p,q'")
    cubic_betti = odin.ListField()
    fano_betti = odin.ListField()
    cubic_euler = odin.IntegerField()
    fano_euler = odin.IntegerField()
    euler_formula = odin.IntegerField(verbose_name="chi(F) from chi(Y)")
    cubic_psi = odin.StringField()
    fano_psi = odin.StringField()
    decomposability = odin.DictAs(DecomposabilityReport, null=True, verbose_name="Product screens on Psi(F(Y))")


class SymbolicReport(odin.Resource):
    """
    Outcome of an identity suite run.
    """
    suite = odin.StringField()
    cases = odin.ListField(verbose_name="Identity cases with both sides")
    passed = odin.IntegerField()
    failed = odin.IntegerField()
    verdict = odin.StringField(choices=_choices(Verdict))


class ZetaReport(odin.Resource):
    """
    Hasse-Weil truncation with its brute-force cross-checks.
    """
    cubic = odin.StringField()
    prime = odin.IntegerField()
    dimension = odin.IntegerField()
    order = odin.IntegerField()
    point_counts = odin.ListField(verbose_name="N_1 .. N_order")
    sym_counts = odin.ListField(verbose_name="#Sym^m Y(F_q), m = 1 .. order")
    checks = odin.ArrayOf(VerificationReport, verbose_name="Cross-check reports")
    verdict = odin.StringField(choices=_choices(Verdict))


class ReportCollection(odin.Resource):
    """
    Several verification reports from one run.
    """
    title = odin.StringField()
    reports = odin.ArrayOf(VerificationReport)
    verdict = odin.StringField(choices=_choices(Verdict))

    @classmethod
    def of(cls, title: str, reports: Sequence[VerificationReport]) -> 'ReportCollection':
        passed = all(r.passed for r in reports)
        return cls(title=title, reports=list(reports), verdict=(Verdict.Pass if passed else Verdict.Fail).value)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.Pass.value


class ErrorReport(odin.Resource):
    """
    Standard error output
    """
    exit_code = odin.IntegerField(verbose_name="Process exit code")
    error = odin.StringField(verbose_name="Error type")
    message = odin.StringField(verbose_name="End user message")
    meta = odin.DictField(verbose_name="Error specific metadata", null=True)

    @classmethod
    def from_exception(cls, exception: BaseException, exit_code: ExitCode=ExitCode.InvalidInput, *,
                       meta: Dict[str, Any]=None) -> 'ErrorReport':
        if isinstance(exception, ValidationError):
            message = '; '.join(str(m) for m in _validation_messages(exception))
        else:
            message = str(exception)
        return cls(
            exit_code=int(exit_code),
            error=type(exception).__name__,
            message=message or type(exception).__name__,
            meta=meta,
        )


def _validation_messages(error: ValidationError) -> List[str]:
    if hasattr(error, 'message_dict'):
        return [f"{key}: {', '.join(map(str, values))}" if key != NON_FIELD_ERRORS else ', '.join(map(str, values))
                for key, values in error.message_dict.items()]
    return list(error.messages)


class RunConfig(odin.Resource):
    """
    Validated command line options.
    """
    subcommand = odin.StringField()
    prime = odin.IntegerField(null=True, min_value=2)
    dimension = odin.IntegerField(null=True, min_value=1)
    named = odin.StringField(null=True)
    file = odin.StringField(null=True)
    random = odin.BooleanField(default=False)
    smooth = odin.BooleanField(default=False)
    seed = odin.IntegerField(null=True)
    output_format = odin.StringField(choices=_choices(OutputFormat), default=OutputFormat.Table.value)
    order = odin.IntegerField(default=2, min_value=1)
    threads = odin.IntegerField(default=1, min_value=1)
    chi = odin.IntegerField(null=True)
    sing = odin.IntegerField(default=0)
    chi_r = odin.IntegerField(null=True)
    chi_c = odin.IntegerField(null=True)
    parity = odin.StringField(null=True, choices=_choices(Parity))
    chi_r_sing = odin.IntegerField(default=0)
    suite = odin.StringField(null=True)
    samples = odin.IntegerField(default=200, min_value=1)
    verbose = odin.IntegerField(default=0, min_value=0)

    geometric_subcommands = ('lines', 'verify', 'zeta')

    @classmethod
    def from_options(cls, subcommand: str, options: Mapping[str, Any]) -> 'RunConfig':
        """
        Build from parsed options; options without a matching field are
        ignored and unset ones take the field default.
        """
        values = dict_filter({f.name: options.get(f.name) for f in field_iter(cls)}, subcommand=subcommand)
        return cls(**values)

    def clean(self) -> None:
        if self.subcommand in self.geometric_subcommands:
            sources = [s for s in (self.named, self.file, self.random or None) if s]
            if len(sources) != 1:
                raise ValidationError("Exactly one cubic source is required: --named, --file or --random")
            if self.file is None and (self.prime is None or self.dimension is None):
                raise ValidationError("--p and --dim are required unless reading a cubic file")
            if (self.random or self.named == 'random') and self.seed is None:
                raise ValidationError("--random requires --seed")
        elif self.subcommand == 'hodge':
            if self.dimension is None or self.dimension < 2:
                raise ValidationError("hodge requires --dim >= 2")
        elif self.subcommand == 'euler':
            if self.chi is None:
                raise ValidationError("euler requires --chi")
        elif self.subcommand == 'real':
            if self.chi_r is None or self.chi_c is None or self.parity is None:
                raise ValidationError("real requires --chiR, --chiC and --parity")

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: value for f, value in field_iter_items(self)}
