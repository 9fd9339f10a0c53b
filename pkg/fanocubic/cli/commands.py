"""
Sub-commands
~~~~~~~~~~~~

Exit codes: 0 when every check passes, 1 on invalid input and 2 when a
relation fails to hold.

"""
import logging

from typing import List, Tuple

from .containers import CommandCollection
from .decorators import cubic_source, option
from ..constants import Parity, Verdict
from ..exceptions import InvalidCubic, VerificationFailed
from ..forms import CubicForm, load_cubic, named_cubic
from ..geometry import (
    SMOOTHNESS_CAVEAT,
    brute_force_counts,
    random_cubic,
    verify_line_count,
    verify_sym_counting,
    verify_yfy_counting,
    zeta_report,
)
from ..motivic.identities import SUITE, suite_report
from ..realizations import euler_fano_report, hodge_report, real_euler_fano_report
from ..resources import ReportCollection, RunConfig

logger = logging.getLogger(__name__)

commands = CommandCollection(name='commands')


def resolve_cubic(config: RunConfig) -> Tuple[CubicForm, List[str]]:
    """
    The cubic selected by the source options, with any caveats to report.
    """
    notes = []
    if config.file:
        f = load_cubic(config.file)
        for given, actual, flag in ((config.prime, f.p, '--p'), (config.dimension, f.dim, '--dim')):
            if given is not None and given != actual:
                raise InvalidCubic(f"{flag} {given} does not match the cubic file ({actual})")
    elif config.random or config.named == 'random':
        f = random_cubic(config.dimension, config.prime, config.seed, smooth=config.smooth)
        if config.smooth:
            notes.append(SMOOTHNESS_CAVEAT)
    else:
        f = named_cubic(config.named, config.dimension, config.prime)
    logger.info("Cubic %s over F_%d: %s", f.label, f.p, f)
    return f, notes


def conclude(report):
    """
    Return a passing report; raise with it otherwise.
    """
    if report.verdict != Verdict.Pass.value:
        raise VerificationFailed(report)
    return report


@commands.command
@cubic_source
def lines(config: RunConfig):
    """
    Enumerate lines on Y and compare with the count predicted from N1, N2, Ns.
    """
    f, notes = resolve_cubic(config)
    return conclude(verify_line_count(f, threads=config.threads, notes=notes))


@commands.command
@cubic_source
def verify(config: RunConfig):
    """
    Check the Hilb^2 and Sym^2 counting relations by brute force.
    """
    f, notes = resolve_cubic(config)
    counts = brute_force_counts(f, threads=config.threads)
    return conclude(ReportCollection.of(f"Counting relations for {f.label} over F_{f.p}", [
        verify_yfy_counting(f, counts=counts, notes=notes),
        verify_sym_counting(f, counts=counts, notes=notes),
    ]))


@commands.command
@option('--dim', dest='dimension', type=int, help="Hypersurface dimension d >= 2")
def hodge(config: RunConfig):
    """
    Hodge diamonds of a smooth cubic d-fold and of its Fano variety of lines.
    """
    return hodge_report(config.dimension)


@commands.command
@option('--chi', type=int, help="Euler characteristic of Y")
@option('--sing', type=int, help="Euler characteristic of the singular locus")
def euler(config: RunConfig):
    """
    Euler characteristic of F(Y) from that of Y.
    """
    return conclude(euler_fano_report(config.chi, config.sing))


@commands.command
@option('--chiR', dest='chi_r', type=int, help="Real Euler characteristic of Y")
@option('--chiC', dest='chi_c', type=int, help="Complex Euler characteristic of Y")
@option('--parity', choices=[p.value for p in Parity], help="Parity of d")
@option('--chiR-sing', dest='chi_r_sing', type=int, help="Real Euler characteristic of the singular locus")
def real(config: RunConfig):
    """
    Real Euler characteristic of F(Y) for a real cubic hypersurface.
    """
    return conclude(real_euler_fano_report(config.chi_r, config.chi_c, config.parity, config.chi_r_sing))


@commands.command
@option('--suite', choices=['all'] + list(SUITE), help="Identity family (default all)")
@option('--seed', type=int, help="Seed for randomized identities")
@option('--samples', type=int, help="Random classes per randomized identity")
def symbolic(config: RunConfig):
    """
    Run the identity suite in the Grothendieck ring.
    """
    return conclude(suite_report(config.suite, seed=config.seed or 0, samples=config.samples))


@commands.command
@cubic_source
@option('--order', type=int, help="Truncation order (at most 3)")
def zeta(config: RunConfig):
    """
    #Sym^m Y(F_q) from the zeta function, cross-checked by cycle counts.
    """
    f, _ = resolve_cubic(config)
    return conclude(zeta_report(f, config.order, threads=config.threads))
