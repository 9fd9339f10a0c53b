import io
import json

from pathlib import Path

import pytest

from fanocubic.cli import build_interface, main
from fanocubic.cli.containers import CommandCollection, CommandLineInterface
from fanocubic.constants import ExitCode, Relation
from fanocubic.exceptions import VerificationFailed
from fanocubic.forms import fermat, format_cubic
from fanocubic.geometry import SMOOTHNESS_CAVEAT
from fanocubic.resources import ErrorReport, RunConfig, VerificationReport

GOLDEN = Path(__file__).parent.parent / 'golden'


class Result:
    def __init__(self, exit_code, stdout, stderr):
        self.exit_code = exit_code
        self.stdout = stdout
        self.stderr = stderr

    @property
    def data(self):
        return json.loads(self.stdout)


def run(*argv, interface=None):
    stdout, stderr = io.StringIO(), io.StringIO()
    interface = interface or build_interface()
    interface.stdout, interface.stderr = stdout, stderr
    exit_code = interface.dispatch(list(argv))
    return Result(exit_code, stdout.getvalue(), stderr.getvalue())


def without_timing(data):
    if isinstance(data, dict):
        return {k: without_timing(v) for k, v in data.items() if k != 'wall_time'}
    if isinstance(data, list):
        return [without_timing(v) for v in data]
    return data


class TestLines:
    def test_fermat_surface(self):
        result = run('lines', '--named', 'fermat', '--dim', '2', '--p', '7')

        assert ExitCode.Success == result.exit_code
        assert 'relation   line-count' in result.stdout
        assert 'lhs        27\n' in result.stdout
        assert 'rhs        27\n' in result.stdout
        assert 'verdict  pass' in result.stdout

    def test_fermat_surface__json(self):
        result = run('lines', '--named', 'fermat', '--dim', '2', '--p', '7', '--json')

        data = result.data
        assert ExitCode.Success == result.exit_code
        assert '27' == data['lhs']
        assert '27' == data['rhs']
        assert 'pass' == data['verdict']
        assert 2850 == data['breakdown']['scanned']

    def test_fermat_surface_over_f2(self):
        result = run('lines', '--named', 'fermat', '--dim', '2', '--p', '2', '--json')

        assert ExitCode.Success == result.exit_code
        assert 35 == result.data['breakdown']['scanned']
        assert result.data['lhs'] == result.data['rhs']

    def test_node(self):
        result = run('lines', '--named', 'node', '--dim', '2', '--p', '7', '--json')

        assert ExitCode.Success == result.exit_code
        assert '21' == result.data['lhs']
        assert 1 == result.data['breakdown']['ns']

    def test_threads_do_not_change_result(self):
        single = run('lines', '--named', 'fermat', '--dim', '2', '--p', '7', '--json', '--threads', '1')
        many = run('lines', '--named', 'fermat', '--dim', '2', '--p', '7', '--json', '--threads', '4')

        assert without_timing(single.data) == without_timing(many.data)

    def test_non_reduced(self):
        result = run('lines', '--named', 'fermat', '--dim', '2', '--p', '3')

        assert ExitCode.InvalidInput == result.exit_code
        assert result.stderr.startswith('error: ')
        assert 'square' in result.stderr
        assert '' == result.stdout

    def test_random_needs_seed(self):
        result = run('lines', '--random', '--dim', '2', '--p', '3')

        assert ExitCode.InvalidInput == result.exit_code
        assert '--random requires --seed' in result.stderr

    def test_missing_prime__json(self):
        result = run('lines', '--json', '--named', 'fermat', '--dim', '2')

        assert ExitCode.InvalidInput == result.exit_code
        assert '' == result.stderr
        assert 'ValidationError' == result.data['error']
        assert '--p and --dim are required' in result.data['message']
        assert 1 == result.data['exit_code']

    def test_plane_cubic_over_f37(self):
        result = run('lines', '--named', 'fermat', '--dim', '1', '--p', '37', '--json')

        assert ExitCode.Success == result.exit_code
        assert '0' == result.data['lhs']
        assert '0' == result.data['rhs']


class TestVerify:
    def test_named(self):
        result = run('verify', '--named', 'node', '--dim', '2', '--p', '5', '--json')

        assert ExitCode.Success == result.exit_code
        assert 'pass' == result.data['verdict']
        assert ['hilb2-counting', 'sym2-counting'] == [r['relation'] for r in result.data['reports']]

    def test_table(self):
        result = run('verify', '--named', 'fermat', '--dim', '3', '--p', '2')

        assert ExitCode.Success == result.exit_code
        assert result.stdout.startswith('Counting relations for fermat(3) over F_2\n')
        assert 2 == result.stdout.count('relation   ')

    def test_file(self, tmp_path):
        path = tmp_path / 'surface.cubic'
        path.write_text(format_cubic(fermat(2, 5)))

        result = run('verify', '--file', str(path), '--json')

        assert ExitCode.Success == result.exit_code
        assert 'surface.cubic' == result.data['reports'][0]['cubic']

    def test_file__mismatched_prime(self, tmp_path):
        path = tmp_path / 'surface.cubic'
        path.write_text(format_cubic(fermat(2, 5)))

        result = run('verify', '--file', str(path), '--p', '7')

        assert ExitCode.InvalidInput == result.exit_code
        assert '--p 7 does not match' in result.stderr

    def test_file__missing(self, tmp_path):
        result = run('verify', '--file', str(tmp_path / 'missing.cubic'))
        assert ExitCode.InvalidInput == result.exit_code

    def test_random_smooth(self):
        result = run('verify', '--random', '--smooth', '--seed', '1', '--dim', '2', '--p', '2', '--json')

        assert ExitCode.Success == result.exit_code
        assert [SMOOTHNESS_CAVEAT] == result.data['reports'][0]['notes']

    def test_two_sources(self):
        result = run('verify', '--named', 'fermat', '--random', '--seed', '1', '--dim', '2', '--p', '2')

        assert ExitCode.InvalidInput == result.exit_code
        assert 'Exactly one cubic source' in result.stderr


class TestHodge:
    def test_table(self):
        result = run('hodge', '--dim', '3')

        assert ExitCode.Success == result.exit_code
        assert (GOLDEN / 'fano_hodge_3.txt').read_text(encoding='utf-8') in result.stdout
        assert 'Psi(F(Y))' in result.stdout

    def test_json(self):
        result = run('hodge', '--dim', '4', '--json')

        data = result.data
        assert 324 == data['fano_euler']
        assert 232 == data['fano']['2,2']
        assert '1 + t^2 + t^4' == data['fano_psi']
        assert 'product-excluded' == data['decomposability']['verdict']

    @pytest.mark.parametrize('argv', (('hodge',), ('hodge', '--dim', '1'), ('hodge', '--dim', 'x')))
    def test_invalid(self, argv):
        result = run(*argv)

        assert ExitCode.InvalidInput == result.exit_code
        assert result.stderr.startswith('error: ')


class TestEuler:
    @pytest.mark.parametrize('argv, expected', (
        (('--chi', '9'), '27'),
        (('--chi', '8', '--sing', '1'), '21'),
        (('--chi', '-6'), '27'),
        (('--chi', '27'), '324'),
    ))
    def test_euler(self, argv, expected):
        result = run('euler', *argv, '--json')

        assert ExitCode.Success == result.exit_code
        assert expected == result.data['lhs']
        assert expected == result.data['rhs']
        assert result.data['wall_time'] is not None

    def test_missing_chi(self):
        result = run('euler')
        assert ExitCode.InvalidInput == result.exit_code


class TestReal:
    @pytest.mark.parametrize('chi_r, expected', (('-5', '27'), ('-3', '15'), ('-1', '7'), ('1', '3'), ('3', '3')))
    def test_real_cubic_surfaces(self, chi_r, expected):
        result = run('real', '--chiR', chi_r, '--chiC', '9', '--parity', 'even', '--json')

        assert ExitCode.Success == result.exit_code
        assert expected == result.data['lhs']
        assert 'pass' == result.data['verdict']

    def test_parity_mismatch(self):
        result = run('real', '--chiR', '-5', '--chiC', '8', '--parity', 'even', '--json')

        assert ExitCode.InvalidInput == result.exit_code
        assert 'NonIntegralResult' == result.data['error']
        assert 1 == result.data['exit_code']

    def test_bad_parity(self):
        result = run('real', '--chiR', '-5', '--chiC', '9', '--parity', 'both')
        assert ExitCode.InvalidInput == result.exit_code


class TestSymbolic:
    def test_suite(self):
        result = run('symbolic', '--suite', 'nodal')

        assert ExitCode.Success == result.exit_code
        assert 'nodal: 4 passed, 0 failed' in result.stdout

    def test_series_inverse_json(self):
        result = run('symbolic', '--suite', 'series-inverse', '--samples', '200', '--seed', '1', '--json')

        assert ExitCode.Success == result.exit_code
        assert 600 == result.data['passed']
        assert 0 == result.data['failed']

    def test_unknown_suite(self):
        result = run('symbolic', '--suite', 'nope')
        assert ExitCode.InvalidInput == result.exit_code


class TestZeta:
    def test_plane_cubic_over_f2(self):
        result = run('zeta', '--named', 'fermat', '--dim', '1', '--p', '2', '--order', '3', '--json')

        assert ExitCode.Success == result.exit_code
        assert [3, 9, 9] == result.data['point_counts']
        assert [3, 9, 21] == result.data['sym_counts']
        assert all(c['verdict'] == 'pass' for c in result.data['checks'])

    def test_table(self):
        result = run('zeta', '--random', '--seed', '4', '--dim', '1', '--p', '3', '--order', '3')

        assert ExitCode.Success == result.exit_code
        assert 'pass  zeta-oracle m=3' in result.stdout
        assert 'pass  sym2-oracle' in result.stdout

    def test_order_too_large(self):
        result = run('zeta', '--named', 'fermat', '--dim', '1', '--p', '2', '--order', '4', '--json')

        assert ExitCode.InvalidInput == result.exit_code
        assert 'UnsupportedOrder' == result.data['error']

    @pytest.mark.slow
    def test_plane_cubic_over_f11(self):
        result = run('zeta', '--named', 'fermat', '--dim', '1', '--p', '11', '--order', '3', '--json')

        assert ExitCode.Success == result.exit_code
        assert 3 == len(result.data['point_counts'])
        assert all(c['verdict'] == 'pass' for c in result.data['checks'])


class TestInterface:
    def test_unknown_command(self):
        result = run('quartic')

        assert ExitCode.InvalidInput == result.exit_code
        assert 'invalid choice' in result.stderr

    def test_unknown_option(self):
        result = run('euler', '--chi', '9', '--bogus')
        assert ExitCode.InvalidInput == result.exit_code

    def test_usage_error__json(self):
        result = run('euler', '--chi', 'x', '--json')

        assert ExitCode.InvalidInput == result.exit_code
        assert '' == result.stderr
        assert 'InvalidInput' == result.data['error']
        assert 1 == result.data['exit_code']

    def test_validation_error__table(self):
        result = run('euler')

        assert '' == result.stdout
        assert result.stderr.startswith('error: euler requires --chi')

    def test_verification_failed(self):
        collection = CommandCollection(name='failing')

        @collection.command
        def failing(config: RunConfig):
            """
            Always fails.
            """
            raise VerificationFailed(VerificationReport.compare(Relation.LineCount, 26, 27))

        result = run('failing', '--json', interface=CommandLineInterface(collection))

        assert ExitCode.VerificationFailed == result.exit_code
        assert 'fail' == result.data['verdict']

    def test_unexpected_error(self):
        collection = CommandCollection(name='broken')

        @collection.command
        def broken(config: RunConfig):
            raise RuntimeError("boom")

        result = run('broken', interface=CommandLineInterface(collection))

        assert ExitCode.InvalidInput == result.exit_code
        assert 'error: boom\n' == result.stderr

        with pytest.raises(RuntimeError):
            run('broken', '--debug', interface=CommandLineInterface(collection))

    def test_error_middleware(self):
        class Recover:
            def handle_error(self, config, exception):
                return ErrorReport.from_exception(exception, ExitCode.VerificationFailed), ExitCode.VerificationFailed

        collection = CommandCollection(name='broken')

        @collection.command
        def broken(config: RunConfig):
            raise RuntimeError("boom")

        result = run('broken', '--json', interface=CommandLineInterface(collection, middleware=[Recover()]))

        assert ExitCode.VerificationFailed == result.exit_code
        assert 'RuntimeError' == result.data['error']

    def test_command_listing(self):
        names = [name for name, _ in build_interface().items()]
        assert ['lines', 'verify', 'hodge', 'euler', 'real', 'symbolic', 'zeta'] == names


def test_main(capsys):
    exit_code = main(['euler', '--chi', '9'])

    captured = capsys.readouterr()
    assert 0 == exit_code
    assert 'verdict  pass' in captured.out
