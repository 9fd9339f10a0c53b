import argparse
import logging
import sys

from functools import partial
from odin.exceptions import ValidationError
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, TextIO, Tuple, Union

from .command import Command, CommandFunction
from .middleware import MiddlewareList
from .output import render
from ..constants import ExitCode, OutputFormat
from ..exceptions import ImmediateExit, InvalidInput
from ..resources import ErrorReport, RunConfig


class ArgumentParser(argparse.ArgumentParser):
    """
    Parser that reports usage errors as invalid input instead of exiting.
    """
    def error(self, message: str):
        raise InvalidInput(f"{self.prog}: {message}")


class CommandCollection:
    """
    Container for Commands that come together to form a command line tool.
    """
    def __init__(self, *children: Union['CommandCollection', Command], name: str=None) -> None:
        self.children = list(children)
        self.name = name

        # Setup this container as children's parent
        for child in children:
            child.parent = self

        self.parent: Optional[CommandCollection] = None

    def _decorator(self, func: Optional[CommandFunction], **kwargs) -> Callable[[CommandFunction], Command]:
        def inner(f: CommandFunction) -> Command:
            command = Command(f, **kwargs)
            self.children.append(command)
            command.parent = self
            return command
        return inner(func) if func else inner

    def command(self, func: CommandFunction=None, **kwargs) -> Callable[[CommandFunction], Command]:
        """
        Decorate a function as a command and append to container.
        """
        return self._decorator(func, **kwargs)

    def items(self) -> Iterable[Tuple[str, Command]]:
        """
        Return `name`, `Command` pairs.
        """
        for child in self.children:
            yield from child.items()


class CommandLineInterface(CommandCollection):
    """
    Interface between the command line and the commands. This is also
    always the top level of any command tree.
    """
    def __init__(self, *children: Union[CommandCollection, Command],
                 prog: str='fanocubic', description: str=None,
                 debug_enabled: bool=False, middleware: list=None,
                 logger: logging.Logger=None,
                 stdout: TextIO=None, stderr: TextIO=None) -> None:
        """
        :param children: Collection of child containers/commands
        :param prog: Program name used in help output.
        :param debug_enabled: Re-raise unexpected exceptions instead of
            reporting them; ``--debug`` enables this per invocation.
        :param middleware: List of middleware
        :param logger: Logger to log errors to; defaults to builtin.
        """
        self.prog = prog
        self.description = description
        self.debug_enabled = debug_enabled
        self.middleware = MiddlewareList(middleware or [])
        self.logger = logger or logging.getLogger(__name__)
        self.stdout = stdout
        self.stderr = stderr
        super().__init__(*children, name=prog)

    def build_parser(self) -> argparse.ArgumentParser:
        """
        Top level parser with one sub-parser per command.
        """
        common = ArgumentParser(add_help=False)
        common.add_argument('--json', dest='output_format', action='store_const',
                            const=OutputFormat.Json.value, help="Emit JSON instead of a table")
        common.add_argument('-v', '--verbose', action='count', help="More logging (repeat for debug)")
        common.add_argument('--debug', action='store_true', default=None,
                            help="Re-raise unexpected errors with a traceback")

        parser = ArgumentParser(prog=self.prog, description=self.description)
        subparsers = parser.add_subparsers(dest='subcommand', metavar='command', parser_class=ArgumentParser)
        subparsers.required = True
        for _, command in sorted(self.items(), key=lambda item: item[1].sort_key):
            command.add_parser(subparsers, parents=[common])
        return parser

    def handle_error(self, config: Optional[RunConfig], exception: Exception) -> Tuple[Any, ExitCode]:
        """
        Handle exceptions raised while processing a command.

        The default handling is to log the exception (providing the
        sub-command as an extra variable) and report an error.
        """
        # Let middleware attempt to handle exception
        try:
            for middleware in self.middleware.handle_error:
                result = middleware(config, exception)
                if result:
                    return result

        except Exception as ex:
            exception = ex

        # Fallback to generic error
        self.logger.exception(
            "Unhandled exception during command processing: %s", exception,
            extra={'subcommand': getattr(config, 'subcommand', None)}
        )
        return ErrorReport.from_exception(exception), ExitCode.InvalidInput

    def _dispatch_command(self, config: RunConfig, command: Command) -> Tuple[Any, ExitCode]:
        """
        Dispatch and handle exceptions from command.
        """
        try:
            # Apply dispatch middleware
            handler = command
            for middleware in self.middleware.dispatch:
                handler = partial(middleware, handler=handler)

            report = handler(config)

        except ImmediateExit as e:
            # Stop processing and emit the attached report
            return e.report, e.exit_code

        except (InvalidInput, ValidationError) as ex:
            return ErrorReport.from_exception(ex, ExitCode.InvalidInput), ExitCode.InvalidInput

        except Exception as ex:
            if self.debug_enabled:
                raise
            return self.handle_error(config, ex)

        else:
            return report, ExitCode.Success

    def parse(self, argv: Sequence[str]=None) -> Tuple[RunConfig, Command, Dict[str, Any]]:
        """
        Parse the command line; the config is validated by the caller.
        """
        options = vars(self.build_parser().parse_args(argv))
        command = options.pop('command')
        config = RunConfig.from_options(options.pop('subcommand'), options)
        return config, command, options

    def configure_logging(self, verbosity: int) -> None:
        level = logging.WARNING - 10 * min(verbosity, 2)
        logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    def emit(self, report: Any, output_format: Union[OutputFormat, str], exit_code: ExitCode) -> int:
        """
        Write a report; errors go to stderr unless JSON was requested.
        """
        output_format = OutputFormat(output_format)
        if isinstance(report, ErrorReport) and output_format is not OutputFormat.Json:
            stream = self.stderr or sys.stderr
        else:
            stream = self.stdout or sys.stdout
        stream.write(render(report, output_format))
        return int(exit_code)

    def dispatch(self, argv: Sequence[str]=None) -> int:
        """
        Run one command line; returns the process exit code.
        """
        argv = sys.argv[1:] if argv is None else list(argv)

        try:
            config, command, options = self.parse(argv)
        except InvalidInput as ex:
            # Usage errors are raised before any option value exists
            output_format = OutputFormat.Json if '--json' in argv else OutputFormat.Table
            return self.emit(ErrorReport.from_exception(ex), output_format, ExitCode.InvalidInput)

        try:
            config.full_clean()
        except ValidationError as ex:
            return self.emit(ErrorReport.from_exception(ex), config.output_format, ExitCode.InvalidInput)

        if options.get('debug'):
            self.debug_enabled = True
        self.configure_logging(config.verbose)

        report, exit_code = self._dispatch_command(config, command)
        return self.emit(report, config.output_format, exit_code)
