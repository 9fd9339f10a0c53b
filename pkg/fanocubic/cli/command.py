import argparse

from functools import partial
from typing import Any, Callable, Iterable, List, Sequence, Tuple

from .middleware import MiddlewareList
from ..resources import RunConfig

CommandFunction = Callable[[RunConfig], Any]


class Option:
    """
    A command line option, attached to command functions by decorators.
    """
    __slots__ = ('flags', 'kwargs')

    def __init__(self, *flags: str, **kwargs: Any) -> None:
        self.flags = flags
        self.kwargs = kwargs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Option):
            return self.flags == other.flags
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.flags)

    def __repr__(self) -> str:
        return f"Option{self.flags!r}"

    def add_to(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(*self.flags, **self.kwargs)


class Command:
    """
    Decorator class that wraps commands
    """
    _command_count = 0

    def __init__(self, func: CommandFunction, name: str=None, *,
                 summary: str=None,
                 middleware: Sequence[object]=None) -> None:
        """
        :param func: Function that executes the command.
        :param name: Sub-command name; defaults to the function name.
        :param summary: One line help; defaults to the first docstring line.
        """
        self.base_func = self.func = func
        self.name = name or func.__name__.replace('_', '-')

        # Sorting
        self.sort_key = Command._command_count
        Command._command_count += 1

        # Parent object (when associated with a command container)
        self.parent = None

        self.middleware = MiddlewareList(middleware or [])

        doc = (func.__doc__ or '').strip()
        self.description = doc
        self.summary = summary or (doc.splitlines()[0] if doc else None)

        # Copy options from function (if defined)
        self.options: List[Option] = list(getattr(func, 'options', ()))

    def __call__(self, config: RunConfig) -> Any:
        """
        Main wrapper around the command function.
        """
        handler = self.func
        for middleware in self.middleware.dispatch:
            handler = partial(middleware, handler=handler)
        return handler(config)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Command):
            return self.name == other.name
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.name)

    def __str__(self) -> str:
        return f"{self.name} - {self.summary}"

    def __repr__(self) -> str:
        return f"Command({self.name!r})"

    def items(self) -> Iterable[Tuple[str, 'Command']]:
        yield self.name, self

    def add_parser(self, subparsers: Any, parents: Sequence[argparse.ArgumentParser]=()) -> argparse.ArgumentParser:
        """
        Register this command (and its options) as a sub-parser.
        """
        parser = subparsers.add_parser(
            self.name, help=self.summary, description=self.description, parents=list(parents)
        )
        for option in self.options:
            option.add_to(parser)
        parser.set_defaults(command=self)
        return parser
