from typing import Any, Callable, Union

from .command import Command, CommandFunction, Option

CommandDecorator = Callable[[CommandFunction], Union[Command, CommandFunction]]


def command(func: CommandFunction=None, *, name: str=None, **kwargs) -> CommandDecorator:
    """
    Command decorator, converts a function into a CLI command.
    """
    def inner(f: CommandFunction) -> Command:
        return Command(f, name, **kwargs)
    return inner(func) if func else inner


def add_option(opt: Option) -> CommandDecorator:
    """
    Add an option to a command.

    Decorators apply bottom up, so options are prepended to keep them in
    the order they are written.
    """
    def inner(f: CommandFunction) -> CommandFunction:
        try:
            options = getattr(f, 'options')
        except AttributeError:
            options = []
            setattr(f, 'options', options)
        if opt not in options:
            options.insert(0, opt)
        return f
    return inner


def option(*flags: str, **kwargs: Any) -> CommandDecorator:
    """
    Add an argparse style option.
    """
    return add_option(Option(*flags, **kwargs))


def cubic_source(func: CommandFunction) -> CommandFunction:
    """
    Field, dimension and cubic source options shared by geometric commands.
    """
    decorators = (
        option('--p', dest='prime', type=int, help="Prime field order q"),
        option('--dim', dest='dimension', type=int, help="Hypersurface dimension d"),
        option('--named', help="Named cubic: fermat, node, cone or random"),
        option('--file', help="Cubic definition file"),
        option('--random', action='store_true', default=None, help="Seeded random reduced cubic"),
        option('--smooth', action='store_true', default=None,
               help="With --random, require no singular points over F_q and F_q^2"),
        option('--seed', type=int, help="Random seed"),
        threads,
    )
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


threads = option('--threads', type=int, help="Worker threads for scans (results do not depend on it)")
