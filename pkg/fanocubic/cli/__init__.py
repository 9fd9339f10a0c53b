"""
Command line front end
~~~~~~~~~~~~~~~~~~~~~~

``fanocubic <command> [options]``; see ``fanocubic --help``.

"""
from typing import Sequence

from .commands import commands
from .containers import CommandLineInterface
from .middleware import Timing


def build_interface(**kwargs) -> CommandLineInterface:
    kwargs.setdefault('middleware', [Timing()])
    return CommandLineInterface(
        commands,
        description="Lines on cubic hypersurfaces: counting, Hodge and motivic checks.",
        **kwargs
    )


def main(argv: Sequence[str]=None) -> int:
    return build_interface().dispatch(argv)
