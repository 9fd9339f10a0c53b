import logging
import time

from typing import Any, Callable, Iterable, List, Optional, Sequence, TypeVar

from ..resources import RunConfig

DispatchHandler = Callable[[RunConfig, 'DispatchHandler'], Any]
ErrorHandler = Callable[[RunConfig, Exception], Optional[Any]]

T = TypeVar('T')

logger = logging.getLogger(__name__)


def sort_by_priority(iterable: Iterable[T], reverse: bool=False, default_priority: int=10) -> List[T]:
    """
    Return a list or objects sorted by a priority value.
    """
    return sorted(iterable, reverse=reverse, key=lambda o: getattr(o, 'priority', default_priority))


class MiddlewareList(list):
    """
    List of middleware with filtering and sorting builtin
    """
    @property
    def dispatch(self) -> Sequence[DispatchHandler]:
        """
        List of dispatch middleware methods.
        """
        return tuple(
            m.handle_dispatch for m in sort_by_priority(self)
            if hasattr(m, 'handle_dispatch')
        )

    @property
    def handle_error(self) -> Sequence[ErrorHandler]:
        """
        List of error handler methods.
        """
        return tuple(
            m.handle_error for m in sort_by_priority(self)
            if hasattr(m, 'handle_error')
        )


class Timing:
    """
    Log the wall time of each command and stamp it on reports that have
    room for it.
    """
    priority = 1

    def __init__(self, log: logging.Logger=None) -> None:
        self.logger = log or logger

    def handle_dispatch(self, config: RunConfig, handler: Callable[[RunConfig], Any]) -> Any:
        started = time.perf_counter()
        report = handler(config)
        elapsed = time.perf_counter() - started
        if getattr(report, 'wall_time', 0) is None:
            report.wall_time = elapsed
        self.logger.info("%s finished in %.3fs", config.subcommand, elapsed)
        return report
