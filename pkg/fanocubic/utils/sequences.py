import itertools

from typing import Any, Iterable, Tuple, TypeVar, Union

T = TypeVar('T')


def force_tuple(obj: Union[T, Iterable[T]]) -> Tuple[T, ...]:
    """
    Force an incoming value to be a Tuple; str and bytes values are treated
    as single values rather than iterables.
    """
    if isinstance(obj, (str, bytes)):
        return obj,

    if isinstance(obj, tuple):
        return obj

    if isinstance(obj, Iterable):
        return tuple(obj)

    return obj,


def dict_filter_update(base: dict, updates: dict) -> None:
    """
    Update dict with None values filtered out.
    """
    base.update((k, v) for k, v in updates.items() if v is not None)


def dict_filter(*args: dict, **kwargs: Any) -> dict:
    """
    Merge all values into a single dict with all None values removed.
    """
    result = {}
    for arg in itertools.chain(args, (kwargs,)):
        dict_filter_update(result, arg)
    return result


def multiset_count(kinds: int, size: int) -> int:
    """
    Number of multisets of `size` elements drawn from `kinds` kinds.
    """
    if size == 0:
        return 1
    if kinds <= 0:
        return 0
    count = 1
    for i in range(size):
        count = count * (kinds + i) // (i + 1)
    return count


def partitions(n: int, largest: int=None) -> Iterable[Tuple[int, ...]]:
    """
    Integer partitions of n as non-increasing tuples.
    """
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest
