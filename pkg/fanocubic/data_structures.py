from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from .exceptions import InvalidInput

Row = Tuple[int, ...]


class LineRep(tuple):
    """
    A line in projective space, stored as the reduced row-echelon basis
    of its 2-dimensional row space over F_p.
    """
    __slots__ = ()

    def __new__(cls, u: Iterable[int], v: Iterable[int]) -> 'LineRep':
        return super().__new__(cls, (tuple(int(a) for a in u), tuple(int(a) for a in v)))

    def __init__(self, u: Iterable[int], v: Iterable[int]) -> None:
        super().__init__()

    @classmethod
    def from_rows(cls, u: Sequence[int], v: Sequence[int], p: int) -> 'LineRep':
        """
        Canonical representative of the span of two rows; rejects
        dependent rows.
        """
        matrix = np.array([u, v], dtype=np.int64) % p
        rank = 0
        for col in range(matrix.shape[1]):
            if rank == 2:
                break
            pivot = next((r for r in range(rank, 2) if matrix[r, col]), None)
            if pivot is None:
                continue
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
            matrix[rank] = (matrix[rank] * pow(int(matrix[rank, col]), p - 2, p)) % p
            other = 1 - rank
            matrix[other] = (matrix[other] - matrix[other, col] * matrix[rank]) % p
            rank += 1
        if rank != 2:
            raise InvalidInput(f"Rows {u} and {v} do not span a line")
        return cls(matrix[0], matrix[1])

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.u}, {self.v})"

    def __str__(self) -> str:
        return "<{} | {}>".format(' '.join(map(str, self.u)), ' '.join(map(str, self.v)))

    @property
    def u(self) -> Row:
        return tuple.__getitem__(self, 0)

    @property
    def v(self) -> Row:
        return tuple.__getitem__(self, 1)

    @property
    def pivots(self) -> Tuple[int, int]:
        return (
            next(i for i, a in enumerate(self.u) if a),
            next(i for i, a in enumerate(self.v) if a),
        )

    @property
    def is_echelon(self) -> bool:
        """
        Rows are in reduced row-echelon form.
        """
        if not any(self.u) or not any(self.v):
            return False
        i, j = self.pivots
        return (
            i < j and self.u[i] == 1 and self.v[j] == 1 and self.u[j] == 0
            and not any(self.v[:j])
        )

    def points(self, p: int) -> List[Row]:
        """
        The p + 1 rational points s*u + t*v with (s:t) in P^1(F_p).
        """
        u, v = np.array(self.u), np.array(self.v)
        params = [(1, t) for t in range(p)] + [(0, 1)]
        return [tuple(int(a) for a in (s * u + t * v) % p) for s, t in params]


class ScanRange(NamedTuple):
    """
    Half-open range of scan indices handled by one worker.
    """
    start: int
    stop: int

    @property
    def size(self) -> int:
        return max(0, self.stop - self.start)

    @classmethod
    def split(cls, total: int, chunks: int, min_size: int=4096) -> List['ScanRange']:
        """
        Split ``range(total)`` into at most `chunks` contiguous ranges of
        at least `min_size` (except the last).
        """
        chunks = max(1, min(chunks, -(-total // min_size) if total else 1))
        bounds = np.linspace(0, total, chunks + 1).astype(np.int64)
        return [cls(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

    def blocks(self, size: int) -> Iterator['ScanRange']:
        """
        Consecutive sub-ranges of at most `size` indices.
        """
        for start in range(self.start, self.stop, size):
            yield ScanRange(start, min(start + size, self.stop))
