import pytest

from fanocubic import data_structures
from fanocubic.exceptions import InvalidInput


class TestLineRep:
    def test_init(self):
        target = data_structures.LineRep([1, 0, 2], (0, 1, 3))

        assert ((1, 0, 2), (0, 1, 3)) == target
        assert (1, 0, 2) == target.u
        assert (0, 1, 3) == target.v

    @pytest.mark.parametrize('u, v, p, expected', (
        ((1, 0, 0), (0, 1, 0), 5, ((1, 0, 0), (0, 1, 0))),
        ((0, 1, 0), (1, 0, 0), 5, ((1, 0, 0), (0, 1, 0))),
        ((2, 2, 0), (1, 3, 0), 5, ((1, 0, 0), (0, 1, 0))),
        ((0, 0, 3), (0, 2, 1), 7, ((0, 1, 0), (0, 0, 1))),
        ((1, 1, 1, 1), (1, 2, 3, 4), 7, ((1, 0, 6, 5), (0, 1, 2, 3))),
    ))
    def test_from_rows(self, u, v, p, expected):
        actual = data_structures.LineRep.from_rows(u, v, p)

        assert expected == actual
        assert actual.is_echelon

    @pytest.mark.parametrize('u, v, p', (
        ((1, 2, 3), (2, 4, 6), 7),
        ((1, 2, 3), (0, 0, 0), 7),
        ((1, 1, 0), (3, 3, 0), 2),
    ))
    def test_from_rows__dependent(self, u, v, p):
        with pytest.raises(InvalidInput):
            data_structures.LineRep.from_rows(u, v, p)

    @pytest.mark.parametrize('u, v, expected', (
        ((1, 0, 0), (0, 1, 0), True),
        ((1, 2, 0), (0, 1, 0), False),
        ((0, 1, 0), (1, 0, 0), False),
        ((2, 0, 0), (0, 1, 0), False),
        ((1, 0, 0), (0, 0, 0), False),
    ))
    def test_is_echelon(self, u, v, expected):
        actual = data_structures.LineRep(u, v).is_echelon
        assert expected == actual

    def test_points(self):
        target = data_structures.LineRep((1, 0, 0), (0, 1, 0))

        actual = target.points(3)

        assert [(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 1, 0)] == actual

    def test_str(self):
        target = data_structures.LineRep((1, 0, 2), (0, 1, 3))
        assert '<1 0 2 | 0 1 3>' == str(target)


class TestScanRange:
    def test_size(self):
        assert 5 == data_structures.ScanRange(3, 8).size
        assert 0 == data_structures.ScanRange(8, 3).size

    @pytest.mark.parametrize('total, chunks, min_size, expected', (
        (0, 4, 10, []),
        (10, 4, 10, [(0, 10)]),
        (40, 4, 10, [(0, 10), (10, 20), (20, 30), (30, 40)]),
        (40, 8, 10, [(0, 10), (10, 20), (20, 30), (30, 40)]),
        (40, 2, 10, [(0, 20), (20, 40)]),
    ))
    def test_split(self, total, chunks, min_size, expected):
        actual = data_structures.ScanRange.split(total, chunks, min_size)
        assert expected == actual

    def test_split__covers_range(self):
        ranges = data_structures.ScanRange.split(100003, 7, 1000)

        assert 0 == ranges[0].start
        assert 100003 == ranges[-1].stop
        assert all(a.stop == b.start for a, b in zip(ranges, ranges[1:]))

    def test_blocks(self):
        target = data_structures.ScanRange(5, 17)

        actual = list(target.blocks(5))

        assert [(5, 10), (10, 15), (15, 17)] == actual
