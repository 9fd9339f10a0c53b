import threading

import pytest

from fanocubic.utils import parallel


def squares(scan_range):
    return sum(i * i for i in range(scan_range.start, scan_range.stop))


class TestParallelMap:
    def test_single_thread(self):
        actual = parallel.parallel_map(lambda r: (r.start, r.stop), 10, threads=1, min_size=4)

        assert [(0, 10)] == actual

    @pytest.mark.parametrize('threads', (2, 3, 8))
    def test_results_in_range_order(self, threads):
        actual = parallel.parallel_map(lambda r: r.start, 1000, threads=threads, min_size=10)

        assert sorted(actual) == actual
        assert 0 == actual[0]

    def test_uses_workers(self):
        seen = set()

        def record(scan_range):
            seen.add(threading.get_ident())
            return scan_range.size

        actual = parallel.parallel_map(record, 1000, threads=4, min_size=10)

        assert 1000 == sum(actual)
        assert threading.get_ident() not in seen

    def test_empty(self):
        assert [] == parallel.parallel_map(squares, 0, threads=4)


class TestParallelSum:
    @pytest.mark.parametrize('threads', (1, 2, 5))
    def test_independent_of_threads(self, threads):
        expected = sum(i * i for i in range(5000))
        actual = parallel.parallel_sum(squares, 5000, threads=threads, min_size=100)

        assert expected == actual
