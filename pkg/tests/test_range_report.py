import random

from lzindex import range_report


def scan(points, x_lo, x_hi, y_lo, y_hi):
    return sorted(p for x, y, p in points if x_lo <= x <= x_hi and y_lo <= y <= y_hi)


class TestGrid:
    def test_empty(self):
        g = range_report.build([])
        assert g.query(0, 10**9, 0, 10**9) == []

    def test_single_point(self):
        g = range_report.build([(3, 5, (1, 2))])
        assert g.query(3, 3, 5, 5) == [(1, 2)]
        assert g.query(4, 9, 0, 9) == []

    def test_full_rectangle_returns_everything(self):
        rng = random.Random(61)
        points = [(rng.randint(1, 50), rng.randint(1, 50), (i, i)) for i in range(200)]
        g = range_report.build(points)
        assert sorted(g.query(1, 50, 1, 50)) == sorted(p for _, _, p in points)

    def test_empty_rectangle(self):
        g = range_report.build([(1, 1, (0, 0))])
        assert g.query(5, 4, 1, 1) == []
        assert g.query(1, 1, 5, 4) == []

    def test_matches_scan_oracle(self):
        rng = random.Random(62)
        for trial in range(6):
            count = rng.randint(1, 2000)
            u = rng.choice([10, 100, 10_000])
            points = [
                (rng.randint(1, u), rng.randint(1, u), (i, rng.randint(0, 9)))
                for i in range(count)
            ]
            g = range_report.build(points)
            for _ in range(300):
                x_lo = rng.randint(0, u)
                x_hi = rng.randint(x_lo - 1, u + 1)
                y_lo = rng.randint(0, u)
                y_hi = rng.randint(y_lo - 1, u + 1)
                got = g.query(x_lo, x_hi, y_lo, y_hi)
                assert sorted(got) == scan(points, x_lo, x_hi, y_lo, y_hi)
                assert len(got) == len(set(got))  # payloads are distinct here

    def test_points_round_trip(self):
        rng = random.Random(63)
        points = [(rng.randint(1, 30), rng.randint(1, 30), (i, 0)) for i in range(100)]
        g = range_report.build(points)
        assert sorted(g.points()) == sorted(points)
        g2 = range_report.build(g.points())
        assert g2.query(1, 30, 1, 30) == g.query(1, 30, 1, 30)

    def test_query_counter(self):
        g = range_report.build([(1, 1, (0, 0))])
        g.query(1, 1, 1, 1)
        g.query(1, 1, 1, 1)
        assert g.query_count == 2
