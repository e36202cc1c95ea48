import itertools
import math

import pytest
from hypothesis import given, settings

from hamgrowth.enhanced import tau_en
from hamgrowth.errors import InvalidInput
from hamgrowth.extremal import (
    ThinCaps,
    best_of,
    bounds,
    general_lb_witness,
    mu_en_exact,
    mu_search,
    mu_th_search,
    ratslope_best,
    ratslope_bound,
    ratslope_enhancements,
    rectangle_formula,
    window_candidates,
)
from hamgrowth.regular import spanning_time
from hamgrowth.thin import witness_rectangle
from hamgrowth.young import EMPTY, YoungDiagram, from_rectangles, rectangle, staircase
from strategies import diagrams

SLOPE_Z = from_rectangles([(6, 4), (8, 1), (7, 2), (4, 5), (2, 6), (1, 7)])


def _square(x):
    return x * x


class TestBestOf:
    def test_first_maximum_wins(self):
        assert best_of([3, 1, 3, None], lambda v: v) == (0, 3)

    def test_all_none(self):
        assert best_of([None, None], lambda v: v) == (-1, None)

    def test_workers_do_not_change_result(self):
        items = list(range(-7, 8))
        assert best_of(items, _square, workers=2) == best_of(items, _square) == (0, 49)


class TestMuEn:
    @pytest.mark.parametrize(
        "rows,value", [((), 1), ((1,), 2), ((1, 1), 3), ((2,), 3)]
    )
    def test_examples(self, rows, value):
        z = YoungDiagram(rows)
        res = mu_en_exact(z)
        assert res.value == value
        assert tau_en(z, res.witness).tau == value

    def test_single_column_witness_is_single_cell(self):
        res = mu_en_exact(YoungDiagram((1, 1)), full=True)
        assert res.value == 3

    @settings(max_examples=30)
    @given(diagrams(3, 3))
    def test_reduced_equals_full(self, z):
        assert mu_en_exact(z).value == mu_en_exact(z, full=True).value

    def test_parallel_matches_serial(self):
        z = YoungDiagram((3, 2, 1))
        assert mu_en_exact(z, workers=2) == mu_en_exact(z)


class TestThinSearch:
    def test_rectangle_lower_bound(self):
        z = rectangle(3, 2)
        res = mu_th_search(z, seeds=[witness_rectangle(3, 2)])
        assert res.best >= 4

    def test_single_cell(self):
        assert mu_th_search(YoungDiagram((1,))).best >= 2

    def test_zero_caps(self):
        res = mu_th_search(YoungDiagram((1,)), ThinCaps(0, 0, 0))
        assert not res.found and res.witness is None

    def test_default_caps(self):
        assert ThinCaps.default(YoungDiagram((4, 3, 1))) == ThinCaps(5, 4, 4)


def _canon(sites, width, height):
    """Lexicographically least image under row and column permutations."""
    best = None
    for px in itertools.permutations(range(width)):
        for py in itertools.permutations(range(height)):
            img = tuple(sorted((px[x], py[y]) for x, y in sites))
            if best is None or img < best:
                best = img
    return best


class TestWindowSearch:
    @pytest.mark.parametrize("w,h", [(2, 2), (2, 3), (3, 3)])
    def test_candidates_cover_every_class(self, w, h):
        cells = [(x, y) for y in range(h) for x in range(w)]
        classes = set()
        for k in range(len(cells) + 1):
            for sub in itertools.combinations(cells, k):
                classes.add(_canon(sub, w, h))
        reps = {_canon(s, w, h) for s in window_candidates(w, h)}
        assert reps == classes

    def test_single_cell_zero_set(self):
        res = mu_search(YoungDiagram((1,)), (2, 2))
        assert res.best == 2 and res.exhaustive

    def test_square_two(self):
        res = mu_search(rectangle(2, 2), (3, 3))
        assert res.best == 3
        assert spanning_time(rectangle(2, 2), res.witness) == 3

    def test_empty_zero_set(self):
        assert mu_search(EMPTY, (2, 2)).best == 1

    @pytest.mark.parametrize("rows", [(2, 2), (3, 1), (2, 1, 1)])
    def test_matches_plain_enumeration(self, rows):
        z = YoungDiagram(rows)
        cells = [(x, y) for y in range(3) for x in range(3)]
        plain = max(
            t
            for k in range(len(cells) + 1)
            for sub in itertools.combinations(cells, k)
            if (t := spanning_time(z, sub)) is not None
        )
        assert mu_search(z, (3, 3)).best == plain

    def test_max_sites(self):
        res = mu_search(YoungDiagram((1,)), (2, 2), max_sites=1)
        assert res.best == 2 and len(res.witness) == 1

    def test_oversized_exhaustive_rejected(self):
        with pytest.raises(InvalidInput):
            mu_search(rectangle(2, 2), (5, 5), heuristic=False)

    def test_heuristic_is_seeded(self):
        a = mu_search(rectangle(2, 2), (5, 4), restarts=5, seed=3)
        b = mu_search(rectangle(2, 2), (5, 4), restarts=5, seed=3)
        assert not a.exhaustive
        assert (a.best, a.witness) == (b.best, b.witness)
        assert a.best <= 2 * 2 * 2 + 5


class TestRatslope:
    def test_slope_example(self):
        rs = ratslope_bound(SLOPE_Z, 1, 1)
        assert (rs.k, rs.witness, rs.bound) == (9, (5, 3), 4)

    def test_unit_cell(self):
        rs = ratslope_bound(rectangle(1, 1), 1, 1)
        assert (rs.k, rs.witness, rs.bound) == (1, (0, 0), 1)

    def test_staircase(self):
        rs = ratslope_bound(staircase(1, 1, 4), 1, 1)
        assert rs.k == 4 and rs.bound == 2
        i, j = rs.witness
        assert i + j == 3

    def test_rejects_empty(self):
        with pytest.raises(InvalidInput):
            ratslope_bound(EMPTY, 1, 1)
        with pytest.raises(InvalidInput):
            ratslope_bound(rectangle(1, 1), 0, 1)

    @settings(max_examples=40)
    @given(diagrams(4, 4))
    def test_sound(self, z):
        if not z:
            return
        rs = ratslope_best(z, 3)
        assert rs.bound <= mu_en_exact(z).value
        e = ratslope_enhancements(z, rs)
        tau = tau_en(z, e).tau
        assert tau is not None and tau >= rs.bound


def _side(z):
    cells = set(z.cells())
    return max(k for k in range(10) if all((i, j) in cells for i in range(k) for j in range(k)))


class TestGeneralWitness:
    @pytest.mark.parametrize(
        "z,low", [(rectangle(4, 4), 2), (YoungDiagram((5,)), 1), (rectangle(9, 9), 3), (YoungDiagram((3, 1, 1)), 1)]
    )
    def test_reaches_square_root(self, z, low):
        assert math.ceil(math.sqrt(_side(z))) == low
        assert tau_en(z, general_lb_witness(z)).tau >= low

    def test_rejects_empty(self):
        with pytest.raises(InvalidInput):
            general_lb_witness(EMPTY)

    @settings(max_examples=40)
    @given(diagrams(5, 5))
    def test_property(self, z):
        if not z:
            return
        assert tau_en(z, general_lb_witness(z)).tau >= math.sqrt(_side(z))


class TestBounds:
    def test_rectangle_three_two(self):
        rep = bounds(rectangle(3, 2))
        items = dict(rep.items())
        assert items["mu_upper_general"] == 17
        assert items["mu_en_upper"] == 9
        assert items["mu_formula"] == 4
        assert items["mu_en_lower"] <= items["mu_en_exact"] <= 9
        assert items["chain"] == "ok"

    def test_rectangle_formula(self):
        assert rectangle_formula(rectangle(2, 2)) == 3
        assert rectangle_formula(rectangle(4, 2)) == 4
        assert rectangle_formula(YoungDiagram((2, 1))) is None
        assert rectangle_formula(EMPTY) is None

    def test_empty(self):
        items = dict(bounds(EMPTY).items())
        assert items["mu_en_exact"] == 1 and items["mu_th_lower"] is None

    def test_chain_flags_violation(self):
        rep = bounds(rectangle(1, 1), window=(2, 2))
        assert rep.chain_violations() == ["mu_best_found = 2 > mu_formula = 1"]
