import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamgrowth.enhanced import EnhancementPair, spans_by_containment, tau_en
from hamgrowth.errors import InvalidInput
from hamgrowth.regular import spanning_time
from hamgrowth.thin import (
    ThinSetSpec,
    canonicalize,
    enhancements_to_thin,
    format_thin_spec,
    is_thin,
    iter_specs,
    l_shape,
    parse_thin_spec,
    standard_arrangement,
    standard_violations,
    thin_spanning_time,
    thin_to_enhancements,
    witness_L,
    witness_rectangle,
)
from hamgrowth.young import YoungDiagram, rectangle, shift_diag

ARR_SPEC = ThinSetSpec((4, 2), (2, 2), 3)
ARR_SITES = (
    {(x, 0) for x in range(7, 11)}
    | {(5, 1), (6, 1), (4, 2), (3, 3), (2, 4)}
    | {(0, 7), (0, 8), (1, 5), (1, 6)}
)

specs = st.builds(
    ThinSetSpec,
    st.lists(st.integers(2, 4), max_size=3).map(lambda v: tuple(sorted(v, reverse=True))),
    st.lists(st.integers(2, 4), max_size=3).map(lambda v: tuple(sorted(v, reverse=True))),
    st.integers(0, 3),
)


def test_standard_arrangement_example():
    assert ARR_SPEC.frame == (11, 9)
    assert standard_arrangement(ARR_SPEC) == ARR_SITES


@given(specs)
def test_standard_arrangement_is_standard(spec):
    sites = standard_arrangement(spec)
    assert is_thin(sites)
    assert canonicalize(sites) == spec
    assert not standard_violations(sites)
    width, height = spec.frame
    assert {x for x, _ in sites} == set(range(width))
    assert {y for _, y in sites} == set(range(height))


def test_transpose_swaps_axes():
    t = standard_arrangement(ARR_SPEC.transpose())
    assert t == {(y, x) for x, y in ARR_SITES}


def test_not_thin():
    assert not is_thin({(0, 0), (1, 0), (0, 1)})
    with pytest.raises(InvalidInput):
        canonicalize({(0, 0), (1, 0), (0, 1)})


def test_standard_violation_reported():
    assert standard_violations({(0, 0), (1, 1)})


def test_spec_validation():
    with pytest.raises(InvalidInput):
        ThinSetSpec((1,), (), 0)
    with pytest.raises(InvalidInput):
        ThinSetSpec((2, 3), (), 0)
    with pytest.raises(InvalidInput):
        ThinSetSpec((), (), -1)


def test_spec_text_roundtrip():
    assert parse_thin_spec("r: 4 2 / c: 2 2 / w: 3") == ARR_SPEC
    assert parse_thin_spec(format_thin_spec(ARR_SPEC)) == ARR_SPEC
    assert parse_thin_spec("r: 2\nw: 1") == ThinSetSpec((2,), (), 1)
    with pytest.raises(InvalidInput):
        parse_thin_spec("q: 1")


def test_iter_specs_counts():
    assert len(list(iter_specs(0, 0, 0))) == 1
    # vectors over {3, 2} of length <= 2: (), 2 singles, 3 pairs
    assert len(list(iter_specs(3, 2, 1))) == 6 * 6 * 2
    assert len(set(iter_specs(3, 2, 1))) == 72


class TestRectangleWitness:
    @pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5) if m != n])
    def test_unequal_sides(self, m, n):
        assert thin_spanning_time(rectangle(m, n), witness_rectangle(m, n)) == 2 * min(m, n)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_square_search_hits_formula(self, n):
        assert thin_spanning_time(rectangle(n, n), witness_rectangle(n, n)) == 2 * n - 1

    def test_unit_square_best_is_two(self):
        # any nonempty zero-set needs at least two steps
        assert thin_spanning_time(rectangle(1, 1), witness_rectangle(1, 1)) == 2

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidInput):
            witness_rectangle(0, 2)


class TestLWitness:
    def test_l_shape(self):
        assert l_shape(3, 1, 2, 3).rows == (3, 2, 2)
        with pytest.raises(InvalidInput):
            l_shape(2, 1, 2, 3)

    @pytest.mark.parametrize(
        "a,b,c,d",
        [(a, b, c, d) for a in range(2, 5) for c in range(1, a) for d in range(2, 5) for b in range(1, d)],
    )
    def test_lower_bound(self, a, b, c, d):
        z, spec, claimed = witness_L(a, b, c, d)
        tau = thin_spanning_time(z, spec)
        assert tau is not None and tau >= 2 * min(b, c)

    def test_claim_matches_for_wide_case(self):
        z, spec, claimed = witness_L(4, 2, 3, 4)
        assert thin_spanning_time(z, spec) == claimed


def test_thin_to_enhancements_counts():
    e = thin_to_enhancements(ARR_SITES)
    assert e.r[:2] == (4, 2) and e.c[:2] == (2, 2)
    assert set(e.r[2:]) == {1} and set(e.c[2:]) == {1}


def test_thin_to_enhancements_needs_standard():
    with pytest.raises(InvalidInput):
        thin_to_enhancements({(0, 0), (1, 1)})


@pytest.mark.parametrize("rows", [(2, 2), (3, 3, 3), (3, 2, 2), (4, 3, 1)])
def test_enhancements_to_thin_not_faster(rows):
    z = YoungDiagram(rows)
    inner = shift_diag(z, 1)
    for r in inner.sub_diagrams():
        for c in inner.sub_diagrams():
            e = EnhancementPair.from_diagrams(r, c)
            if not spans_by_containment(inner, e):
                with pytest.raises(InvalidInput):
                    enhancements_to_thin(e, z)
                continue
            tau = spanning_time(z, enhancements_to_thin(e, z))
            assert tau is not None and tau >= tau_en(inner, e).tau
