import pytest

from hamgrowth.audit import AuditLine, audit, random_diagram
from hamgrowth.errors import InvalidInput


@pytest.mark.parametrize("family", ["all-2x2", "l-shapes-3", "thresholds-3", "enhanced-random-200-7"])
def test_small_families_pass(family):
    result = audit(family)
    assert result.lines and result.passed, [str(l) for l in result.failures]


def test_all_2x2_covers_six_zero_sets():
    result = audit("all-2x2")
    assert len({line.subject for line in result.lines}) == 6


def test_rectangles_report_unit_square():
    result = audit("rectangles-1x1")
    failed = {line.check for line in result.failures}
    assert "searched witness spans in exactly 2n-1" in failed


def test_progress_sees_every_line():
    seen = []
    result = audit("thresholds-2", progress=seen.append)
    assert seen == result.lines


@pytest.mark.parametrize("family", ["bogus", "all-3", "rectangles-x", ""])
def test_unknown_family(family):
    with pytest.raises(InvalidInput):
        audit(family)


def test_line_format():
    line = AuditLine("fam", "Z", "check", False, "why")
    assert str(line) == "FAIL fam [Z] check (why)"


def test_random_diagram_in_box():
    import random

    rng = random.Random(1)
    for _ in range(50):
        z = random_diagram(rng, 6, 6)
        assert z.width <= 6 and z.height <= 6
