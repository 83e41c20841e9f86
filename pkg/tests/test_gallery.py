import pytest

from latticepoly.gallery import FIXTURES, GalleryFixture, evaluate_check, run_gallery
from latticepoly.normal_forms import is_polynomial


@pytest.mark.parametrize("fixture", FIXTURES, ids=lambda fx: fx.name)
def test_fixture_reproduces(fixture):
    assert fixture.replay() == []


def test_run_gallery_names_unique():
    names = [name for name, _ in run_gallery()]
    assert len(names) == len(set(names)) == len(FIXTURES)


def test_replay_reports_mismatch():
    base = FIXTURES[0]
    flipped = {k: not v for k, v in base.expected.items()}
    bad = GalleryFixture(base.name, base.source, base.build, flipped)
    mismatches = bad.replay()
    assert len(mismatches) == len(flipped)
    assert all(want != got for _, want, got in mismatches)


def test_evaluate_check_modes():
    f = FIXTURES[3].build()   # step map on a 4-chain
    assert not is_polynomial(f)
    assert evaluate_check("meet-homogeneous@range", f)
    assert not evaluate_check("meet-homogeneous@hull", f)
    assert evaluate_check("meet-homogeneous", f) == evaluate_check("meet-homogeneous@hull", f)
    with pytest.raises(KeyError):
        evaluate_check("no-such-check", f)
