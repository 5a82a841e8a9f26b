import pytest

from descartes_lab.criteria.classify import Status, decide_top_pair
from descartes_lab.oracle.search import GridSpec, grid_search, make_searcher, random_search
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, enumerate_three_block


def _same(left, right):
    if left is None or right is None:
        return left is right
    return left.to_dict() == right.to_dict()


def test_default_grid_shape():
    grid = GridSpec.default()

    assert len(grid.roots) == 10
    assert len(grid.pairs) == 308
    assert all(z * z < 4 * y for z, y in grid.pairs)
    assert grid.size(AdmissiblePair(0, 2), 4) == 45 * 308


def test_grid_search_finds_a_certified_witness():
    witness = grid_search(SignPattern.from_text("+--+"), AdmissiblePair(0, 1))

    assert witness is not None
    assert witness.construction == "search"
    assert witness.parameters["method"] == "grid"
    assert witness.verify()


def test_threaded_grid_search_returns_the_first_hit():
    sigma, ap = SignPattern.from_text("+--+"), AdmissiblePair(0, 1)

    serial = grid_search(sigma, ap, workers=1)
    threaded = grid_search(sigma, ap, workers=4)

    assert _same(serial, threaded)


def test_zero_budget_returns_nothing():
    assert grid_search(SignPattern.from_text("+--+"), AdmissiblePair(0, 1), budget=0) is None


def test_exhausting_the_grid_on_a_nonrealizable_couple():
    sigma, ap = SignPattern.from_text("S(1,3,1)"), AdmissiblePair(0, 2)
    grid = GridSpec.default()

    assert grid_search(sigma, ap, grid=grid, budget=grid.size(ap, sigma.degree), workers=4) is None


def test_random_search_is_reproducible():
    sigma, ap = SignPattern.from_text("++-+"), AdmissiblePair(0, 1)

    first = random_search(sigma, ap, seed=11, budget=500)
    second = random_search(sigma, ap, seed=11, budget=500)

    assert _same(first, second)
    if first is not None:
        assert first.verify()
        assert first.parameters["seed"] == 11


def test_make_searcher_rejects_unknown_methods():
    with pytest.raises(ValueError):
        make_searcher("exhaustive")


def test_search_never_contradicts_a_nonrealizable_couple():
    couples = [
        (blocks.pattern, AdmissiblePair(0, d - 2))
        for d in range(4, 11)
        for blocks in enumerate_three_block(d)
        if decide_top_pair(blocks)[0] is Status.NONREALIZABLE
    ]

    assert couples
    for sigma, ap in couples:
        assert grid_search(sigma, ap, budget=3000, workers=2) is None
        assert random_search(sigma, ap, seed=7, budget=1000) is None
