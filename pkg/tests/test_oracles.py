import pytest

from toric_nash.helpers import NotRank2
from toric_nash.lattice import hilbert_basis
from toric_nash.linalg import LatticeVector
from toric_nash.oracles import (
    HeightSlab,
    brute_hilbert,
    brute_min,
    coverage_gaps,
    hj_boundary,
    hj_continued_fraction,
    hj_walk,
)
from toric_nash.polyhedra import cone_from_rays
from toric_nash.valuations import nash_valuations, terminal_valuations


def vectors(*coords):
    return [LatticeVector(c) for c in coords]


def test_brute_min_of_a3(a3_cone):
    assert brute_min(a3_cone, 8) == vectors((1, 1), (1, 2), (1, 3))


def test_brute_min_below_the_first_layer(a3_cone):
    # every nonzero point of the A3 cone has height at least 4
    assert brute_min(a3_cone, 3) == []


def test_brute_min_of_example_cone(example_cone):
    assert brute_min(example_cone, 6) == vectors((1, 1, 1))


def test_brute_min_of_regular_cone(regular3_cone):
    assert brute_min(regular3_cone, 10) == []


def test_height_slab_points(a3_cone):
    slab = HeightSlab.of(a3_cone, 4)
    points = sorted(tuple(int(x) for x in row) for row in slab.points())
    assert points == [(1, k) for k in range(5)]


@pytest.mark.parametrize('rays, bound, expected', [
    ([(1, 0), (0, 1)], 5, [(0, 1), (1, 0)]),
    ([(1, 0, 0), (0, 1, 0), (1, 1, 2)], 4, [(0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2)]),
    ([(1, 0), (2, 5)], 6, [(1, 0), (1, 1), (1, 2), (2, 5)]),
])
def test_brute_hilbert(rays, bound, expected):
    c = cone_from_rays(rays, len(rays[0]))
    assert brute_hilbert(c, bound) == vectors(*expected)
    assert brute_hilbert(c, bound) == list(hilbert_basis(c))


def test_coverage_gaps(a3_cone, example_cone, odp_cone):
    for c in (a3_cone, example_cone, odp_cone):
        assert coverage_gaps(c, nash_valuations(c), 5) == []
    assert coverage_gaps(a3_cone, [], 2) == vectors((1, 1), (1, 2), (2, 1), (2, 2))
    # dropping (1, 3) leaves the points above it and nothing else uncovered
    gaps = coverage_gaps(a3_cone, vectors((1, 1), (1, 2)), 4)
    assert LatticeVector.of(1, 3) in gaps
    assert all(a3_cone.contains((v[0] - 1, v[1] - 3)) for v in gaps)


@pytest.mark.slow
def test_brute_min_agrees_on_rank3_corpus(rank3_corpus):
    assert len(rank3_corpus) == 50
    for spec in rank3_corpus:
        c = spec.to_cone()
        found = nash_valuations(c)
        H = 2 * max([c.height_of(v) for v in found] or [c.height_of(u) for u in c.rays])
        assert brute_min(c, H) == found, spec.rays


@pytest.mark.slow
def test_rank2_sets_agree_with_continued_fractions(rank2_corpus):
    assert len(rank2_corpus) >= 100
    for spec in rank2_corpus:
        c = spec.to_cone()
        boundary = hj_boundary(c)
        assert nash_valuations(c) == terminal_valuations(c) == boundary, spec.rays


@pytest.mark.slow
def test_hilbert_basis_agrees_with_brute_force(small_corpus, rank3_corpus):
    for spec in small_corpus + rank3_corpus[::2]:
        c = spec.to_cone()
        basis = list(hilbert_basis(c))
        B = max(abs(x) for v in basis for x in v)
        assert brute_hilbert(c, B) == basis, spec.rays


def test_hj_walk_of_a3(a3_cone):
    points, fraction = hj_walk(a3_cone)
    assert points == vectors((1, 1), (1, 2), (1, 3))
    assert fraction == [2, 2, 2]


def test_hj_walk_of_two_segment_cone():
    c = cone_from_rays([(1, 0), (2, 5)], 2)
    assert hj_boundary(c) == vectors((1, 1), (1, 2))
    assert hj_continued_fraction(c) == [2, 3]


def test_hj_walk_of_regular_cone():
    assert hj_walk(cone_from_rays([(1, 0), (0, 1)], 2)) == ([], [])


def test_hj_walk_needs_rank2(example_cone):
    with pytest.raises(NotRank2):
        hj_walk(example_cone)


def test_hj_boundary_is_inner_hilbert_basis(small_corpus):
    for spec in small_corpus:
        c = spec.to_cone()
        if c.rank != 2:
            continue
        inner = [h for h in hilbert_basis(c) if h not in c.rays]
        assert hj_boundary(c) == inner
        assert all(b >= 2 for b in hj_continued_fraction(c))
