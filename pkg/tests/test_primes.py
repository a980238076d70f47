import pytest

from dominant_ideals.dominance import max_dominant_subset
from dominant_ideals.models import ModelSpec, SeedSpec, sample_basic
from dominant_ideals.monomials import parse_ideal
from dominant_ideals.primes import (
    DominatingWitness,
    associated_prime_heights,
    associated_primes_oracle,
    dominating_witness,
    has_associated_prime_of_height,
    localization_pdim_bound,
    pdim_is_max,
)

FOUR_CYCLE = parse_ideal("a*b, a*c, b*d, c*d")
TRIPLE = parse_ideal("x^2*y, x*z^3, y^2*z")


def random_ideals(count, seed, max_gens=6):
    """Small nonzero ideals, deterministic; n in 2..4, degrees up to 4."""
    out = []
    j = 0
    while len(out) < count:
        n = 2 + j % 3
        D = 2 + (j // 3) % 3
        p = (0.08, 0.15, 0.3)[j % 3]
        ideal = sample_basic(ModelSpec.basic(n, D, p), SeedSpec(seed, j))
        j += 1
        if ideal and len(ideal) <= max_gens:
            out.append(ideal)
    return out


class TestWitnessSearch:
    def test_four_cycle_witness(self):
        w = dominating_witness(FOUR_CYCLE, 2)
        assert w is not None and w.verify(FOUR_CYCLE)
        # canonical search order pins the returned witness
        assert w.gens == ((0, 0, 1, 1), (0, 1, 0, 1))
        assert w.variables == (2, 1)
        assert w.annihilator == (0, 0, 0, 1)

    def test_four_cycle_no_height_one(self):
        assert dominating_witness(FOUR_CYCLE, 1) is None

    def test_triple_full_witness(self):
        w = dominating_witness(TRIPLE, 3)
        assert w is not None and w.height == 3
        assert set(w.gens) == set(TRIPLE)
        assert w.verify(TRIPLE)

    def test_principal_too_small(self):
        assert dominating_witness(((1, 1),), 2) is None

    def test_height_out_of_range(self):
        with pytest.raises(ValueError):
            dominating_witness(TRIPLE, 0)
        with pytest.raises(ValueError):
            dominating_witness(TRIPLE, 4)

    def test_zero_ideal_rejected(self):
        with pytest.raises(ValueError):
            dominating_witness((), 1)

    def test_witness_json(self):
        data = dominating_witness(FOUR_CYCLE, 2).to_json_dict()
        assert data["variables"] == [2, 1]
        assert data["annihilator"] == [0, 0, 0, 1]
        assert data["height"] == 2


class TestHeights:
    def test_four_cycle(self):
        assert associated_prime_heights(FOUR_CYCLE) == {2}

    def test_triple_contains_top(self):
        assert 3 in associated_prime_heights(TRIPLE)

    def test_single_variable(self):
        assert associated_prime_heights(((1,),)) == {1}


class TestOracle:
    def test_four_cycle(self):
        assert associated_primes_oracle(FOUR_CYCLE) == {
            frozenset({0, 3}),
            frozenset({1, 2}),
        }

    def test_principal_square(self):
        assert associated_primes_oracle(((2,),)) == {frozenset({0})}

    def test_triple_has_maximal(self):
        assert frozenset({0, 1, 2}) in associated_primes_oracle(TRIPLE)

    def test_size_guard(self):
        with pytest.raises(ValueError):
            associated_primes_oracle(((999, 0), (0, 999)))


def test_witness_heights_match_oracle():
    for ideal in random_ideals(300, seed=20240817):
        byw = associated_prime_heights(ideal)
        byo = {len(p) for p in associated_primes_oracle(ideal)}
        assert byw == byo, ideal


def test_returned_witnesses_verify():
    for ideal in random_ideals(150, seed=7):
        for k in associated_prime_heights(ideal):
            w = dominating_witness(ideal, k)
            assert isinstance(w, DominatingWitness)
            assert w.verify(ideal)


class TestPdimMax:
    def test_blocked_by_interior_generator(self):
        ideal = parse_ideal("a^3*b^2, b^3*c^2, a^2*c^3, a*b*c")
        assert pdim_is_max(ideal) is False
        size, _ = max_dominant_subset(ideal)
        assert size == 3

    def test_unblocked(self):
        assert pdim_is_max(parse_ideal("a^3*b^2, b^3*c^2, a^2*c^3")) is True

    def test_too_few_generators(self):
        assert pdim_is_max(parse_ideal("x, y", nvars=3)) is False

    def test_agrees_with_top_height(self):
        for ideal in random_ideals(200, seed=99):
            n = len(ideal[0])
            assert pdim_is_max(ideal) == has_associated_prime_of_height(ideal, n)

    def test_implies_full_dominant_subset(self):
        for ideal in random_ideals(200, seed=31):
            if pdim_is_max(ideal):
                assert max_dominant_subset(ideal)[0] == len(ideal[0])


class TestLocalizationBound:
    def test_disjoint_dominant_pair(self):
        assert localization_pdim_bound(parse_ideal("x^2*y, z^3")) == 2

    def test_four_cycle_has_no_bound(self):
        assert localization_pdim_bound(FOUR_CYCLE) is None

    def test_principal(self):
        assert localization_pdim_bound(((2, 0, 1),)) == 1

    def test_dominates_detected_heights(self):
        for ideal in random_ideals(200, seed=55):
            bound = localization_pdim_bound(ideal)
            if bound is not None:
                heights = associated_prime_heights(ideal)
                if heights:
                    assert max(heights) <= bound, ideal
