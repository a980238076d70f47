import json
from itertools import permutations, product
from pathlib import Path

import pytest

from dominant_ideals.dominance import is_dominant_ideal, low_or_max_signature
from dominant_ideals.enumeration import (
    _advance,
    _finish,
    axis_candidates,
    count_dominant_with_lcm,
    enumerate_dominant_with_lcm,
    footprint_histogram,
    footprint_histogram_json,
    iter_dominant_with_lcm,
    low_or_max_histogram,
    low_or_max_histogram_json,
)
from dominant_ideals.monomials import divides, lcm_set
from oracles import naive_enumerate_dominant_with_lcm

GOLDEN = Path(__file__).parent / "golden"


def scalar_enumerate(m):
    """Drive the non-vectorized kernel directly, mirroring the dispatcher."""
    n = len(m)
    axes = [[c for c in axis_candidates(m, i) if any(c)] for i in range(n)]
    partials = [(c,) for c in axes[0]]
    for t in range(1, n - 1):
        partials = _advance(partials, axes[t], t >= 2, False)
    return sorted(_finish(partials, axes[n - 1], m, False))


class TestAxisCandidates:
    def test_paper_sizes(self):
        m = (5, 2, 4)
        sizes = [len(axis_candidates(m, i)) for i in range(3)]
        assert sizes == [15, 30, 18]
        assert sizes[0] * sizes[1] * sizes[2] == 8100

    def test_membership(self):
        m = (2, 3)
        for i in range(2):
            for c in axis_candidates(m, i):
                assert c[i] == m[i]
                assert divides(c, m)


def test_zero_and_single_variable():
    assert list(iter_dominant_with_lcm((0, 0))) == [()]
    assert list(iter_dominant_with_lcm(())) == [()]
    assert list(iter_dominant_with_lcm((7,))) == [((7,),)]


@pytest.mark.parametrize("m", [(1, 1), (2, 2), (1, 1, 1), (2, 1, 1), (2, 2, 2),
                               (2, 3), (1, 2, 3), (3, 3, 3)])
def test_enumerated_ideals_are_valid(m):
    seen = set()
    for ideal in iter_dominant_with_lcm(m):
        assert ideal not in seen
        seen.add(ideal)
        assert 1 <= len(ideal) <= len(m)
        assert lcm_set(ideal) == m
        assert is_dominant_ideal(ideal)


def test_oracle_equivalence_small():
    """Exact set equality against the subset-filter oracle, n <= 3, exps <= 2."""
    for n in (1, 2, 3):
        for m in product(range(3), repeat=n):
            mine = enumerate_dominant_with_lcm(m)
            ref = naive_enumerate_dominant_with_lcm(m, max_size=n)
            assert mine == ref, f"mismatch at {m}"


def test_oracle_equivalence_full_power_set():
    # the tiniest targets, with no subset-size cap in the oracle at all
    for m in [(1, 1), (2, 1), (2, 2), (1, 1, 1)]:
        assert enumerate_dominant_with_lcm(m) == naive_enumerate_dominant_with_lcm(m)


def test_scalar_vector_differential():
    for m in [(1, 1), (2, 2), (2, 3), (1, 1, 1), (2, 2, 2), (2, 3, 4),
              (1, 2, 3), (3, 3, 3), (1, 1, 1, 1), (2, 2, 1, 1)]:
        assert scalar_enumerate(m) == enumerate_dominant_with_lcm(m), m


def test_paper_count():
    assert count_dominant_with_lcm((2, 3, 4)) == 675


def test_permutation_equivariance():
    m = (2, 3, 4)
    base = set(enumerate_dominant_with_lcm(m))
    for perm in permutations(range(3)):
        pm = tuple(m[i] for i in perm)
        permuted = set(enumerate_dominant_with_lcm(pm))
        assert len(permuted) == len(base)
        rebuilt = {
            tuple(sorted(tuple(g[perm[j]] for j in range(3)) for g in ideal))
            for ideal in base
        }
        assert rebuilt == permuted


class TestHistograms:
    def test_finer_golden(self):
        expected = (GOLDEN / "footprint_histogram_234.json").read_text().strip()
        assert footprint_histogram_json((2, 3, 4)) == expected

    def test_coarser_golden(self):
        expected = (GOLDEN / "low_or_max_histogram_234.json").read_text().strip()
        assert low_or_max_histogram_json((2, 3, 4)) == expected

    def test_finer_counts_multiset(self):
        counts = sorted((r.count for r in footprint_histogram((2, 3, 4))), reverse=True)
        assert counts == [576, 24, 24, 24, 12, 8, 6, 1]

    def test_coarser_counts_multiset(self):
        counts = sorted((r.count for r in low_or_max_histogram((2, 3, 4))), reverse=True)
        assert counts == [576, 72, 26, 1]

    @pytest.mark.parametrize("m", [(2, 2), (1, 1, 1), (2, 3, 4), (2, 2, 2)])
    def test_sums_and_refinement(self, m):
        total = count_dominant_with_lcm(m)
        finer = footprint_histogram(m)
        coarser = low_or_max_histogram(m)
        assert sum(r.count for r in finer) == total
        assert sum(r.count for r in coarser) == total
        # the coarser key of a footprint profile is determined by it
        n = len(m)
        regrouped = {}
        for r in finer:
            sig = tuple(sorted((sum(fp), n - sum(fp)) for fp in r.key))
            regrouped[sig] = regrouped.get(sig, 0) + r.count
        assert regrouped == {r.key: r.count for r in coarser}

    def test_descending_count_order(self):
        records = footprint_histogram((2, 3, 4))
        counts = [r.count for r in records]
        assert counts == sorted(counts, reverse=True)
        # ties broken by ascending profile key
        for a, b in zip(records, records[1:]):
            if a.count == b.count:
                assert a.key < b.key

    def test_json_shape(self):
        rows = json.loads(footprint_histogram_json((1, 1)))
        assert rows == [
            {"count": 1, "footprint": ["1"]},
            {"count": 1, "footprint": ["y", "x"]},
        ]
