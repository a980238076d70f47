"""Associated-prime height detection through dominating witnesses.

A witness for height k packages k generators, k distinct variables in which
they are strictly maximal within the chosen subset, and the annihilator
monomial v built from their lcm.  The defining property, checked directly
by verify(), is that the colon ideal I : (v) is exactly the prime generated
by the chosen variables.  An independent brute-force oracle scans divisors
of lcm(G(I)) and recovers every variable-prime colon quotient, which is
what the witness search is validated against.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .dominance import dominant_variables, is_dominant_set
from .monomials import (
    MinimalMonomialSet,
    Monomial,
    all_divisors,
    colon_by_monomial,
    contains,
    lcm_set,
    strongly_divides,
    total_degree,
    validate_minimal_set,
)

ORACLE_DIVISOR_GUARD = 10 ** 6


@dataclass(frozen=True)
class DominatingWitness:
    """Certificate that a height len(gens) prime is associated to the ideal.

    gens[t] is strictly maximal in variables[t] among gens, the variables
    are pairwise distinct, and annihilator = lcm(gens) with each assigned
    variable's exponent lowered by one.
    """
    gens: tuple
    variables: tuple
    annihilator: Monomial

    @property
    def height(self) -> int:
        return len(self.gens)

    def verify(self, ideal: MinimalMonomialSet) -> bool:
        """Recheck every structural condition plus the colon identity."""
        k = len(self.gens)
        if len(self.variables) != k or len(set(self.variables)) != k:
            return False
        gen_set = set(ideal)
        if any(g not in gen_set for g in self.gens):
            return False
        for t, i in enumerate(self.variables):
            e = self.gens[t][i]
            if e < 1 or any(self.gens[s][i] >= e for s in range(k) if s != t):
                return False
        rest = [w for w in ideal if w not in set(self.gens)]
        for w in rest:
            if not any(
                w[i] >= self.gens[t][i] for t, i in enumerate(self.variables)
            ):
                return False
        v = list(lcm_set(self.gens))
        for i in self.variables:
            v[i] -= 1
        if tuple(v) != self.annihilator:
            return False
        if contains(ideal, self.annihilator):
            return False
        quotient = colon_by_monomial(ideal, self.annihilator)
        want = set()
        n = len(self.annihilator)
        for i in self.variables:
            e = [0] * n
            e[i] = 1
            want.add(tuple(e))
        return set(quotient) == want

    def to_json_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.gens],
            "variables": list(self.variables),
            "annihilator": list(self.annihilator),
            "height": self.height,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _require_nonzero(ideal: MinimalMonomialSet) -> int:
    validate_minimal_set(ideal)
    if not ideal:
        raise ValueError("the zero ideal has no associated primes here")
    return len(ideal[0])


def dominating_witness(ideal: MinimalMonomialSet, k: int):
    """First witness of height k in canonical order, or None.

    Subsets of the (sorted) generators are visited in combination order;
    variable assignments are tried by backtracking over the ascending list
    of strictly-maximal variables of each member.
    """
    n = _require_nonzero(ideal)
    if not 1 <= k <= n:
        raise ValueError(f"height {k} out of range 1..{n}")
    if k > len(ideal):
        return None
    for subset in combinations(ideal, k):
        candidates = []
        for t in range(k):
            cand = [
                i
                for i in range(n)
                if subset[t][i] >= 1
                and all(subset[s][i] < subset[t][i] for s in range(k) if s != t)
            ]
            candidates.append(cand)
        if any(not c for c in candidates):
            continue
        rest = [w for w in ideal if w not in set(subset)]
        assignment = _assign(subset, candidates, rest, 0, [], set())
        if assignment is not None:
            v = list(lcm_set(subset))
            for i in assignment:
                v[i] -= 1
            return DominatingWitness(subset, tuple(assignment), tuple(v))
    return None


def _assign(subset, candidates, rest, t, chosen, used):
    """Depth-first variable assignment; returns the first full one that
    also covers every leftover generator."""
    if t == len(subset):
        for w in rest:
            if not any(w[i] >= subset[s][i] for s, i in enumerate(chosen)):
                return None
        return list(chosen)
    for i in candidates[t]:
        if i in used:
            continue
        chosen.append(i)
        used.add(i)
        result = _assign(subset, candidates, rest, t + 1, chosen, used)
        if result is not None:
            return result
        chosen.pop()
        used.remove(i)
    return None


def has_associated_prime_of_height(ideal: MinimalMonomialSet, k: int) -> bool:
    return dominating_witness(ideal, k) is not None


def associated_prime_heights(ideal: MinimalMonomialSet) -> set:
    n = _require_nonzero(ideal)
    return {k for k in range(1, n + 1) if dominating_witness(ideal, k)}


def associated_primes_oracle(ideal: MinimalMonomialSet) -> set:
    """All variable sets P with I : (v) = (P) for some monomial v.

    Exhaustive scan over divisors of lcm(G(I)); refuses instances whose
    divisor count exceeds ORACLE_DIVISOR_GUARD.
    """
    _require_nonzero(ideal)
    m = lcm_set(ideal)
    size = 1
    for e in m:
        size *= e + 1
        if size > ORACLE_DIVISOR_GUARD:
            raise ValueError(
                f"divisor scan would visit more than {ORACLE_DIVISOR_GUARD} monomials"
            )
    found = set()
    for v in all_divisors(m):
        if contains(ideal, v):
            continue
        quotient = colon_by_monomial(ideal, v)
        if all(total_degree(g) == 1 for g in quotient):
            found.add(frozenset(g.index(1) for g in quotient))
    return found


def pdim_is_max(ideal: MinimalMonomialSet) -> bool:
    """Projective dimension hits the variable count.

    Criterion: some size-n dominant subset L of the generators has the
    property that no generator strongly divides lcm(L).
    """
    n = _require_nonzero(ideal)
    if len(ideal) < n:
        return False
    for subset in combinations(ideal, n):
        if not is_dominant_set(subset):
            continue
        m = lcm_set(subset)
        if not any(strongly_divides(g, m) for g in ideal):
            return True
    return False


def localization_pdim_bound(ideal: MinimalMonomialSet):
    """Heuristic upper bound for pd(S/I) by localizing away a dominant subset.

    Looks for a maximum-size dominant subset whose dominant variables avoid
    every remaining generator; its size bounds the projective dimension.
    Returns None when no subset qualifies.
    """
    n = _require_nonzero(ideal)
    for k in range(min(len(ideal), n), 0, -1):
        hit = False
        for subset in combinations(ideal, k):
            if not is_dominant_set(subset):
                continue
            hit = True
            dom_vars = set()
            for g in subset:
                dom_vars.update(dominant_variables(g, subset))
            others = [w for w in ideal if w not in set(subset)]
            if all(all(w[i] == 0 for i in dom_vars) for w in others):
                return k
        if hit:
            return None
    return None
