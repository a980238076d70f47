"""Closed-form counts of dominant ideals with a given lcm.

Printed closed forms exist for 2..5 variables.  Independently of those, the
counting polynomial for any small n can be regenerated from scratch: each
dominant ideal with squarefree lcm x_1...x_n contributes the product of its
generators' footprints, read as a monomial in the symbols m_1..m_n, and the
sum over all such ideals counts dominant ideals for every target lcm
m_1..m_n at once (the free exponents below each maximal one are independent
choices).  The regenerated polynomial is the authority; the transcribed
closed forms are cross-checked against it.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .enumeration import count_dominant_with_lcm, iter_dominant_with_lcm


@dataclass(frozen=True)
class CountPolynomial:
    """Polynomial in m_1..m_nvars with integer coefficients.

    terms maps exponent tuples to nonzero coefficients.  Instances compare
    equal exactly when they have identical term maps.
    """
    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for exps, coeff in self.terms.items():
            if len(exps) != self.nvars:
                raise ValueError(f"term {exps} does not have {self.nvars} symbols")
            if coeff == 0:
                raise ValueError(f"zero coefficient stored at {exps}")

    def evaluate(self, point) -> int:
        """Exact evaluation at an integer point (Python ints never overflow)."""
        point = tuple(point)
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        total = 0
        for exps, coeff in self.terms.items():
            prod = coeff
            for base, e in zip(point, exps):
                if e:
                    prod *= base ** e
            total += prod
        return total

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Ascending total degree, then descending lexicographic exponents."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def render(self) -> str:
        """Plain text like 1 + m1*m2 + 3*m1*m2*m3 + m1^2*m2^2*m3^2."""
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"m{i + 1}")
                elif e > 1:
                    factors.append(f"m{i + 1}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts) if parts else "0"

    def term_diff(self, other: "CountPolynomial") -> list[tuple[tuple, int, int]]:
        """Terms where the two polynomials disagree: (exponents, mine, theirs)."""
        if other.nvars != self.nvars:
            raise ValueError("polynomials have different symbol counts")
        keys = set(self.terms) | set(other.terms)
        out = [
            (k, self.terms.get(k, 0), other.terms.get(k, 0))
            for k in keys
            if self.terms.get(k, 0) != other.terms.get(k, 0)
        ]
        out.sort(key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
        return out

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exponents": list(exps), "coefficient": coeff}
                for exps, coeff in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def theorem_polynomial(n: int) -> CountPolynomial:
    """The printed closed-form counting polynomial for n in 2..5, verbatim.

    These are transcriptions of published displays, kept independent of the
    enumeration machinery on purpose; symbolic_formula regenerates the same
    polynomials (for n <= 4 provably, for n = 5 see compare reports).
    """
    if n == 2:
        terms = {(0, 0): 1, (1, 1): 1}
        return CountPolynomial(2, terms)
    if n == 3:
        terms = {(0, 0, 0): 1, (2, 2, 2): 1, (1, 1, 1): 3}
        for i, j in combinations(range(3), 2):
            e = [0, 0, 0]
            e[i] = e[j] = 1
            terms[tuple(e)] = 1
        return CountPolynomial(3, terms)
    if n == 4:
        terms = {(0, 0, 0, 0): 1, (3, 3, 3, 3): 1, (1, 1, 1, 1): 7,
                 (2, 2, 2, 2): 6}
        for i, j in combinations(range(4), 2):
            e = [0] * 4
            e[i] = e[j] = 1
            terms[tuple(e)] = 1
        for trip in combinations(range(4), 3):
            e = [0] * 4
            for i in trip:
                e[i] = 1
            terms[tuple(e)] = 3
            terms[tuple(2 * x for x in e)] = 1
        for i in range(4):
            e = [2] * 4
            e[i] = 1
            terms[tuple(e)] = 3
        return CountPolynomial(4, terms)
    if n == 5:
        terms = {(0, 0, 0, 0, 0): 1, (4, 4, 4, 4, 4): 1, (1, 1, 1, 1, 1): 15,
                 (3, 3, 3, 3, 3): 10, (2, 2, 2, 2, 2): 25}
        for pair in combinations(range(5), 2):
            e = [0] * 5
            for i in pair:
                e[i] = 1
            terms[tuple(e)] = 1
        for trip in combinations(range(5), 3):
            e = [0] * 5
            for i in trip:
                e[i] = 1
            terms[tuple(e)] = 3                       # 3 sum_{i<j<k} m_i m_j m_k
            terms[tuple(2 * x for x in e)] = 1        # sum (m_i m_j m_k)^2
            e2 = [1] * 5
            for i in trip:
                e2[i] = 2
            terms[tuple(e2)] = 9                      # 9 (prod m) sum triples
        for quad in combinations(range(5), 4):
            e = [0] * 5
            for i in quad:
                e[i] = 1
            terms[tuple(e)] = 7                       # 7 sum quads
            terms[tuple(2 * x for x in e)] = 6        # 6 sum quads^2
            terms[tuple(3 * x for x in e)] = 1        # sum quads^3
            e2 = [2] * 5
            for i in quad:
                e2[i] = 3
            terms[tuple(e2)] = 6                      # 6 (prod m)^2 sum quads
            e3 = [1] * 5
            for i in quad:
                e3[i] = 3
            terms[tuple(e3)] = 4                      # 4 (prod m) sum quads^2
            e4 = [1] * 5
            for i in quad:
                e4[i] = 2
            terms[tuple(e4)] = 18                     # 18 (prod m) sum quads
        for i in range(5):
            rest = [j for j in range(5) if j != i]
            for trip in combinations(rest, 3):
                e = [0] * 5
                e[i] = 1
                for j in trip:
                    e[j] = 2
                terms[tuple(e)] = 3                   # 3 sum_i m_i (triples of rest)^2
        return CountPolynomial(5, terms)
    raise ValueError(f"no printed closed form for n = {n}")


def closed_count(m) -> int:
    """Closed-form dominant-ideal count for the lcm target m (2 to 5 variables)."""
    m = tuple(m)
    if not 2 <= len(m) <= 5:
        raise ValueError("closed forms cover 2 to 5 variables only")
    if any(e < 1 for e in m):
        raise ValueError("lcm exponents must be >= 1 here")
    return theorem_polynomial(len(m)).evaluate(m)


@lru_cache(maxsize=None)
def symbolic_formula(n: int) -> CountPolynomial:
    """Regenerate the counting polynomial from the squarefree enumeration.

    Every dominant ideal with lcm x_1...x_n contributes one term: exponent
    vector = per-variable count of generators sitting strictly below the
    lcm there, coefficient 1 (terms merge).  Evaluating at (m_1..m_n) with
    positive integers counts dominant ideals with lcm x^m exactly, because
    the below-maximum exponents of each shape vary independently in ranges
    of size m_i.
    """
    if not 1 <= n <= 6:
        raise ValueError("supported for 1 to 6 variables")
    tally: Counter = Counter()
    for gens in iter_dominant_with_lcm((1,) * n):
        exps = tuple(sum(1 - g[i] for g in gens) for i in range(n))
        tally[exps] += 1
    return CountPolynomial(n, dict(tally))


def evaluate(p: CountPolynomial, m) -> int:
    return p.evaluate(m)


def compare_formula_vs_enumeration(m) -> dict:
    """Cross-check all counting paths at one target; disagreement is data.

    Returns {"m", "formula", "symbolic", "enumeration", "agree",
    "term_diff"}; "formula" is None outside 2..5 variables, and term_diff
    lists coefficient differences between the printed polynomial and the
    regenerated one (empty when they match or no printed form exists).
    """
    m = tuple(m)
    n = len(m)
    enumeration = count_dominant_with_lcm(m)
    symbolic = symbolic_formula(n).evaluate(m) if n <= 6 else None
    formula = None
    diff: list = []
    if 2 <= n <= 5 and all(e >= 1 for e in m):
        formula = theorem_polynomial(n).evaluate(m)
        diff = symbolic_formula(n).term_diff(theorem_polynomial(n))
    present = [v for v in (formula, symbolic, enumeration) if v is not None]
    return {
        "m": list(m),
        "formula": formula,
        "symbolic": symbolic,
        "enumeration": enumeration,
        "agree": len(set(present)) == 1,
        "term_diff": [
            {"exponents": list(e), "symbolic": a, "formula": b}
            for e, a, b in diff
        ],
    }
