"""Dominance predicates, footprints, and low-or-max signatures.

A monomial v in a finite set L is dominant if some variable i has
deg_i(v) > deg_i(w) for every other w in L, i.e. v is the unique attainer of
the columnwise max in variable i.  A set is dominant when all its members
are; an ideal is dominant when its minimal generating set is.  Equivalently,
removing any single generator drops the lcm.
"""
from __future__ import annotations

from itertools import combinations

from .monomials import (
    MinimalMonomialSet,
    Monomial,
    default_var_names,
    lcm_set,
    minimalize,
    render_monomial,
    support,
)

Footprint = tuple[int, ...]
FootprintProfile = tuple[Footprint, ...]
LowOrMaxSignature = tuple[tuple[int, int], ...]


def dominant_variables(v: Monomial, L) -> tuple[int, ...]:
    """Variables in which v strictly exceeds every other member of L.

    v must belong to L.  For a singleton L the comparison is vacuous; the
    convention here is that the dominant variables of a lone monomial are
    its support (variables it actually uses), not all n variables.
    """
    members = list(L)
    if v not in members:
        raise ValueError("v is not a member of L")
    others = [w for w in members if w != v]
    if not others:
        return support(v)
    return tuple(
        i for i, e in enumerate(v) if all(w[i] < e for w in others)
    )


def is_dominant_set(L) -> bool:
    """True when every member of L is dominant in L.

    The empty set and singletons are dominant.  Duplicate monomials are
    rejected: a duplicated element can never strictly exceed its copy, so a
    multiset input is almost always a bug upstream.
    """
    members = [tuple(v) for v in L]
    if len(set(members)) != len(members):
        raise ValueError("duplicate monomials in L")
    if len(members) <= 1:
        return True
    n = len(members[0])
    # unique attainer of the column max in some variable <=> dominant there
    colmax = [0] * n
    attain = [0] * n
    winner = [-1] * n
    for idx, v in enumerate(members):
        if len(v) != n:
            raise ValueError("mixed variable counts in L")
        for i, e in enumerate(v):
            if e > colmax[i]:
                colmax[i] = e
                attain[i] = 1
                winner[i] = idx
            elif e == colmax[i]:
                attain[i] += 1
    dominant = set()
    for i in range(n):
        if attain[i] == 1 and colmax[i] > 0:
            dominant.add(winner[i])
    return len(dominant) == len(members)


def is_dominant_ideal(gens: MinimalMonomialSet) -> bool:
    """Dominance of the ideal given by its minimal generating set.

    The zero ideal (no generators) and principal ideals are dominant.  A
    minimal generating set with more members than variables is never
    dominant.  Input must be a canonical minimal generating set.
    """
    gens = tuple(tuple(g) for g in gens)
    if gens != minimalize(gens):
        raise ValueError("input is not a canonical minimal generating set")
    if len(gens) <= 1:
        return True
    if len(gens) > len(gens[0]):
        return False
    return is_dominant_set(gens)


def footprint(g: Monomial, m: Monomial) -> Footprint:
    """0/1 vector marking the variables where g stays below the target lcm m."""
    if len(g) != len(m):
        raise ValueError("mixed variable counts")
    if any(a > b for a, b in zip(g, m)):
        raise ValueError("generator exceeds the target lcm")
    return tuple(1 if a < b else 0 for a, b in zip(g, m))


def footprint_profile(gens: MinimalMonomialSet) -> FootprintProfile:
    """Multiset of generator footprints relative to lcm(gens), canonically sorted.

    Parts are ordered by (number of marked variables, then ascending lex), so
    e.g. a 2-generator profile prints like [z, x*y].  The zero ideal has the
    empty profile.
    """
    gens = tuple(gens)
    if not gens:
        return ()
    m = lcm_set(gens)
    parts = [footprint(g, m) for g in gens]
    parts.sort(key=lambda fp: (sum(fp), fp))
    return tuple(parts)


def low_or_max_signature(gens: MinimalMonomialSet) -> LowOrMaxSignature:
    """Per-generator (low, max) variable counts relative to lcm(gens).

    low counts variables where the generator is strictly below the lcm, max
    counts where it attains it; low + max = n for every part.  Parts are
    sorted by ascending low count.
    """
    gens = tuple(gens)
    if not gens:
        return ()
    n = len(gens[0])
    m = lcm_set(gens)
    parts = [
        ((low := sum(1 for a, b in zip(g, m) if a < b)), n - low) for g in gens
    ]
    parts.sort()
    return tuple(parts)


def render_footprint(fp: Footprint, names: list[str] | None = None) -> str:
    """Footprint as a squarefree monomial string, e.g. y*z; all-zero is 1."""
    return render_monomial(fp, names or default_var_names(len(fp)))


def render_footprint_profile(profile: FootprintProfile,
                             names: list[str] | None = None) -> str:
    return "[" + ", ".join(render_footprint(fp, names) for fp in profile) + "]"


def render_low_or_max_part(part: tuple[int, int]) -> str:
    """(low, max) counts in l/m exponent notation, e.g. l^2*m or m^3."""
    low, mx = part
    factors = []
    if low == 1:
        factors.append("l")
    elif low > 1:
        factors.append(f"l^{low}")
    if mx == 1:
        factors.append("m")
    elif mx > 1:
        factors.append(f"m^{mx}")
    return "*".join(factors) if factors else "1"


def render_low_or_max_signature(sig: LowOrMaxSignature) -> str:
    return "[" + ", ".join(render_low_or_max_part(p) for p in sig) + "]"


def max_dominant_subset(gens: MinimalMonomialSet
                        ) -> tuple[int, MinimalMonomialSet]:
    """Largest dominant subset of the generators.

    Returns (size, subset), taking the first subset in canonical order
    (descending size, generators ascending, itertools.combinations order)
    so results are deterministic.  Size is at most min(len(gens), n).
    """
    gens = tuple(tuple(g) for g in gens)
    if not gens:
        return 0, ()
    n = len(gens[0])
    for k in range(min(len(gens), n), 0, -1):
        for sub in combinations(gens, k):
            if is_dominant_set(sub):
                return k, sub
    return 0, ()
