"""Monomials as exponent vectors and minimal generating sets of monomial ideals.

A monomial in n variables is a tuple of n nonnegative ints.  A monomial ideal
is carried around as its unique minimal generating set: a tuple of monomials,
pairwise incomparable under divisibility, sorted ascending lexicographically.
The empty tuple is the zero ideal.  Exponents are plain Python ints, so there
is no overflow regime to worry about.
"""
from __future__ import annotations

import json
import re
from itertools import product
from math import comb

Monomial = tuple[int, ...]
MinimalMonomialSet = tuple[Monomial, ...]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"
_XYZW = "xyzw"


def monomial(exponents) -> Monomial:
    """Validate and normalize an exponent sequence into a Monomial."""
    m = tuple(exponents)
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"exponents must be nonnegative ints, got {e!r}")
    return m


def unit(nvars: int) -> Monomial:
    return (0,) * nvars


def is_unit(m: Monomial) -> bool:
    return not any(m)


def total_degree(m: Monomial) -> int:
    return sum(m)


def degree_in(m: Monomial, i: int) -> int:
    """Exponent of variable i (0-based) in m."""
    if not 0 <= i < len(m):
        raise IndexError(f"variable index {i} out of range for {len(m)} variables")
    return m[i]


def support(m: Monomial) -> tuple[int, ...]:
    """Indices of variables appearing in m with positive exponent."""
    return tuple(i for i, e in enumerate(m) if e > 0)


def _check_same_ring(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ValueError(f"mixed variable counts: {len(u)} vs {len(v)}")


def divides(u: Monomial, v: Monomial) -> bool:
    """u | v componentwise."""
    _check_same_ring(u, v)
    return all(a <= b for a, b in zip(u, v))


def strongly_divides(u: Monomial, v: Monomial) -> bool:
    """u | v with strict inequality in every variable of u's support.

    Equivalently u divides v / (product of the variables in supp(u)).
    """
    _check_same_ring(u, v)
    return all(a == 0 or a < b for a, b in zip(u, v))


def lcm_pair(u: Monomial, v: Monomial) -> Monomial:
    _check_same_ring(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def gcd_pair(u: Monomial, v: Monomial) -> Monomial:
    _check_same_ring(u, v)
    return tuple(a if a <= b else b for a, b in zip(u, v))


def lcm_set(mons, nvars: int | None = None) -> Monomial:
    """Componentwise max of a collection of monomials.

    The empty collection needs nvars to know the ring; its lcm is the unit
    monomial (lcm of the zero ideal's generators).
    """
    mons = list(mons)
    if not mons:
        if nvars is None:
            raise ValueError("lcm of an empty set needs nvars")
        return unit(nvars)
    acc = list(mons[0])
    n = len(acc)
    for m in mons[1:]:
        if len(m) != n:
            raise ValueError(f"mixed variable counts: {n} vs {len(m)}")
        for i, e in enumerate(m):
            if e > acc[i]:
                acc[i] = e
    return tuple(acc)


def minimalize(mons) -> MinimalMonomialSet:
    """Minimal generating set of the ideal generated by mons.

    Drops duplicates and every monomial strictly divisible by another one;
    result is sorted ascending lexicographically.  minimalize([]) is the
    zero ideal.  A unit generator collapses the ideal to the whole ring,
    which this codebase does not model, so it raises.
    """
    gens = sorted(set(tuple(m) for m in mons))
    if not gens:
        return ()
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError("generators live in different rings")
        if not any(g):
            raise ValueError("unit generator: ideal is the whole ring")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
    # a proper divisor has strictly smaller total degree, so scanning in
    # degree order only ever needs comparisons against already-kept elements
    keep: list[Monomial] = []
    for g in sorted(gens, key=sum):
        if not any(all(a <= b for a, b in zip(h, g)) for h in keep):
            keep.append(g)
    keep.sort()
    return tuple(keep)


def validate_minimal_set(gens: MinimalMonomialSet) -> None:
    """Raise unless gens is a canonical minimal generating set."""
    if tuple(gens) != minimalize(gens):
        raise ValueError("not a canonical minimal generating set")


def colon_by_monomial(gens: MinimalMonomialSet, v: Monomial) -> MinimalMonomialSet:
    """Minimal generating set of (I : v) for I given by gens.

    The colon ideal of a monomial ideal by a monomial is generated by the
    quotients u / gcd(u, v) over the generators u of I.
    """
    if not gens:
        return ()
    _check_same_ring(gens[0], v)
    quotients = [tuple(max(a - b, 0) for a, b in zip(u, v)) for u in gens]
    if any(not any(q) for q in quotients):
        # some generator divides v: the colon is the whole ring; callers
        # treat that case before colonning, so make the failure loud
        raise ValueError("v lies in the ideal; colon is the whole ring")
    return minimalize(quotients)


def contains(gens: MinimalMonomialSet, v: Monomial) -> bool:
    """Ideal membership: some generator divides v."""
    return any(divides(g, v) for g in gens)


def enumerate_monomials(nvars: int, degree: int, mode: str = "up-to"):
    """All monomials of total degree == degree ("exact") or 1..degree ("up-to").

    The constant monomial is never included.  Yields in ascending
    lexicographic order of exponent tuples within the chosen population.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if mode not in ("up-to", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    lo = max(degree, 1) if mode == "exact" else 1
    out = [
        m
        for m in product(range(degree + 1), repeat=nvars)
        if lo <= sum(m) <= degree
    ]
    out.sort()
    return out


def count_monomials(nvars: int, degree: int, mode: str = "up-to") -> int:
    """Size of enumerate_monomials(nvars, degree, mode) without materializing."""
    if mode == "exact":
        return comb(degree + nvars - 1, nvars - 1) if degree >= 1 else 0
    if mode == "up-to":
        # monomials of degree <= D, minus the constant
        return comb(degree + nvars, nvars) - 1
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# text forms
#
# Tuple form "[2,3,4]" is the exact round-trip carrier.  String form
# "x1^2*x2^3*x3^4" uses 1-based variable indices.  Letter form "a^3*b" maps
# letters to positions: if every letter drawn from {x,y,z,w}, the alphabet is
# x,y,z,w; otherwise it is a..z.  Letter juxtaposition ("a^3b^2c") is allowed.
# ---------------------------------------------------------------------------

_INDEXED_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?\Z")
_LETTER_TOKEN = re.compile(r"([a-z])(?:\^(\d+))?")
_LETTER_FORM = re.compile(r"(?:[a-z](?:\^\d+)?)+\Z")


def default_var_names(nvars: int) -> list[str]:
    """Display names: x,y,z up to three variables, x,y,z,w for four, x1..xn after."""
    if nvars <= 3:
        return list("xyz")[:nvars]
    if nvars == 4:
        return list(_XYZW)
    return [f"x{i + 1}" for i in range(nvars)]


def render_exponents(m: Monomial) -> str:
    """Tuple form, e.g. [2,3,4]."""
    return "[" + ",".join(str(e) for e in m) + "]"


def render_monomial(m: Monomial, names: list[str] | None = None) -> str:
    """String form with given display names (default x1..xn); unit renders as 1."""
    if names is None:
        names = [f"x{i + 1}" for i in range(len(m))]
    if len(names) < len(m):
        raise ValueError("not enough variable names")
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def render_ideal(gens: MinimalMonomialSet, names: list[str] | None = None) -> str:
    if not gens:
        return "0"
    return ", ".join(render_monomial(g, names) for g in gens)


def _letters_used(text: str) -> set[str]:
    return set(re.findall(r"[a-z]", text))


def _letter_alphabet(letters: set[str]) -> str:
    return _XYZW if letters <= set(_XYZW) else _LETTERS


def _parse_letter_form(text: str, alphabet: str, nvars: int | None) -> Monomial:
    body = text.replace("*", "")
    if not _LETTER_FORM.match(body):
        raise ValueError(f"cannot parse monomial {text!r}")
    width = 0
    pairs = []
    for letter, exp in _LETTER_TOKEN.findall(body):
        idx = alphabet.index(letter)
        pairs.append((idx, int(exp) if exp else 1))
        width = max(width, idx + 1)
    n = nvars if nvars is not None else width
    if n < width:
        raise ValueError(f"{text!r} needs {width} variables, nvars={n}")
    exps = [0] * n
    for idx, e in pairs:
        exps[idx] += e
    return tuple(exps)


def _parse_indexed_form(text: str, nvars: int | None) -> Monomial:
    pairs = []
    width = 0
    for token in text.split("*"):
        mt = _INDEXED_TOKEN.match(token.strip())
        if not mt:
            raise ValueError(f"cannot parse monomial {text!r}")
        idx = int(mt.group(1)) - 1
        if idx < 0:
            raise ValueError(f"variable indices are 1-based: {token!r}")
        pairs.append((idx, int(mt.group(2)) if mt.group(2) else 1))
        width = max(width, idx + 1)
    n = nvars if nvars is not None else width
    if n < width:
        raise ValueError(f"{text!r} needs {width} variables, nvars={n}")
    exps = [0] * n
    for idx, e in pairs:
        exps[idx] += e
    return tuple(exps)


def _is_indexed_form(text: str) -> bool:
    return all(_INDEXED_TOKEN.match(t.strip()) for t in text.split("*"))


def parse_monomial(text: str, nvars: int | None = None) -> Monomial:
    """Parse tuple, indexed, or letter form.  "1" is the unit (needs nvars)."""
    text = text.strip()
    if not text:
        raise ValueError("empty monomial text")
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(e, int) for e in data):
            raise ValueError(f"tuple form must be a list of ints: {text!r}")
        m = monomial(data)
        if nvars is not None and len(m) != nvars:
            raise ValueError(f"{text!r} has {len(m)} variables, nvars={nvars}")
        return m
    if text == "1":
        if nvars is None:
            raise ValueError("unit monomial needs nvars")
        return unit(nvars)
    if _is_indexed_form(text):
        return _parse_indexed_form(text, nvars)
    return _parse_letter_form(text, _letter_alphabet(_letters_used(text)), nvars)


def parse_ideal(text: str, nvars: int | None = None) -> MinimalMonomialSet:
    """Parse a generating set and minimalize it.

    Accepts a JSON list of exponent lists, or a comma-separated list of
    string/letter-form monomials.  Letter-form generators are parsed jointly:
    the alphabet and variable count are chosen from all generators at once,
    so "ab, c" is a 3-variable ideal.  "0" or an empty string is the zero
    ideal (then nvars says which ring it lives in, default 0 variables).
    """
    text = text.strip()
    if text in ("", "0"):
        return ()
    if text.startswith("[["):
        data = json.loads(text)
        gens = [monomial(row) for row in data]
        widths = {len(g) for g in gens}
        if len(widths) > 1:
            raise ValueError("generators live in different rings")
        if nvars is not None and widths and widths != {nvars}:
            raise ValueError(f"generators have {widths.pop()} variables, nvars={nvars}")
        return minimalize(gens)
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if any(p.startswith("[") for p in parts):
        gens = [parse_monomial(p, nvars) for p in parts]
        widths = {len(g) for g in gens}
        if len(widths) > 1:
            raise ValueError("generators live in different rings")
        return minimalize(gens)
    if all(_is_indexed_form(p) or p == "1" for p in parts):
        if nvars is None:
            nvars = 0
            for p in parts:
                if p != "1":
                    nvars = max(nvars, len(_parse_indexed_form(p, None)))
        return minimalize(_parse_indexed_form(p, nvars) if p != "1" else unit(nvars)
                          for p in parts)
    letters = set()
    for p in parts:
        letters |= _letters_used(p)
    alphabet = _letter_alphabet(letters)
    if nvars is None:
        nvars = max((alphabet.index(c) + 1 for c in letters), default=0)
    return minimalize(_parse_letter_form(p, alphabet, nvars) for p in parts)


def ideal_to_lists(gens: MinimalMonomialSet) -> list[list[int]]:
    """JSON-friendly shape."""
    return [list(g) for g in gens]


def ideal_from_lists(rows) -> MinimalMonomialSet:
    return minimalize(monomial(r) for r in rows)


def all_divisors(m: Monomial):
    """Every monomial dividing m, ascending lex.  Π(m_i+1) of them."""
    return product(*(range(e + 1) for e in m))


def divisor_count(m: Monomial) -> int:
    out = 1
    for e in m:
        out *= e + 1
    return out
