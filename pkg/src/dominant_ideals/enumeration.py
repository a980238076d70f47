"""Exhaustive enumeration of dominant monomial ideals with a prescribed lcm.

The search space is the product of per-variable candidate lists: an ideal
with lcm m must contain, for every variable i, a generator with exponent
exactly m_i there.  Tuples from that product are folded axis by axis into
minimal generating sets, deduplicating after every stage and discarding
non-dominant partial sets from the third axis on.  Both moves are lossless:
interchanging minimalize with adjoining commutes, and subsets of dominant
sets are dominant, so a partial form of any final dominant ideal is itself
dominant.  Deduplication uses exact packed keys, never lossy hashes.
"""
from __future__ import annotations

import json
from bisect import bisect, insort
from collections import Counter
from dataclasses import dataclass
from itertools import product

import numpy as np

from .dominance import (
    footprint_profile,
    low_or_max_signature,
    render_footprint,
    render_low_or_max_part,
)
from .monomials import MinimalMonomialSet, Monomial, ideal_to_lists


def _validated(m) -> Monomial:
    m = tuple(m)
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"lcm exponents must be nonnegative ints, got {e!r}")
    return m


def axis_candidates(m, i: int) -> list[Monomial]:
    """Monomials with exponent exactly m_i in variable i, anything up to m
    elsewhere; ascending lexicographic.  Length is prod_{j != i} (m_j + 1)."""
    m = _validated(m)
    if not 0 <= i < len(m):
        raise IndexError(f"axis {i} out of range for {len(m)} variables")
    ranges: list = [range(e + 1) for e in m]
    ranges[i] = (m[i],)
    return list(product(*ranges))


def _column_stats(P, n: int):
    """Per-variable running max, attainer count, and sole-attainer index."""
    colmax = [0] * n
    attain = [0] * n
    winner = [0] * n
    for idx, g in enumerate(P):
        for i in range(n):
            e = g[i]
            if e > colmax[i]:
                colmax[i] = e
                attain[i] = 1
                winner[i] = idx
            elif e and e == colmax[i]:
                attain[i] += 1
    return colmax, attain, winner


def _full_check(Q, n: int, target) -> bool:
    """lcm == target (ignored when None) and every member a sole column winner."""
    colmax, attain, winner = _column_stats(Q, n)
    if target is not None and colmax != target:
        return False
    hits = {winner[i] for i in range(n) if attain[i] == 1 and colmax[i] > 0}
    return len(hits) == len(Q)


def _advance(partials, cand, check_dom: bool, use_bytes: bool):
    """One product stage: adjoin every candidate to every partial form.

    Deduplicates by the exact flattened exponent key before building the new
    form; dominance of a no-drop adjoin is decided in O(n) from the parent's
    column stats.
    """
    n = len(cand[0])
    seen = set()
    out = []
    for P in partials:
        k = len(P)
        key_P = None
        if check_dom:
            colmax, attain, winner = _column_stats(P, n)
            full = (1 << (k + 1)) - 1
        for c in cand:
            # one prescan classifies c: redundant (some h | c), dropping
            # (c | some h), or plain adjoin
            red = False
            drops = None
            for hidx in range(k):
                h = P[hidx]
                ge = True
                le = True
                for a, b in zip(h, c):
                    if a > b:
                        ge = False
                        if not le:
                            break
                    elif b > a:
                        le = False
                        if not ge:
                            break
                if ge:
                    red = True
                    break
                if le:
                    if drops is None:
                        drops = [hidx]
                    else:
                        drops.append(hidx)
            if red:
                # form unchanged: emit P itself the first time around
                if key_P is None:
                    flat_P = [e for g in P for e in g]
                    key_P = bytes(flat_P) if use_bytes else tuple(flat_P)
                    if key_P not in seen:
                        seen.add(key_P)
                        out.append(P)
                continue
            if drops is None:
                pos = bisect(P, c)
                flat = []
                for j in range(pos):
                    flat += P[j]
                flat += c
                for j in range(pos, k):
                    flat += P[j]
                key = bytes(flat) if use_bytes else tuple(flat)
                if key in seen:
                    continue
                seen.add(key)
                if check_dom:
                    mask = 0
                    for i in range(n):
                        e = c[i]
                        cm = colmax[i]
                        if e > cm:
                            mask |= 1 << k
                        elif e < cm and attain[i] == 1:
                            mask |= 1 << winner[i]
                        # a tie leaves the column without a sole winner
                    if mask != full:
                        continue
                out.append((*P[:pos], c, *P[pos:]))
            else:
                kept = [P[j] for j in range(k) if j not in drops]
                insort(kept, c)
                Q = tuple(kept)
                flat_Q = [e for g in Q for e in g]
                key = bytes(flat_Q) if use_bytes else tuple(flat_Q)
                if key in seen:
                    continue
                seen.add(key)
                if check_dom and len(Q) > 2 and not _full_check(Q, n, None):
                    continue
                out.append(Q)
    return out


def _finish(partials, cand, m, use_bytes: bool):
    """Adjoin the last axis; keep forms with lcm exactly m that stay dominant."""
    n = len(m)
    target = list(m)
    seen = set()
    for P in partials:
        k = len(P)
        full = (1 << (k + 1)) - 1
        colmax, attain, winner = _column_stats(P, n)
        key_P = None
        for c in cand:
            red = False
            drops = None
            for hidx in range(k):
                h = P[hidx]
                ge = True
                le = True
                for a, b in zip(h, c):
                    if a > b:
                        ge = False
                        if not le:
                            break
                    elif b > a:
                        le = False
                        if not ge:
                            break
                if ge:
                    red = True
                    break
                if le:
                    if drops is None:
                        drops = [hidx]
                    else:
                        drops.append(hidx)
            if red:
                # form unchanged; partials are dominant, so only lcm matters
                if key_P is None:
                    flat_P = [e for g in P for e in g]
                    key_P = bytes(flat_P) if use_bytes else tuple(flat_P)
                    if key_P not in seen:
                        seen.add(key_P)
                        if colmax == target:
                            yield P
                continue
            if drops is None:
                pos = bisect(P, c)
                flat = []
                for j in range(pos):
                    flat += P[j]
                flat += c
                for j in range(pos, k):
                    flat += P[j]
                key = bytes(flat) if use_bytes else tuple(flat)
                if key in seen:
                    continue
                seen.add(key)
                mask = 0
                ok = True
                for i in range(n):
                    e = c[i]
                    cm = colmax[i]
                    if e > cm:
                        if e != m[i]:
                            ok = False
                            break
                        mask |= 1 << k
                    else:
                        if cm != m[i]:
                            ok = False
                            break
                        if e < cm and attain[i] == 1:
                            mask |= 1 << winner[i]
                if ok and mask == full:
                    yield (*P[:pos], c, *P[pos:])
            else:
                kept = [P[j] for j in range(k) if j not in drops]
                insort(kept, c)
                Q = tuple(kept)
                flat_Q = [e for g in Q for e in g]
                key = bytes(flat_Q) if use_bytes else tuple(flat_Q)
                if key in seen:
                    continue
                seen.add(key)
                if _full_check(Q, n, target):
                    yield Q


def _adjoin(P, c):
    """Minimal generating set of P plus c; None when c is already in the ideal."""
    kept = []
    for h in P:
        ge = True
        le = True
        for a, b in zip(h, c):
            if a > b:
                ge = False
                if not le:
                    break
            elif b > a:
                le = False
                if not ge:
                    break
        if ge:
            return None
        if not le:
            kept.append(h)
    insort(kept, c)
    return tuple(kept)


def _stage_vec(partials, cand, need_lcm: bool, m):
    """One product stage over uint8 exponents, batched through numpy.

    Every (form, candidate) pair is classified and fully validated at C
    speed, including pairs where the candidate swallows members; only
    accepted pairs reach Python, for key building and deduplication.  Yields
    exactly the forms the scalar stage functions would produce (set-wise;
    order of first arrival may differ, which callers never rely on).
    """
    n = len(m)
    m_arr = np.asarray(m, dtype=np.uint8)
    target = list(m) if need_lcm else None
    C = np.asarray(cand, dtype=np.uint8)
    q = C.shape[0]
    e = C[None, :, :]
    seen = set()
    groups: dict[int, list] = {}
    for P in partials:
        groups.setdefault(len(P), []).append(P)
    for k in sorted(groups):
        forms = groups[k]
        chunk = max(1, 8_000_000 // (q * k * n))
        for lo in range(0, len(forms), chunk):
            block = forms[lo:lo + chunk]
            Parr = np.asarray(block, dtype=np.uint8)
            Pe = Parr[:, None, :, :]                      # (B,1,k,n)
            Ce = C[None, :, None, :]                      # (1,q,1,n)
            red = (Ce >= Pe).all(3).any(2)                # some h | c
            le = (Ce <= Pe).all(3)                        # c | h: h dropped
            dropany = le.any(2)
            # column stats of the would-be form Q = kept members + c
            masked = np.where(le[:, :, :, None], np.uint8(0), Pe)
            colmax_q = np.maximum(masked.max(2), e)       # (B,q,n)
            eq_members = (Pe == colmax_q[:, :, None, :]) & ~le[:, :, :, None]
            attain = eq_members.sum(2, dtype=np.int16)
            c_attains = e == colmax_q
            sole = ((attain + c_attains) == 1) & (colmax_q > 0)
            valid = (c_attains & sole).any(2)             # c wins a column
            for h in range(k):
                won_h = (Parr[:, h, :][:, None, :] == colmax_q) & sole
                valid &= won_h.any(2) | le[:, :, h]       # kept h wins one too
            if need_lcm:
                valid &= (colmax_q == m_arr).all(2)
            valid &= ~red

            if red.any():
                colmax_p = Parr.max(1)
                for b in np.nonzero(red.any(1))[0].tolist():
                    # a candidate already lies in the form: form survives as is
                    P = block[b]
                    key = bytes([x for g in P for x in g])
                    if key not in seen:
                        seen.add(key)
                        if target is None or colmax_p[b].tolist() == target:
                            yield P
            bs, cs = np.nonzero(valid & ~dropany)
            for b, ci in zip(bs.tolist(), cs.tolist()):
                P = block[b]
                c = cand[ci]
                pos = bisect(P, c)
                flat = []
                for j in range(pos):
                    flat += P[j]
                flat += c
                for j in range(pos, k):
                    flat += P[j]
                key = bytes(flat)
                if key not in seen:
                    seen.add(key)
                    yield (*P[:pos], c, *P[pos:])
            bs, cs = np.nonzero(valid & dropany)
            for b, ci in zip(bs.tolist(), cs.tolist()):
                # candidate swallowed members; validity is already decided
                Q = _adjoin(block[b], cand[ci])
                key = bytes([x for g in Q for x in g])
                if key not in seen:
                    seen.add(key)
                    yield Q


def iter_dominant_with_lcm(m):
    """Yield each dominant minimal generating set with lcm exactly m, once.

    Deterministic order, but not sorted; see enumerate_dominant_with_lcm.
    The zero lcm yields only the zero ideal.
    """
    m = _validated(m)
    n = len(m)
    if n == 0 or not any(m):
        yield ()
        return
    if n == 1:
        yield ((m[0],),)
        return
    axes = [[c for c in axis_candidates(m, i) if any(c)] for i in range(n)]
    if max(m) < 256:
        partials = [(c,) for c in axes[0]]
        for t in range(1, n - 1):
            partials = list(_stage_vec(partials, axes[t], False, m))
        yield from _stage_vec(partials, axes[n - 1], True, m)
        return
    partials = [(c,) for c in axes[0]]
    for t in range(1, n - 1):
        partials = _advance(partials, axes[t], t >= 2, False)
    yield from _finish(partials, axes[n - 1], m, False)


def enumerate_dominant_with_lcm(m) -> list[MinimalMonomialSet]:
    """All dominant ideals with lcm exactly m, sorted ascending."""
    return sorted(iter_dominant_with_lcm(m))


def count_dominant_with_lcm(m) -> int:
    return sum(1 for _ in iter_dominant_with_lcm(m))


@dataclass(frozen=True)
class HistogramRecord:
    """One group of the enumeration: a profile/signature key and its size."""
    key: tuple
    count: int


def _tally(m, classifier) -> list[HistogramRecord]:
    counts = Counter(classifier(I) for I in iter_dominant_with_lcm(m))
    records = [HistogramRecord(key, c) for key, c in counts.items()]
    records.sort(key=lambda r: (-r.count, r.key))
    return records


def footprint_histogram(m) -> list[HistogramRecord]:
    """Enumeration grouped by footprint profile; descending count, then key."""
    return _tally(m, footprint_profile)


def low_or_max_histogram(m) -> list[HistogramRecord]:
    """Enumeration grouped by low-or-max signature; descending count, then key."""
    return _tally(m, low_or_max_signature)


def footprint_histogram_json(m, names: list[str] | None = None) -> str:
    """Finer histogram in the record layout {"count": .., "footprint": [..]}."""
    rows = [
        {"count": r.count,
         "footprint": [render_footprint(fp, names) for fp in r.key]}
        for r in footprint_histogram(m)
    ]
    return json.dumps(rows, indent=2)


def low_or_max_histogram_json(m) -> str:
    """Coarser histogram in the record layout {"low_or_max": [..], "count": ..}."""
    rows = [
        {"low_or_max": [render_low_or_max_part(p) for p in r.key],
         "count": r.count}
        for r in low_or_max_histogram(m)
    ]
    return json.dumps(rows, indent=2)


def enumeration_jsonl(m) -> str:
    """One ideal per line as a JSON list of exponent lists, sorted."""
    return "\n".join(
        json.dumps(ideal_to_lists(I), separators=(",", ":"))
        for I in enumerate_dominant_with_lcm(m)
    )
