"""Random monomial ideal samplers and the probability grids they sweep.

Three models: "basic" keeps each nonconstant monomial of degree at most D
independently with probability p; "graded" uses one probability per degree;
"fixed-count" draws a prescribed number of monomials per degree uniformly
without replacement.  Sampling is pure given (spec, seed, stream): the
stream index selects an independent substream of one master seed, so batch
generation can run in any order and still reproduce byte for byte.

RNG pinning: numpy's default_rng (PCG64) seeded with
SeedSequence(seed, spawn_key=(stream,)).  Reproducibility of the same build
is the contract; numpy guarantees PCG64 stream stability across releases.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .monomials import MinimalMonomialSet, count_monomials, enumerate_monomials, minimalize

MIXED_DEGREE_RETRY_LIMIT = 1000

VARIANTS = ("basic", "graded", "fixed-count")


@dataclass(frozen=True)
class ModelSpec:
    """One sampler configuration; exactly the active variant's fields are set.

    basic: p is a single probability.  graded: p is a length-D vector,
    slot d-1 governing degree d.  fixed-count: M is a length-D vector of
    generator counts per degree.
    """
    variant: str
    n: int
    D: int
    p: object = None
    M: object = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 1 or self.D < 1:
            raise ValueError("need n >= 1 and D >= 1")
        if self.variant == "basic":
            if self.M is not None or not isinstance(self.p, (int, float)):
                raise ValueError("basic model takes a single probability p")
            if not 0 <= self.p <= 1:
                raise ValueError(f"probability {self.p} outside [0, 1]")
        elif self.variant == "graded":
            if self.M is not None or self.p is None:
                raise ValueError("graded model takes a probability vector p")
            object.__setattr__(self, "p", tuple(float(x) for x in self.p))
            if len(self.p) != self.D:
                raise ValueError(f"need {self.D} probabilities, got {len(self.p)}")
            if any(not 0 <= x <= 1 for x in self.p):
                raise ValueError("graded probabilities must lie in [0, 1]")
        else:
            if self.p is not None or self.M is None:
                raise ValueError("fixed-count model takes a count vector M")
            object.__setattr__(self, "M", tuple(int(x) for x in self.M))
            if len(self.M) != self.D:
                raise ValueError(f"need {self.D} counts, got {len(self.M)}")
            if any(g < 0 for g in self.M):
                raise ValueError("generator counts must be nonnegative")
            for d, g in enumerate(self.M, start=1):
                cap = count_monomials(self.n, d, "exact")
                if g > cap:
                    raise ValueError(
                        f"{g} generators requested in degree {d}, only {cap} monomials exist"
                    )

    @staticmethod
    def basic(n: int, D: int, p: float) -> "ModelSpec":
        return ModelSpec("basic", n, D, p=float(p))

    @staticmethod
    def graded(n: int, D: int, p) -> "ModelSpec":
        return ModelSpec("graded", n, D, p=tuple(p))

    @staticmethod
    def fixed_count(n: int, M) -> "ModelSpec":
        M = tuple(M)
        return ModelSpec("fixed-count", n, len(M), M=M)

    @staticmethod
    def single_degree_fixed_count(n: int, d: int, g: int) -> "ModelSpec":
        M = [0] * d
        M[d - 1] = g
        return ModelSpec.fixed_count(n, M)

    def to_json_dict(self) -> dict:
        out = {"variant": self.variant, "n": self.n, "D": self.D}
        if self.variant == "basic":
            out["p"] = self.p
        elif self.variant == "graded":
            out["p"] = list(self.p)
        else:
            out["M"] = list(self.M)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "ModelSpec":
        variant = data["variant"]
        if variant == "basic":
            return ModelSpec.basic(data["n"], data["D"], data["p"])
        if variant == "graded":
            return ModelSpec.graded(data["n"], data["D"], data["p"])
        if variant == "fixed-count":
            return ModelSpec.fixed_count(data["n"], data["M"])
        raise ValueError(f"unknown variant {variant!r}")

    @staticmethod
    def from_json(text: str) -> "ModelSpec":
        return ModelSpec.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class SeedSpec:
    """Master seed plus substream index; one pair per sample."""
    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.stream < 0:
            raise ValueError("stream index must be nonnegative")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(
            np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        )


@lru_cache(maxsize=128)
def _pool(n: int, degree: int, mode: str) -> tuple:
    return tuple(enumerate_monomials(n, degree, mode))


def raw_basic_sample(spec: ModelSpec, seed: SeedSpec) -> tuple:
    """The pre-minimalization draw of the basic model, for distribution tests."""
    if spec.variant != "basic":
        raise ValueError("raw_basic_sample needs a basic spec")
    pool = _pool(spec.n, spec.D, "up-to")
    mask = seed.rng().random(len(pool)) < spec.p
    return tuple(pool[i] for i in np.flatnonzero(mask))


def sample_basic(spec: ModelSpec, seed: SeedSpec) -> MinimalMonomialSet:
    return minimalize(raw_basic_sample(spec, seed))


def sample_graded(spec: ModelSpec, seed: SeedSpec) -> MinimalMonomialSet:
    if spec.variant != "graded":
        raise ValueError("sample_graded needs a graded spec")
    rng = seed.rng()
    chosen = []
    for d in range(1, spec.D + 1):
        pool = _pool(spec.n, d, "exact")
        mask = rng.random(len(pool)) < spec.p[d - 1]
        chosen.extend(pool[i] for i in np.flatnonzero(mask))
    return minimalize(chosen)


def _draw_degree_slice(rng, n: int, d: int, g: int) -> list:
    pool = _pool(n, d, "exact")
    idx = rng.choice(len(pool), size=g, replace=False)
    return [pool[i] for i in sorted(idx.tolist())]


def sample_fixed_count(spec: ModelSpec, seed: SeedSpec) -> MinimalMonomialSet:
    """Exactly M_d minimal generators in each degree d.

    A single nonzero entry needs no retries: distinct monomials of one
    degree never divide each other.  Mixed degrees resample until the
    minimalized result matches M, which the retry limit fences.
    """
    if spec.variant != "fixed-count":
        raise ValueError("sample_fixed_count needs a fixed-count spec")
    rng = seed.rng()
    active = [(d, g) for d, g in enumerate(spec.M, start=1) if g > 0]
    if not active:
        return ()
    if len(active) == 1:
        d, g = active[0]
        return minimalize(_draw_degree_slice(rng, spec.n, d, g))
    for _ in range(MIXED_DEGREE_RETRY_LIMIT):
        raw = []
        for d, g in active:
            raw.extend(_draw_degree_slice(rng, spec.n, d, g))
        ideal = minimalize(raw)
        counts = [0] * spec.D
        for m in ideal:
            counts[sum(m) - 1] += 1
        if tuple(counts) == spec.M:
            return ideal
    raise RuntimeError(
        f"no sample matched M={spec.M} in {MIXED_DEGREE_RETRY_LIMIT} tries"
    )


def sample(spec: ModelSpec, seed: SeedSpec) -> MinimalMonomialSet:
    if spec.variant == "basic":
        return sample_basic(spec, seed)
    if spec.variant == "graded":
        return sample_graded(spec, seed)
    return sample_fixed_count(spec, seed)


def probability_grid_basic(n: int, d: int) -> list:
    """Half-gap midpoints of the threshold sequence 1/d^x, unioned with tenths.

    Matches the published sweep code trace: only the gap midpoints survive
    from the threshold sequence itself.
    """
    if n < 2 or d < 2:
        raise ValueError("grid needs n >= 2 and d >= 2")
    thresholds = sorted(1 / d ** x for x in range(1, n + 1))
    gaps = {
        (hi - lo) / 2
        for lo, hi in zip(thresholds, thresholds[1:])
    }
    return sorted(gaps | {x / 10 for x in range(1, 10)})


def probability_grid_graded(n: int, d: int) -> list:
    """Basic grid plus the 20 evenly spaced values x/(20d)."""
    extra = {x / (20 * d) for x in range(1, 21)}
    return sorted(set(probability_grid_basic(n, d)) | extra)
