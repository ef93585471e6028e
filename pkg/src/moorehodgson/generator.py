"""Seeded instance generation.

Randomness comes from xorshift64* (Vigna 2014): state updates
``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` on 64 bits, output
``x * 0x2545F4914F6CDD1D mod 2**64``. The state is seeded with one step of
SplitMix64 (increment ``0x9E3779B97F4A7C15``, multipliers
``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB``), so every 64-bit seed,
zero included, gives a non-zero state. Bounded draws use rejection sampling,
never a bare modulo, so streams are identical on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Literal

from .model import Instance, Job

MASK64 = (1 << 64) - 1
DModes = Literal["uniform", "tight", "loose"]
D_MODES = ("uniform", "tight", "loose")
FAMILIES = ("all_late", "none_late", "all_ties", "staircase")


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            r = self.next()
            if r >= threshold:
                return r % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both inclusive."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    p_max: int = 30
    d_mode: DModes = "uniform"
    weighted_opposite: bool = False

    def __post_init__(self) -> None:
        if self.n < 0 or self.p_max < 0:
            raise ValueError("n and p_max must be non-negative")
        if self.d_mode not in D_MODES:
            raise ValueError(f"d_mode must be one of {D_MODES}, got {self.d_mode!r}")


def generate(spec: GenSpec) -> Instance:
    """Draw an instance with ids 1..n.

    Due dates by mode: ``uniform`` draws from [0, total p]; ``tight`` puts each
    due date within [-p_max, +2 p_max] below the cumulative load of the jobs so
    far, clamped at 0; ``loose`` draws from [total p, total p + p_max].
    """
    rng = XorShift64Star(spec.seed)
    n, p_max = spec.n, spec.p_max
    p = [rng.randint(0, p_max) for _ in range(n)]
    total = sum(p)
    if spec.d_mode == "uniform":
        d = [rng.randint(0, total) for _ in range(n)]
    elif spec.d_mode == "tight":
        d = [max(0, load - rng.randint(-p_max, 2 * p_max)) for load in accumulate(p)]
    else:
        d = [rng.randint(total, total + p_max) for _ in range(n)]

    if not spec.weighted_opposite:
        return Instance.from_columns(p, d)

    # longest jobs get the smallest weights; equal p shares one weight
    weight_of: dict[int, int] = {}
    w = 1 + rng.randint(0, p_max)
    for value in sorted(set(p), reverse=True):
        weight_of[value] = w
        w += rng.randint(0, 3)
    rows = [(pi, di, weight_of[pi]) for pi, di in zip(p, d)]
    rng.shuffle(rows)
    return Instance(Job(i + 1, *row) for i, row in enumerate(rows))


def suite(
    seed: int,
    count: int,
    max_n: int,
    *,
    p_max: int = 30,
    d_mode: DModes | Literal["mixed"] = "mixed",
    weighted_opposite: bool = False,
) -> Iterator[Instance]:
    """``count`` reproducible instances with n drawn from [0, max_n].

    ``mixed`` alternates the uniform and tight modes by index.
    """
    rng = XorShift64Star(seed)
    for i in range(count):
        mode = ("uniform", "tight")[i % 2] if d_mode == "mixed" else d_mode
        n = rng.randint(0, max_n)
        yield generate(GenSpec(rng.next(), n, p_max, mode, weighted_opposite))


def adversarial_family(name: str, n: int) -> Instance:
    """Boundary instances.

    ``all_late``: p = 1, d = 0. ``none_late``: p_j = j, every d = total p.
    ``all_ties``: p = 2, d = n - 1 for every job. ``staircase``: p_j = j and
    d_j equal to the cumulative load, so every EDD job finishes exactly on time.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if name == "all_late":
        return Instance.from_columns([1] * n, [0] * n)
    if name == "none_late":
        p = list(range(1, n + 1))
        return Instance.from_columns(p, [sum(p)] * n)
    if name == "all_ties":
        return Instance.from_columns([2] * n, [max(n - 1, 0)] * n)
    if name == "staircase":
        p = list(range(1, n + 1))
        return Instance.from_columns(p, list(accumulate(p)))
    raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")
