"""Monte-Carlo estimation of how often random families admit 0 / 1 / 2+ common sums.

Families are sampled the same way the cipher's filler items are drawn, m
uniform d-digit items (no leading zero) per set, n sets, so the frequencies
describe the system as actually generated. Each trial gets its own RNG
derived from (seed, trial index), making the aggregate independent of
execution order.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .core import ResultKind, solve_missp


@dataclass(frozen=True)
class UniquenessStats:
    n: int
    m: int
    d: int
    trials: int
    none_count: int
    unique_count: int
    multi_count: int

    def __post_init__(self):
        if self.none_count + self.unique_count + self.multi_count != self.trials:
            raise ValueError("counts must sum to trials")

    @property
    def p_none(self) -> float:
        return self.none_count / self.trials

    @property
    def p_unique(self) -> float:
        return self.unique_count / self.trials

    @property
    def p_multi(self) -> float:
        return self.multi_count / self.trials

    @property
    def p_any(self) -> float:
        """Frequency of at least one common sum."""
        return (self.unique_count + self.multi_count) / self.trials


def _trial_rng(seed: int, index: int) -> random.Random:
    # fixed mix so trial i sees the same stream no matter how trials are batched
    return random.Random(((seed & 0xFFFFFFFF) << 32) ^ index)


def estimate_uniqueness(n: int, m: int, d: int, trials: int, seed: int = 0) -> UniquenessStats:
    """Sample ``trials`` random families and classify each with the solver."""
    if n < 1 or m < 1 or d < 1:
        raise ValueError("n, m, d must all be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lo, hi = 10 ** (d - 1), 10 ** d - 1
    counts = {ResultKind.NONE: 0, ResultKind.UNIQUE: 0, ResultKind.AMBIGUOUS: 0}
    for i in range(trials):
        rng = _trial_rng(seed, i)
        family = [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]
        counts[solve_missp(family).kind] += 1
    return UniquenessStats(
        n=n, m=m, d=d, trials=trials,
        none_count=counts[ResultKind.NONE],
        unique_count=counts[ResultKind.UNIQUE],
        multi_count=counts[ResultKind.AMBIGUOUS],
    )


def sweep(
    ns: Sequence[int], ms: Sequence[int], ds: Sequence[int],
    trials: int, seed: int = 0,
) -> list[UniquenessStats]:
    """Estimate over the full cross product of parameter values."""
    return [
        estimate_uniqueness(n, m, d, trials, seed)
        for n in ns
        for m in ms
        for d in ds
    ]


CSV_HEADER = ["n", "m", "d", "trials", "p_none", "p_unique", "p_multi"]


def write_stats_csv(stats: Iterable[UniquenessStats], out: IO[str]) -> None:
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for s in stats:
        writer.writerow([s.n, s.m, s.d, s.trials, s.p_none, s.p_unique, s.p_multi])
