"""Encryption and decryption of single integer values.

Encryption embeds the plaintext s as a planted sub-multiset sum in every one
of n generated sets of m d-digit items, then keeps the family only if s is
the *only* sum common to all sets (re-solving to check). Families failing
that single-result requirement are discarded and regenerated, up to a budget.
Decryption is decompose + solve, and is well-defined exactly when the block
admits one common sum.

All randomness flows through one random.Random instance, so a fixed seed
yields a byte-identical ciphertext for the same inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import core
from .codec import Keys, compose, decompose
from .errors import (
    AmbiguousPlaintext,
    GenerationBudgetExhausted,
    NoSolution,
    PlaintextOutOfRange,
)


@dataclass(frozen=True)
class CipherParams:
    """Generation parameters: n sets of m items, d digits each."""

    n: int
    m: int
    d: int
    max_attempts: int = 1000

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.d < 1:
            raise ValueError("n, m, d must all be >= 1")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")

    @property
    def keys(self) -> Keys:
        return Keys(self.n, self.d)


def plaintext_range(m: int, d: int) -> tuple[int, int]:
    """Inclusive bounds on values encodable with m items of d digits.

    The bounds are necessary, not sufficient: a value inside them can still
    fail to embed with a unique result (see encrypt_value).
    """
    if m < 1 or d < 1:
        raise ValueError("m and d must be >= 1")
    return 10 ** (d - 1), m * (10 ** d - 1)


def _as_rng(rng: random.Random | int | None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def _composition_counts(total: int, max_parts: int, lo: int, hi: int) -> list[np.ndarray]:
    """rows[k][t] = number of ordered k-tuples from [lo, hi] summing to t.

    Counts are float64; they are exact below 2**53 and within ~1e-11 relative
    error beyond, which is indistinguishable for sampling purposes.
    """
    t = np.arange(total + 1)
    upper = np.clip(t - lo + 1, 0, None)
    lower = np.clip(t - hi, 0, None)
    row = np.zeros(total + 1)
    row[0] = 1.0
    rows = [row]
    for _ in range(max_parts):
        prefix = np.concatenate(([0.0], np.cumsum(rows[-1])))
        rows.append(prefix[upper] - prefix[lower])
    if not np.isfinite(rows[-1]).all():
        raise ValueError("parameters too large for the composition sampler")
    return rows


def _sample_composition(
    total: int, parts: int, lo: int, hi: int,
    rows: list[np.ndarray], rng: random.Random,
) -> list[int]:
    """Uniform ordered composition of ``total`` into ``parts`` values in [lo, hi]."""
    out = []
    remaining = total
    for k in range(parts, 0, -1):
        x_lo = max(lo, remaining - (k - 1) * hi)
        x_hi = min(hi, remaining - (k - 1) * lo)
        # weight of choosing x is rows[k-1][remaining - x]
        weights = rows[k - 1][remaining - x_hi : remaining - x_lo + 1][::-1]
        cum = np.cumsum(weights)
        idx = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
        x = x_lo + min(idx, x_hi - x_lo)
        out.append(x)
        remaining -= x
    return out


def generate_family(
    s: int, params: CipherParams, rng: random.Random | int | None = None,
) -> list[list[int]]:
    """Generate a family whose only common sum is s, or raise.

    Per set: pick a planted subset size k uniformly among the feasible ones,
    sample a uniform composition of s into k in-range items, pad with uniform
    in-range fillers, shuffle. Reject and regenerate the whole family until
    the solver confirms s is the unique common sum.
    """
    rng = _as_rng(rng)
    lo, hi = plaintext_range(params.m, params.d)
    if not lo <= s <= hi:
        raise PlaintextOutOfRange(f"s={s} outside [{lo}, {hi}] for m={params.m}, d={params.d}")

    item_lo, item_hi = 10 ** (params.d - 1), 10 ** params.d - 1
    k_min = max(1, -(-s // item_hi))
    k_max = min(params.m, s // item_lo)
    rows = _composition_counts(s, k_max, item_lo, item_hi)

    for _ in range(params.max_attempts):
        family = []
        for _ in range(params.n):
            k = rng.randint(k_min, k_max)
            items = _sample_composition(s, k, item_lo, item_hi, rows, rng)
            items += [rng.randint(item_lo, item_hi) for _ in range(params.m - k)]
            rng.shuffle(items)
            family.append(items)
        if core.solve_missp(family).sums == (s,):
            return family
    raise GenerationBudgetExhausted(
        f"no family with unique sum {s} in {params.max_attempts} attempts"
    )


def encrypt_value(
    s: int, params: CipherParams, rng: random.Random | int | None = None,
) -> str:
    """Encrypt one integer to a digit block of length n*m*d."""
    return compose(generate_family(s, params, rng), params.d)


def decrypt_block(block: str, keys: Keys) -> int:
    """Recover the unique common sum of a block's family.

    Raises NoSolution / AmbiguousPlaintext when the family has zero / several
    common sums (wrong keys, corruption, or a block violating the
    single-result constraint).
    """
    result = core.solve_missp(decompose(block, keys))
    if result.kind is core.ResultKind.NONE:
        raise NoSolution("no common sum; wrong keys or corrupt block")
    if result.kind is core.ResultKind.AMBIGUOUS:
        raise AmbiguousPlaintext(f"{len(result.sums)} common sums; block is not decodable")
    return result.value
