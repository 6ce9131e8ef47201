"""Digit-string block codec.

A ciphertext block is a string of decimal digits of length n*m*d. Under keys
(n, d) it decomposes into n sets of m items, each item a d-digit chunk; m is
derived from the block length. Composition is the exact inverse, zero-padding
every item to d digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ItemTooWide,
    LengthMismatch,
    MalformedKeyFile,
    NonDigitCiphertext,
    RaggedFamily,
)

_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class Keys:
    """The two symmetric private parameters: set count n and digit width d."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.d < 1:
            raise ValueError("d must be >= 1")


def decompose(block: str, keys: Keys) -> list[list[int]]:
    """Split a digit block into n sets of m contiguous d-digit items.

    Leading zeros inside a chunk are accepted on parse.
    """
    if not set(block) <= _DIGITS:
        bad = next(c for c in block if c not in _DIGITS)
        raise NonDigitCiphertext(f"ciphertext contains non-digit {bad!r}")
    unit = keys.n * keys.d
    if not block or len(block) % unit:
        raise LengthMismatch(
            f"block length {len(block)} is not a positive multiple of n*d = {unit}"
        )
    m = len(block) // unit
    run = m * keys.d
    return [
        [int(block[r + j : r + j + keys.d]) for j in range(0, run, keys.d)]
        for r in range(0, len(block), run)
    ]


def compose(family, d: int) -> str:
    """Concatenate an equal-size family into one digit block, d digits per item."""
    if d < 1:
        raise ValueError("d must be >= 1")
    sets = [list(s) for s in family]
    if not sets or not sets[0]:
        raise ValueError("family must contain at least one nonempty set")
    m = len(sets[0])
    if any(len(s) != m for s in sets):
        raise RaggedFamily(f"all sets must have {m} items")
    limit = 10 ** d
    for s in sets:
        for x in s:
            if x < 0:
                raise ValueError(f"items must be non-negative, got {x}")
            if x >= limit:
                raise ItemTooWide(f"item {x} does not fit in {d} digits")
    return "".join(f"{x:0{d}d}" for s in sets for x in s)


def parse_keys(text: str) -> Keys:
    """Parse a key file: lines ``n=<int>`` and ``d=<int>``, any order.

    Blank lines and lines starting with '#' are ignored.
    """
    found: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or name not in ("n", "d"):
            raise MalformedKeyFile(f"line {lineno}: expected n=<int> or d=<int>, got {raw!r}")
        if name in found:
            raise MalformedKeyFile(f"line {lineno}: duplicate key {name}")
        try:
            found[name] = int(value)
        except ValueError:
            raise MalformedKeyFile(f"line {lineno}: {name} is not an integer: {value!r}") from None
    if "n" not in found or "d" not in found:
        missing = sorted({"n", "d"} - found.keys())
        raise MalformedKeyFile(f"key file missing {', '.join(missing)}")
    try:
        return Keys(found["n"], found["d"])
    except ValueError as exc:
        raise MalformedKeyFile(str(exc)) from None


def render_keys(keys: Keys) -> str:
    return f"n={keys.n}\nd={keys.d}\n"
