"""Sign/code dictionary: maps text symbols to encryptable integer codes.

File format, one entry per line: ``<sign><TAB><code>``. Blank lines are
skipped, and a line starting with '#' is a comment unless the '#' is itself
an entry's sign (i.e. immediately followed by a TAB).
"""

from __future__ import annotations

import random
from typing import Iterable

from .cipher import CipherParams, generate_family, plaintext_range
from .errors import (
    DuplicateCode,
    DuplicateSign,
    GenerationBudgetExhausted,
    MalformedLine,
    NonPositiveCode,
    RangeTooSmall,
    UnknownCode,
    UnknownSign,
)

PRINTABLE_ASCII = "".join(chr(c) for c in range(0x20, 0x7F))


class DictionaryMap:
    """Bijection between single-character signs and positive integer codes."""

    def __init__(self, entries: Iterable[tuple[str, int]]):
        self._code_by_sign: dict[str, int] = {}
        self._sign_by_code: dict[int, str] = {}
        for sign, code in entries:
            if len(sign) != 1:
                raise MalformedLine(f"sign must be a single character, got {sign!r}")
            if code <= 0:
                raise NonPositiveCode(f"code for {sign!r} must be positive, got {code}")
            if sign in self._code_by_sign:
                raise DuplicateSign(f"sign {sign!r} appears twice")
            if code in self._sign_by_code:
                raise DuplicateCode(f"code {code} appears twice")
            self._code_by_sign[sign] = code
            self._sign_by_code[code] = sign

    def __len__(self) -> int:
        return len(self._code_by_sign)

    def __contains__(self, sign: str) -> bool:
        return sign in self._code_by_sign

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DictionaryMap):
            return NotImplemented
        return self._code_by_sign == other._code_by_sign

    def items(self) -> list[tuple[str, int]]:
        return list(self._code_by_sign.items())

    def code_for(self, sign: str) -> int:
        try:
            return self._code_by_sign[sign]
        except KeyError:
            raise UnknownSign(f"sign {sign!r} is not in the dictionary") from None

    def sign_for(self, code: int) -> str:
        try:
            return self._sign_by_code[code]
        except KeyError:
            raise UnknownCode(f"code {code} is not in the dictionary") from None

    def encode_text(self, text: str) -> list[int]:
        return [self.code_for(ch) for ch in text]

    def decode_codes(self, codes: Iterable[int]) -> str:
        return "".join(self.sign_for(c) for c in codes)


def parse_dictionary(text: str) -> DictionaryMap:
    """Parse dictionary file contents."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        if raw[0] == "#" and (len(raw) < 2 or raw[1] != "\t"):
            continue
        sign, sep, code_text = raw.partition("\t")
        if not sep:
            raise MalformedLine(f"line {lineno}: expected <sign><TAB><code>, got {raw!r}")
        if len(sign) != 1:
            raise MalformedLine(f"line {lineno}: sign must be a single character, got {sign!r}")
        try:
            code = int(code_text.strip())
        except ValueError:
            raise MalformedLine(f"line {lineno}: code is not an integer: {code_text!r}") from None
        if code <= 0:
            raise NonPositiveCode(f"line {lineno}: code must be positive, got {code}")
        entries.append((sign, code))
    return DictionaryMap(entries)


def render_dictionary(mapping: DictionaryMap) -> str:
    return "".join(f"{sign}\t{code}\n" for sign, code in mapping.items())


def generate_default_dictionary(params, rng: random.Random | int | None = None) -> DictionaryMap:
    """Map printable ASCII (0x20..0x7E) to distinct random in-range codes.

    Candidate codes are probed with a short generation run and resampled if
    they cannot be embedded with a unique result; values at the very top of
    the range (e.g. m * (10**d - 1) itself) force near-identical sets and
    would make encryption fail later. Deterministic for a fixed seed.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    lo, hi = plaintext_range(params.m, params.d)
    needed = len(PRINTABLE_ASCII)
    if hi - lo + 1 < needed:
        raise RangeTooSmall(
            f"range [{lo}, {hi}] holds {hi - lo + 1} codes, need {needed}"
        )
    probe = CipherParams(params.n, params.m, params.d, max_attempts=25)
    codes: list[int] = []
    seen: set[int] = set()
    for _ in range(needed * 50):
        code = rng.randint(lo, hi)
        if code in seen:
            continue
        seen.add(code)
        try:
            generate_family(code, probe, rng)
        except GenerationBudgetExhausted:
            continue
        codes.append(code)
        if len(codes) == needed:
            return DictionaryMap(zip(PRINTABLE_ASCII, codes))
    raise RangeTooSmall(
        f"could not find {needed} uniquely encodable codes in [{lo}, {hi}]"
    )
