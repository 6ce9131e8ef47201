"""Toy symmetric cryptosystem built on common subset sums of multiset families."""

from .analysis import UniquenessStats, estimate_uniqueness, sweep, write_stats_csv
from .cipher import (
    CipherParams,
    decrypt_block,
    encrypt_value,
    generate_family,
    plaintext_range,
)
from .codec import Keys, compose, decompose, parse_keys, render_keys
from .core import (
    MisspResult,
    ResultKind,
    SumSet,
    achievable_sums,
    common_sums,
    find_witness,
    solve_missp,
)
from .dictionary import (
    DictionaryMap,
    generate_default_dictionary,
    parse_dictionary,
    render_dictionary,
)
from .errors import MisspError
from .netio import decode_frame, encode_frame, send, serve

__version__ = "0.1.0"

__all__ = [
    "CipherParams",
    "DictionaryMap",
    "Keys",
    "MisspError",
    "MisspResult",
    "ResultKind",
    "SumSet",
    "UniquenessStats",
    "achievable_sums",
    "common_sums",
    "compose",
    "decode_frame",
    "decompose",
    "decrypt_block",
    "encode_frame",
    "encrypt_value",
    "estimate_uniqueness",
    "find_witness",
    "generate_default_dictionary",
    "generate_family",
    "parse_dictionary",
    "parse_keys",
    "plaintext_range",
    "render_dictionary",
    "render_keys",
    "send",
    "serve",
    "solve_missp",
    "sweep",
    "write_stats_csv",
]
