"""Command-line front end.

Subcommands:
    encrypt   text file -> ciphertext file (one block per sign)
    decrypt   ciphertext file -> text file
    solve     classify a single block (diagnostic)
    send      frame a ciphertext file and push it to a receiver
    recv      accept one frame, decrypt, write the text
    dict gen  emit a fresh sign/code dictionary
    analyze   Monte-Carlo sweep, CSV out

Ciphertext files are two lines: ``m=<int>`` then the digit stream. On any
module error the process prints one line ``ERR <ErrorName> [k=v ...]`` to
stderr and exits with that error's dedicated status code.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import analysis, dictionary, netio
from .cipher import CipherParams, decrypt_block, encrypt_value
from .codec import Keys, decompose, parse_keys
from .errors import (
    AmbiguousPlaintext,
    BadMagic,
    ConnectionFailed,
    DuplicateCode,
    DuplicateSign,
    EmptyPayload,
    FrameCorrupt,
    GenerationBudgetExhausted,
    ItemTooWide,
    LengthMismatch,
    MalformedKeyFile,
    MalformedLine,
    MisspError,
    NonDigitCiphertext,
    NonPositiveCode,
    NoSolution,
    NoWitness,
    PlaintextOutOfRange,
    RaggedBlocks,
    RaggedFamily,
    RangeTooSmall,
    TransferTimeout,
    UnknownCode,
    UnknownSign,
    UnsupportedVersion,
)
from .core import solve_missp

USAGE_EXIT = 2

EXIT_CODES = {
    NoWitness: 10,
    NonDigitCiphertext: 11,
    LengthMismatch: 12,
    ItemTooWide: 13,
    RaggedFamily: 14,
    MalformedKeyFile: 15,
    PlaintextOutOfRange: 16,
    GenerationBudgetExhausted: 17,
    NoSolution: 18,
    AmbiguousPlaintext: 19,
    DuplicateSign: 20,
    DuplicateCode: 21,
    MalformedLine: 22,
    NonPositiveCode: 23,
    RangeTooSmall: 24,
    UnknownSign: 25,
    UnknownCode: 26,
    RaggedBlocks: 27,
    EmptyPayload: 28,
    BadMagic: 29,
    UnsupportedVersion: 30,
    FrameCorrupt: 31,
    ConnectionFailed: 32,
    TransferTimeout: 33,
}


def _load_keys(path: str) -> Keys:
    return parse_keys(Path(path).read_text(encoding="utf-8"))


def _load_dictionary(path: str) -> dictionary.DictionaryMap:
    return dictionary.parse_dictionary(Path(path).read_text(encoding="utf-8"))


def _read_cipher_file(path: str) -> tuple[int | None, str]:
    """Return (m from the header if present, digit stream)."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    m = None
    if lines and lines[0].startswith("m="):
        try:
            m = int(lines[0][2:])
        except ValueError:
            raise LengthMismatch(f"bad header line {lines[0]!r}") from None
        lines = lines[1:]
    return m, "".join(line.strip() for line in lines)


def _write_cipher_file(path: str, m: int, stream: str) -> None:
    Path(path).write_text(f"m={m}\n{stream}\n", encoding="utf-8")


def _effective_m(flag_m: int | None, header_m: int | None) -> int:
    if flag_m is not None and header_m is not None and flag_m != header_m:
        raise LengthMismatch(f"--m {flag_m} contradicts file header m={header_m}")
    m = flag_m if flag_m is not None else header_m
    if m is None:
        raise LengthMismatch("no --m given and the ciphertext file has no m= header")
    return m


def _split_blocks(stream: str, block_len: int) -> list[str]:
    if len(stream) % block_len:
        raise LengthMismatch(
            f"stream of {len(stream)} digits does not divide into blocks of {block_len}"
        )
    return [stream[i : i + block_len] for i in range(0, len(stream), block_len)]


def _with_context(exc: MisspError, context: str) -> MisspError:
    exc.context = context
    return exc


def _decode_stream_blocks(blocks, keys: Keys, dmap: dictionary.DictionaryMap) -> str:
    chars = []
    for i, block in enumerate(blocks):
        try:
            chars.append(dmap.sign_for(decrypt_block(block, keys)))
        except MisspError as exc:
            raise _with_context(exc, f"block={i}")
    return "".join(chars)


def _addr(text: str) -> tuple[str, int]:
    host, sep, port = text.rpartition(":")
    if not sep or not host:
        raise argparse.ArgumentTypeError(f"expected host:port, got {text!r}")
    try:
        return host, int(port)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad port in {text!r}") from None


# ---- subcommand implementations ----

def _cmd_encrypt(args) -> int:
    keys = _load_keys(args.keys)
    dmap = _load_dictionary(args.dict)
    params = CipherParams(n=keys.n, m=args.m, d=keys.d)
    text = Path(args.infile).read_text(encoding="utf-8")
    rng = random.Random(args.seed)
    blocks = []
    for i, ch in enumerate(text):
        try:
            blocks.append(encrypt_value(dmap.code_for(ch), params, rng))
        except MisspError as exc:
            raise _with_context(exc, f"block={i}")
    _write_cipher_file(args.out, args.m, "".join(blocks))
    return 0


def _cmd_decrypt(args) -> int:
    keys = _load_keys(args.keys)
    dmap = _load_dictionary(args.dict)
    header_m, stream = _read_cipher_file(args.infile)
    m = _effective_m(args.m, header_m)
    blocks = _split_blocks(stream, keys.n * m * keys.d) if stream else []
    Path(args.out).write_text(_decode_stream_blocks(blocks, keys, dmap), encoding="utf-8")
    return 0


def _cmd_solve(args) -> int:
    keys = _load_keys(args.keys)
    _, stream = _read_cipher_file(args.infile)
    print(solve_missp(decompose(stream, keys)))
    return 0


def _cmd_send(args) -> int:
    keys = _load_keys(args.keys)
    header_m, stream = _read_cipher_file(args.infile)
    m = _effective_m(args.m, header_m)
    blocks = _split_blocks(stream, keys.n * m * keys.d)
    netio.send(args.addr, netio.encode_frame(blocks), timeout=args.timeout)
    return 0


def _cmd_recv(args) -> int:
    keys = _load_keys(args.keys)
    dmap = _load_dictionary(args.dict)

    def handle(blocks: list[str]) -> None:
        Path(args.out).write_text(
            _decode_stream_blocks(blocks, keys, dmap), encoding="utf-8"
        )

    netio.serve(
        args.port,
        handle,
        host=args.host,
        max_frames=1,
        timeout=args.timeout,
        on_listen=lambda port: print(f"listening port={port}", flush=True),
    )
    return 0


def _cmd_dict_gen(args) -> int:
    keys = _load_keys(args.keys)
    params = CipherParams(n=keys.n, m=args.m, d=keys.d)
    dmap = dictionary.generate_default_dictionary(params, args.seed)
    Path(args.out).write_text(dictionary.render_dictionary(dmap), encoding="utf-8")
    return 0


def _cmd_analyze(args) -> int:
    stats = analysis.sweep(args.n, args.m, args.d, args.trials, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        analysis.write_stats_csv(stats, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="missp", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encrypt", help="encrypt a text file")
    p.add_argument("--keys", required=True)
    p.add_argument("--dict", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--m", type=int, default=4, help="items per set (default 4)")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    p.add_argument("--keys", required=True)
    p.add_argument("--dict", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--m", type=int, default=None, help="override the file's m= header")
    p.set_defaults(func=_cmd_decrypt)

    p = sub.add_parser("solve", help="classify a single block")
    p.add_argument("--keys", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("send", help="send a ciphertext file over the network")
    p.add_argument("--addr", type=_addr, required=True, metavar="HOST:PORT")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--keys", required=True, help="needed to split the stream into blocks")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--timeout", type=float, default=netio.DEFAULT_TIMEOUT)
    p.set_defaults(func=_cmd_send)

    p = sub.add_parser("recv", help="receive one frame and decrypt it")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--keys", required=True)
    p.add_argument("--dict", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--timeout", type=float, default=netio.DEFAULT_TIMEOUT)
    p.set_defaults(func=_cmd_recv)

    p = sub.add_parser("dict", help="dictionary tools")
    dict_sub = p.add_subparsers(dest="dict_command", required=True)
    g = dict_sub.add_parser("gen", help="generate a printable-ASCII dictionary")
    g.add_argument("--keys", required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=_cmd_dict_gen)

    p = sub.add_parser("analyze", help="uniqueness statistics sweep")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--m", type=int, nargs="+", required=True)
    p.add_argument("--d", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_analyze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.func(args)
    except MisspError as exc:
        context = getattr(exc, "context", "")
        suffix = f" {context}" if context else ""
        print(f"ERR {type(exc).__name__}{suffix}", file=sys.stderr)
        return EXIT_CODES.get(type(exc), 1)
    except ValueError as exc:
        print(f"ERR UsageError {exc}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as exc:
        print(f"ERR IOError {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
