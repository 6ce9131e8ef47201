"""Framed transfer of ciphertext blocks over a TCP stream.

Wire format (big-endian), 13-byte header then payload:

    offset  size  field
    0       4     magic "MSSP"
    4       1     version, 0x01
    5       4     block_count (u32, >= 1)
    9       4     payload_len (u32, divisible by block_count)
    13      ...   payload, ASCII digits, the blocks concatenated

Keys never travel on the wire; block_count alone lets the receiver split the
payload back into equal-length blocks. The server is sequential: one
connection, one frame, one handler call at a time.
"""

from __future__ import annotations

import socket
import struct
from typing import Callable, Sequence

from .errors import (
    BadMagic,
    ConnectionFailed,
    EmptyPayload,
    FrameCorrupt,
    NonDigitCiphertext,
    RaggedBlocks,
    TransferTimeout,
    UnsupportedVersion,
)

MAGIC = b"MSSP"
VERSION = 1
HEADER_LEN = 13
_HEADER = struct.Struct(">4sBII")
_DIGITS = frozenset(b"0123456789")

DEFAULT_TIMEOUT = 30.0


def encode_frame(blocks: Sequence[str]) -> bytes:
    """Serialize equal-length digit blocks into one frame."""
    if not blocks or not blocks[0]:
        raise EmptyPayload("need at least one nonempty block")
    length = len(blocks[0])
    if any(len(b) != length for b in blocks):
        raise RaggedBlocks("all blocks in a frame must have the same length")
    text = "".join(blocks)
    if not set(text) <= set("0123456789"):
        raise NonDigitCiphertext("blocks must contain only decimal digits")
    payload = text.encode("ascii")
    return _HEADER.pack(MAGIC, VERSION, len(blocks), len(payload)) + payload


def decode_frame(data: bytes) -> list[str]:
    """Parse one frame back into its list of blocks."""
    if len(data) < 4:
        raise FrameCorrupt(f"truncated header: {len(data)} bytes")
    if data[:4] != MAGIC:
        raise BadMagic(f"bad magic {data[:4]!r}")
    if len(data) < HEADER_LEN:
        raise FrameCorrupt(f"truncated header: {len(data)} bytes")
    _, version, block_count, payload_len = _HEADER.unpack_from(data)
    if version != VERSION:
        raise UnsupportedVersion(f"version {version}, expected {VERSION}")
    payload = data[HEADER_LEN:]
    if len(payload) != payload_len:
        raise FrameCorrupt(f"payload is {len(payload)} bytes, header says {payload_len}")
    if block_count < 1 or payload_len < 1:
        raise FrameCorrupt("frame must carry at least one nonempty block")
    if payload_len % block_count:
        raise FrameCorrupt(f"payload of {payload_len} not divisible into {block_count} blocks")
    if not set(payload) <= _DIGITS:
        raise FrameCorrupt("payload contains non-digit bytes")
    size = payload_len // block_count
    text = payload.decode("ascii")
    return [text[i : i + size] for i in range(0, payload_len, size)]


def send(address: tuple[str, int], frame: bytes, *, timeout: float = DEFAULT_TIMEOUT) -> None:
    """Write one encoded frame to the peer and close."""
    try:
        with socket.create_connection(address, timeout=timeout) as sock:
            sock.sendall(frame)
    except (socket.timeout, TimeoutError) as exc:
        raise TransferTimeout(f"send to {address[0]}:{address[1]} timed out") from exc
    except OSError as exc:
        raise ConnectionFailed(f"cannot send to {address[0]}:{address[1]}: {exc}") from exc


def _recv_exact(conn: socket.socket, count: int) -> bytes:
    chunks = []
    got = 0
    while got < count:
        chunk = conn.recv(count - got)
        if not chunk:
            raise FrameCorrupt(f"stream ended after {got} of {count} bytes")
        chunks.append(chunk)
        got += len(chunk)
    return b"".join(chunks)


def serve(
    port: int,
    handler: Callable[[list[str]], None],
    *,
    host: str = "127.0.0.1",
    max_frames: int | None = None,
    timeout: float = DEFAULT_TIMEOUT,
    on_listen: Callable[[int], None] | None = None,
) -> None:
    """Accept connections one at a time; read one frame each, pass its blocks on.

    Runs until ``max_frames`` frames were handled (forever if None). Pass
    port 0 to bind an ephemeral port; ``on_listen`` receives the actual one.
    """
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as listener:
        listener.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        listener.bind((host, port))
        listener.listen(1)
        if on_listen is not None:
            on_listen(listener.getsockname()[1])
        served = 0
        while max_frames is None or served < max_frames:
            conn, _ = listener.accept()
            with conn:
                conn.settimeout(timeout)
                try:
                    header = _recv_exact(conn, HEADER_LEN)
                    if header[:4] != MAGIC:
                        raise BadMagic(f"bad magic {header[:4]!r}")
                    _, _, _, payload_len = _HEADER.unpack(header)
                    payload = _recv_exact(conn, payload_len)
                except (socket.timeout, TimeoutError) as exc:
                    raise TransferTimeout("peer stalled mid-frame") from exc
            handler(decode_frame(header + payload))
            served += 1
