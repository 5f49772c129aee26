"""On-disk RLBWT container.

Layout: ``b"RCMP"``, version byte, flags byte (bit 0: grouped backend),
alpha as little-endian u16, then unsigned LEB128 varints: ``n`` (input
bytes), ``r`` (runs, sentinel run included) and ``r`` pairs of
``(symbol, length)`` using internal symbol codes.
"""

from __future__ import annotations

import io
import struct
from dataclasses import dataclass

import leb128

from .errors import MalformedFile, MalformedRlbwt
from .text import Rlbwt

MAGIC = b"RCMP"
VERSION = 1
FLAG_GROUPED = 0x01
_HEADER = struct.Struct("<4sBBH")


@dataclass(frozen=True)
class RlbwtFile:
    rlbwt: Rlbwt
    n: int
    alpha: int = 16
    flags: int = 0

    @property
    def grouped(self) -> bool:
        return bool(self.flags & FLAG_GROUPED)


def serialize(doc: RlbwtFile) -> bytes:
    out = bytearray(_HEADER.pack(MAGIC, VERSION, doc.flags, doc.alpha))
    out += leb128.u.encode(doc.n)
    out += leb128.u.encode(doc.rlbwt.r)
    for run in doc.rlbwt.runs:
        out += leb128.u.encode(run.symbol)
        out += leb128.u.encode(run.length)
    return bytes(out)


def parse(blob: bytes) -> RlbwtFile:
    if len(blob) < _HEADER.size:
        raise MalformedFile("file shorter than its header")
    magic, version, flags, alpha = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise MalformedFile(f"bad magic {magic!r}")
    if version != VERSION:
        raise MalformedFile(f"unsupported version {version}")
    stream = io.BytesIO(blob)
    stream.seek(_HEADER.size)
    try:
        n, _ = leb128.u.decode_reader(stream)
        r, _ = leb128.u.decode_reader(stream)
        if r > len(blob):
            raise MalformedFile(f"run count {r} cannot fit in {len(blob)} bytes")
        pairs = []
        for _ in range(r):
            symbol, _ = leb128.u.decode_reader(stream)
            length, _ = leb128.u.decode_reader(stream)
            pairs.append((symbol, length))
    except EOFError as exc:
        raise MalformedFile("file truncated inside a varint") from exc
    if stream.read(1):
        raise MalformedFile("trailing bytes after the last run")
    try:
        rlbwt = Rlbwt.from_pairs(pairs)
        rlbwt.check()
    except MalformedRlbwt as exc:
        raise MalformedFile(str(exc)) from exc
    if rlbwt.total_len != n + 1:
        raise MalformedFile(f"run lengths sum to {rlbwt.total_len}, header says n={n}")
    return RlbwtFile(rlbwt=rlbwt, n=n, alpha=alpha, flags=flags)
