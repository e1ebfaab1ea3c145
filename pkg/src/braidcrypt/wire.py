"""Canonical binary encodings and the framed transport used by the demo.

Braid encoding (all integers big-endian)::

    "BRD1" | n: u16 | inf: i32 | r: u32 | r tables of n bytes, byte i-1 = perm[i]

Equal braids have identical normal forms and therefore identical bytes, which
is what makes the encoding usable as a hash preimage. A braid list is
``count: u32`` followed by the concatenated encodings.

Frames are ``length: u32 | type: u8 | payload`` with ``length = 1 + len(payload)``.
"""

from __future__ import annotations

import base64
import struct
from dataclasses import dataclass

from .errors import BadFrame, BadMagic, EncodingOverflow, InvalidNormalForm, Truncated
from .garside import NormalForm, is_left_weighted_form
from .words import SimpleBraid

MAGIC = b"BRD1"
CIPHERTEXT_MAGIC = b"BRC1"
_HEADER = struct.Struct(">4sHiI")

FRAME_ALICE = 0x01
FRAME_BOB = 0x02
FRAME_ERROR = 0x03
FRAME_TYPES = (FRAME_ALICE, FRAME_BOB, FRAME_ERROR)
MAX_FRAME = 16 * 1024 * 1024


def encode_nf(x: NormalForm) -> bytes:
    n, r = x.strands, len(x.factors)
    # the permutation tables store one strand index per byte
    if n > 255:
        raise EncodingOverflow(f"{n} strands do not fit the one-byte table entries")
    if r >= 1 << 32 or not -(1 << 31) <= x.inf < 1 << 31:
        raise EncodingOverflow("normal form too long for the fixed-width header")
    out = bytearray(_HEADER.pack(MAGIC, n, x.inf, r))
    for a in x.factors:
        out.extend(a.perm)
    return bytes(out)


def decode_nf_from(data: bytes, offset: int = 0) -> tuple[NormalForm, int]:
    """Decode one braid starting at ``offset``; returns it with the next offset."""
    if len(data) - offset < _HEADER.size:
        raise Truncated("braid header truncated")
    magic, n, inf, r = _HEADER.unpack_from(data, offset)
    if magic != MAGIC:
        raise BadMagic(f"bad braid magic {magic!r}")
    if n < 2:
        raise InvalidNormalForm(f"strand count {n} < 2")
    offset += _HEADER.size
    end = offset + r * n
    if len(data) < end:
        raise Truncated(f"expected {r} tables of {n} bytes")
    factors = []
    for j in range(r):
        table = tuple(data[offset + j * n: offset + (j + 1) * n])
        if sorted(table) != list(range(1, n + 1)):
            raise InvalidNormalForm(f"factor {j} is not a permutation")
        factors.append(SimpleBraid(n, table))
    nf = NormalForm(n, inf, tuple(factors))
    if not is_left_weighted_form(nf):
        raise InvalidNormalForm("factors are not in left normal form")
    return nf, end


def decode_nf(data: bytes) -> NormalForm:
    nf, end = decode_nf_from(data)
    if end != len(data):
        raise InvalidNormalForm(f"{len(data) - end} trailing bytes")
    return nf


def encode_braid_list(items) -> bytes:
    items = list(items)
    return struct.pack(">I", len(items)) + b"".join(encode_nf(x) for x in items)


def decode_braid_list_from(data: bytes, offset: int = 0) -> tuple[list[NormalForm], int]:
    if len(data) - offset < 4:
        raise Truncated("braid list count truncated")
    (count,) = struct.unpack_from(">I", data, offset)
    offset += 4
    out = []
    for _ in range(count):
        nf, offset = decode_nf_from(data, offset)
        out.append(nf)
    return out, offset


def decode_braid_list(data: bytes) -> list[NormalForm]:
    items, end = decode_braid_list_from(data)
    if end != len(data):
        raise InvalidNormalForm(f"{len(data) - end} trailing bytes")
    return items


@dataclass(frozen=True)
class Frame:
    type: int
    payload: bytes

    def encode(self) -> bytes:
        if self.type not in FRAME_TYPES:
            raise BadFrame(f"unknown frame type {self.type:#x}")
        if len(self.payload) + 1 > MAX_FRAME:
            raise EncodingOverflow("frame exceeds 16 MiB")
        return struct.pack(">IB", len(self.payload) + 1, self.type) + self.payload


def decode_frame(data: bytes) -> Frame:
    if len(data) < 5:
        raise Truncated("frame header truncated")
    length, ftype = struct.unpack_from(">IB", data)
    _check_frame_header(length, ftype)
    if len(data) != 4 + length:
        raise Truncated(f"frame declares {length} bytes, got {len(data) - 4}")
    return Frame(ftype, bytes(data[5:]))


def _check_frame_header(length: int, ftype: int) -> None:
    if length > MAX_FRAME:
        raise BadFrame(f"frame of {length} bytes exceeds the 16 MiB limit")
    if length < 1:
        raise Truncated("frame length must cover the type byte")
    if ftype not in FRAME_TYPES:
        raise BadFrame(f"unknown frame type {ftype:#x}")


def _recv_exact(sock, size: int) -> bytes:
    chunks = []
    while size:
        chunk = sock.recv(min(size, 65536))
        if not chunk:
            raise Truncated("connection closed mid-frame")
        chunks.append(chunk)
        size -= len(chunk)
    return b"".join(chunks)


def send_frame(sock, frame: Frame) -> None:
    sock.sendall(frame.encode())


def recv_frame(sock) -> Frame:
    """Read one frame; the length is validated before the payload is read."""
    length, ftype = struct.unpack(">IB", _recv_exact(sock, 5))
    _check_frame_header(length, ftype)
    return Frame(ftype, _recv_exact(sock, length - 1))


def encode_ciphertext(t: int, y, c: bytes) -> bytes:
    return CIPHERTEXT_MAGIC + struct.pack(">I", t) + encode_braid_list(y) + bytes(c)


def decode_ciphertext(data: bytes) -> tuple[int, list[NormalForm], bytes]:
    if len(data) < 8:
        raise Truncated("ciphertext header truncated")
    if data[:4] != CIPHERTEXT_MAGIC:
        raise BadMagic(f"bad ciphertext magic {data[:4]!r}")
    (t,) = struct.unpack_from(">I", data, 4)
    y, end = decode_braid_list_from(data, 8)
    return t, y, bytes(data[end:])


def armor(data: bytes) -> str:
    return base64.b64encode(data).decode("ascii")


def unarmor(text: str | bytes) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    return base64.b64decode(b"".join(text.split()), validate=True)
