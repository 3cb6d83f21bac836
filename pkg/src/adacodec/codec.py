"""Dual-bitstream codec built on byte-distance runs.

The encoder walks the message left to right. Each run starts with a head
symbol whose Huffman codeword goes into the *codeword* stream. A following
symbol joins the run when two conditions hold: its byte value is within
the threshold distance of its predecessor, and its own codeword is at
least as long as a distance entry on the wire. Qualifying symbols are
written into the *distance* stream as entries of the form

    '1' <sign bit> <magnitude, x bits MSB-first>

where sign '0' means a non-negative distance. A single '0' bit closes
every run, including the last, so the distance stream is self-delimiting
run by run.

The decoder is driven by the distance stream: it consults the dictionary
once per run head and reconstructs every other symbol with plain byte
arithmetic, never re-walking the code table for them.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

from .bitstream import BitReader, Bits, BitWriter
from .errors import (
    BadMagicError,
    BadThresholdError,
    ContainerError,
    DecodeError,
    DuplicateSymbolError,
    EmptyInputError,
    SymbolRangeError,
    TruncatedStreamError,
    UnknownSymbolError,
    UnsupportedVersionError,
)
from .huffman import CodeBook, Codeword, serialize_dictionary, parse_dictionary

__all__ = [
    "Threshold",
    "EncodedMessage",
    "EncodeStats",
    "DecodeStats",
    "qualifies",
    "encode",
    "encode_with_stats",
    "decode",
    "decode_with_stats",
    "pack_container",
    "unpack_container",
    "write_debug_files",
    "read_debug_files",
    "CONTAINER_MAGIC",
    "CONTAINER_VERSION",
    "DEBUG_FILE_NAMES",
]

CONTAINER_MAGIC = b"ADA1"
CONTAINER_VERSION = 1

# File names of the text debug triple.
DEBUG_FILE_NAMES = ("dictionary.txt", "encode.txt", "adjacent.txt")


@dataclass(frozen=True)
class Threshold:
    """Distance gate: admit |distance| <= max_distance = 2**magnitude_bits - 1."""

    max_distance: int
    magnitude_bits: int

    def __post_init__(self):
        x = self.magnitude_bits
        if not 1 <= x <= 8 or self.max_distance != (1 << x) - 1:
            raise BadThresholdError(
                f"threshold T={self.max_distance}, x={x} must satisfy T = 2**x - 1 "
                "with 1 <= x <= 8"
            )

    @classmethod
    def from_max_distance(cls, max_distance: int) -> Threshold:
        """Build from T; rejects values where T + 1 is not a power of two."""
        return cls(max_distance, max(max_distance, 0).bit_length())

    @classmethod
    def from_magnitude_bits(cls, magnitude_bits: int) -> Threshold:
        return cls((1 << magnitude_bits) - 1 if magnitude_bits >= 1 else 0, magnitude_bits)

    @property
    def entry_bits(self) -> int:
        """Wire size of one distance entry: start bit + sign bit + magnitude."""
        return 2 + self.magnitude_bits


DEFAULT_THRESHOLD = Threshold(7, 3)


@dataclass(frozen=True)
class EncodedMessage:
    """The compression artifact: dictionary, threshold, and both streams."""

    book: CodeBook
    threshold: Threshold
    original_length: int
    encoded: Bits
    adjacent: Bits


@dataclass(frozen=True)
class EncodeStats:
    """Per-encode accounting used by the size model and reports."""

    head_count: int
    entry_count: int
    adjacency_counts: dict[int, int]  # symbol -> times coded as a distance entry


@dataclass(frozen=True)
class DecodeStats:
    codeword_lookups: int  # dictionary consultations; one per run head


def qualifies(
    prev_symbol: int, next_symbol: int, book: CodeBook, threshold: Threshold
) -> bool:
    """True when `next_symbol` may be distance-coded after `prev_symbol`.

    Requires both the distance gate |next - prev| <= T and that the
    symbol's codeword is no shorter than a wire entry (2 + x bits), so
    distance coding never expands the output.
    """
    for symbol in (prev_symbol, next_symbol):
        if symbol not in book:
            raise UnknownSymbolError(f"symbol {symbol} is not in the codebook")
    if abs(next_symbol - prev_symbol) > threshold.max_distance:
        return False
    return book.length_of(next_symbol) >= threshold.entry_bits


def encode_with_stats(
    message: bytes, threshold: Threshold, book: CodeBook
) -> tuple[EncodedMessage, EncodeStats]:
    """Encode `message`, returning the artifact plus run accounting."""
    if not message:
        raise EmptyInputError("cannot encode an empty message")
    if not isinstance(threshold, Threshold):
        raise BadThresholdError("threshold must be a Threshold value")

    codes = book.codes
    max_distance = threshold.max_distance
    min_entry_length = threshold.entry_bits
    magnitude_bits = threshold.magnitude_bits

    encoded = BitWriter()
    adjacent = BitWriter()
    head_count = 0
    entry_count = 0
    adjacency_counts: dict[int, int] = {}

    prev = None
    for symbol in message:
        codeword = codes.get(symbol)
        if codeword is None:
            raise UnknownSymbolError(f"symbol {symbol} is not in the codebook")
        distance = symbol - prev if prev is not None else None
        if (
            distance is not None
            and -max_distance <= distance <= max_distance
            and codeword.length >= min_entry_length
        ):
            adjacent.write_bit(1)
            adjacent.write_bit(distance < 0)
            adjacent.write_bits(abs(distance), magnitude_bits)
            entry_count += 1
            adjacency_counts[symbol] = adjacency_counts.get(symbol, 0) + 1
        else:
            if prev is not None:
                adjacent.write_bit(0)  # close the previous run
            encoded.write_bits(codeword.code, codeword.length)
            head_count += 1
        prev = symbol
    adjacent.write_bit(0)  # close the final run

    msg = EncodedMessage(
        book=book,
        threshold=threshold,
        original_length=len(message),
        encoded=encoded.getvalue(),
        adjacent=adjacent.getvalue(),
    )
    return msg, EncodeStats(head_count, entry_count, adjacency_counts)


def encode(message: bytes, threshold: Threshold, book: CodeBook) -> EncodedMessage:
    return encode_with_stats(message, threshold, book)[0]


def decode_with_stats(msg: EncodedMessage) -> tuple[bytes, DecodeStats]:
    """Reconstruct the message; the distance stream drives the walk.

    One dictionary lookup happens per run head; every other symbol is
    recovered as predecessor +/- magnitude.
    """
    out = bytearray()
    encoded = BitReader(msg.encoded)
    adjacent = BitReader(msg.adjacent)
    magnitude_bits = msg.threshold.magnitude_bits
    book = msg.book
    lookups = 0

    while len(out) < msg.original_length:
        prev = book.decode_symbol(encoded)
        lookups += 1
        out.append(prev)
        while adjacent.read_bit():
            if len(out) >= msg.original_length:
                raise DecodeError(
                    "distance stream continues past the declared message length"
                )
            negative = adjacent.read_bit()
            magnitude = adjacent.read_bits(magnitude_bits)
            value = prev - magnitude if negative else prev + magnitude
            if not 0 <= value <= 255:
                raise SymbolRangeError(
                    f"distance entry yields {value}, outside the byte range"
                )
            out.append(value)
            prev = value
    return bytes(out), DecodeStats(codeword_lookups=lookups)


def decode(msg: EncodedMessage) -> bytes:
    return decode_with_stats(msg)[0]


# Binary container layout (all integers big-endian):
#   magic "ADA1" | version u8 | x u8 | flags u8 | original_length u32
#   | symbol_count u16
#   | per symbol: value u8, code length u8, codeword packed MSB-first
#   | encoded bit count u32 | adjacent bit count u32
#   | encoded payload (zero-padded to a byte) | adjacent payload (likewise)


def pack_container(msg: EncodedMessage) -> bytes:
    out = bytearray()
    out += CONTAINER_MAGIC
    out += struct.pack(
        ">BBBIH",
        CONTAINER_VERSION,
        msg.threshold.magnitude_bits,
        0,
        msg.original_length,
        len(msg.book.codes),
    )
    for symbol in msg.book.canonical_order():
        cw = msg.book.codes[symbol]
        nbytes = (cw.length + 7) // 8
        out += struct.pack(">BB", symbol, cw.length)
        out += (cw.code << (nbytes * 8 - cw.length)).to_bytes(nbytes, "big")
    out += struct.pack(">II", msg.encoded.length, msg.adjacent.length)
    out += msg.encoded.data
    out += msg.adjacent.data
    return bytes(out)


class _ByteCursor:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, count: int) -> bytes:
        end = self.pos + count
        if end > len(self.data):
            raise TruncatedStreamError(
                f"container needs {count} bytes at offset {self.pos}, "
                f"{len(self.data) - self.pos} remain"
            )
        chunk = self.data[self.pos : end]
        self.pos = end
        return chunk

    def unpack(self, fmt: str) -> tuple:
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))


def unpack_container(data: bytes) -> EncodedMessage:
    """Parse and validate a packed container; inverse of pack_container."""
    if data[:4] != CONTAINER_MAGIC:
        raise BadMagicError("not an ADA container (bad magic bytes)")
    cur = _ByteCursor(data)
    cur.take(4)
    version, magnitude_bits, flags, original_length, symbol_count = cur.unpack(">BBBIH")
    if version != CONTAINER_VERSION:
        raise UnsupportedVersionError(f"unsupported container version {version}")
    if flags != 0:
        raise ContainerError(f"reserved flags byte must be zero, got {flags:#x}")
    threshold = Threshold.from_magnitude_bits(magnitude_bits)
    if symbol_count < 1:
        raise ContainerError("container declares an empty dictionary")

    codes: dict[int, Codeword] = {}
    for _ in range(symbol_count):
        symbol, length = cur.unpack(">BB")
        if length < 1:
            raise ContainerError(f"symbol {symbol} declares a zero-length codeword")
        raw = cur.take((length + 7) // 8)
        code = int.from_bytes(raw, "big") >> (len(raw) * 8 - length)
        if symbol in codes:
            raise DuplicateSymbolError(f"symbol {symbol} appears twice in the container")
        codes[symbol] = Codeword(code, length)
    book = CodeBook(codes)

    encoded_bits, adjacent_bits = cur.unpack(">II")
    encoded = Bits(cur.take((encoded_bits + 7) // 8), encoded_bits)
    adjacent = Bits(cur.take((adjacent_bits + 7) // 8), adjacent_bits)
    if cur.pos != len(data):
        raise ContainerError(f"{len(data) - cur.pos} trailing bytes after the payload")
    return EncodedMessage(book, threshold, original_length, encoded, adjacent)


def write_debug_files(msg: EncodedMessage, directory: str | Path) -> list[Path]:
    """Write the human-readable triple: dictionary, codeword bits, distance bits."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    contents = (
        serialize_dictionary(msg.book),
        msg.encoded.to01() + "\n",
        msg.adjacent.to01() + "\n",
    )
    paths = []
    for name, text in zip(DEBUG_FILE_NAMES, contents):
        path = directory / name
        path.write_text(text, encoding="ascii")
        paths.append(path)
    return paths


def read_debug_files(directory: str | Path, threshold: Threshold) -> EncodedMessage:
    """Rebuild an EncodedMessage from the debug triple.

    The triple stores no metadata, so the threshold must be supplied; the
    message length is recovered by walking the distance stream (each '1'
    starts one entry, each '0' closes one run).
    """
    directory = Path(directory)
    book = parse_dictionary((directory / DEBUG_FILE_NAMES[0]).read_text("ascii"))
    encoded = Bits.from01((directory / DEBUG_FILE_NAMES[1]).read_text("ascii"))
    adjacent = Bits.from01((directory / DEBUG_FILE_NAMES[2]).read_text("ascii"))

    reader = BitReader(adjacent)
    heads = 0
    entries = 0
    while reader.remaining:
        if reader.read_bit():
            reader.read_bits(1 + threshold.magnitude_bits)
            entries += 1
        else:
            heads += 1
    return EncodedMessage(book, threshold, heads + entries, encoded, adjacent)
