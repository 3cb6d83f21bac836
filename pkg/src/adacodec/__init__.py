"""Lossless short-text compression: Huffman codewords plus a distance stream.

Quick start::

    import adacodec

    blob = adacodec.compress_bytes(b"Hi! good morning.")
    assert adacodec.decompress_bytes(blob) == b"Hi! good morning."
"""

from .bitstream import BitReader, Bits, BitWriter
from .codec import (
    DEFAULT_THRESHOLD,
    DecodeStats,
    EncodedMessage,
    EncodeStats,
    Threshold,
    decode,
    decode_with_stats,
    encode,
    encode_with_stats,
    pack_container,
    qualifies,
    read_debug_files,
    unpack_container,
    write_debug_files,
)
from .errors import AdaCodecError
from .huffman import (
    CodeBook,
    Codeword,
    build_codebook,
    build_frequency_table,
    parse_dictionary,
    serialize_dictionary,
)
from .metrics import ReportRow, SizeBreakdown, gsm_baseline, report_row

__version__ = "0.1.0"

__all__ = [
    "AdaCodecError",
    "BitReader",
    "Bits",
    "BitWriter",
    "CodeBook",
    "Codeword",
    "DecodeStats",
    "DEFAULT_THRESHOLD",
    "EncodedMessage",
    "EncodeStats",
    "ReportRow",
    "SizeBreakdown",
    "Threshold",
    "build_codebook",
    "build_frequency_table",
    "compress_bytes",
    "decode",
    "decode_with_stats",
    "decompress_bytes",
    "encode",
    "encode_with_stats",
    "gsm_baseline",
    "pack_container",
    "parse_dictionary",
    "qualifies",
    "read_debug_files",
    "report_row",
    "serialize_dictionary",
    "unpack_container",
    "write_debug_files",
]


def compress_bytes(message: bytes, threshold: Threshold = DEFAULT_THRESHOLD) -> bytes:
    """Encode `message` with a codebook built from it; returns a container."""
    book = build_codebook(build_frequency_table(message))
    return pack_container(encode(message, threshold, book))


def decompress_bytes(data: bytes) -> bytes:
    """Restore the original message from a container produced by compress_bytes."""
    return decode(unpack_container(data))
