"""Huffman codebook construction and the text dictionary format.

Symbols are single byte values (0-255). Codebooks are built in two phases:
optimal code lengths come from the classic two-smallest merge, then bit
patterns are reassigned canonically so equal inputs always produce
bit-identical books. Externally supplied books (arbitrary prefix-free
codes) are accepted everywhere a generated one is.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .bitstream import BitReader
from .errors import (
    CountMismatchError,
    DuplicateSymbolError,
    EmptyInputError,
    KraftViolationError,
    MalformedLineError,
    PrefixViolationError,
    UnknownCodewordError,
)

__all__ = [
    "Codeword",
    "CodeBook",
    "FrequencyTable",
    "build_frequency_table",
    "huffman_code_lengths",
    "build_codebook",
    "total_weighted_length",
    "serialize_dictionary",
    "parse_dictionary",
]

# Symbol -> occurrence count, iterated by (count desc, symbol asc).
FrequencyTable = dict[int, int]


@dataclass(frozen=True)
class Codeword:
    """A prefix codeword: `length` bits whose big-endian value is `code`."""

    code: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("codeword length must be at least 1")
        if self.code < 0 or self.code >> self.length:
            raise ValueError(f"code {self.code} does not fit in {self.length} bits")

    def to01(self) -> str:
        return format(self.code, f"0{self.length}b")

    @classmethod
    def from01(cls, text: str) -> Codeword:
        if not text or text.strip("01"):
            raise ValueError("codeword must be a non-empty string of '0'/'1'")
        return cls(int(text, 2), len(text))


@dataclass(frozen=True)
class CodeBook:
    """A prefix-free symbol-to-codeword map.

    Construction validates the code: every symbol is a byte, the codewords
    are mutually prefix-free, and for two or more symbols the lengths
    satisfy the Kraft equality (the code is complete).
    """

    codes: Mapping[int, Codeword]

    def __post_init__(self):
        if not self.codes:
            raise EmptyInputError("codebook must contain at least one symbol")
        for symbol in self.codes:
            if not 0 <= symbol <= 255:
                raise ValueError(f"symbol {symbol!r} is not a byte value")
        _check_prefix_free(self.codes)
        if len(self.codes) >= 2:
            kraft_num = sum(
                1 << (self.max_code_length - cw.length) for cw in self.codes.values()
            )
            if kraft_num != 1 << self.max_code_length:
                raise KraftViolationError(
                    "codeword lengths do not sum to a complete prefix code"
                )

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, symbol: int) -> bool:
        return symbol in self.codes

    def length_of(self, symbol: int) -> int:
        return self.codes[symbol].length

    @cached_property
    def max_code_length(self) -> int:
        return max(cw.length for cw in self.codes.values())

    @cached_property
    def _by_code(self) -> dict[tuple[int, int], int]:
        return {(cw.length, cw.code): s for s, cw in self.codes.items()}

    def canonical_order(self) -> list[int]:
        """Symbols sorted by (codeword length, byte value)."""
        return sorted(self.codes, key=lambda s: (self.codes[s].length, s))

    def decode_symbol(self, reader: BitReader) -> int:
        """Read one codeword from `reader` and return its symbol.

        Raises UnknownCodewordError if no codeword matches within the
        book's maximum length, TruncatedStreamError if the stream ends
        mid-codeword.
        """
        code = 0
        length = 0
        by_code = self._by_code
        while length < self.max_code_length:
            code = (code << 1) | reader.read_bit()
            length += 1
            symbol = by_code.get((length, code))
            if symbol is not None:
                return symbol
        raise UnknownCodewordError(
            f"bit pattern {format(code, f'0{length}b')} matches no dictionary entry"
        )


def _check_prefix_free(codes: Mapping[int, Codeword]) -> None:
    # In lexicographic order a prefix relation, if any, appears between
    # neighbours, so one linear scan over the sorted words suffices.
    words = sorted(cw.to01() for cw in codes.values())
    for a, b in zip(words, words[1:]):
        if b.startswith(a):
            raise PrefixViolationError(f"codeword {a} is a prefix of {b}")


def build_frequency_table(message: bytes) -> FrequencyTable:
    """Count symbol occurrences, ordered by (count desc, byte value asc)."""
    if not message:
        raise EmptyInputError("cannot build a frequency table from an empty message")
    counts = Counter(message)
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def huffman_code_lengths(freq: Mapping[int, int]) -> dict[int, int]:
    """Optimal prefix-code lengths for the given frequencies.

    Merging always takes the two nodes with the smallest (weight, lowest
    contained symbol) key, so the lengths are a pure function of the
    input. A single-symbol alphabet gets length 1: a zero-length code
    could not drive the decoder.
    """
    if not freq:
        raise EmptyInputError("cannot build a code for an empty frequency table")
    for symbol, count in freq.items():
        if count < 1:
            raise ValueError(f"count for symbol {symbol} must be positive")
    if len(freq) == 1:
        return {symbol: 1 for symbol in freq}

    depths = dict.fromkeys(freq, 0)
    heap: list[tuple[int, int, tuple[int, ...]]] = [
        (weight, symbol, (symbol,)) for symbol, weight in freq.items()
    ]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, m1, leaves1 = heapq.heappop(heap)
        w2, m2, leaves2 = heapq.heappop(heap)
        merged = leaves1 + leaves2
        for symbol in merged:
            depths[symbol] += 1
        heapq.heappush(heap, (w1 + w2, min(m1, m2), merged))
    return depths


def canonical_codes(lengths: Mapping[int, int]) -> dict[int, Codeword]:
    """Assign bit patterns from lengths, counting up in (length, symbol) order."""
    code = 0
    prev_length = 0
    out: dict[int, Codeword] = {}
    for symbol in sorted(lengths, key=lambda s: (lengths[s], s)):
        length = lengths[symbol]
        code <<= length - prev_length
        out[symbol] = Codeword(code, length)
        code += 1
        prev_length = length
    return out


def build_codebook(freq: Mapping[int, int]) -> CodeBook:
    """Deterministic canonical Huffman codebook for a frequency table."""
    return CodeBook(canonical_codes(huffman_code_lengths(freq)))


def total_weighted_length(freq: Mapping[int, int], book: CodeBook) -> int:
    """Message body size in bits if every occurrence used its codeword."""
    return sum(count * book.codes[symbol].length for symbol, count in freq.items())


# Dictionary text format: first line is the number of entries, then one
# line per symbol: escaped symbol, codeword length, codeword bits.

_ESCAPES = {0x20: "\\s", 0x0A: "\\n", 0x5C: "\\\\"}
_UNESCAPES = {"\\s": 0x20, "\\n": 0x0A, "\\\\": 0x5C}


def _escape_symbol(symbol: int) -> str:
    if symbol in _ESCAPES:
        return _ESCAPES[symbol]
    if 0x21 <= symbol <= 0x7E:
        return chr(symbol)
    return f"\\x{symbol:02x}"


def _unescape_symbol(token: str) -> int:
    if token in _UNESCAPES:
        return _UNESCAPES[token]
    if len(token) == 1 and 0x21 <= ord(token) <= 0x7E:
        return ord(token)
    if len(token) == 4 and token.startswith("\\x"):
        try:
            return int(token[2:], 16)
        except ValueError:
            pass
    raise MalformedLineError(f"unrecognized symbol token {token!r}")


def serialize_dictionary(book: CodeBook) -> str:
    """Render a codebook in the line-oriented dictionary format."""
    lines = [str(len(book.codes))]
    for symbol in book.canonical_order():
        cw = book.codes[symbol]
        lines.append(f"{_escape_symbol(symbol)} {cw.length} {cw.to01()}")
    return "\n".join(lines) + "\n"


def parse_dictionary(text: str) -> CodeBook:
    """Inverse of serialize_dictionary; validates the parsed code."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedLineError("dictionary text is empty")
    try:
        declared = int(lines[0])
    except ValueError:
        raise MalformedLineError(f"symbol count line {lines[0]!r} is not an integer")
    if declared < 1:
        raise MalformedLineError("symbol count must be at least 1")
    entries = lines[1:]
    if len(entries) != declared:
        raise CountMismatchError(
            f"dictionary declares {declared} symbols but lists {len(entries)}"
        )
    codes: dict[int, Codeword] = {}
    for line in entries:
        parts = line.split(" ")
        if len(parts) != 3:
            raise MalformedLineError(f"expected 'symbol length codeword', got {line!r}")
        token, length_text, bits = parts
        symbol = _unescape_symbol(token)
        try:
            length = int(length_text)
        except ValueError:
            raise MalformedLineError(f"codeword length {length_text!r} is not an integer")
        if length < 1 or len(bits) != length or bits.strip("01"):
            raise MalformedLineError(f"codeword {bits!r} does not match length {length}")
        if symbol in codes:
            raise DuplicateSymbolError(
                f"symbol {_escape_symbol(symbol)} appears more than once"
            )
        codes[symbol] = Codeword(int(bits, 2), length)
    return CodeBook(codes)
