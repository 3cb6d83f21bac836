"""MSB-first bit sequences and the reader/writer pair built on them.

Bits are packed most-significant-bit first into bytes; a partially filled
final byte is padded with zeros. Both output streams of the codec and the
binary container use this layout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TruncatedStreamError, ValueRangeError

__all__ = ["Bits", "BitReader", "BitWriter"]


@dataclass(frozen=True)
class Bits:
    """An immutable bit sequence packed MSB-first into bytes."""

    data: bytes
    length: int

    def __post_init__(self):
        expected = (self.length + 7) // 8
        if self.length < 0 or len(self.data) != expected:
            raise ValueError(
                f"{len(self.data)} bytes cannot hold exactly {self.length} bits"
            )
        pad = expected * 8 - self.length
        if pad and self.data[-1] & ((1 << pad) - 1):
            raise ValueError("padding bits after the end of the stream must be zero")

    def __len__(self) -> int:
        return self.length

    def to01(self) -> str:
        """Render as a string of '0'/'1' characters, one per bit."""
        if not self.length:
            return ""
        return bin(int.from_bytes(self.data, "big") >> (len(self.data) * 8 - self.length))[
            2:
        ].zfill(self.length)

    @classmethod
    def from01(cls, text: str) -> Bits:
        """Parse a string of '0'/'1' characters (whitespace ignored)."""
        stripped = "".join(text.split())
        if stripped.strip("01"):
            raise ValueError("bit string may contain only '0' and '1'")
        writer = BitWriter()
        for ch in stripped:
            writer.write_bit(ch == "1")
        return writer.getvalue()

    @classmethod
    def empty(cls) -> Bits:
        return cls(b"", 0)


class BitWriter:
    """Accumulates bits MSB-first; whole bytes are flushed as they fill."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._pending = 0  # bits currently held in _acc (0-7)

    def __len__(self) -> int:
        return len(self._buf) * 8 + self._pending

    def write_bit(self, bit: int | bool) -> None:
        self.write_bits(1 if bit else 0, 1)

    def write_bits(self, value: int, width: int) -> None:
        """Append the `width`-bit big-endian representation of `value`."""
        if width < 1:
            raise ValueError("width must be at least 1")
        if value < 0 or value >> width:
            raise ValueRangeError(f"value {value} does not fit in {width} bits")
        acc = (self._acc << width) | value
        pending = self._pending + width
        buf = self._buf
        while pending >= 8:
            pending -= 8
            buf.append((acc >> pending) & 0xFF)
        self._acc = acc & ((1 << pending) - 1)
        self._pending = pending

    def getvalue(self) -> Bits:
        """Snapshot of everything written so far, zero-padded to a byte."""
        data = bytes(self._buf)
        if self._pending:
            data += bytes([self._acc << (8 - self._pending) & 0xFF])
        return Bits(data, len(self))


class BitReader:
    """Cursor-based MSB-first reader over a finished `Bits` value."""

    def __init__(self, bits: Bits, start: int = 0):
        if not 0 <= start <= bits.length:
            raise ValueError("start cursor outside the stream")
        self._bits = bits
        self._pos = start

    def tell(self) -> int:
        return self._pos

    @property
    def remaining(self) -> int:
        return self._bits.length - self._pos

    def read_bit(self) -> int:
        return self.read_bits(1)

    def read_bits(self, width: int) -> int:
        """Read `width` bits and return them as an unsigned integer.

        The cursor advances by `width`; reading past the end raises
        TruncatedStreamError and leaves the cursor untouched.
        """
        if width < 1:
            raise ValueError("width must be at least 1")
        pos = self._pos
        end = pos + width
        if end > self._bits.length:
            raise TruncatedStreamError(
                f"need {width} bits at offset {pos}, stream holds {self._bits.length}"
            )
        data = self._bits.data
        value = 0
        while pos < end:
            byte_index, bit_index = divmod(pos, 8)
            take = min(8 - bit_index, end - pos)
            chunk = (data[byte_index] >> (8 - bit_index - take)) & ((1 << take) - 1)
            value = (value << take) | chunk
            pos += take
        self._pos = end
        return value
