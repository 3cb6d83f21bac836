"""Shared fixtures and small independent oracles used across the suite."""

from fractions import Fraction

from adacodec.bitstream import BitReader, Bits
from adacodec.huffman import CodeBook, Codeword

# Reference book for "Hi! good morning.": frequencies and the exact
# (non-canonical) codewords used in the worked example.
WORKED_MESSAGE = b"Hi! good morning."

REFERENCE_FREQS = {
    ord("o"): 3,
    ord("g"): 2,
    ord("n"): 2,
    ord("i"): 2,
    ord(" "): 2,
    ord("H"): 1,
    ord("!"): 1,
    ord("d"): 1,
    ord("m"): 1,
    ord("r"): 1,
    ord("."): 1,
}

REFERENCE_CODE_STRINGS = {
    "o": "110",
    "g": "010",
    "n": "011",
    "i": "000",
    " ": "001",
    "H": "1000",
    "!": "1001",
    "d": "1010",
    "m": "1011",
    "r": "1110",
    ".": "1111",
}


def reference_codebook() -> CodeBook:
    return CodeBook(
        {ord(ch): Codeword.from01(bits) for ch, bits in REFERENCE_CODE_STRINGS.items()}
    )


def kraft_sum(book: CodeBook) -> Fraction:
    return sum(
        (Fraction(1, 2 ** cw.length) for cw in book.codes.values()), Fraction(0)
    )


def assert_prefix_free(book: CodeBook) -> None:
    words = [cw.to01() for cw in book.codes.values()]
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if i != j:
                assert not b.startswith(a), f"{a} is a prefix of {b}"


def complete_length_vectors(n: int) -> list[tuple[int, ...]]:
    """All non-decreasing length vectors of n codewords with Kraft sum 1.

    Works in integer budget units of 2**-max_len; a complete binary code
    over n leaves never needs lengths above n - 1.
    """
    max_len = max(n - 1, 1)
    results: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, budget: int, min_len: int):
        if remaining == 0:
            if budget == 0:
                results.append(tuple(prefix))
            return
        for length in range(min_len, max_len + 1):
            cost = 1 << (max_len - length)
            if cost > budget:
                continue
            rest = budget - cost
            # later lengths are >= length, so each costs at most `cost`
            if rest > (remaining - 1) * cost or rest < remaining - 1:
                continue
            prefix.append(length)
            extend(prefix, remaining - 1, rest, length)
            prefix.pop()

    extend([], n, 1 << max_len, 1)
    return results


_VECTOR_CACHE: dict[int, list[tuple[int, ...]]] = {}


def optimal_weighted_length(counts: list[int]) -> int:
    """Exhaustive-search minimum of sum(count * length) over complete codes.

    A single symbol still needs one bit per occurrence to be decodable.
    """
    if len(counts) == 1:
        return counts[0]
    n = len(counts)
    if n not in _VECTOR_CACHE:
        _VECTOR_CACHE[n] = complete_length_vectors(n)
    ordered = sorted(counts, reverse=True)
    best = None
    for lengths in _VECTOR_CACHE[n]:
        total = sum(c * l for c, l in zip(ordered, lengths))
        if best is None or total < best:
            best = total
    return best


def parse_adjacent_runs(
    adjacent: Bits, magnitude_bits: int
) -> list[list[tuple[bool, int]]]:
    """Split the distance stream into runs of (negative, magnitude) entries.

    Consumes the stream exactly; every run, including the last, must be
    closed by a '0' bit.
    """
    reader = BitReader(adjacent)
    runs: list[list[tuple[bool, int]]] = []
    current: list[tuple[bool, int]] = []
    while reader.remaining:
        if reader.read_bit():
            negative = bool(reader.read_bit())
            magnitude = reader.read_bits(magnitude_bits)
            current.append((negative, magnitude))
        else:
            runs.append(current)
            current = []
    assert not current, "distance stream ended inside an unterminated run"
    return runs
