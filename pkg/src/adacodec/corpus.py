"""SMS-corpus ingestion and the benchmark harness over grouped test cases."""

from __future__ import annotations

import csv
import io
import re
import warnings
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .codec import Threshold, decode, encode_with_stats
from .errors import CorpusParseError, InsufficientDataError, RoundTripError
from .huffman import build_codebook, build_frequency_table
from .metrics import ReportRow, gsm_baseline, report_row, round2

__all__ = [
    "MessageRecord",
    "TestCase",
    "BenchmarkRow",
    "parse_corpus",
    "build_test_cases",
    "run_benchmark",
    "render_csv",
    "render_table",
    "load_bundled_corpus",
    "REPORT_COLUMNS",
    "DEFAULT_GROUP_SIZE",
    "DEFAULT_THRESHOLDS",
]

DEFAULT_GROUP_SIZE = 5
DEFAULT_THRESHOLDS = (7, 15)
BUNDLED_CORPUS = "sms_corpus_sample.txt"

REPORT_COLUMNS = (
    "case",
    "length",
    "threshold",
    "encoded_bits",
    "adjacent_bits",
    "total_bits",
    "bits_per_char",
    "gsm_bits",
    "max_chars",
    "enhancement_pct",
)

_RECORD_HEAD = re.compile(r'<message\s+id\s*=\s*"(\d+)"\s*>\s*<text>')
_CLOSE_TAG = "</text>"


@dataclass(frozen=True)
class MessageRecord:
    """One corpus message: numeric id plus its exact byte content."""

    id: int
    text: bytes


@dataclass(frozen=True)
class TestCase:
    """A labelled group of consecutive corpus messages."""

    label: str
    records: tuple[MessageRecord, ...]

    @property
    def total_length(self) -> int:
        return sum(len(record.text) for record in self.records)

    def combined_text(self) -> bytes:
        return b"".join(record.text for record in self.records)


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def parse_corpus(text: str) -> list[MessageRecord]:
    """Parse `<message id="N"><text>...</text>` records, in file order.

    Message text is everything up to the first exact closing tag, kept
    verbatim. Anything except whitespace between records is an error.
    """
    records: list[MessageRecord] = []
    seen: set[int] = set()
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = _RECORD_HEAD.match(text, pos)
        if not match:
            raise CorpusParseError("expected a <message id=...><text> tag", _line_of(text, pos))
        end = text.find(_CLOSE_TAG, match.end())
        if end < 0:
            raise CorpusParseError("unterminated <text> tag", _line_of(text, match.end()))
        message_id = int(match.group(1))
        if message_id in seen:
            raise CorpusParseError(f"duplicate message id {message_id}", _line_of(text, pos))
        body = text[match.end() : end]
        if not body:
            raise CorpusParseError(f"message {message_id} has empty text", _line_of(text, pos))
        seen.add(message_id)
        records.append(MessageRecord(message_id, body.encode("utf-8")))
        pos = end + len(_CLOSE_TAG)
    return records


def build_test_cases(
    records: Sequence[MessageRecord], group_size: int = DEFAULT_GROUP_SIZE
) -> list[TestCase]:
    """Group consecutive records into cases labelled T1, T2, ...

    A trailing partial group is dropped with a warning; fewer records
    than one full group is an error.
    """
    if group_size < 1:
        raise ValueError("group size must be positive")
    if len(records) < group_size:
        raise InsufficientDataError(
            f"need at least {group_size} records, got {len(records)}"
        )
    cases = [
        TestCase(f"T{i + 1}", tuple(records[i * group_size : (i + 1) * group_size]))
        for i in range(len(records) // group_size)
    ]
    leftover = len(records) % group_size
    if leftover:
        warnings.warn(
            f"dropping {leftover} trailing record(s) that do not fill a group",
            stacklevel=2,
        )
    return cases


@dataclass(frozen=True)
class BenchmarkRow:
    """One report line; threshold None marks the GSM baseline row."""

    case_id: str
    length: int
    threshold: int | None
    encoded_bits: int
    adjacent_bits: int
    total_bits: int
    bits_per_char: float
    gsm_bits: int
    max_chars: float
    enhancement_pct: float

    @classmethod
    def from_report(
        cls,
        row: ReportRow,
        threshold: int | None,
        encoded_bits: int,
        adjacent_bits: int,
    ) -> BenchmarkRow:
        return cls(
            case_id=row.case_id,
            length=row.length,
            threshold=threshold,
            encoded_bits=encoded_bits,
            adjacent_bits=adjacent_bits,
            total_bits=row.total_bits,
            bits_per_char=row.bits_per_char,
            gsm_bits=row.gsm_bits,
            max_chars=row.max_chars,
            enhancement_pct=row.enhancement_pct,
        )


def _compress_case(case: TestCase, threshold: Threshold, per_message: bool) -> tuple[int, int]:
    """(encoded bits, adjacent bits) for one case at one threshold."""
    units = [record.text for record in case.records] if per_message else [case.combined_text()]
    encoded_bits = 0
    adjacent_bits = 0
    for unit in units:
        book = build_codebook(build_frequency_table(unit))
        msg, _ = encode_with_stats(unit, threshold, book)
        if decode(msg) != unit:
            raise RoundTripError(f"case {case.label}: decode does not reproduce the input")
        encoded_bits += msg.encoded.length
        adjacent_bits += msg.adjacent.length
    return encoded_bits, adjacent_bits


def run_benchmark(
    cases: Iterable[TestCase],
    thresholds: Sequence[int] = DEFAULT_THRESHOLDS,
    include_gsm: bool = True,
    per_message: bool = False,
) -> list[BenchmarkRow]:
    """Compress every case at every threshold and tabulate the metrics.

    Each case/threshold pair gets a fresh frequency table and codebook and
    is verified to round-trip before it is reported. Totals cover the two
    payload streams; the dictionary header is reported separately by the
    compress pipeline, keeping rows comparable to stream-only figures.
    """
    rows: list[BenchmarkRow] = []
    for case in cases:
        length = case.total_length
        for t in thresholds:
            threshold = Threshold.from_max_distance(t)
            encoded_bits, adjacent_bits = _compress_case(case, threshold, per_message)
            row = report_row(case.label, length, encoded_bits + adjacent_bits)
            rows.append(BenchmarkRow.from_report(row, t, encoded_bits, adjacent_bits))
        if include_gsm:
            gsm_bits, _segments = gsm_baseline(length)
            row = report_row(case.label, length, gsm_bits)
            rows.append(BenchmarkRow.from_report(row, None, 0, 0))
    return rows


def _cells(row: BenchmarkRow) -> list[str]:
    gsm = row.threshold is None
    return [
        row.case_id,
        str(row.length),
        "gsm" if gsm else str(row.threshold),
        "" if gsm else str(row.encoded_bits),
        "" if gsm else str(row.adjacent_bits),
        str(row.total_bits),
        f"{round2(row.bits_per_char):.2f}",
        str(row.gsm_bits),
        f"{round2(row.max_chars):.2f}",
        f"{round2(row.enhancement_pct):.2f}",
    ]


def render_csv(rows: Iterable[BenchmarkRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow(_cells(row))
    return buf.getvalue()


def render_table(rows: Iterable[BenchmarkRow], color: bool = False) -> str:
    """Fixed-width text table; `color` adds a bold header line."""
    header = list(REPORT_COLUMNS)
    body = [_cells(row) for row in rows]
    widths = [
        max(len(header[i]), *(len(cells[i]) for cells in body)) if body else len(header[i])
        for i in range(len(header))
    ]

    def fmt(cells: list[str]) -> str:
        return "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(cells)).rstrip()

    head_line = fmt(header)
    if color:
        head_line = f"\x1b[1m{head_line}\x1b[0m"
    return "\n".join([head_line] + [fmt(cells) for cells in body]) + "\n"


def load_bundled_corpus() -> list[MessageRecord]:
    """The packaged sample corpus used by the default benchmark."""
    text = resources.files("adacodec").joinpath("data", BUNDLED_CORPUS).read_text("utf-8")
    return parse_corpus(text)
