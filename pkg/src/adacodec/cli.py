"""Command-line interface: compress, decompress, inspect, and bench."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus as corpus_mod
from .codec import (
    Threshold,
    decode,
    encode_with_stats,
    pack_container,
    read_debug_files,
    unpack_container,
    write_debug_files,
)
from .corpus import BenchmarkRow, render_csv, render_table
from .errors import AdaCodecError, BadThresholdError
from .huffman import build_codebook, build_frequency_table, serialize_dictionary
from .metrics import report_row, round2, size_breakdown

EXIT_OK = 0
EXIT_IO = 2
EXIT_USAGE = 64
EXIT_DATA = 65

FORMAT_PACKED = "packed"
FORMAT_TEXT_DEBUG = "text-debug"


@dataclass
class CliConfig:
    command: str
    input: Path | None = None
    output: Path | None = None
    threshold: int = 7
    format: str = FORMAT_PACKED
    emit_dictionary: bool = False
    per_message: bool = False
    csv: bool = False
    thresholds: tuple[int, ...] = (7, 15)
    group_size: int = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ada",
        description="Lossless short-text codec combining Huffman codewords "
        "with a distance-coded companion stream.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, output_help: str):
        p.add_argument("-i", "--input", type=Path, required=True, help="input path")
        p.add_argument("-o", "--output", type=Path, help=output_help)

    p = sub.add_parser("compress", help="encode a file into a container")
    add_io(p, "output container (default: <input>.ada)")
    p.add_argument("-t", "--threshold", type=int, default=7,
                   help="max byte distance T; T+1 must be a power of two (default 7)")
    p.add_argument("--format", choices=(FORMAT_PACKED, FORMAT_TEXT_DEBUG),
                   default=FORMAT_PACKED,
                   help="packed binary container or a directory of three text files")
    p.add_argument("--emit-dictionary", action="store_true",
                   help="also write the dictionary listing next to the container")
    p.add_argument("--csv", action="store_true", help="report metrics as CSV")

    p = sub.add_parser("decompress", help="restore the original file")
    add_io(p, "output path (default: <input>.out)")
    p.add_argument("-t", "--threshold", type=int, default=7,
                   help="threshold used at compress time (text-debug input only)")
    p.add_argument("--format", choices=(FORMAT_PACKED, FORMAT_TEXT_DEBUG),
                   default=FORMAT_PACKED)

    p = sub.add_parser("inspect", help="print container metadata and dictionary")
    p.add_argument("-i", "--input", type=Path, required=True, help="container path")

    p = sub.add_parser("bench", help="run the corpus benchmark report")
    p.add_argument("-i", "--input", type=Path,
                   help="corpus file (default: bundled sample corpus)")
    p.add_argument("-o", "--output", type=Path, help="write the report here instead of stdout")
    p.add_argument("--thresholds", type=int, nargs="+", default=[7, 15],
                   help="threshold values to benchmark (default: 7 15)")
    p.add_argument("--group-size", type=int, default=5,
                   help="consecutive messages per test case (default 5)")
    p.add_argument("--per-message", action="store_true",
                   help="compress each message separately instead of per case")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of a table")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(command=args.command)
    for name in ("input", "output", "threshold", "format", "emit_dictionary",
                 "per_message", "csv", "group_size"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "thresholds"):
        cfg.thresholds = tuple(args.thresholds)
    return cfg


def _use_color() -> bool:
    return sys.stdout.isatty() and "ADA_NO_COLOR" not in os.environ


def _print_metrics(config: CliConfig, name: str, length: int, msg, stats) -> None:
    parts = size_breakdown(msg, stats)
    stream_bits = msg.encoded.length + msg.adjacent.length
    row = report_row(name, length, stream_bits)
    if config.csv:
        bench = BenchmarkRow.from_report(
            row, config.threshold, msg.encoded.length, msg.adjacent.length
        )
        sys.stdout.write(render_csv([bench]))
        return
    pairs = [
        ("case", name),
        ("length", length),
        ("threshold", config.threshold),
        ("encoded_bits", msg.encoded.length),
        ("adjacent_bits", msg.adjacent.length),
        ("head_bits", parts.head_bits),
        ("adjacency_bits(wire)", parts.adjacency_bits),
        ("separator_bits", parts.separator_bits),
        ("header_bits", parts.header_bits),
        ("stream_bits", stream_bits),
        ("total_bits", parts.total_bits),
        ("bits_per_char", f"{round2(row.bits_per_char):.2f}"),
        ("gsm_bits", row.gsm_bits),
        ("max_chars", f"{round2(row.max_chars):.2f}"),
        ("enhancement_pct", f"{round2(row.enhancement_pct):.2f}"),
    ]
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)}  {value}")


def cmd_compress(config: CliConfig) -> int:
    threshold = Threshold.from_max_distance(config.threshold)
    message = config.input.read_bytes()
    book = build_codebook(build_frequency_table(message))
    msg, stats = encode_with_stats(message, threshold, book)

    if config.format == FORMAT_TEXT_DEBUG:
        out_dir = config.output or config.input.with_name(config.input.name + ".ada.d")
        write_debug_files(msg, out_dir)
    else:
        out_path = config.output or config.input.with_name(config.input.name + ".ada")
        out_path.write_bytes(pack_container(msg))
        if config.emit_dictionary:
            out_path.with_name(out_path.name + ".dict.txt").write_text(
                serialize_dictionary(book), encoding="ascii"
            )
    _print_metrics(config, config.input.name, len(message), msg, stats)
    return EXIT_OK


def cmd_decompress(config: CliConfig) -> int:
    if config.format == FORMAT_TEXT_DEBUG:
        threshold = Threshold.from_max_distance(config.threshold)
        msg = read_debug_files(config.input, threshold)
    else:
        msg = unpack_container(config.input.read_bytes())
    restored = decode(msg)
    out_path = config.output or config.input.with_name(config.input.name + ".out")
    out_path.write_bytes(restored)
    return EXIT_OK


def cmd_inspect(config: CliConfig) -> int:
    msg = unpack_container(config.input.read_bytes())
    threshold = msg.threshold
    print(f"container        {config.input.name}")
    print(f"version          1")
    print(f"threshold        T={threshold.max_distance} (x={threshold.magnitude_bits})")
    print(f"original_length  {msg.original_length}")
    print(f"symbols          {len(msg.book.codes)}")
    print(f"encoded_bits     {msg.encoded.length}")
    print(f"adjacent_bits    {msg.adjacent.length}")
    print("dictionary:")
    for line in serialize_dictionary(msg.book).splitlines()[1:]:
        print(f"  {line}")
    return EXIT_OK


def cmd_bench(config: CliConfig) -> int:
    for t in config.thresholds:
        Threshold.from_max_distance(t)  # validate before any work
    if config.input is None:
        records = corpus_mod.load_bundled_corpus()
    else:
        records = corpus_mod.parse_corpus(config.input.read_text("utf-8"))
    cases = corpus_mod.build_test_cases(records, config.group_size)
    rows = corpus_mod.run_benchmark(
        cases, config.thresholds, per_message=config.per_message
    )
    if config.csv:
        report = render_csv(rows)
    else:
        report = render_table(rows, color=config.output is None and _use_color())
    if config.output is not None:
        config.output.write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return EXIT_OK


COMMANDS = {
    "compress": cmd_compress,
    "decompress": cmd_decompress,
    "inspect": cmd_inspect,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    try:
        return COMMANDS[config.command](config)
    except BadThresholdError as exc:
        print(f"ada: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AdaCodecError as exc:
        print(f"ada: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"ada: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
