#!/usr/bin/env python3
"""Run the bundled-corpus benchmark at T=7 and T=15 and print both reports.

Usage: python scripts/reproduce_benchmark.py [--csv-out report.csv]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from adacodec.corpus import (  # noqa: E402
    build_test_cases,
    load_bundled_corpus,
    render_csv,
    render_table,
    run_benchmark,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv-out", type=Path, help="also write the CSV report here")
    args = parser.parse_args()

    cases = build_test_cases(load_bundled_corpus())
    rows = run_benchmark(cases, thresholds=(7, 15))
    sys.stdout.write(render_table(rows))

    codec_rows = [r for r in rows if r.threshold == 7]
    mean_enh = sum(r.enhancement_pct for r in codec_rows) / len(codec_rows)
    print(f"\nmean enhancement at T=7: {mean_enh:.2f}%")

    if args.csv_out:
        args.csv_out.write_text(render_csv(rows), encoding="utf-8")
        print(f"CSV written to {args.csv_out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
