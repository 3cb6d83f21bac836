import random

import pytest

from adacodec import cli
from adacodec.cli import EXIT_DATA, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from adacodec.codec import unpack_container
from adacodec.corpus import REPORT_COLUMNS
from adacodec.huffman import parse_dictionary

from helpers import WORKED_MESSAGE


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "msg.txt"
    path.write_bytes(WORKED_MESSAGE)
    return path


def run(*argv):
    return main([str(a) for a in argv])


class TestCompress:
    def test_worked_example_metrics_on_stdout(self, worked_file, tmp_path, capsys):
        out = tmp_path / "msg.ada"
        assert run("compress", "--threshold", "7", "-i", worked_file, "-o", out) == EXIT_OK
        lines = dict(
            line.split(None, 1) for line in capsys.readouterr().out.splitlines()
        )
        assert lines["encoded_bits"] == "57"
        assert lines["adjacent_bits"] == "17"
        assert lines["length"] == "17"
        assert out.exists()

    def test_default_output_path(self, worked_file, capsys):
        assert run("compress", "-i", worked_file) == EXIT_OK
        assert worked_file.with_name("msg.txt.ada").exists()

    def test_invalid_threshold_is_usage_error(self, worked_file, tmp_path, capsys):
        code = run("compress", "--threshold", "6", "-i", worked_file,
                   "-o", tmp_path / "x.ada")
        assert code == EXIT_USAGE
        assert "threshold" in capsys.readouterr().err.lower()

    def test_empty_input_is_data_error(self, tmp_path, capsys):
        empty = tmp_path / "empty.txt"
        empty.write_bytes(b"")
        assert run("compress", "-i", empty, "-o", tmp_path / "x.ada") == EXIT_DATA

    def test_missing_input_is_io_error(self, tmp_path, capsys):
        assert run("compress", "-i", tmp_path / "nope.txt",
                   "-o", tmp_path / "x.ada") == EXIT_IO

    def test_emit_dictionary(self, worked_file, tmp_path, capsys):
        out = tmp_path / "msg.ada"
        assert run("compress", "-i", worked_file, "-o", out,
                   "--emit-dictionary") == EXIT_OK
        listing = out.with_name("msg.ada.dict.txt").read_text("ascii")
        assert len(parse_dictionary(listing).codes) == 11

    def test_csv_metrics(self, worked_file, tmp_path, capsys):
        assert run("compress", "-i", worked_file, "-o", tmp_path / "x.ada",
                   "--csv") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ",".join(REPORT_COLUMNS)
        assert lines[1].startswith("msg.txt,17,7,57,17,74,")

    def test_unknown_flag_rejected(self, worked_file):
        with pytest.raises(SystemExit):
            run("compress", "-i", worked_file, "--frobnicate")


class TestDecompress:
    def test_roundtrip(self, worked_file, tmp_path, capsys):
        container = tmp_path / "msg.ada"
        restored = tmp_path / "restored.txt"
        assert run("compress", "-i", worked_file, "-o", container) == EXIT_OK
        assert run("decompress", "-i", container, "-o", restored) == EXIT_OK
        assert restored.read_bytes() == WORKED_MESSAGE

    def test_roundtrip_arbitrary_binary(self, tmp_path, capsys):
        rng = random.Random(99)
        payload = bytes(range(256)) + bytes(rng.randrange(256) for _ in range(8192))
        source = tmp_path / "blob.bin"
        source.write_bytes(payload)
        container = tmp_path / "blob.ada"
        restored = tmp_path / "blob.out"
        assert run("compress", "-i", source, "-o", container) == EXIT_OK
        assert run("decompress", "-i", container, "-o", restored) == EXIT_OK
        assert restored.read_bytes() == payload

    def test_corrupt_magic_is_data_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.ada"
        bad.write_bytes(b"JUNKJUNKJUNK")
        assert run("decompress", "-i", bad, "-o", tmp_path / "out.txt") == EXIT_DATA

    def test_truncated_container_is_data_error(self, worked_file, tmp_path, capsys):
        container = tmp_path / "msg.ada"
        run("compress", "-i", worked_file, "-o", container)
        container.write_bytes(container.read_bytes()[:-2])
        assert run("decompress", "-i", container, "-o", tmp_path / "out.txt") == EXIT_DATA


class TestTextDebugFormat:
    def test_triple_written(self, worked_file, tmp_path, capsys):
        debug_dir = tmp_path / "debug"
        assert run("compress", "-i", worked_file, "-o", debug_dir,
                   "--format", "text-debug") == EXIT_OK
        assert sorted(p.name for p in debug_dir.iterdir()) == [
            "adjacent.txt", "dictionary.txt", "encode.txt",
        ]
        assert debug_dir.joinpath("adjacent.txt").read_text("ascii").strip() == "0" * 17

    def test_cross_format_roundtrip(self, worked_file, tmp_path, capsys):
        debug_dir = tmp_path / "debug"
        packed = tmp_path / "msg.ada"
        run("compress", "-i", worked_file, "-o", packed)
        run("compress", "-i", worked_file, "-o", debug_dir, "--format", "text-debug")

        from_packed = tmp_path / "a.txt"
        from_debug = tmp_path / "b.txt"
        assert run("decompress", "-i", packed, "-o", from_packed) == EXIT_OK
        assert run("decompress", "-i", debug_dir, "-o", from_debug,
                   "--format", "text-debug") == EXIT_OK
        assert from_packed.read_bytes() == from_debug.read_bytes() == WORKED_MESSAGE


class TestInspect:
    def test_prints_header_and_dictionary(self, worked_file, tmp_path, capsys):
        container = tmp_path / "msg.ada"
        run("compress", "-i", worked_file, "-o", container)
        capsys.readouterr()
        assert run("inspect", "-i", container) == EXIT_OK
        out = capsys.readouterr().out
        assert "T=7 (x=3)" in out
        assert "original_length  17" in out
        assert "symbols          11" in out

    def test_container_fields_roundtrip(self, worked_file, tmp_path, capsys):
        container = tmp_path / "msg.ada"
        run("compress", "-i", worked_file, "-o", container)
        msg = unpack_container(container.read_bytes())
        assert msg.original_length == 17
        assert msg.threshold.max_distance == 7


class TestBench:
    def test_bundled_corpus_csv(self, capsys):
        assert run("bench", "--csv") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ",".join(REPORT_COLUMNS)
        data_rows = [l for l in lines[1:] if ",gsm," not in l]
        gsm_rows = [l for l in lines[1:] if ",gsm," in l]
        assert len(data_rows) == 10
        assert len(gsm_rows) == 5

    def test_single_threshold(self, capsys):
        assert run("bench", "--csv", "--thresholds", "3") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        data_rows = [l for l in lines[1:] if ",gsm," not in l]
        assert len(data_rows) == 5
        assert all(",3," in row for row in data_rows)

    def test_invalid_threshold_rejected(self, capsys):
        assert run("bench", "--thresholds", "7", "9") == EXIT_USAGE

    def test_report_to_file_without_color(self, tmp_path, capsys):
        report = tmp_path / "report.txt"
        assert run("bench", "-o", report) == EXIT_OK
        text = report.read_text("utf-8")
        assert "\x1b[" not in text
        assert text.splitlines()[0].split() == list(REPORT_COLUMNS)

    def test_external_corpus_file(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text(
            "\n".join(
                f'<message id="{i}"><text>hello little message {i} {i} {i}</text>'
                for i in range(5)
            )
        )
        assert run("bench", "-i", corpus, "--csv") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[1].startswith("T1,")

    def test_parse_failure_is_data_error(self, tmp_path, capsys):
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("this is not a corpus")
        assert run("bench", "-i", corpus) == EXIT_DATA

    def test_per_message_flag(self, capsys):
        assert run("bench", "--csv", "--per-message") == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 16


class TestColorGating:
    def test_env_var_disables_color(self, monkeypatch):
        class FakeTty:
            def isatty(self):
                return True

        monkeypatch.setattr(cli.sys, "stdout", FakeTty())
        monkeypatch.delenv("ADA_NO_COLOR", raising=False)
        assert cli._use_color()
        monkeypatch.setenv("ADA_NO_COLOR", "1")
        assert not cli._use_color()

    def test_non_tty_has_no_color(self, capsys):
        run("bench")
        assert "\x1b[" not in capsys.readouterr().out
