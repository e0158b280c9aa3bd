"""Unit tests for the signature text format."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.config.enums import SignatureLabel
from src.exceptions import MalformedLineError, TimestampOrderError, TooFewSamplesError
from src.signature.parser import parse_signature, read_signature, serialize_signature, write_signature

HEADER = "GAFSV-SIG 1 w001 genuine\n"
BODY = "0 0 0 0.5\n0.01 1 0 0.5\n0.02 2 1 0.6\n0.03 3 1 0.4\n"


class TestParseSignature:
    """Tests for parse_signature."""

    def test_valid_document(self) -> None:
        sig = parse_signature(HEADER + BODY)
        assert sig.writer_id == "w001"
        assert sig.label is SignatureLabel.GENUINE
        np.testing.assert_array_equal(sig.x, [0, 1, 2, 3])
        np.testing.assert_array_equal(sig.p, [0.5, 0.5, 0.6, 0.4])

    def test_missing_trailing_newline_accepted(self) -> None:
        assert parse_signature(HEADER + BODY.rstrip("\n")).n_samples == 4

    @pytest.mark.parametrize(
        "header",
        [
            "GAFSV-SIG 2 w001 genuine",
            "SIG 1 w001 genuine",
            "GAFSV-SIG 1 w001",
            "GAFSV-SIG 1 w001 imposter",
            "GAFSV-SIG 1 w\t01 genuine",
            "GAFSV-SIG 1 w\x0001 genuine",
        ],
    )
    def test_bad_header(self, header: str) -> None:
        with pytest.raises(MalformedLineError) as exc_info:
            parse_signature(header + "\n" + BODY)
        assert exc_info.value.line == 1

    def test_wrong_field_count_reports_line(self) -> None:
        with pytest.raises(MalformedLineError) as exc_info:
            parse_signature(HEADER + "0 0 0 0.5\n0.01 1 0\n")
        assert exc_info.value.line == 3

    def test_non_numeric_field(self) -> None:
        with pytest.raises(MalformedLineError, match="not a decimal"):
            parse_signature(HEADER + "0 0 zero 0.5\n")

    def test_non_finite_field(self) -> None:
        with pytest.raises(MalformedLineError, match="non-finite"):
            parse_signature(HEADER + "0 1e999 0 0.5\n")

    @pytest.mark.parametrize("token", ["1_0", "nan", "inf", "0x10", "1\r", "\t1", "1.5e", "+"])
    def test_rejects_non_decimal_tokens(self, token: str) -> None:
        with pytest.raises(MalformedLineError, match="not a decimal") as exc_info:
            parse_signature(HEADER + f"0 {token} 0 0.5\n" + BODY)
        assert exc_info.value.line == 2

    @pytest.mark.parametrize("token", ["1e-05", "-0.0", ".5", "5.", "+2E+3"])
    def test_accepts_decimal_forms(self, token: str) -> None:
        doc = HEADER + f"0 {token} 0 0.5\n" + "".join(f"{i} 0 0 0.5\n" for i in range(1, 4))
        assert parse_signature(doc).x[0] == float(token)

    def test_negative_pressure(self) -> None:
        with pytest.raises(MalformedLineError, match="negative pressure"):
            parse_signature(HEADER + "0 0 0 -0.1\n")

    def test_repeated_timestamp(self) -> None:
        with pytest.raises(TimestampOrderError) as exc_info:
            parse_signature(HEADER + "0 0 0 0.5\n0.01 1 0 0.5\n0.01 2 0 0.5\n0.02 3 0 0.5\n")
        assert exc_info.value.line == 4

    def test_too_few_samples(self) -> None:
        with pytest.raises(TooFewSamplesError):
            parse_signature(HEADER + "0 0 0 0.5\n0.01 1 0 0.5\n0.02 2 0 0.5\n")

    def test_empty_document(self) -> None:
        with pytest.raises(MalformedLineError):
            parse_signature("")


class TestReadSignature:
    def test_invalid_utf8_names_line(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.txt"
        path.write_bytes(HEADER.encode() + b"0 0 0 0.5\n0.01 \xff\xfe 0 0.5\n")
        with pytest.raises(MalformedLineError, match="invalid UTF-8") as exc_info:
            read_signature(path)
        assert exc_info.value.line == 3


class TestRoundTrip:
    """Serialising then parsing reproduces every sample exactly."""

    def test_file_round_trip(self, tmp_path: Path, signature_factory) -> None:
        sig = signature_factory(n=50, seed=4, label=SignatureLabel.SKILLED_FORGERY)
        path = tmp_path / "nested" / "sig.txt"
        write_signature(path, sig)
        assert b"\r\n" not in path.read_bytes()
        again = read_signature(path)
        np.testing.assert_array_equal(again.samples, sig.samples)
        assert (again.writer_id, again.label) == (sig.writer_id, sig.label)

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(
            st.tuples(
                st.floats(-1e6, 1e6, allow_nan=False),
                st.floats(-1e6, 1e6, allow_nan=False),
                st.floats(0, 1e3, allow_nan=False),
            ),
            min_size=4,
            max_size=40,
        )
    )
    def test_arbitrary_values_round_trip(self, rows: list[tuple[float, float, float]]) -> None:
        text = HEADER + "".join(f"{i * 0.125!r} {x!r} {y!r} {p!r}\n" for i, (x, y, p) in enumerate(rows))
        sig = parse_signature(text)
        np.testing.assert_array_equal(parse_signature(serialize_signature(sig)).samples, sig.samples)
