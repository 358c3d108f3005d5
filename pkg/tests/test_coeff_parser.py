import pytest

from tripurify.coeff_parser import get_parser_counters, load_coefficients, parse_coefficients
from tripurify.errors import CoefficientParseError

VALID = """\
# mixture of GB1 and GB4
0.6, 0, 0, 0.4   # W block
0 0 0 0
"""


def test_parse_mixed_separators_and_comments():
    c = parse_coefficients(VALID)
    assert c.c == (0.6, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0)


def test_parse_sixteen_entries():
    c = parse_coefficients(" ".join(["0.0625"] * 16))
    assert c.parties == 4


def test_non_numeric_token_names_the_line():
    with pytest.raises(CoefficientParseError, match="line 2"):
        parse_coefficients("0.5 0.5\n0 zero 0 0 0 0")


@pytest.mark.parametrize(
    "text, message",
    [
        ("0.5, 0.5", "coefficient count"),
        ("1.5 -0.5 0 0 0 0 0 0", "entries >= 0"),
        ("0.2 0.2 0.2 0.2 0.2 0.2 0.2 0.2", "sum to 1"),
    ],
)
def test_invalid_vectors_name_the_invariant(text, message):
    with pytest.raises(CoefficientParseError, match=message) as excinfo:
        parse_coefficients(text)
    assert str(excinfo.value).startswith("violated invariant")


def test_counters_track_files_and_errors():
    before = get_parser_counters()
    parse_coefficients(VALID)
    with pytest.raises(CoefficientParseError):
        parse_coefficients("nope")
    after = get_parser_counters()
    assert after["files_parsed"] == before["files_parsed"] + 1
    assert after["parse_errors"] == before["parse_errors"] + 1


def test_counters_are_a_copy():
    get_parser_counters()["files_parsed"] = -1
    assert get_parser_counters()["files_parsed"] >= 0


def test_load_from_file(tmp_path):
    path = tmp_path / "coeffs.txt"
    path.write_text(VALID, encoding="utf-8")
    assert load_coefficients(path).c[0] == 0.6


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_coefficients(tmp_path / "absent.txt")
