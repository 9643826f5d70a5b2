import pytest

from circcap import Code, CodeFormatError, CyclicCodeSpec, cyclic_code, parse_code, read_code, write_code
from circcap.codeio import appendix_text, format_code


def test_appendix_fixture(appendix):
    assert (appendix.n, appendix.d, len(appendix)) == (7, 5, 367)
    text = appendix_text()
    groups = [g.strip() for line in text.splitlines() if line and not line.startswith(("#", "n="))
              for g in line.split(",") if g.strip()]
    assert len(groups) == 367
    assert groups[0] == "02020" and groups[-1] == "66025"


def test_comma_round_trip(tmp_path):
    code = cyclic_code(CyclicCodeSpec(382, 5, 7))
    path = tmp_path / "s.txt"
    write_code(code, path, comments=["cyclic"])
    text = path.read_text()
    assert text.startswith("# cyclic\nn=382 d=5\n")
    assert "1,7,49,343,109" in text
    assert read_code(path) == code


def test_compact_round_trip(appendix):
    text = format_code(appendix, compact=True)
    assert "\n02020\n" in text
    assert parse_code(text) == appendix


def test_compact_needs_small_n():
    with pytest.raises(ValueError):
        format_code(Code(11, 1, [(3,)]), compact=True)


def test_single_letter_words():
    assert parse_code("n=7 d=1\n0, 2\n4\n").words == ((0,), (2,), (4,))


@pytest.mark.parametrize("text,lineno", [
    ("0,1\n", 1),
    ("# c\nn=7 d=2\n0,1\n0,x\n", 4),
    ("n=7 d=2\n0,1,2\n", 2),
    ("n=7 d=2\n0,7\n", 2),
    ("n=7 d=2\n0,1\n0,1\n", 3),
    ("n=1 d=2\n", 1),
])
def test_malformed_files_report_line(text, lineno):
    with pytest.raises(CodeFormatError) as err:
        parse_code(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_missing_header():
    with pytest.raises(CodeFormatError):
        parse_code("# only a comment\n")
