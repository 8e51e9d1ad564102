import json

import pytest
from hypothesis import given, settings, strategies as st

from argex import Framework, ParseError, UndeclaredArgument, parse_framework, read_framework, serialize_framework


def test_parse_minimal_apx():
    fw = parse_framework("arg(a).\narg(b).\natt(a,b).", "apx")
    assert fw.args == {"a", "b"} and fw.attacks == {("a", "b")}


def test_parse_af1_file(data_dir, af1):
    assert read_framework(data_dir / "af1.apx") == af1
    assert read_framework(data_dir / "af1.tgf") == af1


def test_apx_comments_whitespace_and_several_statements_per_line():
    text = "# header\n  arg(a). arg(b).\n\natt( a , b ).\n"
    fw = parse_framework(text, "apx")
    assert fw.attacks == {("a", "b")}


def test_undeclared_endpoint_reports_line():
    with pytest.raises(UndeclaredArgument) as info:
        parse_framework("arg(a).\natt(a,b).", "apx")
    assert info.value.line == 2


@pytest.mark.parametrize("text", ["arg(a)", "arg(a).\nfoo(b).", "arg(a-b)."])
def test_malformed_apx(text):
    with pytest.raises(ParseError):
        parse_framework(text, "apx")


def test_malformed_tgf():
    with pytest.raises(ParseError):
        parse_framework("a\nb\n#\na b c\n", "tgf")
    with pytest.raises(UndeclaredArgument):
        parse_framework("a\n#\na b\n", "tgf")


def test_empty_framework_serialises_to_nothing():
    assert serialize_framework(Framework([], set()), "apx") == ""


def test_af1_apx_and_dot(af1):
    lines = serialize_framework(af1, "apx").splitlines()
    assert sum(l.startswith("arg(") for l in lines) == 7
    assert sum(l.startswith("att(") for l in lines) == 8
    dot = serialize_framework(af1, "dot")
    assert dot.startswith("digraph")
    assert dot.count("->") == 8
    assert sum(1 for l in dot.splitlines() if l.strip().endswith(";") and "->" not in l) == 7


def test_json_output(af2):
    doc = json.loads(serialize_framework(af2, "json"))
    assert doc["arguments"] == ["A", "B", "C", "D"]
    assert ["A", "C"] in doc["attacks"] and len(doc["attacks"]) == 6


def test_format_inferred_from_suffix(tmp_path, af2):
    path = tmp_path / "x.tgf"
    path.write_text(serialize_framework(af2, "tgf"))
    assert read_framework(path) == af2


names = st.from_regex(r"[A-Za-z0-9_]{1,4}", fullmatch=True)


@st.composite
def frameworks(draw):
    args = draw(st.sets(names, max_size=8))
    pairs = [(x, y) for x in args for y in args]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=20)) if pairs else set()
    return Framework(args, attacks)


@settings(max_examples=200, deadline=None)
@given(frameworks(), st.sampled_from(["apx", "tgf"]))
def test_round_trip(fw, fmt):
    text = serialize_framework(fw, fmt)
    assert parse_framework(text, fmt) == fw
    assert serialize_framework(parse_framework(text, fmt), fmt) == text
