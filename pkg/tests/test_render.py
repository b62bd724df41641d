from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from omegabraid.geometry import word_to_pl
from omegabraid.render import render
from omegabraid.words import BraidWord, parse_word


def test_identity_ascii_is_parallel_lines():
    lines = render(word_to_pl(BraidWord.identity(2))).splitlines()
    assert lines[0].startswith("0") and lines[-1].startswith("1")
    assert "\\" not in "".join(lines) and "/" not in "".join(lines)


def test_positive_and_negative_crossings_differ():
    pos = render(word_to_pl(parse_word("B2: s0"))).splitlines()
    neg = render(word_to_pl(parse_word("B2: s0^-1"))).splitlines()
    assert pos[1].strip() == "\\"
    assert neg[1].strip() == "/"


def test_svg_dimensions():
    svg = render(word_to_pl(parse_word("B3: s0 s1^-1")), "svg")
    root = ET.fromstring(svg)
    assert root.get("width") == "100"
    assert root.get("height") == "120"


def test_svg_back_strand_has_a_gap():
    root = ET.fromstring(render(word_to_pl(parse_word("B2: s0")), "svg"))
    lines = root.findall("{http://www.w3.org/2000/svg}polyline")
    per_strand = {}
    for line in lines:
        per_strand[line.get("data-strand")] = per_strand.get(line.get("data-strand"), 0) + 1
    assert sorted(per_strand.values()) == [1, 2]


def test_render_is_deterministic():
    b = word_to_pl(parse_word("B4: s0 s2 s1^-1"))
    assert render(b, "svg") == render(b, "svg")


def test_unknown_format():
    with pytest.raises(ValueError):
        render(word_to_pl(BraidWord.identity(1)), "png")
