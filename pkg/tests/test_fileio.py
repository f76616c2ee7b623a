from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from steinerrep.fileio import (
    FormatError,
    format_ideal,
    format_matrix,
    is_ring_header,
    parse_ring_header,
    read_form,
    read_ideal,
    read_matrix,
    ring_header,
)
from steinerrep.ideal import Ideal
from steinerrep.poly import PolyRing

from strategies import QQ, RINGS, polynomials

DATA = Path(__file__).parent / "data"


def test_ring_header():
    R = parse_ring_header("ring: q; vars: a, b c; order: elim:1")
    assert R.var_names == ("a", "b", "c") and str(R.order) == "elim:1" and R.field.characteristic == 0
    assert parse_ring_header(ring_header(R)) == R
    assert parse_ring_header("vars: x").field.characteristic == 32003
    assert is_ring_header("  ring: q; vars: x") and not is_ring_header("x + ring")
    for bad in ("ring: q", "ring: gf:10; vars: x", "ring q; vars: x", "vars: x; order: deglex"):
        with pytest.raises(FormatError):
            parse_ring_header(bad)


def test_read_ideal_with_comments():
    I = read_ideal((DATA / "twisted_cubic.txt").read_text())
    assert len(I.generators) == 3
    text = "# a comment\nring: q; vars: x, y\n\nx^2  # trailing\n0\ny\n"
    J = read_ideal(text)
    assert J == Ideal(J.ring, [J.ring.parse("x^2"), J.ring.gen(1)])


def test_headerless_ideal_needs_a_ring():
    text = (DATA / "saturate_by.txt").read_text()
    with pytest.raises(FormatError, match="no ring header"):
        read_ideal(text)
    R = PolyRing(QQ, ["x0", "x1"])
    assert len(read_ideal(text, R).generators) == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FormatError, match="line 3"):
        read_ideal("ring: q; vars: x\nx\nx +* 2\n")


def test_read_form():
    F = read_form((DATA / "quadric_form.txt").read_text())
    assert F.degree() == 2
    with pytest.raises(FormatError, match="exactly one"):
        read_form("ring: q; vars: x, y\nx\ny\n")


@pytest.mark.parametrize("name", sorted(RINGS))
@given(data=st.data())
@settings(max_examples=20)
def test_ideal_roundtrip(name, data):
    R = RINGS[name]
    gens = [data.draw(polynomials(R)) for _ in range(3)]
    I = Ideal(R, gens)
    again = read_ideal(format_ideal(I))
    assert again.ring == R and again.generators == I.generators


def test_matrix_files():
    m = read_matrix((DATA / "quadric_pf.txt").read_text())
    assert m.nrows == 4 and m.is_skew_symmetric()
    assert read_matrix(format_matrix(m)) == m
    with pytest.raises(FormatError):
        read_matrix("rows: 1; cols: 1\nx0\n")
    with pytest.raises(FormatError, match="expected 2 rows"):
        read_matrix("vars: x0\nrows: 2; cols: 1\nx0\n")
    with pytest.raises(FormatError):
        read_matrix("vars: x0\nrows: 1; cols: 1\nx1\n")
