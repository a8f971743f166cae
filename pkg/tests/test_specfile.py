from fractions import Fraction

import pytest

from superconf.specfile import AlgebraSpec, SpecError, parse_spec, render_spec


CATALOG_TEXT = 'algebra "3dN1" { standard { dimension = 3; supersymmetry = "N=1"; } }'

EXPLICIT_TEXT = """
algebra "threeD" {
  odd_dim = 2; even_dim = 3;
  gamma {
    (1,1) -> [2,0,0];
    (1,2) -> [0,1,0];
    (2,2) -> [0,0,2];
  }
}
"""


def test_parse_catalog():
    spec = parse_spec(CATALOG_TEXT)
    assert spec.standard == (3, "N=1")
    alg = spec.build()
    assert (alg.k, alg.d) == (2, 3)
    assert sorted(str(q) for q in alg.quadrics()) == ["2*l1*l2", "l1^2", "l2^2"]


def test_parse_explicit_matches_catalog_ideal():
    spec = parse_spec(EXPLICIT_TEXT)
    alg = spec.build()
    assert (alg.k, alg.d) == (2, 3)
    # ideal (l1^2, l1 l2, l2^2) up to unit scaling
    quadrics = sorted(str(q) for q in alg.quadrics())
    assert quadrics == ["2*l1*l2", "2*l1^2", "2*l2^2"]


def test_symmetry_violation():
    text = 'algebra "bad" { odd_dim = 2; even_dim = 1; gamma { (1,2) -> [1]; (2,1) -> [2]; } }'
    with pytest.raises(SpecError):
        parse_spec(text)


def test_row_length_mismatch():
    text = 'algebra "bad" { odd_dim = 2; even_dim = 2; gamma { (1,1) -> [1]; } }'
    with pytest.raises(SpecError):
        parse_spec(text)


def test_index_out_of_range():
    text = 'algebra "bad" { odd_dim = 1; even_dim = 1; gamma { (1,2) -> [1]; } }'
    with pytest.raises(SpecError):
        parse_spec(text)


def test_syntax_error_carries_position():
    with pytest.raises(SpecError) as err:
        parse_spec('algebra "x" { odd_dim = ; }')
    assert "line 1" in str(err.value)


def test_round_trip():
    for text in (CATALOG_TEXT, EXPLICIT_TEXT):
        spec = parse_spec(text)
        rendered = render_spec(spec)
        assert render_spec(parse_spec(rendered)) == rendered


def test_rationals_in_gamma():
    text = 'algebra "half" { odd_dim = 1; even_dim = 1; gamma { (1,1) -> [1/2]; } }'
    alg = parse_spec(text).build()
    assert alg.gamma[0][0][0] == Fraction(1, 2)
