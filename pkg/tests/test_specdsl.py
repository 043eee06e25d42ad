"""Structure-spec DSL: parsing, rendering, round-trips, elaboration errors."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from absorb.errors import ElaborationError, SpecSyntaxError
from absorb.specdsl import (
    elaborate_module,
    elaborate_ring,
    elaborate_sub,
    parse_module_spec,
    parse_ring_spec,
    parse_spec,
    parse_sub_spec,
    render,
)

GOOD_MODULE_SPECS = [
    ("self(Zn(12))", 12),
    ("cyc(Zn(12),4)", 4),
    ("prod(cyc(Zn(12),3),cyc(Zn(12),4))", 12),
    ("quotm(self(Zn(24)),gen[12])", 12),
    ("self(prod(Zn(2),Zn(3)))", 6),
    ("self(quot(Zn(24),gen[12]))", 12),
    ("self(idealize(Zn(6),self(Zn(6))))", 36),
    ("self(loc(Zn(12),mset[4]))", 3),
    ("self(amalg(Zn(12),Zn(6),redmap,gen[2]))", 36),
    ("amalgm(self(Zn(12)),self(Zn(6)),redmap,gen[2])", 36),
    ("quotm(prod(cyc(Zn(6),2),cyc(Zn(6),3)),gen[(1,0)])", 3),
]


@pytest.mark.parametrize("text,order", GOOD_MODULE_SPECS)
def test_module_specs_elaborate_with_expected_order(text, order):
    assert elaborate_module(parse_module_spec(text)).order == order


@pytest.mark.parametrize("text,order", GOOD_MODULE_SPECS)
def test_render_round_trip(text, order):
    ast = parse_module_spec(text)
    rendered = render(ast)
    again = parse_module_spec(rendered)
    assert render(again) == rendered
    # round-trip is semantic too: same structural parse tree shape
    assert _shape(ast) == _shape(again)


def _shape(node):
    return (
        node.kind,
        tuple(_shape(a) if hasattr(a, "kind") else a for a in node.args),
    )


def test_whitespace_insensitive():
    a = parse_module_spec("prod( cyc( Zn(12), 3 ),\n  cyc(Zn(12), 4) )")
    b = parse_module_spec("prod(cyc(Zn(12),3),cyc(Zn(12),4))")
    assert render(a) == render(b)


def test_idealize_spec_cardinality():
    R = elaborate_ring(parse_ring_spec("idealize(Zn(6),self(Zn(6)))"))
    assert R.order == 36


def test_zn_spec():
    assert elaborate_ring(parse_ring_spec("Zn(12)")).order == 12


def test_syntax_error_has_location():
    with pytest.raises(SpecSyntaxError) as ei:
        parse_module_spec("self(Zn(12)")
    assert ei.value.line == 1 and ei.value.column >= 11
    with pytest.raises(SpecSyntaxError):
        parse_module_spec("self(Zn(12)))")
    with pytest.raises(SpecSyntaxError):
        parse_module_spec("frob(Zn(12))")
    with pytest.raises(SpecSyntaxError):
        parse_sub_spec("gen[]")


def test_elaboration_errors():
    with pytest.raises(ElaborationError):
        elaborate_module(parse_module_spec("cyc(Zn(12),5)"))  # 5 does not divide 12
    with pytest.raises(ElaborationError):
        elaborate_module(parse_module_spec("prod(self(Zn(2)),self(Zn(3)))"))
    with pytest.raises(ElaborationError):
        elaborate_module(parse_module_spec("amalgm(self(Zn(6)),self(Zn(12)),redmap,zero)"))


def test_sub_specs():
    M = elaborate_module(parse_module_spec("self(Zn(12))"))
    assert elaborate_sub(parse_sub_spec("zero"), M).indices == (0,)
    assert elaborate_sub(parse_sub_spec("full"), M).mask == (1 << 12) - 1
    assert elaborate_sub(parse_sub_spec("gen[4,6]"), M).indices == (0, 2, 4, 6, 8, 10)


def test_pair_elements():
    M = elaborate_module(parse_module_spec("prod(cyc(Zn(6),2),cyc(Zn(6),3))"))
    N = elaborate_sub(parse_sub_spec("gen[(1,0)]"), M)
    assert len(N.indices) == 2


def test_hom_table_spec():
    M = elaborate_module(
        parse_module_spec(
            "amalgm(self(Zn(6)),self(Zn(6)),table[0:0,1:1,2:2,3:3,4:4,5:5],gen[3])"
        )
    )
    assert M.order == 12


def test_hom_table_must_be_total_and_in_range():
    with pytest.raises(ElaborationError):
        elaborate_module(
            parse_module_spec("amalgm(self(Zn(6)),self(Zn(6)),table[0:0,1:1],zero)")
        )
    with pytest.raises(ElaborationError):
        elaborate_module(
            parse_module_spec(
                "amalgm(self(Zn(6)),self(Zn(6)),table[0:0,1:1,2:2,3:3,4:4,5:9],zero)"
            )
        )


def test_parse_spec_accepts_ring_or_module():
    assert parse_spec("Zn(12)").kind == "ring-zn"
    assert parse_spec("self(Zn(12))").kind == "mod-self"


# -- generated round-trips ---------------------------------------------------

_rings = st.deferred(
    lambda: st.one_of(
        st.integers(2, 24).map(lambda n: f"Zn({n})"),
        st.tuples(_rings, _rings).map(lambda t: f"prod({t[0]},{t[1]})"),
    )
)
_modules = st.deferred(
    lambda: st.one_of(
        _rings.map(lambda r: f"self({r})"),
        st.tuples(_modules, _modules).map(lambda t: f"prod({t[0]},{t[1]})"),
    )
)


@given(_modules)
@settings(max_examples=60, deadline=None)
def test_generated_specs_round_trip(text):
    ast = parse_module_spec(text)
    assert render(parse_module_spec(render(ast))) == render(ast)
