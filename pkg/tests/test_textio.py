import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homnambu import textio
from homnambu.algebra import BracketTensor, HomNambuAlgebra
from homnambu.errors import DuplicateKey, ParseError, RangeError
from homnambu.exact import Matrix
from homnambu.fixtures import algebra_catalog, leib2, leib2_cochains, leib2_functional

LEIB2_DOC = """\
# the two-dimensional Leibniz algebra
name: leib2
dim: 2
arity: 2
twist 1: id
bracket:
2 2 -> 1 : 1
"""


def test_leib2_document_parses_to_fixture():
    assert textio.parse_algebra(LEIB2_DOC) == leib2()


def test_no_constants_is_abelian():
    alg = textio.parse_algebra("dim: 3\narity: 3\ntwist 1: id\ntwist 2: id\n")
    assert alg.bracket.is_zero()
    assert alg.dim == 3


@pytest.mark.parametrize("name", sorted(algebra_catalog()))
def test_round_trip_catalog(name):
    alg = algebra_catalog()[name]
    text = textio.serialize_algebra(alg)
    again = textio.parse_algebra(text)
    assert again == alg
    assert textio.serialize_algebra(again) == text


def test_shipped_fixture_files_match_catalog(root):
    for name, alg in algebra_catalog().items():
        stem = name.replace("(", "_").replace(")", "").replace(",", "_")
        text = (root / "fixtures" / f"{stem}.alg").read_text()
        assert textio.parse_algebra(text) == alg
        assert text == textio.serialize_algebra(alg)


def test_twist_matrix_syntax():
    doc = "dim: 2\narity: 2\ntwist 1: 4 0; 0 2\nbracket:\n2 2 -> 1 : 4\n"
    alg = textio.parse_algebra(doc)
    assert alg.alpha == Matrix.diag([4, 2])


def test_zero_denominator_position():
    doc = LEIB2_DOC.replace(": 1\n", ": 1/0\n")
    with pytest.raises(ParseError) as exc:
        textio.parse_algebra(doc)
    assert exc.value.line == 7
    assert exc.value.column == 12


def test_bad_index_is_range_error():
    with pytest.raises(RangeError) as exc:
        textio.parse_algebra(LEIB2_DOC.replace("2 2 -> 1", "2 3 -> 1"))
    assert exc.value.line == 7


def test_bad_output_index():
    with pytest.raises(RangeError):
        textio.parse_algebra(LEIB2_DOC.replace("-> 1", "-> 0"))


def test_duplicate_key():
    with pytest.raises(DuplicateKey):
        textio.parse_algebra(LEIB2_DOC + "2 2 -> 1 : 3\n")


@pytest.mark.parametrize("doc", [
    "dim: 2\narity: 2\n",                                  # missing twist
    "dim: 2\narity: 2\ntwist 1: id\ntwist 2: id\n",        # extra twist
    "dim: 2\narity: 2\ntwist 1: 1 0\n",                    # wrong shape
    "dim: 2\narity: 2\ntwist 1: id\nfoo: 1\n",             # unknown header
    "dim: x\narity: 2\ntwist 1: id\n",
    "dim: 2\narity: 2\ntwist 1: id\n1 1 -> 1 : 1\n",       # constant outside section
    "dim: 2\narity: 2\ntwist 1: id\nbracket:\n1 -> 1 : 1\n",
])
def test_malformed_documents(doc):
    with pytest.raises(ParseError):
        textio.parse_algebra(doc)


def test_representation_round_trip():
    rep = leib2_functional()
    text = textio.serialize_representation(rep)
    assert textio.parse_representation(text) == rep


def test_cochain_round_trip():
    for name, f in leib2_cochains().items():
        text = textio.serialize_cochain(f, name)
        assert textio.parse_cochain(text)[-1] == f


def test_digest_is_lowercase_sha256():
    h = textio.digest(LEIB2_DOC)
    assert len(h) == 64 and h == h.lower()


consts = st.dictionaries(
    st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    max_size=8,
)


@given(consts, st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3),
                        min_size=4, max_size=4))
@settings(max_examples=50)
def test_round_trip_random(c, tw):
    alg = HomNambuAlgebra(BracketTensor(2, 2, c), (Matrix.from_flat(tw, 2, 2),), "r")
    text = textio.serialize_algebra(alg)
    assert textio.parse_algebra(text) == alg
    assert textio.serialize_algebra(textio.parse_algebra(text)) == text
