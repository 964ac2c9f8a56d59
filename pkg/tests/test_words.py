"""Word algebra: brackets, derivations, push/circ properties, bases."""

from fractions import Fraction as F
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from moulde import words
from moulde.words import (NCPoly, X, Y, angle_bracket, apply_derivation, beta,
                          c_monomial, c_poly, decompose, divergence,
                          from_c_basis, ihara_derivation, is_circ_constant_poly,
                          is_circ_neutral_poly, is_lie_element,
                          is_push_constant, is_push_invariant, is_push_neutral,
                          lie_bracket, lyndon_lie_basis, lyndon_words,
                          ncpoly_from_text, ncpoly_to_text, nu_twist,
                          oder_pair, partner, poisson_bracket, push_orbit,
                          push_word, to_c_basis, trace_project)


def word_polys(max_len=4, max_terms=4):
    ws = st.text(alphabet="xy", min_size=0, max_size=max_len)
    cs = st.integers(-4, 4).map(F)
    return st.dictionaries(ws, cs, max_size=max_terms).map(NCPoly)


# -- basics ------------------------------------------------------------------

def test_concatenation_product():
    f = NCPoly.word("xy") * NCPoly.word("yx")
    assert f == NCPoly.word("xyyx")
    assert (X + Y) * (X - Y) == (NCPoly.word("xx") - NCPoly.word("xy")
                                 + NCPoly.word("yx") - NCPoly.word("yy"))


def test_lie_bracket_and_dynkin():
    b3 = lie_bracket(X, lie_bracket(X, Y))
    assert b3 == (NCPoly.word("xxy") - NCPoly.word("xyx").scale(2)
                  + NCPoly.word("yxx"))
    assert is_lie_element(b3)
    assert not is_lie_element(NCPoly.word("xy"))


def test_decompose_reassembles():
    f = NCPoly({"xy": F(2), "yx": F(-1), "x": F(3), "": F(5)})
    c, f_x, f_y, fux, fuy = decompose(f)
    assert c == 5
    assert NCPoly.one(c) + f_x * X + f_y * Y == f
    assert NCPoly.one(c) + X * fux + Y * fuy == f


def test_beta_is_involutive_antiautomorphism():
    f = NCPoly.word("xxy")
    g = NCPoly.word("yx")
    assert beta(beta(f)) == f
    assert beta(f * g) == beta(g) * beta(f)


# -- push and circ -----------------------------------------------------------

def test_push_orbit():
    assert push_orbit("xxy") == ["xxy", "yxx"]
    assert push_orbit("xyx") == ["xyx", "xyx"]  # fixed point of push
    assert push_orbit("xx") == ["xx"]


def test_push_invariance_of_b3_pattern():
    f = NCPoly({"xxy": F(1), "yxx": F(1), "xyx": F(1)})
    assert is_push_invariant(f)
    assert not is_push_invariant(NCPoly.word("xxy"))


def test_push_neutral():
    f = NCPoly({"xxy": F(1), "yxx": F(-1)})  # orbit sum 0
    assert is_push_neutral(f)
    assert not is_push_neutral(NCPoly.word("xxy"))


def test_push_constant_rejects_yn():
    f = NCPoly({"yy": F(1)})
    ok, _ = is_push_constant(f)
    assert not ok


def test_circ_constant_simple():
    # weight 3, c = 1: depth-1 term xxy plus a depth-2 class with sum 1
    f = NCPoly({"xxy": F(1), "xyy": F(1)})
    ok, c = is_circ_constant_poly(f)
    assert ok and c == 1
    bad = NCPoly({"xxy": F(1), "xyy": F(1), "yxy": F(1)})
    ok, _ = is_circ_constant_poly(bad)
    assert not ok


@given(word_polys())
@settings(max_examples=50, deadline=None)
def test_push_word_preserves_weight_and_depth(f):
    g = push_word(f)
    assert sorted(len(w) for w in g.terms) == sorted(len(w) for w in f.terms)
    assert (sorted(w.count("y") for w in g.terms)
            == sorted(w.count("y") for w in f.terms))


# -- derivations and brackets ------------------------------------------------

def test_ihara_derivation_leibniz():
    b = lie_bracket(X, Y)
    d = ihara_derivation(b)
    f = NCPoly.word("xy")
    g = NCPoly.word("yx")
    assert (apply_derivation(d, f * g)
            == apply_derivation(d, f) * g + f * apply_derivation(d, g))


def test_poisson_antisymmetry():
    b = lie_bracket(X, lie_bracket(X, Y))
    b2 = lie_bracket(lie_bracket(X, Y), Y)
    assert poisson_bracket(b, b2) == -poisson_bracket(b2, b)
    assert poisson_bracket(b, b).is_zero()


def test_partner_of_b3():
    b3 = lie_bracket(X, lie_bracket(X, Y))
    a3 = partner(b3)
    assert a3 == lie_bracket(lie_bracket(X, Y), Y)
    assert (lie_bracket(X, a3) + lie_bracket(Y, b3)).is_zero()


def test_oder_pair_kills_xy_commutator():
    b3 = lie_bracket(X, lie_bracket(X, Y))
    D = oder_pair(b3)
    assert apply_derivation(D, lie_bracket(X, Y)).is_zero()


def test_angle_bracket_antisymmetric():
    b3 = lie_bracket(X, lie_bracket(X, Y))
    b5 = words.c_poly(5)
    assert angle_bracket(b3, b5) == -angle_bracket(b5, b3)


def test_divergence_of_zero_pair():
    E = words.DerivationPair("E", NCPoly.zero(), NCPoly.zero())
    assert divergence(E).is_zero()


def test_trace_project_cyclic():
    assert trace_project(NCPoly.word("xy") - NCPoly.word("yx")).is_zero()


# -- nu twist ----------------------------------------------------------------

def test_nu_twist_involution():
    f = NCPoly({"xxy": F(2), "yx": F(-3), "y": F(1)})
    assert nu_twist(nu_twist(f)) == f


def test_nu_twist_images():
    assert nu_twist(X) == NCPoly({"x": F(-1), "y": F(-1)})
    assert nu_twist(Y) == Y


# -- C-basis -----------------------------------------------------------------

def test_c_poly():
    assert c_poly(1) == Y
    assert c_poly(2) == lie_bracket(X, Y)
    assert c_poly(3) == lie_bracket(X, lie_bracket(X, Y))


def test_c_basis_roundtrip():
    coeffs = [((2, 1), F(3)), ((1, 1, 1), F(-1, 2)), ((3,), F(1))]
    f = from_c_basis(coeffs)
    assert sorted(to_c_basis(f)) == sorted(coeffs)


def test_to_c_basis_rejects_x():
    try:
        to_c_basis(X)
    except words.NotInCSpan:
        pass
    else:
        raise AssertionError("x is not in the C-span")


# -- Lyndon basis ------------------------------------------------------------

def test_lyndon_words_count():
    # necklace counts for a binary alphabet
    assert len(lyndon_words(1)) == 2
    assert len(lyndon_words(2)) == 1
    assert len(lyndon_words(3)) == 2
    assert len(lyndon_words(4)) == 3
    assert len(lyndon_words(6)) == 9


def test_lyndon_lie_basis_elements_are_lie():
    for n in (2, 3, 4, 5):
        for e in lyndon_lie_basis(n):
            assert is_lie_element(e)
            assert e.weight() == n


def test_lyndon_lie_basis_independent():
    basis = lyndon_lie_basis(4)
    ws = sorted({w for e in basis for w in e.terms})
    from moulde.linalg import rank
    matrix = [[e.coeff(w) for e in basis] for w in ws]
    assert rank(matrix) == len(basis)


# -- text form ---------------------------------------------------------------

def test_text_roundtrip():
    f = NCPoly({"xxy": F(1), "xyx": F(-2), "": F(5, 3)})
    assert ncpoly_from_text(ncpoly_to_text(f)) == f


@given(word_polys())
@settings(max_examples=50, deadline=None)
def test_text_roundtrip_random(f):
    assert ncpoly_from_text(ncpoly_to_text(f)) == f


def test_text_parse_error():
    try:
        ncpoly_from_text("1*xz")
    except ValueError:
        pass
    else:
        raise AssertionError("expected a parse error")
