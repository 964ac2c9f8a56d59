"""Shared exact fixtures.

The word/mould data here are the worked examples of the source
calculus: the weight-3 pair (a3, b3), the weight-5 depth-graded pair
(abar, bbar), the weight-5 polynomial fixtures (psi5y, psi_yy), the
four-depth circ-constant mould Bpsi with its preimage psi, and the
depth-3 mould A3 whose Delta-quotient is alternal with *alternal swap.
"""

from fractions import Fraction as F

import pytest

from moulde import ari, mould, words
from moulde.mould import Mould
from moulde.poly import MultiPoly
from moulde.words import NCPoly, X, Y, lie_bracket


def br(a, b):
    return lie_bracket(a, b)


@pytest.fixture(scope="session")
def b3():
    return br(X, br(X, Y))


@pytest.fixture(scope="session")
def a3():
    return br(br(X, Y), Y)


@pytest.fixture(scope="session")
def bbar5():
    return br(X, br(X, br(X, br(X, Y))))


@pytest.fixture(scope="session")
def abar5():
    return (br(X, br(X, br(br(X, Y), Y)))
            - br(br(X, br(X, Y)), br(X, Y)).scale(2))


@pytest.fixture(scope="session")
def psi5y():
    """The push-constant weight-4 polynomial psi^y (value 1)."""
    return NCPoly({
        "xxyy": F(2), "xyxy": F(-11, 2), "xyyx": F(9, 2),
        "yxxy": F(-1, 2), "yxyx": F(2), "yyxx": F(-1, 2)})


@pytest.fixture(scope="session")
def psi_yy():
    """The circ-constant weight-5 polynomial psi^y y."""
    return NCPoly({
        "xxxxy": F(1), "xxxyy": F(-2), "xxyxy": F(11, 2),
        "xyxxy": F(-9, 2), "yxxxy": F(3), "xxyyy": F(2),
        "xyxyy": F(-11, 2), "xyyxy": F(9, 2), "yxxyy": F(-1, 2),
        "yxyxy": F(2), "yyxxy": F(-1, 2), "xyyyy": F(-1),
        "yxyyy": F(4), "yyxyy": F(-6), "yyyxy": F(4)})


@pytest.fixture(scope="session")
def Bpsi():
    """swap(ma(psi)): the four-depth circ-constant mould, c = 1."""
    return Mould("V", {
        1: MultiPoly(1, {(4,): F(1)}),
        2: MultiPoly(2, {(3, 0): F(-2), (2, 1): F(11, 2),
                         (1, 2): F(-9, 2), (0, 3): F(3)}),
        3: MultiPoly(3, {(2, 0, 0): F(2), (1, 1, 0): F(-11, 2),
                         (0, 2, 0): F(-1, 2), (1, 0, 1): F(9, 2),
                         (0, 1, 1): F(2), (0, 0, 2): F(-1, 2)}),
        4: MultiPoly(4, {(1, 0, 0, 0): F(-1), (0, 1, 0, 0): F(4),
                         (0, 0, 1, 0): F(-6), (0, 0, 0, 1): F(4)})})


@pytest.fixture(scope="session")
def psi(Bpsi):
    """The weight-5 Lie element with swap(ma(psi)) = Bpsi."""
    return mould.ma_inverse(mould.swap(Bpsi))


@pytest.fixture(scope="session")
def psi_minus(psi):
    """psi(x, -y): the weight-5 element of W_krv."""
    return NCPoly({w: c * (-1) ** w.count("y")
                   for w, c in psi.terms.items()})


@pytest.fixture(scope="session")
def w3(b3):
    """nu(b3): the weight-3 element of W_krv."""
    return words.nu_twist(b3)


@pytest.fixture(scope="session")
def v5(psi_minus):
    """nu(psi(x,-y)): the weight-5 element of V_krv."""
    return words.nu_twist(psi_minus)


@pytest.fixture(scope="session")
def A3():
    """Depth-3 polynomial mould; Delta^{-1}(A3) is alternal and its swap
    is alternal after adding the constant 1/3."""
    return Mould("U", {3: MultiPoly(3, {
        (3, 1, 0): F(-1, 4), (3, 0, 1): F(1, 4), (2, 2, 0): F(-1, 4),
        (2, 0, 2): F(1, 2), (1, 0, 3): F(1, 4), (0, 2, 2): F(-1, 4),
        (0, 1, 3): F(-1, 4), (2, 1, 1): F(-1, 12), (1, 2, 1): F(1, 6),
        (1, 1, 2): F(-1, 12)})})
