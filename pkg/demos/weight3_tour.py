"""Tour of the weight-3 objects.

Builds b3 = [x,[x,y]], solves for its partner a3, checks the defining
derivation identities, computes the divergence, and maps b3 into the
elliptic space through the section.

Run:  python3 demos/weight3_tour.py
"""

from fractions import Fraction

from moulde import maps, mould, words
from moulde.words import NCPoly, X, Y, lie_bracket


def main():
    b3 = lie_bracket(X, lie_bracket(X, Y))
    print("b3            =", words.ncpoly_to_text(b3))

    a3 = words.partner(b3)
    print("a3 = partner  =", words.ncpoly_to_text(a3))
    print("[x,a3]+[y,b3] =",
          words.ncpoly_to_text(lie_bracket(X, a3) + lie_bracket(Y, b3)))

    E = words.DerivationPair("E", a3, b3)
    print("E(x+y)        =",
          words.ncpoly_to_text(words.apply_derivation(E, X + Y)))

    div = words.divergence(E)
    cube = (X + Y) * (X + Y) * (X + Y) - X * X * X - Y * Y * Y
    tr = words.trace_project(cube).scale(Fraction(1, 3))
    print("div(E)        =", div)
    print("(1/3)tr(...)  =", tr)
    print("equal         =", div == tr)

    B = mould.ma(b3)
    print("\nma(b3) depth 1:", B.get(1))
    print("push-invariant:", mould.is_push_invariant(B))
    print("swap circ-neutral:", mould.is_circ_neutral(mould.swap(B)))

    word_img, mould_img = maps.lkv_to_krv_ell(b3)
    print("\nlkv -> krv_ell word image:", words.ncpoly_to_text(word_img))
    print("mould image depth 1:", mould_img.get(1))

    image = maps.krv_section(b3, 4)
    print("\nkrv section image (depth 4 cap):")
    for r in image.depths():
        print("  depth %d: %s" % (r, image.get(r)))


if __name__ == "__main__":
    main()
