"""The xi pipeline on the two known W_krv generators.

Takes the weight-3 element nu([x,[x,y]]) and the weight-5 element
psi(x,-y) (reconstructed from its circ-constant swap mould), runs the
membership gate, then verifies the four image verdicts of xi and the
fundamental identity at depth 4.

Run:  python3 demos/xi_pipeline.py
"""

from fractions import Fraction as F

from moulde import maps, mould, words
from moulde.mould import Mould, ma
from moulde.poly import MultiPoly
from moulde.words import NCPoly, X, Y, lie_bracket


def psi_minus():
    """psi(x,-y) where swap(ma(psi)) is the circ-constant mould with
    c = 1 built from the push-constant polynomial psi^y."""
    Bpsi = Mould("V", {
        1: MultiPoly(1, {(4,): F(1)}),
        2: MultiPoly(2, {(3, 0): F(-2), (2, 1): F(11, 2),
                         (1, 2): F(-9, 2), (0, 3): F(3)}),
        3: MultiPoly(3, {(2, 0, 0): F(2), (1, 1, 0): F(-11, 2),
                         (0, 2, 0): F(-1, 2), (1, 0, 1): F(9, 2),
                         (0, 1, 1): F(2), (0, 0, 2): F(-1, 2)}),
        4: MultiPoly(4, {(1, 0, 0, 0): F(-1), (0, 1, 0, 0): F(4),
                         (0, 0, 1, 0): F(-6), (0, 0, 0, 1): F(4)})})
    psi = mould.ma_inverse(mould.swap(Bpsi))
    return NCPoly({w: c * (-1) ** w.count("y")
                   for w, c in psi.terms.items()})


def main():
    w3 = words.nu_twist(lie_bracket(X, lie_bracket(X, Y)))
    w5 = psi_minus()
    for name, w in (("nu(b3)  [weight 3]", w3),
                    ("psi(x,-y) [weight 5]", w5)):
        print("==", name)
        gate = maps.w_krv_gate(w)
        for k, v in gate.verdicts.items():
            print("  %-22s %s" % (k, v))
        report = maps.verify_xi_image(ma(w), 4)
        print("  xi image verdicts at depth 4:")
        for k, v in report.verdicts.items():
            print("    %-20s %s" % (k, v))
        print()


if __name__ == "__main__":
    main()
