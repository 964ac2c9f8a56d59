"""Flexion binary operations, mould exponentials and the special moulds.

All binary operations act depth by depth.  A mould with a cap is a
truncated series: results inherit the smallest cap of the operands, and
the exponential / logarithm routines require an explicit cap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

from .poly import MultiPoly, RatFrac, monomial_sum
from .mould import (Mould, AlphabetMismatch, _min_cap, _vars,
                    swap, pari, dar, dar_inv, delta_op, delta_inv)


def _eval(value, args, arity):
    """Evaluate a depth-len(args) mould value on polynomial arguments."""
    if value.arity == 0:
        return RatFrac.const(arity, value.num.constant_value())
    return value.substitute_linear(args)


def _range_cap(A, B):
    cap = _min_cap(A.cap, B.cap)
    if cap is not None:
        return cap, cap
    return None, A.max_depth() + B.max_depth()


def _check_same(A, B, alphabet=None):
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch("operands live on different alphabets")
    if alphabet is not None and A.alphabet != alphabet:
        raise AlphabetMismatch("operation requires %s-moulds" % alphabet)


# ---------------------------------------------------------------------------
# mu and lu
# ---------------------------------------------------------------------------

def mu(A, B):
    """Mould multiplication: (mu(A,B))(w) = sum over w = w1 w2 of A(w1) B(w2)."""
    _check_same(A, B)
    cap, top = _range_cap(A, B)
    vals = {}
    for r in range(0, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for i in range(0, r + 1):
            va, vb = A.get(i), B.get(r - i)
            if va.is_zero() or vb.is_zero():
                continue
            acc = acc + _eval(va, xs[:i], r) * _eval(vb, xs[i:], r)
        if not acc.is_zero():
            vals[r] = acc
    return Mould(A.alphabet, vals, cap)


def lu(A, B):
    """mu-commutator."""
    return mu(A, B) - mu(B, A)


# ---------------------------------------------------------------------------
# The four flexion derivations
# ---------------------------------------------------------------------------

def amit(B, A):
    """amit(B).A, with the sum over splittings a b c, c nonempty:
    A(a, |b| + first(c), rest(c)) B(b)."""
    _check_same(A, B, "U")
    cap, top = _range_cap(A, B)
    vals = {}
    for r in range(1, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for i in range(0, r - 1):          # a = u1..ui, possibly empty
            for j in range(i + 1, r):      # b = u_{i+1}..u_j, c nonempty
                vb = B.get(j - i)
                va = A.get(r - (j - i))
                if va.is_zero() or vb.is_zero():
                    continue
                slot = MultiPoly.zero(r)
                for k in range(i, j + 1):
                    slot = slot + xs[k]
                args_a = xs[:i] + [slot] + xs[j + 1:]
                acc = acc + _eval(va, args_a, r) * _eval(vb, xs[i:j], r)
        if not acc.is_zero():
            vals[r] = acc
    return Mould("U", vals, cap)


def anit(B, A):
    """anit(B).A, with the sum over splittings a b c, a nonempty:
    A(front(a), last(a) + |b|, c) B(b)."""
    _check_same(A, B, "U")
    cap, top = _range_cap(A, B)
    vals = {}
    for r in range(1, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for i in range(1, r):              # a = u1..ui, nonempty
            for j in range(i + 1, r + 1):  # b = u_{i+1}..u_j, c may be empty
                vb = B.get(j - i)
                va = A.get(r - (j - i))
                if va.is_zero() or vb.is_zero():
                    continue
                slot = MultiPoly.zero(r)
                for k in range(i - 1, j):
                    slot = slot + xs[k]
                args_a = xs[:i - 1] + [slot] + xs[j:]
                acc = acc + _eval(va, args_a, r) * _eval(vb, xs[i:j], r)
        if not acc.is_zero():
            vals[r] = acc
    return Mould("U", vals, cap)


def amit_bar(B, A):
    """v-side amit: A(a, c) B(b - last-of-c-anchor), c nonempty."""
    _check_same(A, B, "V")
    cap, top = _range_cap(A, B)
    vals = {}
    for r in range(1, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for i in range(1, r):              # b starts at v_i
            for j in range(i, r):          # b = v_i..v_j, c nonempty
                vb = B.get(j - i + 1)
                va = A.get(r - (j - i + 1))
                if va.is_zero() or vb.is_zero():
                    continue
                anchor = xs[j]             # v_{j+1}
                args_a = xs[:i - 1] + xs[j:]
                args_b = [xs[k] - anchor for k in range(i - 1, j)]
                acc = acc + _eval(va, args_a, r) * _eval(vb, args_b, r)
        if not acc.is_zero():
            vals[r] = acc
    return Mould("V", vals, cap)


def anit_bar(B, A):
    """v-side anit: A(a, c) B(b - last-of-a-anchor), a nonempty."""
    _check_same(A, B, "V")
    cap, top = _range_cap(A, B)
    vals = {}
    for r in range(1, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for i in range(2, r + 1):          # b starts at v_i, a nonempty
            for j in range(i, r + 1):      # b = v_i..v_j, c may be empty
                vb = B.get(j - i + 1)
                va = A.get(r - (j - i + 1))
                if va.is_zero() or vb.is_zero():
                    continue
                anchor = xs[i - 2]         # v_{i-1}
                args_a = xs[:i - 1] + xs[j:]
                args_b = [xs[k] - anchor for k in range(i - 1, j)]
                acc = acc + _eval(va, args_a, r) * _eval(vb, args_b, r)
        if not acc.is_zero():
            vals[r] = acc
    return Mould("V", vals, cap)


def arit(B, A):
    """arit(B).A = amit(B).A - anit(B).A (a derivation of mu)."""
    return amit(B, A) - anit(B, A)


def arit_bar(B, A):
    return amit_bar(B, A) - anit_bar(B, A)


# ---------------------------------------------------------------------------
# ari, preari and their v-side twins
# ---------------------------------------------------------------------------

def ari(A, B):
    return arit(B, A) - arit(A, B) + lu(A, B)


def ari_bar(A, B):
    return arit_bar(B, A) - arit_bar(A, B) + lu(A, B)


def preari(A, B):
    return arit(B, A) + mu(A, B)


def preari_bar(A, B):
    return arit_bar(B, A) + mu(A, B)


# ---------------------------------------------------------------------------
# Dari
# ---------------------------------------------------------------------------

def darit(A, B):
    """Darit(A).B = dar((-arit + ad)(delta^{-1} A) . dar^{-1} B)."""
    L = delta_inv(A)
    C = dar_inv(B)
    return dar(lu(L, C) - arit(L, C))


def dari(A, B, route="delta"):
    """Dari bracket; route 'delta' conjugates ari by Delta, route 'darit'
    antisymmetrizes Darit."""
    if route == "delta":
        return delta_op(ari(delta_inv(A), delta_inv(B)))
    if route == "darit":
        return darit(A, B) - darit(B, A)
    raise ValueError("unknown route %r" % route)


# ---------------------------------------------------------------------------
# Exponential / logarithm
# ---------------------------------------------------------------------------

def _one(alphabet, cap):
    return Mould(alphabet, {0: RatFrac.const(0, 1)}, cap)


def exp_ari(A, cap=None, pre=preari):
    """Group-like exponential: 1 + sum_k B_k / k!, B_{k+1} = pre(B_k, A).

    A must vanish in depth 0; the series terminates at the cap."""
    cap = _min_cap(A.cap, cap)
    if cap is None:
        raise ValueError("exp requires a cap")
    if not A.get(0).is_zero():
        raise ValueError("exponent must vanish in depth 0")
    A = A.with_cap(cap)
    out = _one(A.alphabet, cap)
    term = A
    k = 1
    while term.values and k <= cap:
        out = out + term.scale(Fraction(1, math.factorial(k)))
        term = pre(term, A).with_cap(cap)
        k += 1
    return out


def exp_ari_bar(A, cap=None):
    return exp_ari(A, cap, pre=preari_bar)


def log_ari(M, cap=None, pre=preari):
    """Inverse of exp_ari, solved depth by depth."""
    cap = _min_cap(M.cap, cap)
    if cap is None:
        raise ValueError("log requires a cap")
    if not (M.get(0) == RatFrac.const(0, 1)):
        raise ValueError("logarithm requires depth-0 value 1")
    M = M.with_cap(cap)
    L = Mould(M.alphabet, {}, cap)
    for r in range(1, cap + 1):
        E = exp_ari(L, cap, pre=pre)
        diff = M.get(r) - E.get(r)
        if not diff.is_zero():
            L = L + Mould(M.alphabet, {r: diff}, cap)
    return L


def log_ari_bar(M, cap=None):
    return log_ari(M, cap, pre=preari_bar)


def adjoint_exp(L, M, cap=None, bracket=ari):
    """exp(ad_L) M = sum_k ad_L^k(M) / k! for the given Lie bracket."""
    cap = _min_cap(_min_cap(L.cap, M.cap), cap)
    if cap is None:
        raise ValueError("adjoint exponential requires a cap")
    L = L.with_cap(cap)
    out = Mould(M.alphabet, {}, cap)
    term = M.with_cap(cap)
    k = 0
    while term.values:
        out = out + term.scale(Fraction(1, math.factorial(k)))
        term = bracket(L, term).with_cap(cap)
        k += 1
        if k > cap + 1:
            break
    return out


def ad_ari_exp(L, M, cap=None):
    return adjoint_exp(L, M, cap, bracket=ari)


def ad_ari_bar_exp(L, M, cap=None):
    return adjoint_exp(L, M, cap, bracket=ari_bar)


# ---------------------------------------------------------------------------
# Special moulds
# ---------------------------------------------------------------------------

def infinitesimal_generator(rmax):
    """Coefficients c_1..c_rmax of the generator g(x) = sum c_r x^{r+1}
    whose flow exp(g d/dx) maps x to 1 - exp(-x)."""
    top = rmax + 2  # work with series truncated at degree rmax+1
    # target series f = 1 - e^{-x} as coefficients of x^1..x^{rmax+1}
    f = [Fraction(0)] * top
    for d in range(1, top):
        f[d] = Fraction((-1) ** (d + 1), math.factorial(d))

    def d_g(h, g):
        """g * h' truncated."""
        out = [Fraction(0)] * top
        for d in range(1, top):
            if h[d] == 0:
                continue
            for e in range(2, top):
                if g[e] == 0:
                    continue
                if d - 1 + e < top:
                    out[d - 1 + e] += d * h[d] * g[e]
        return out

    g = [Fraction(0)] * top
    cs = []
    for r in range(1, rmax + 1):
        # with c_1..c_{r-1} fixed, the x^{r+1} coefficient of exp(D_g) x
        # is (known) + c_r; solve for c_r
        flow = [Fraction(0)] * top
        flow[1] = Fraction(1)
        term = flow[:]
        k = 1
        while any(term) and k < top:
            term = d_g(term, g)
            for d in range(top):
                flow[d] += term[d] / math.factorial(k)
            k += 1
        c = f[r + 1] - flow[r + 1]
        g[r + 1] = c
        cs.append(c)
    return cs


def _chain_den(r):
    """Factors v1, v1-v2, ..., v_{r-1}-v_r (arity r)."""
    xs = _vars(r)
    fs = [xs[0]]
    for i in range(r - 1):
        fs.append(xs[i] - xs[i + 1])
    return fs


@lru_cache(maxsize=None)
def named_mould(name, cap):
    """The special moulds, memoized per (name, cap).

    pic, poc     elementary v-side moulds with poles along the axes /
                 the difference chain
    lopil        the infinitesimal dilator; pil = exp_ari_bar(lopil)
    pal          swap(pil); lopal = log_ari(pal); invpal_log = -lopal
    """
    if name == "pic":
        vals = {}
        for r in range(1, cap + 1):
            vals[r] = RatFrac(MultiPoly.const(r, 1), tuple(_vars(r)))
        return Mould("V", vals, cap)
    if name == "poc":
        vals = {}
        for r in range(1, cap + 1):
            vals[r] = RatFrac(MultiPoly.const(r, 1), tuple(_chain_den(r)))
        return Mould("V", vals, cap)
    if name == "lopil":
        cs = infinitesimal_generator(cap)
        vals = {}
        for r in range(1, cap + 1):
            xs = _vars(r)
            s = MultiPoly.zero(r)
            for x in xs:
                s = s + x
            den = tuple(_chain_den(r)) + (xs[-1],)
            vals[r] = RatFrac(s.scale(cs[r - 1]), den)
        return Mould("V", vals, cap)
    if name == "pil":
        return exp_ari_bar(named_mould("lopil", cap), cap)
    if name == "pal":
        return swap(named_mould("pil", cap))
    if name == "lopal":
        return log_ari(named_mould("pal", cap), cap)
    if name == "invpal_log":
        return -named_mould("lopal", cap)
    if name == "invpil_log":
        return -named_mould("lopil", cap)
    raise ValueError("unknown mould name %r" % name)


def tnc_mould(n, c=1):
    """The v-side mould with depth-r value (c/r) * (sum of all monomials
    of degree n-r), for r = 1..n."""
    vals = {}
    for r in range(1, n + 1):
        vals[r] = RatFrac.from_poly(
            monomial_sum(r, n - r).scale(Fraction(c, r)))
    return Mould("V", vals)


# ---------------------------------------------------------------------------
# ganit
# ---------------------------------------------------------------------------

def _ganit_splittings(r):
    """Decompositions of 1..r into a1 b1 ... as bs, every chunk nonempty
    except possibly the final b.  Yields (a_positions, b_chunks) with
    a_positions the concatenated a indices and b_chunks a list of
    (start, length) pairs, all 1-based."""
    def rec(pos, a_acc, b_acc):
        if pos > r:
            yield list(a_acc), list(b_acc)
            return
        # choose the next a-chunk (nonempty)
        for a_end in range(pos, r + 1):
            a_new = a_acc + list(range(pos, a_end + 1))
            if a_end == r:
                yield a_new, list(b_acc)
                continue
            # choose the following b-chunk (nonempty)
            for b_end in range(a_end + 1, r + 1):
                yield from rec(b_end + 1, a_new,
                               b_acc + [(a_end + 1, b_end - a_end)])
    yield from rec(1, [], [])


def ganit_bar(Q, T):
    """ganit(Q).T on the v side: sum over chunkings a1 b1 ... of
    T(a-chunks) times a product of Q over the lowered b-chunks."""
    _check_same(T, Q, "V")
    cap = _min_cap(T.cap, Q.cap)
    top = cap if cap is not None else T.max_depth()
    vals = {}
    for r in range(1, top + 1):
        xs = _vars(r)
        acc = RatFrac.zero(r)
        for a_pos, b_chunks in _ganit_splittings(r):
            vt = T.get(len(a_pos))
            if vt.is_zero():
                continue
            term = _eval(vt, [xs[p - 1] for p in a_pos], r)
            ok = True
            for start, length in b_chunks:
                vq = Q.get(length)
                if vq.is_zero():
                    ok = False
                    break
                anchor = xs[start - 2]
                args = [xs[start - 1 + k] - anchor for k in range(length)]
                term = term * _eval(vq, args, r)
            if ok:
                acc = acc + term
        if not acc.is_zero():
            vals[r] = acc
    return Mould("V", vals, cap)


# ---------------------------------------------------------------------------
# Structural identity checks
# ---------------------------------------------------------------------------

def fundamental_identity_check(M, cap):
    """swap(Ad_ari(pal) M) = ganit(pic) Ad_ari_bar(pil) swap(M), for
    push-invariant M, compared up to the cap."""
    lopal = named_mould("lopal", cap)
    lopil = named_mould("lopil", cap)
    pic = named_mould("pic", cap)
    lhs = swap(ad_ari_exp(lopal, M.with_cap(cap), cap))
    rhs = ganit_bar(pic, ad_ari_bar_exp(lopil, swap(M).with_cap(cap), cap))
    return lhs.eq(rhs)


def goodfund_check(N, cap):
    """Ad_ari_bar(invpil) ganit(-poc) swap(N) = swap(Ad_ari(invpal) N),
    valid when Ad_ari(invpal) N is push-invariant.

    ganit_bar(-poc) is the operator inverse of ganit_bar(pic); the sign
    is forced by the depth-2 composition."""
    inv_lopal = named_mould("invpal_log", cap)
    inv_lopil = named_mould("invpil_log", cap)
    poc = named_mould("poc", cap)
    lhs = ad_ari_bar_exp(inv_lopil, ganit_bar(-poc, swap(N).with_cap(cap)),
                         cap)
    rhs = swap(ad_ari_exp(inv_lopal, N.with_cap(cap), cap))
    return lhs.eq(rhs)
