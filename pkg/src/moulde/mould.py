"""Moulds, the ma correspondence, unary operators and predicates.

A mould is a depth-indexed family r -> rational function in r variables
(depth 0 -> scalar), tagged with its alphabet: U-side (variables
u1..ur) or V-side (v1..vr, the swap coordinates).  An optional cap
records the truncation depth of series computations: values above the
cap are unknown and are never compared.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
import json
import math

from .poly import MultiPoly, RatFrac, exact_poly_divide, monomial_sum, grlex_key
from . import words as W


class AlphabetMismatch(Exception):
    pass


class NonPolynomialValue(Exception):
    pass


def _zero_value(r):
    return RatFrac.zero(r)


class Mould:
    __slots__ = ("alphabet", "values", "cap")

    def __init__(self, alphabet, values=None, cap=None):
        if alphabet not in ("U", "V"):
            raise ValueError("alphabet must be 'U' or 'V'")
        self.alphabet = alphabet
        vals = {}
        for r, v in (values or {}).items():
            if isinstance(v, MultiPoly):
                v = RatFrac.from_poly(v)
            if isinstance(v, (int, Fraction)):
                v = RatFrac.const(r, v)
            if v.arity != r:
                raise ValueError("value arity %d != depth %d" % (v.arity, r))
            if not v.is_zero():
                vals[r] = v
        self.values = vals
        self.cap = cap

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, alphabet="U"):
        return cls(alphabet, {})

    @classmethod
    def constant(cls, alphabet, assignment, cap=None):
        """Constant-valued mould from {depth: scalar}."""
        vals = {r: RatFrac.const(r, c) for r, c in assignment.items() if c != 0}
        return cls(alphabet, vals, cap)

    # -- access -------------------------------------------------------
    def get(self, r):
        return self.values.get(r, _zero_value(r))

    def depths(self):
        return sorted(self.values)

    def max_depth(self):
        return max(self.values, default=0)

    def with_cap(self, cap):
        vals = {r: v for r, v in self.values.items()
                if cap is None or r <= cap}
        return Mould(self.alphabet, vals, cap)

    def truncated(self, cap):
        return self.with_cap(_min_cap(self.cap, cap))

    def weight(self):
        """Homogeneous weight n (degree of depth-r part is n - r), or None."""
        ns = set()
        for r, v in self.values.items():
            num, den = v.num, v.den
            if not (num.is_homogeneous() and den.is_homogeneous()):
                return None
            ns.add(num.total_degree() - den.total_degree() + r)
        if len(ns) == 1:
            return ns.pop()
        return None

    # -- linear structure ---------------------------------------------
    def __add__(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("cannot add U-mould to V-mould")
        cap = _min_cap(self.cap, other.cap)
        vals = {}
        for r in set(self.values) | set(other.values):
            if cap is not None and r > cap:
                continue
            v = self.get(r) + other.get(r)
            if not v.is_zero():
                vals[r] = v
        return Mould(self.alphabet, vals, cap)

    def __neg__(self):
        return Mould(self.alphabet,
                     {r: -v for r, v in self.values.items()}, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Mould(self.alphabet,
                     {r: v.scale(c) for r, v in self.values.items()}, self.cap)

    def map_values(self, fn):
        vals = {}
        for r, v in self.values.items():
            nv = fn(r, v)
            if not nv.is_zero():
                vals[r] = nv
        return Mould(self.alphabet, vals, self.cap)

    def eq(self, other, up_to=None):
        if self.alphabet != other.alphabet:
            return False
        cap = _min_cap(_min_cap(self.cap, other.cap), up_to)
        depths = set(self.values) | set(other.values)
        for r in depths:
            if cap is not None and r > cap:
                continue
            if not (self.get(r) == other.get(r)):
                return False
        return True

    def __repr__(self):
        parts = []
        for r in self.depths():
            parts.append("%d: %s" % (r, self.get(r)))
        body = "; ".join(parts) if parts else "0"
        caps = "" if self.cap is None else " (cap %d)" % self.cap
        return "Mould[%s]{%s}%s" % (self.alphabet, body, caps)


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _vars(r):
    return [MultiPoly.variable(i, r) for i in range(1, r + 1)]


# ---------------------------------------------------------------------------
# ma and its inverse
# ---------------------------------------------------------------------------

def ma(f):
    """C_{a1}...C_{ar} -> u1^{a1-1} ... ur^{ar-1} on the C-expansion of f."""
    coeffs = W.to_c_basis(f)
    per_depth = {}
    for a, c in coeffs:
        r = len(a)
        expv = tuple(e - 1 for e in a)
        per_depth.setdefault(r, {})[expv] = (
            per_depth.get(r, {}).get(expv, Fraction(0)) + c)
    vals = {}
    for r, terms in per_depth.items():
        vals[r] = RatFrac.from_poly(MultiPoly(r, terms))
    return Mould("U", vals)


def ma_inverse(M):
    """from_c_basis of the monomial coefficients; requires polynomial values."""
    coeffs = []
    for r, v in M.values.items():
        if not v.is_polynomial():
            raise NonPolynomialValue(str(v))
        if r == 0:
            coeffs.append(((), v.num.constant_value()))
            continue
        for expv, c in v.num.sorted_terms():
            coeffs.append((tuple(e + 1 for e in expv), c))
    return W.from_c_basis(coeffs)


# ---------------------------------------------------------------------------
# Unary operators
# ---------------------------------------------------------------------------

def swap(M):
    """Exchange the u and v coordinate systems (an involution)."""
    target = "V" if M.alphabet == "U" else "U"
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            vals[r] = v
            continue
        xs = _vars(r)
        if M.alphabet == "U":
            # swap(A)(v1..vr) = A(v_r, v_{r-1}-v_r, ..., v_1-v_2)
            images = []
            for k in range(1, r + 1):
                img = xs[r - k]
                if k > 1:
                    img = img - xs[r - k + 1]
                images.append(img)
        else:
            # swap(B)(u1..ur) = B(u1+...+ur, u1+...+u_{r-1}, ..., u1)
            images = []
            for k in range(1, r + 1):
                s = MultiPoly.zero(r)
                for i in range(r + 1 - k):
                    s = s + xs[i]
                images.append(s)
        vals[r] = v.substitute_linear(images)
    return Mould(target, vals, M.cap)


def push(M):
    """(push B)(u1..ur) = B(u0, u1, ..., u_{r-1}), u0 = -u1-...-ur."""
    if M.alphabet != "U":
        raise AlphabetMismatch("push acts on U-moulds")
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            vals[r] = v
            continue
        xs = _vars(r)
        u0 = MultiPoly.zero(r)
        for x in xs:
            u0 = u0 - x
        images = [u0] + xs[:-1]
        vals[r] = v.substitute_linear(images)
    return Mould("U", vals, M.cap)


def circ(M):
    """circ(B)(v1..vr) = B(v2, ..., vr, v1)."""
    if M.alphabet != "V":
        raise AlphabetMismatch("circ acts on V-moulds")
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            vals[r] = v
            continue
        xs = _vars(r)
        images = xs[1:] + xs[:1]
        vals[r] = v.substitute_linear(images)
    return Mould("V", vals, M.cap)


def neg_op(M):
    """neg(A)(u1..ur) = A(-u1, ..., -ur)."""
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            vals[r] = v
            continue
        vals[r] = v.substitute_linear([-x for x in _vars(r)])
    return Mould(M.alphabet, vals, M.cap)


def mantar(M):
    """mantar(A)(u1..ur) = (-1)^{r-1} A(ur, ..., u1)."""
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            vals[r] = -v
            continue
        xs = _vars(r)
        vals[r] = v.substitute_linear(xs[::-1]).scale((-1) ** (r - 1))
    return Mould(M.alphabet, vals, M.cap)


def pari(M):
    """pari(A) multiplies the depth-r part by (-1)^r."""
    return Mould(M.alphabet,
                 {r: v.scale((-1) ** r) for r, v in M.values.items()},
                 M.cap)


def dar(M):
    """dar(A)(u1..ur) = u1...ur A(u1..ur)."""
    vals = {}
    for r, v in M.values.items():
        p = MultiPoly.const(r, 1)
        for x in _vars(r):
            p = p * x
        vals[r] = v * RatFrac.from_poly(p)
    return Mould(M.alphabet, vals, M.cap)


def dar_inv(M):
    vals = {}
    for r, v in M.values.items():
        vals[r] = RatFrac(v.num, v.den_factors + tuple(_vars(r)))
    return Mould(M.alphabet, vals, M.cap)


def _delta_factor(r):
    p = MultiPoly.const(r, 1)
    s = MultiPoly.zero(r)
    for x in _vars(r):
        p = p * x
        s = s + x
    return p * s


def delta_op(M):
    """Multiply the depth-r part by u1...ur (u1+...+ur)."""
    if M.alphabet != "U":
        raise AlphabetMismatch("delta acts on U-moulds")
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            continue
        vals[r] = v * RatFrac.from_poly(_delta_factor(r))
    return Mould("U", vals, M.cap)


def delta_inv(M):
    if M.alphabet != "U":
        raise AlphabetMismatch("delta acts on U-moulds")
    vals = {}
    for r, v in M.values.items():
        if r == 0:
            continue
        xs = _vars(r)
        s = MultiPoly.zero(r)
        for x in xs:
            s = s + x
        vals[r] = RatFrac(v.num, v.den_factors + tuple(xs) + (s,))
    return Mould("U", vals, M.cap)


def teru(M):
    """teru(B) = B in depths 0, 1; in depth r > 1 adds
    (1/u_r)(B(u1..u_{r-2}, u_{r-1}) - B(u1..u_{r-2}, u_{r-1}+u_r))."""
    if M.alphabet != "U":
        raise AlphabetMismatch("teru acts on U-moulds")
    out = {}
    depths = set(M.values)
    depths |= {r + 1 for r in M.values}  # corrections feed depth r from r-1
    for r in sorted(depths):
        if M.cap is not None and r > M.cap:
            continue
        base = M.get(r)
        if r < 2:
            if not base.is_zero():
                out[r] = base
            continue
        prev = M.get(r - 1)
        acc = base
        if not prev.is_zero():
            xs = _vars(r)
            args1 = xs[:r - 2] + [xs[r - 2] + xs[r - 1]]
            args2 = xs[:r - 2] + [xs[r - 2]]
            corr = (prev.substitute_linear(args2)
                    - prev.substitute_linear(args1))
            ur = RatFrac(MultiPoly.const(r, 1), (xs[r - 1],))
            acc = acc + corr * ur
        if not acc.is_zero():
            out[r] = acc
    return Mould("U", out, M.cap)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _shuffles(left, right):
    if not left:
        yield tuple(right)
        return
    if not right:
        yield tuple(left)
        return
    for rest in _shuffles(left[1:], right):
        yield (left[0],) + rest
    for rest in _shuffles(left, right[1:]):
        yield (right[0],) + rest


def shuffle_sum(value, r, i):
    """Sum of value(u_{w_1},...,u_{w_r}) over w in Sh((1..i)(i+1..r))."""
    xs = _vars(r)
    total = RatFrac.zero(r)
    for w in _shuffles(list(range(1, i + 1)), list(range(i + 1, r + 1))):
        total = total + value.substitute_linear([xs[k - 1] for k in w])
    return total


def is_alternal(M, witness=False):
    """Shuffle sums vanish in every depth >= 2 (void in depth 1)."""
    for r in M.depths():
        if r < 2:
            continue
        v = M.get(r)
        for i in range(1, r // 2 + 1):
            s = shuffle_sum(v, r, i)
            if not s.is_zero():
                return (False, (r, i, s)) if witness else False
    return (True, None) if witness else True


def is_push_invariant(M):
    return push(M).eq(M)


def is_mantar_invariant(M):
    return mantar(M).eq(M)


def circ_cycle_sum(M, r):
    """Sum of the r cyclic rotations of the depth-r part."""
    total = RatFrac.zero(r)
    v = M.get(r)
    xs = _vars(r)
    for k in range(r):
        images = xs[k:] + xs[:k]
        total = total + v.substitute_linear(images)
    return total


def is_circ_neutral(M):
    """Cyclic sums of every depth >= 2 vanish."""
    if M.alphabet != "V":
        raise AlphabetMismatch("circ-neutrality is a V-side predicate")
    for r in M.depths():
        if r < 2:
            continue
        if not circ_cycle_sum(M, r).is_zero():
            return False
    return True


def is_circ_constant(M, weight=None):
    """Cyclic sums equal c times the all-monomials sum; returns (flag, c).

    c is read off the depth-1 value, which must be c*v1^{n-1}.  Depths
    2..n-1 are all checked (an absent depth counts as zero); depth n is
    skipped, since its constant value is the freely adjustable one."""
    if M.alphabet != "V":
        raise AlphabetMismatch("circ-constance is a V-side predicate")
    n = weight if weight is not None else M.weight()
    if n is None:
        return False, None
    v1 = M.get(1)
    if not v1.is_polynomial():
        return False, None
    if n < 1:
        return False, None
    c = v1.num.coeff((n - 1,))
    if not (v1 == RatFrac.from_poly(MultiPoly.monomial((n - 1,), c))):
        return False, None
    for r in range(2, n):
        target = RatFrac.from_poly(monomial_sum(r, n - r).scale(c))
        if not (circ_cycle_sum(M, r) == target):
            return False, None
    return True, c


def in_ari_delta(M):
    """Every depth-r value becomes polynomial after multiplying by
    u1...ur(u1+...+ur)."""
    if M.alphabet != "U":
        raise AlphabetMismatch("ARI^Delta is a U-side predicate")
    for r, v in M.values.items():
        if r == 0:
            continue
        num = v.num * _delta_factor(r)
        if exact_poly_divide(num, v.den) is None:
            return False
    return True


def is_senary(M):
    """teru(pari(B)) = push(mantar(teru(pari(B))))."""
    if M.alphabet != "U":
        raise AlphabetMismatch("senary is a U-side predicate")
    T = teru(pari(M))
    return T.eq(push(mantar(T)))


def predicates(M, weight=None):
    """Run the full predicate battery appropriate to M's alphabet."""
    report = {}
    if M.alphabet == "U":
        report["alternal"] = is_alternal(M)
        report["push_invariant"] = is_push_invariant(M)
        report["mantar_invariant"] = is_mantar_invariant(M)
        report["in_ARI_delta"] = in_ari_delta(M)
        report["senary"] = is_senary(M)
    else:
        report["alternal"] = is_alternal(M)
        report["circ_neutral"] = is_circ_neutral(M)
        flag, c = is_circ_constant(M, weight)
        report["circ_constant"] = flag
        report["circ_constant_value"] = c
        report["mantar_invariant"] = is_mantar_invariant(M)
    return report


# ---------------------------------------------------------------------------
# Constant corrections ("*" properties)
# ---------------------------------------------------------------------------

class ConstantMould:
    """A per-depth scalar assignment."""

    __slots__ = ("values",)

    def __init__(self, values=None):
        self.values = {r: Fraction(v) for r, v in (values or {}).items()
                       if v != 0}

    def get(self, r):
        return self.values.get(r, Fraction(0))

    def as_mould(self, alphabet):
        return Mould.constant(alphabet, self.values)

    def __eq__(self, other):
        return isinstance(other, ConstantMould) and self.values == other.values

    def __repr__(self):
        return "ConstantMould(%r)" % (self.values,)


def star_correction(M, prop):
    """Per-depth constants kappa_r with M + kappa satisfying the property,
    or None when constants cannot repair it.

    circ_neutral: cyclic sum + r*kappa_r = 0, so the cyclic sum must be
    a constant.  alternal: each shuffle sum + C(r,i)*kappa_r = 0 must
    pin the same constant."""
    if prop not in ("circ_neutral", "alternal"):
        raise ValueError("unknown property %r" % prop)
    out = {}
    for r in M.depths():
        if r < 2:
            continue
        if prop == "circ_neutral":
            s = circ_cycle_sum(M, r)
            if s.is_zero():
                continue
            if not s.is_polynomial() or not s.num.is_constant():
                return None
            out[r] = -s.num.constant_value() / r
        else:
            kappa = None
            v = M.get(r)
            for i in range(1, r // 2 + 1):
                s = shuffle_sum(v, r, i)
                if s.is_zero():
                    k = Fraction(0)
                elif s.is_polynomial() and s.num.is_constant():
                    k = -s.num.constant_value() / math.comb(r, i)
                else:
                    return None
                if kappa is None:
                    kappa = k
                elif kappa != k:
                    return None
            if kappa:
                out[r] = kappa
    return ConstantMould(out)


# ---------------------------------------------------------------------------
# JSON form
# ---------------------------------------------------------------------------

def _poly_to_json(p):
    return [[str(c), list(e)] for e, c in p.sorted_terms()]


def _poly_from_json(data, arity):
    terms = {}
    for c, e in data:
        if len(e) != arity:
            raise ValueError("exponent vector length mismatch")
        terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + Fraction(c)
    return MultiPoly(arity, terms)


def mould_to_json(M):
    depths = {}
    for r in M.depths():
        v = M.get(r)
        entry = {"num": _poly_to_json(v.num)}
        den = v.den
        if not (den.is_constant() and den.constant_value() == 1):
            entry["den"] = _poly_to_json(den)
        depths[str(r)] = entry
    doc = {"alphabet": M.alphabet, "depths": depths}
    w = M.weight()
    if w is not None:
        doc["weight"] = w
    if M.cap is not None:
        doc["cap"] = M.cap
    return doc


def mould_to_json_text(M):
    return json.dumps(mould_to_json(M), sort_keys=True, indent=None,
                      separators=(",", ":"))


def mould_from_json(doc):
    vals = {}
    for rs, entry in doc.get("depths", {}).items():
        r = int(rs)
        num = _poly_from_json(entry["num"], r)
        if "den" in entry:
            den = _poly_from_json(entry["den"], r)
            vals[r] = RatFrac(num, (den,))
        else:
            vals[r] = RatFrac.from_poly(num)
    return Mould(doc["alphabet"], vals, doc.get("cap"))


def mould_from_json_text(text):
    return mould_from_json(json.loads(text))
