"""Exact sparse multivariate polynomials and rational fractions.

All coefficients are `fractions.Fraction`; there is no floating point
anywhere in this package.  Polynomials are stored as a dict mapping
exponent tuples (one entry per variable) to nonzero Fraction
coefficients.  Rational fractions keep their denominator as a multiset
of polynomial factors (in this calculus every denominator that ever
arises is a product of linear forms such as u_i, u_i+...+u_j or
v_i-v_j), which makes cancellation cheap and complete for those forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
import math


def _frac(c):
    """Coerce ints / strings / Fractions to Fraction."""
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


def grlex_key(expv):
    """Graded lexicographic sort key for an exponent vector."""
    return (sum(expv), tuple(-e for e in expv))


class MultiPoly:
    """Sparse multivariate polynomial over Q in variables x1..x{arity}."""

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        if terms:
            for expv, c in terms.items():
                c = _frac(c)
                if c != 0:
                    t = tuple(expv)
                    if len(t) != arity:
                        raise ValueError("exponent vector length != arity")
                    clean[t] = clean.get(t, Fraction(0)) + c
                    if clean[t] == 0:
                        del clean[t]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def const(cls, arity, c):
        c = _frac(c)
        if c == 0:
            return cls.zero(arity)
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, i, arity):
        """The variable x_i (1-based index)."""
        if not (1 <= i <= arity):
            raise ValueError("variable index out of range")
        expv = tuple(1 if j == i - 1 else 0 for j in range(arity))
        return cls(arity, {expv: Fraction(1)})

    @classmethod
    def monomial(cls, expv, c=1):
        return cls(len(expv), {tuple(expv): _frac(c)})

    # -- predicates ---------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.arity, Fraction(0))

    def total_degree(self):
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, expv):
        return self.terms.get(tuple(expv), Fraction(0))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.arity, other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.arity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def scale(self, c):
        c = _frac(c)
        if c == 0:
            return MultiPoly.zero(self.arity)
        out = MultiPoly.__new__(MultiPoly)
        out.arity = self.arity
        out.terms = {e: cc * c for e, cc in self.terms.items()}
        out._hash = None
        return out

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.arity, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    # -- structural helpers -------------------------------------------
    def sorted_terms(self):
        """Terms in graded-lex order (deterministic iteration)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def leading(self):
        """(exponent vector, coefficient) of the grlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def content(self):
        """Positive rational c with self/c having coprime integer coeffs."""
        if not self.terms:
            return Fraction(1)
        nums = [abs(c.numerator) for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = reduce(math.gcd, nums)
        l = reduce(lambda a, b: a * b // math.gcd(a, b), dens)
        return Fraction(g, l)

    def sign_normalized(self):
        """(factor, normalized) with normalized = self/factor, content 1 and
        positive leading (grlex) coefficient."""
        if not self.terms:
            return Fraction(1), self
        c = self.content()
        _, lead = self.leading()
        if lead < 0:
            c = -c
        return c, self.scale(1 / c)

    def substitute_linear(self, images):
        """Replace variable i by images[i] (polynomials of a common arity)."""
        if len(images) != self.arity:
            raise ValueError("need one image per variable")
        if self.arity == 0:
            tgt = 0
        else:
            tgt = images[0].arity
        result = MultiPoly.zero(tgt)
        # cache powers of each image
        pow_cache = [{0: MultiPoly.const(tgt, 1)} for _ in images]
        for expv, c in self.terms.items():
            mono = MultiPoly.const(tgt, c)
            for i, e in enumerate(expv):
                if e == 0:
                    continue
                cache = pow_cache[i]
                if e not in cache:
                    cache[e] = images[i] ** e
                mono = mono * cache[e]
            result = result + mono
        return result

    def permute_variables(self, perm):
        """Apply x_i -> x_{perm[i-1]} (perm is a tuple of 1-based indices)."""
        terms = {}
        for expv, c in self.terms.items():
            e = [0] * self.arity
            for i, p in enumerate(perm):
                e[p - 1] += expv[i]
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.arity, terms)

    def __str__(self):
        return poly_to_text(self)

    __repr__ = __str__


def exact_poly_divide(num, den):
    """Return q with num = q*den exactly, or None if not divisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return MultiPoly.zero(num.arity)
    if num.arity != den.arity:
        raise ValueError("arity mismatch")
    lead_e, lead_c = den.leading()
    q_terms = {}
    rem = num
    while not rem.is_zero():
        re, rc = rem.leading()
        qe = tuple(a - b for a, b in zip(re, lead_e))
        if any(e < 0 for e in qe):
            return None
        qc = rc / lead_c
        q_terms[qe] = q_terms.get(qe, Fraction(0)) + qc
        rem = rem - den * MultiPoly.monomial(qe, qc)
    return MultiPoly(num.arity, q_terms)


def monomial_sum(r, d):
    """Sum of all monomials of total degree d in r variables, coeff 1."""
    if r < 1:
        raise ValueError("need at least one variable")
    terms = {}
    def gen(prefix, remaining, slots):
        if slots == 1:
            terms[tuple(prefix + [remaining])] = Fraction(1)
            return
        for e in range(remaining + 1):
            gen(prefix + [e], remaining - e, slots - 1)
    gen([], d, r)
    return MultiPoly(r, terms)


# ---------------------------------------------------------------------------
# Rational fractions
# ---------------------------------------------------------------------------

class RatFrac:
    """Quotient of polynomials; denominator stored as a factor multiset.

    Equality is decided by cross-multiplication, so normalization only
    affects performance, never correctness.
    """

    __slots__ = ("num", "den_factors")

    def __init__(self, num, den_factors=()):
        if isinstance(num, (int, Fraction)):
            raise TypeError("wrap scalars via RatFrac.const")
        factors = []
        scale = Fraction(1)
        for f in den_factors:
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            if f.is_constant():
                scale *= f.constant_value()
                continue
            c, fn = f.sign_normalized()
            scale *= c
            factors.append(fn)
        if scale != 1:
            num = num.scale(1 / scale)
        self.num = num
        self.den_factors = tuple(sorted(factors, key=_factor_key))
        self._cancel()

    def _cancel(self):
        if self.num.is_zero():
            self.den_factors = ()
            return
        remaining = []
        num = self.num
        for f in self.den_factors:
            q = exact_poly_divide(num, f)
            if q is not None:
                num = q
            else:
                remaining.append(f)
        self.num = num
        self.den_factors = tuple(remaining)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    @classmethod
    def const(cls, arity, c):
        return cls(MultiPoly.const(arity, c), ())

    @classmethod
    def zero(cls, arity):
        return cls(MultiPoly.zero(arity), ())

    # -- views --------------------------------------------------------
    @property
    def arity(self):
        return self.num.arity

    @property
    def den(self):
        out = MultiPoly.const(self.num.arity, 1)
        for f in self.den_factors:
            out = out * f
        return out

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return not self.den_factors

    def as_poly(self):
        if self.den_factors:
            raise ValueError("not a polynomial: " + str(self))
        return self.num

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFrac.const(self.arity, other)
        if isinstance(other, MultiPoly):
            return RatFrac.from_poly(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        # common denominator = multiset max of the two factor lists
        common = _multiset_union(self.den_factors, other.den_factors)
        n1 = self.num * _product_over(common, self.den_factors, self.arity)
        n2 = other.num * _product_over(common, other.den_factors, self.arity)
        return RatFrac(n1 + n2, common)

    __radd__ = __add__

    def __neg__(self):
        out = RatFrac.__new__(RatFrac)
        out.num = -self.num
        out.den_factors = self.den_factors
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        return RatFrac(self.num * other.num,
                       self.den_factors + other.den_factors)

    __rmul__ = __mul__

    def scale(self, c):
        out = RatFrac.__new__(RatFrac)
        out.num = self.num.scale(c)
        out.den_factors = self.den_factors if not out.num.is_zero() else ()
        return out

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        num = MultiPoly.const(self.arity, 1)
        for f in self.den_factors:
            num = num * f
        return RatFrac(num, _linear_factor_split(self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFrac):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFrac is unhashable (equality is semantic)")

    def substitute_linear(self, images):
        """Substitute each variable by a linear form (must keep den nonzero)."""
        num = self.num.substitute_linear(images)
        dens = [f.substitute_linear(images) for f in self.den_factors]
        return RatFrac(num, dens)

    def __str__(self):
        if not self.den_factors:
            return "(" + poly_to_text(self.num) + ")"
        return "(" + poly_to_text(self.num) + ") / (" + poly_to_text(self.den) + ")"

    __repr__ = __str__


def _factor_key(f):
    return sorted((grlex_key(e), str(c)) for e, c in f.terms.items())


def _multiset_union(fs1, fs2):
    counts = {}
    for f in fs1:
        counts[f] = counts.get(f, 0) + 1
    counts2 = {}
    for f in fs2:
        counts2[f] = counts2.get(f, 0) + 1
    keys = set(counts) | set(counts2)
    out = []
    for f in keys:
        out.extend([f] * max(counts.get(f, 0), counts2.get(f, 0)))
    return tuple(sorted(out, key=_factor_key))


def _product_over(common, present, arity):
    """Product of the factors of `common` not matched in `present`."""
    avail = list(present)
    out = MultiPoly.const(arity, 1)
    for f in common:
        if f in avail:
            avail.remove(f)
        else:
            out = out * f
    return out


def _linear_factor_split(p):
    """Split p into linear factors by trial division where possible.

    Returns a factor list whose product is p; non-factorable remainders
    are kept as single (possibly nonlinear) factors.
    """
    factors = []
    if p.is_constant():
        return [p]
    rem = p
    changed = True
    while changed and not rem.is_constant():
        changed = False
        for cand in _linear_candidates(rem):
            q = exact_poly_divide(rem, cand)
            if q is not None:
                factors.append(cand)
                rem = q
                changed = True
                break
    factors.append(rem)
    return factors


def _linear_candidates(p):
    """Candidate linear divisors built from the variables present in p."""
    arity = p.arity
    used = [i for i in range(arity) if any(e[i] for e in p.terms)]
    cands = []
    for i in used:
        cands.append(MultiPoly.variable(i + 1, arity))
    for i in used:
        for j in used:
            if i < j:
                cands.append(MultiPoly.variable(i + 1, arity)
                             - MultiPoly.variable(j + 1, arity))
    # contiguous sums over the used variables (covers u_i + ... + u_j)
    for a in range(len(used)):
        s = MultiPoly.zero(arity)
        for b in range(a, len(used)):
            s = s + MultiPoly.variable(used[b] + 1, arity)
            if b > a:
                cands.append(s)
    return cands


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def poly_to_text(p, names=None):
    """Render as e.g. "1 * x1^2 x2 - 1/3 * x2^3"; "0" for zero."""
    if p.is_zero():
        return "0"
    if names is None:
        names = ["x%d" % (i + 1) for i in range(p.arity)]
    parts = []
    for expv, c in p.sorted_terms():
        factors = []
        for i, e in enumerate(expv):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append("%s^%d" % (names[i], e))
        body = " ".join(factors)
        mag = abs(c)
        cs = str(mag)
        term = cs + (" * " + body if body else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)
