"""Noncommutative polynomials in x, y and the word-level apparatus.

Words are strings over the alphabet {x, y}; an NCPoly is a finitely
supported rational combination of words.  Weight = total degree (word
length), depth = y-degree.  The module provides the Lie structure,
derivations, the push / trace / divergence machinery, the C-basis of
Lazard elimination (C_i = ad(x)^{i-1}(y)) and a Lyndon-word Lie basis
used to parameterize linear solvers.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import solve


class PartnerNotFound(Exception):
    pass


class NotInCSpan(Exception):
    pass


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class NCPoly:
    """Rational combination of words over {x, y}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _frac(c)
                if c == 0:
                    continue
                if any(ch not in "xy" for ch in w):
                    raise ValueError("bad letter in word %r" % w)
                clean[w] = clean.get(w, Fraction(0)) + c
                if clean[w] == 0:
                    del clean[w]
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def word(cls, w, c=1):
        return cls({w: _frac(c)})

    @classmethod
    def one(cls, c=1):
        return cls({"": _frac(c)})

    # -- basics -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def coeff(self, w):
        return self.terms.get(w, Fraction(0))

    def weights(self):
        return sorted({len(w) for w in self.terms})

    def depths(self):
        return sorted({w.count("y") for w in self.terms})

    def is_weight_homogeneous(self):
        return len(self.weights()) <= 1

    def weight(self):
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("not weight-homogeneous")
        return ws[0]

    def weight_component(self, n):
        return NCPoly({w: c for w, c in self.terms.items() if len(w) == n})

    def depth_component(self, r):
        return NCPoly({w: c for w, c in self.terms.items()
                       if w.count("y") == r})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, Fraction(0)) + c
            if s == 0:
                terms.pop(w, None)
            else:
                terms[w] = s
        out = NCPoly.__new__(NCPoly)
        out.terms = terms
        return out

    def __neg__(self):
        out = NCPoly.__new__(NCPoly)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(w, None)
                else:
                    terms[w] = s
        out = NCPoly.__new__(NCPoly)
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = _frac(c)
        if c == 0:
            return NCPoly.zero()
        out = NCPoly.__new__(NCPoly)
        out.terms = {w: cc * c for w, cc in self.terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        return ncpoly_to_text(self)

    __repr__ = __str__


X = NCPoly.word("x")
Y = NCPoly.word("y")


def lie_bracket(f, g):
    return f * g - g * f


def is_lie_element(f):
    """Dynkin criterion: right-normed bracketing returns n*f for Lie f."""
    if f.is_zero():
        return True
    if not f.is_weight_homogeneous():
        raise ValueError("input must be weight-homogeneous")
    n = f.weight()
    if n == 0:
        return False
    out = NCPoly.zero()
    for w, c in f.terms.items():
        bracketed = NCPoly.word(w[-1])
        for ch in reversed(w[:-1]):
            bracketed = lie_bracket(NCPoly.word(ch), bracketed)
        out = out + bracketed.scale(c)
    return out == f.scale(n)


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

class DerivationPair:
    """D-mode: D_{b,a} with x -> b, y -> a.
    E-mode: E_{a,b} with x -> [x,a], y -> [y,b]."""

    __slots__ = ("mode", "first", "second")

    def __init__(self, mode, first, second):
        if mode not in ("D", "E"):
            raise ValueError("mode must be 'D' or 'E'")
        self.mode = mode
        self.first = first
        self.second = second

    def images(self):
        """(image of x, image of y)."""
        if self.mode == "D":
            return self.first, self.second
        a, b = self.first, self.second
        return lie_bracket(X, a), lie_bracket(Y, b)


def apply_derivation(D, f):
    """Extend the generator images of D as a derivation of the word algebra."""
    gx, gy = D.images()
    images = {"x": gx, "y": gy}
    out = NCPoly.zero()
    for w, c in f.terms.items():
        for i, ch in enumerate(w):
            term = NCPoly.word(w[:i]) * images[ch] * NCPoly.word(w[i + 1:])
            out = out + term.scale(c)
    return out


def ihara_derivation(b):
    """d_b: x -> 0, y -> [y, b] (D-mode pair)."""
    return DerivationPair("D", NCPoly.zero(), lie_bracket(Y, b))


def poisson_bracket(b, b2):
    """{b, b'} = [b, b'] + d_b(b') - d_{b'}(b)."""
    return (lie_bracket(b, b2)
            + apply_derivation(ihara_derivation(b), b2)
            - apply_derivation(ihara_derivation(b2), b))


# ---------------------------------------------------------------------------
# Decomposition, reversal, push
# ---------------------------------------------------------------------------

def decompose(f):
    """f = c + f_x x + f_y y = c + x f^x + y f^y.

    Returns (c, f_x, f_y, f_up_x, f_up_y) where c is a Fraction."""
    c = f.coeff("")
    f_x, f_y, fux, fuy = {}, {}, {}, {}
    for w, co in f.terms.items():
        if not w:
            continue
        if w[-1] == "x":
            f_x[w[:-1]] = f_x.get(w[:-1], Fraction(0)) + co
        else:
            f_y[w[:-1]] = f_y.get(w[:-1], Fraction(0)) + co
        if w[0] == "x":
            fux[w[1:]] = fux.get(w[1:], Fraction(0)) + co
        else:
            fuy[w[1:]] = fuy.get(w[1:], Fraction(0)) + co
    return c, NCPoly(f_x), NCPoly(f_y), NCPoly(fux), NCPoly(fuy)


def beta(f):
    """Backwards-writing operator: reverse every word."""
    return NCPoly({w[::-1]: c for w, c in f.terms.items()})


def _word_blocks(w):
    """Split x^{a0} y x^{a1} y ... y x^{ar} into the exponent list."""
    blocks = []
    count = 0
    for ch in w:
        if ch == "x":
            count += 1
        else:
            blocks.append(count)
            count = 0
    blocks.append(count)
    return blocks


def _blocks_word(blocks):
    return "y".join("x" * a for a in blocks)


def push_word_single(w):
    if "y" not in w:
        return w
    blocks = _word_blocks(w)
    return _blocks_word(blocks[-1:] + blocks[:-1])


def push_word(f):
    return NCPoly({push_word_single(w): c for w, c in f.terms.items()})


def push_orbit(w):
    """The list [w, push(w), ..., push^r(w)] with r = depth of w."""
    out = [w]
    for _ in range(w.count("y")):
        out.append(push_word_single(out[-1]))
    return out


def is_push_invariant(f):
    return push_word(f) == f


def is_push_neutral(f):
    """Each (weight, depth >= 1)-homogeneous part has vanishing push-orbit sums."""
    for n in f.weights():
        fn = f.weight_component(n)
        for r in fn.depths():
            if r == 0:
                if not fn.depth_component(0).is_zero():
                    return False
                continue
            part = fn.depth_component(r)
            seen = set()
            for w in part.terms:
                if w in seen:
                    continue
                orbit = push_orbit(w)
                seen.update(orbit)
                if sum(part.coeff(v) for v in orbit) != 0:
                    return False
    return True


def is_push_constant(f, c=None):
    """Decide push-constance; returns (flag, c).

    Per weight-homogeneous f of weight m: no y^m monomial, and every
    push-orbit class sum at each depth where f has support equals c
    (the classes {x^m} and {y^m} excepted).  Depths with no support are
    skipped: the fixtures of the source definitions are depth-
    homogeneous and silent on the missing depths.
    """
    if f.is_zero():
        return True, (c if c is not None else Fraction(0))
    if not f.is_weight_homogeneous():
        raise ValueError("input must be weight-homogeneous")
    m = f.weight()
    if f.coeff("y" * m) != 0:
        return False, None
    value = _frac(c) if c is not None else None
    for r in f.depths():
        if r == 0 or r == m:
            continue
        part = f.depth_component(r)
        seen = set()
        for w in part.terms:
            if w in seen:
                continue
            orbit = push_orbit(w)
            seen.update(orbit)
            s = sum(part.coeff(v) for v in orbit)
            if value is None:
                value = s
            elif s != value:
                return False, None
        # orbits entirely outside the support must also sum to `value`;
        # they sum to 0, so a nonzero constant is only consistent if the
        # support covers all classes of this depth
        if value != 0:
            all_words = {w for w in _words_of(m, r)}
            covered = set()
            for w in part.terms:
                covered.update(push_orbit(w))
            if all_words - covered:
                return False, None
    if value is None:
        value = Fraction(0)
    if c is not None and value != _frac(c):
        return False, None
    return True, value


def _words_of(n, r):
    """All words of weight n and depth r."""
    from itertools import combinations
    for positions in combinations(range(n), r):
        yield "".join("y" if i in positions else "x" for i in range(n))


# ---------------------------------------------------------------------------
# Word-level circ properties (via the associated v-coefficient family)
# ---------------------------------------------------------------------------

def _v_family_direct(f):
    """Map each word x^{a1}y...x^{ar}y to the tuple (a1,...,ar).

    Requires every word of f to end in y."""
    fam = {}
    for w, c in f.terms.items():
        if not w or w[-1] != "y":
            raise ValueError("word %r does not end in y" % w)
        blocks = _word_blocks(w)
        a = tuple(blocks[:-1])  # trailing block is empty
        r = len(a)
        fam.setdefault(r, {})[a] = fam.get(r, {}).get(a, Fraction(0)) + c
    return {r: {a: c for a, c in d.items() if c != 0} for r, d in fam.items()}


def _v_family(f):
    """The v-coefficient family of swap(ma(f)), computed on words.

    If all words of f end in y, f is used directly; otherwise the
    reversed y-section g = beta(y * f^y) is used (the two agree on the
    inputs arising in this calculus)."""
    if all(w and w[-1] == "y" for w in f.terms):
        return _v_family_direct(f)
    _, _, _, _, fuy = decompose(f)
    g = beta(Y * fuy)
    return _v_family_direct(g) if not g.is_zero() else {}


def _cyclic_sum_family(d):
    """Accumulate each tuple's coefficient over its cyclic rotations."""
    out = {}
    for a, c in d.items():
        r = len(a)
        for k in range(r):
            rot = a[k:] + a[:k]
            out[rot] = out.get(rot, Fraction(0)) + c
    return {a: c for a, c in out.items() if c != 0}


def is_circ_neutral_poly(f):
    """All cyclic sums of the associated v-family vanish in sizes >= 2."""
    for n in f.weights():
        fam = _v_family(f.weight_component(n))
        for r, d in fam.items():
            if r < 2:
                continue
            if _cyclic_sum_family(d):
                return False
    return True


def is_circ_constant_poly(f):
    """Decide circ-constance of a weight-homogeneous polynomial.

    With c = (f | x^{n-1} y): the v-family must be c*v1^{n-1} in size 1
    and have cyclic sums equal to c times the all-monomials sum in sizes
    2..n-1 (size n is the y^n coefficient, which the definition adjusts
    freely).  Returns (flag, c)."""
    if f.is_zero():
        return True, Fraction(0)
    if not f.is_weight_homogeneous():
        raise ValueError("input must be weight-homogeneous")
    n = f.weight()
    c = f.coeff("x" * (n - 1) + "y")
    fam = _v_family(f)
    # size 1: exactly c * v1^{n-1}
    d1 = fam.get(1, {})
    if d1 != ({(n - 1,): c} if c != 0 else {}):
        return False, None
    for r in range(2, n):
        d = fam.get(r, {})
        sums = _cyclic_sum_family(d)
        # target: every tuple of size r and total n - r has cyclic sum c
        target = {}
        for a in _compositions(n - r, r):
            if c != 0:
                target[a] = c
        if sums != target:
            return False, None
    return True, c


def _compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Trace space and divergence
# ---------------------------------------------------------------------------

class TraceVector:
    """Words modulo cyclic rotation; keys are the lexicographically
    least rotation of their class."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: _frac(c) for w, c in (terms or {}).items() if c != 0}

    @staticmethod
    def canonical(w):
        if not w:
            return w
        return min(w[k:] + w[:k] for k in range(len(w)))

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, Fraction(0)) + c
            if s == 0:
                terms.pop(w, None)
            else:
                terms[w] = s
        return TraceVector(terms)

    def __sub__(self, other):
        return self + TraceVector({w: -c for w, c in other.terms.items()})

    def scale(self, c):
        return TraceVector({w: cc * _frac(c) for w, cc in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TraceVector) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "tr(0)"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        return " + ".join("%s*[%s]" % (c, w) for w, c in items)


def trace_project(f):
    terms = {}
    for w, c in f.terms.items():
        k = TraceVector.canonical(w)
        terms[k] = terms.get(k, Fraction(0)) + c
    return TraceVector(terms)


def divergence(E):
    """div(E_{a,b}) = tr(a_x x + b_y y) for an E-mode pair."""
    if E.mode != "E":
        raise ValueError("divergence is defined on E-mode pairs")
    a, b = E.first, E.second
    _, a_x, _, _, _ = decompose(a)
    _, _, b_y, _, _ = decompose(b)
    return trace_project(a_x * X + b_y * Y)


# ---------------------------------------------------------------------------
# Partner solving and the angle bracket
# ---------------------------------------------------------------------------

def partner(b):
    """The unique a with [x, a] + [y, b] = 0 (exists iff b push-invariant)."""
    if b.is_zero():
        return NCPoly.zero()
    if not b.is_weight_homogeneous():
        raise ValueError("input must be weight-homogeneous")
    n = b.weight()
    rhs_poly = -lie_bracket(Y, b)
    basis = lyndon_lie_basis(n)
    columns = [lie_bracket(X, e) for e in basis]
    words = sorted({w for col in columns for w in col.terms}
                   | set(rhs_poly.terms))
    matrix = [[col.coeff(w) for col in columns] for w in words]
    rhs = [rhs_poly.coeff(w) for w in words]
    sol = solve(matrix, rhs)
    if sol is None:
        raise PartnerNotFound("no partner: input is not push-invariant")
    out = NCPoly.zero()
    for c, e in zip(sol, basis):
        out = out + e.scale(c)
    return out


def oder_pair(b):
    """The D-mode pair (b, a) annihilating [x, y]: a = -partner(b)."""
    return DerivationPair("D", b, -partner(b))


def angle_bracket(b, b2):
    """<b, b'> = D_{b',a'}(b) - D_{b,a}(b') with the partners that make
    both derivations annihilate [x, y].

    This is the x-image of the derivation commutator [D_{b'}, D_b];
    the order is normalized so that ma intertwines the bracket with the
    Dari bracket on moulds."""
    D1 = oder_pair(b)
    D2 = oder_pair(b2)
    return apply_derivation(D2, b) - apply_derivation(D1, b2)


def delta_2n(n):
    """The derivation with x -> ad(x)^{2n}(y) annihilating [x, y]."""
    return oder_pair(c_poly(2 * n + 1))


# ---------------------------------------------------------------------------
# nu twist
# ---------------------------------------------------------------------------

def nu_twist(f):
    """Substitute x -> -x-y, y -> y."""
    z = NCPoly({"x": Fraction(-1), "y": Fraction(-1)})
    images = {"x": z, "y": Y}
    out = NCPoly.zero()
    for w, c in f.terms.items():
        term = NCPoly.one()
        for ch in w:
            term = term * images[ch]
        out = out + term.scale(c)
    return out


# ---------------------------------------------------------------------------
# C-basis (Lazard elimination)
# ---------------------------------------------------------------------------

_c_cache = {}


def c_poly(i):
    """C_i = ad(x)^{i-1}(y)."""
    if i < 1:
        raise ValueError("C_i requires i >= 1")
    if i not in _c_cache:
        p = Y
        for _ in range(i - 1):
            p = lie_bracket(X, p)
        _c_cache[i] = p
    return _c_cache[i]


def c_monomial(a):
    """C_{a1} C_{a2} ... C_{ar} (empty tuple -> 1)."""
    out = NCPoly.one()
    for i in a:
        out = out * c_poly(i)
    return out


def from_c_basis(coeffs):
    out = NCPoly.zero()
    for a, c in coeffs:
        out = out + c_monomial(tuple(a)).scale(c)
    return out


def to_c_basis(f):
    """Coefficients k_a with f = sum k_a C_{a1}...C_{ar}.

    Triangular elimination on the lexicographically least word (x < y),
    which for a C-span element always ends in y (or is the empty word).
    Raises NotInCSpan otherwise."""
    coeffs = []
    rem = NCPoly(dict(f.terms))
    while not rem.is_zero():
        w = min(rem.terms)
        c = rem.terms[w]
        if w == "":
            coeffs.append(((), c))
            rem = rem - NCPoly.one(c)
            continue
        if w[-1] != "y":
            raise NotInCSpan("leading word %r not of C-monomial form" % w)
        blocks = _word_blocks(w)
        a = tuple(e + 1 for e in blocks[:-1])
        coeffs.append((a, c))
        rem = rem - c_monomial(a).scale(c)
    coeffs.sort(key=lambda t: (len(t[0]), t[0]))
    return coeffs


# ---------------------------------------------------------------------------
# Lyndon basis
# ---------------------------------------------------------------------------

def lyndon_words(n, alphabet="xy"):
    """All Lyndon words of length n (Duval's algorithm)."""
    k = len(alphabet)
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append("".join(alphabet[i] for i in w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return sorted(w for w in out if len(w) == n)


def _standard_bracketing(w):
    if len(w) == 1:
        return NCPoly.word(w)
    # standard factorization: v = longest proper Lyndon suffix
    for i in range(1, len(w)):
        v = w[i:]
        if _is_lyndon(v):
            return lie_bracket(_standard_bracketing(w[:i]),
                               _standard_bracketing(v))
    raise AssertionError("not a Lyndon word: %r" % w)


def _is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_lie_basis(n):
    """Basis of the weight-n part of the free Lie algebra on x, y."""
    return [_standard_bracketing(w) for w in lyndon_words(n)]


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def ncpoly_to_text(f):
    """Render as e.g. "1*xxy - 2*xyx + 1*yxx"."""
    if f.is_zero():
        return "0"
    parts = []
    for w, c in f.sorted_terms():
        body = w if w else "1"
        term = "%s*%s" % (abs(c), body)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


def ncpoly_from_text(s):
    """Parse the text form; raises ValueError with an offset on errors."""
    terms = {}
    i, n = 0, len(s)
    sign = 1
    expect_term = True
    while i < n:
        if s[i].isspace():
            i += 1
            continue
        if s[i] in "+-":
            sign = 1 if s[i] == "+" else -1
            i += 1
            expect_term = True
            continue
        # a term: [coefficient *] word  or a bare rational (constant)
        j = i
        while j < n and (s[j].isdigit() or s[j] == "/"):
            j += 1
        if j > i:
            try:
                coeff = Fraction(s[i:j])
            except (ValueError, ZeroDivisionError):
                raise ValueError("bad coefficient at offset %d" % i)
            i = j
            while i < n and s[i].isspace():
                i += 1
            if i < n and s[i] == "*":
                i += 1
                while i < n and s[i].isspace():
                    i += 1
                j = i
                while j < n and not s[j].isspace() and s[j] not in "+-":
                    j += 1
                word = s[i:j]
                if word == "1":
                    word = ""
                elif any(ch not in "xy" for ch in word):
                    raise ValueError("bad word at offset %d" % i)
                i = j
            else:
                word = ""
        else:
            j = i
            while j < n and not s[j].isspace() and s[j] not in "+-":
                j += 1
            word = s[i:j]
            if word == "1":
                word = ""
            elif not word or any(ch not in "xy" for ch in word):
                raise ValueError("bad term at offset %d" % i)
            coeff = Fraction(1)
            i = j
        terms[word] = terms.get(word, Fraction(0)) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term and terms:
        raise ValueError("dangling sign at end of input")
    return NCPoly(terms)
