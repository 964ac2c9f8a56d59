"""Linear-constraint solvers for the bigraded spaces.

Each solver assembles an exact rational constraint matrix on a finite
parameter basis (Lyndon Lie elements for the word-level spaces, monomial
coefficients per depth for the mould-level ones), takes its nullspace
and re-verifies every emitted basis element against the defining
predicates of the space.

Spaces:
  lkv      push-invariant, circ-neutral Lie elements (depth-graded)
  ls       alternal moulds with alternal swap, even in depth 1
  vkrv     push-invariant Lie b with b^y - b^x push-constant
  gr_krv   depth-graded pieces of vkrv
  krv_ell  polynomial moulds P with P/(u1..ur(u1+..+ur)) push-invariant
           and *circ-neutral swap, alternal
  ds_ell   polynomial moulds P with P/(u1..ur(u1+..+ur)) alternal with
           *alternal swap
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from . import mould as mould_mod
from . import words as words_mod
from .linalg import nullspace, rank
from .mould import Mould
from .poly import MultiPoly, RatFrac, grlex_key
from .words import NCPoly


class ConstraintSystem:
    """Parameter basis plus one row per instantiated linear identity."""

    __slots__ = ("parameters", "rows", "tags")

    def __init__(self, parameters, rows, tags):
        self.parameters = parameters
        self.rows = rows
        self.tags = tags

    def null_vectors(self):
        return nullspace(self.rows, cols=len(self.parameters))


class BigradedBasis:
    """Solved (weight, depth) piece of a space."""

    __slots__ = ("space", "n", "r", "basis", "extras")

    def __init__(self, space, n, r, basis, extras=None):
        self.space = space
        self.n = n
        self.r = r
        self.basis = basis
        self.extras = extras or {}

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        where = "n=%s" % (self.n,)
        if self.r is not None:
            where += ", r=%s" % (self.r,)
        return "BigradedBasis(%s, %s, dim=%d)" % (self.space, where, self.dim)


def _rows_from_defects(defects, extra_cols=0):
    """Turn per-generator {key: Fraction} defect maps into matrix rows.

    defects[j] describes the linear image of generator j; rows are keyed
    by the union of all keys, in sorted order.  extra_cols appends zero
    columns (for adjoined unknowns handled by the caller)."""
    keys = sorted(set().union(*[set(d) for d in defects]) if defects else [])
    rows = []
    for key in keys:
        rows.append([d.get(key, Fraction(0)) for d in defects]
                    + [Fraction(0)] * extra_cols)
    return keys, rows


def _poly_defect(value, tag):
    """Monomial coefficients of a polynomial RatFrac value, tagged."""
    if isinstance(value, RatFrac):
        if not value.is_polynomial():
            raise ValueError("expected a polynomial value")
        value = value.as_poly()
    return {(tag, e): c for e, c in value.terms.items()}


def _merge(*dicts):
    out = {}
    for d in dicts:
        for k, v in d.items():
            out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def _combine_ncpoly(gens, vec):
    out = NCPoly.zero()
    for g, c in zip(gens, vec):
        if c:
            out = out + g.scale(c)
    return out


def _combine_poly(gens, vec):
    out = None
    for e, c in zip(gens, vec):
        if c:
            m = MultiPoly.monomial(e, c)
            out = m if out is None else out + m
    return out


def _exp_tuples(d, r):
    """Exponent tuples of length r with total degree d, grlex order."""
    if d < 0:
        return []
    out = []

    def gen(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for k in range(remaining + 1):
            gen(prefix + [k], remaining - k, slots - 1)

    gen([], d, r)
    out.sort(key=grlex_key)
    return out


def lie_basis(n, r):
    """Lyndon basis of the weight-n, depth-r part of the free Lie algebra."""
    return [b for b in words_mod.lyndon_lie_basis(n)
            if b.depths() == [r]]


# ---------------------------------------------------------------------------
# lkv: push-invariant circ-neutral Lie elements
# ---------------------------------------------------------------------------

def lkv_system(n, r):
    gens = lie_basis(n, r)
    defects = []
    for g in gens:
        B = mould_mod.ma(g)
        d = _poly_defect(mould_mod.push(B).get(r) - B.get(r), "push")
        if r > 1:
            d = _merge(d, _poly_defect(
                mould_mod.circ_cycle_sum(mould_mod.swap(B), r), "circ"))
        defects.append(d)
    keys, rows = _rows_from_defects(defects)
    return ConstraintSystem(gens, rows, keys)


def solve_lkv(n, r):
    """Lie elements of weight n, depth r that are push-invariant with
    circ-neutral swap mould."""
    if not (n >= 3 and 1 <= r <= n - 1):
        return BigradedBasis("lkv", n, r, [])
    system = lkv_system(n, r)
    basis = [_combine_ncpoly(system.parameters, v)
             for v in system.null_vectors()]
    for b in basis:
        assert words_mod.is_push_invariant(b)
        assert words_mod.is_circ_neutral_poly(b)
    return BigradedBasis("lkv", n, r, basis)


# ---------------------------------------------------------------------------
# ls: alternal moulds with alternal swap, even in depth 1
# ---------------------------------------------------------------------------

def _alternality_defect(value, r, tag):
    out = {}
    for i in range(1, r // 2 + 1):
        out = _merge(out, _poly_defect(
            mould_mod.shuffle_sum(value, r, i), "%s:%d" % (tag, i)))
    return out


def ls_system(n, r):
    d = n - r
    gens = _exp_tuples(d, r)
    defects = []
    for e in gens:
        B = Mould("U", {r: MultiPoly.monomial(e, 1)})
        dd = _alternality_defect(B.get(r), r, "al")
        dd = _merge(dd, _alternality_defect(
            mould_mod.swap(B).get(r), r, "sal"))
        defects.append(dd)
    keys, rows = _rows_from_defects(defects)
    return ConstraintSystem(gens, rows, keys)


def solve_ls(n, r):
    """Degree n-r polynomial moulds in depth r, alternal with alternal
    swap; even in depth 1."""
    d = n - r
    if d < 0:
        return BigradedBasis("ls", n, r, [])
    if r == 1:
        basis = []
        if d % 2 == 0:
            basis = [Mould("U", {1: MultiPoly.monomial((d,), 1)})]
        return BigradedBasis("ls", n, r, basis)
    system = ls_system(n, r)
    basis = []
    for v in system.null_vectors():
        p = _combine_poly(system.parameters, v)
        M = Mould("U", {r: p})
        assert mould_mod.is_alternal(M)
        assert mould_mod.is_alternal(mould_mod.swap(M))
        basis.append(M)
    return BigradedBasis("ls", n, r, basis)


# ---------------------------------------------------------------------------
# vkrv: push-invariant Lie b with b^y - b^x push-constant
# ---------------------------------------------------------------------------

def vkrv_system(n):
    gens = [b for r in range(1, n) for b in lie_basis(n, r)]
    m = n - 1
    defects = []
    for g in gens:
        d = {("push", w): c
             for w, c in (words_mod.push_word(g) - g).terms.items()}
        _, _, _, gux, guy = words_mod.decompose(g)
        diff = guy - gux
        c_lin = g.coeff("x" * (n - 1) + "y")
        # the y^{n-1} coefficient must vanish outright
        ym = diff.coeff("y" * m)
        if ym:
            d = _merge(d, {("ym",): ym})
        # push-class sums (with repetition) all equal (g | x^{n-1}y)
        seen = set()
        class_rows = {}
        for rr in range(1, m):
            for w in words_mod._words_of(m, rr):
                if w in seen:
                    continue
                orbit = words_mod.push_orbit(w)
                seen.update(orbit)
                key = ("class", min(orbit))
                total = sum(diff.coeff(v) for v in orbit)
                class_rows[key] = total - c_lin
        d = _merge(d, class_rows)
        defects.append(d)
    keys, rows = _rows_from_defects(defects)
    return ConstraintSystem(gens, rows, keys)


def solve_vkrv(n):
    """Weight-n part of the space of push-invariant Lie elements whose
    b^y - b^x is push-constant for the value (b | x^{n-1} y)."""
    if n < 3:
        return BigradedBasis("vkrv", n, None, [])
    system = vkrv_system(n)
    basis = [_combine_ncpoly(system.parameters, v)
             for v in system.null_vectors()]
    for b in basis:
        assert words_mod.is_push_invariant(b)
        _, _, _, bux, buy = words_mod.decompose(b)
        c = b.coeff("x" * (n - 1) + "y")
        ok, got = words_mod.is_push_constant(buy - bux)
        assert ok and (got == c or (got == 0 and c == 0) or got is None)
    return BigradedBasis("vkrv", n, None, basis)


def solve_gr_krv(n, r):
    """Dimension of the depth-r graded piece of the weight-n part of
    vkrv (depth filtration: F_r = elements with no component of depth
    below r)."""
    vk = solve_vkrv(n)
    if vk.dim == 0:
        return 0

    def filtered_dim(s):
        # combinations with all components of depth < s equal to zero
        low_words = sorted({w for b in vk.basis for w in b.terms
                            if w.count("y") < s})
        rows = [[b.coeff(w) for b in vk.basis] for w in low_words]
        return len(nullspace(rows, cols=vk.dim))

    return filtered_dim(r) - filtered_dim(r + 1)


# ---------------------------------------------------------------------------
# Denominator clearing for rational constraint rows
# ---------------------------------------------------------------------------

def _cleared_numerators(fracs):
    """Common-denominator numerators of a list of RatFracs.

    Returns (numerators, common_denominator) with
    fracs[j] = numerators[j] / common_denominator exactly."""
    from .poly import _multiset_union, _product_over

    arity = fracs[0].arity
    common = ()
    for f in fracs:
        common = _multiset_union(common, f.den_factors)
    den = MultiPoly.const(arity, 1)
    for fac in common:
        den = den * fac
    nums = [f.num * _product_over(common, f.den_factors, arity)
            for f in fracs]
    return nums, den


# ---------------------------------------------------------------------------
# krv_ell: P with P/Delta push-invariant and *circ-neutral swap, alternal
# ---------------------------------------------------------------------------

def krv_ell_system(n, r):
    d = n - r
    gens = _exp_tuples(d, r)
    defects = []
    circ_fracs = []
    for e in gens:
        P = MultiPoly.monomial(e, 1)
        B = Mould("U", {r: P})
        dd = _alternality_defect(B.get(r), r, "al")
        dd = _merge(dd, _poly_defect(
            mould_mod.push(B).get(r) - B.get(r), "push"))
        defects.append(dd)
        if r > 1:
            Bstar = mould_mod.delta_inv(B)
            circ_fracs.append(
                mould_mod.circ_cycle_sum(mould_mod.swap(Bstar), r))
    extra = 1 if r > 1 else 0
    if r > 1:
        nums, den = _cleared_numerators(circ_fracs)
        for j, num in enumerate(nums):
            defects[j] = _merge(defects[j], _poly_defect(num, "circ"))
        den_defect = _poly_defect(den, "circ")
    keys, rows = _rows_from_defects(defects, extra_cols=extra)
    if r > 1:
        # last column: the adjoined constant c with cyclic sum = c
        for i, key in enumerate(keys):
            rows[i][-1] = -den_defect.get(key, Fraction(0))
    return ConstraintSystem(list(gens) + (["c"] if extra else []), rows, keys)


def solve_krv_ell(n, r):
    """Degree n-r polynomial moulds P in depth r that are alternal and
    push-invariant with *circ-neutral swap after division by
    u1...ur(u1+...+ur)."""
    d = n - r
    if d < 0 or r < 1:
        return BigradedBasis("krv_ell", n, r, [])
    system = krv_ell_system(n, r)
    ngens = len(system.parameters) - (1 if r > 1 else 0)
    basis, constants = [], []
    for v in system.null_vectors():
        p = _combine_poly(system.parameters[:ngens], v[:ngens])
        if p is None:
            continue  # pure-constant direction (zero mould)
        M = Mould("U", {r: p})
        assert mould_mod.is_alternal(M)
        assert mould_mod.is_push_invariant(M)
        star = mould_mod.delta_inv(M)
        s = mould_mod.circ_cycle_sum(mould_mod.swap(star), r) \
            if r > 1 else None
        if s is not None:
            assert s.is_polynomial() and s.num.is_constant()
        basis.append(M)
        constants.append(v[-1] if r > 1 else Fraction(0))
    return BigradedBasis("krv_ell", n, r, basis,
                         extras={"circ_constants": constants})


# ---------------------------------------------------------------------------
# ds_ell: P with P/Delta alternal and *alternal swap
# ---------------------------------------------------------------------------

def ds_ell_system(n, r):
    d = n - r
    gens = _exp_tuples(d, r)
    defects = [
        _alternality_defect(Mould("U", {r: MultiPoly.monomial(e, 1)}).get(r),
                            r, "al")
        for e in gens]
    extra = 1 if r > 1 else 0
    if r > 1:
        pair_fracs = {}
        for e in gens:
            Bstar = mould_mod.delta_inv(Mould("U", {r: MultiPoly.monomial(e, 1)}))
            sw = mould_mod.swap(Bstar).get(r)
            for i in range(1, r // 2 + 1):
                pair_fracs.setdefault(i, []).append(
                    mould_mod.shuffle_sum(sw, r, i))
        den_defect = {}
        for i, fracs in sorted(pair_fracs.items()):
            nums, den = _cleared_numerators(fracs)
            tag = "sal:%d" % i
            for j, num in enumerate(nums):
                defects[j] = _merge(defects[j], _poly_defect(num, tag))
            # shuffle sum of a constant mould contributes C(r, i) * c
            den_defect = _merge(den_defect, _poly_defect(
                den.scale(math.comb(r, i)), tag))
    keys, rows = _rows_from_defects(defects, extra_cols=extra)
    if r > 1:
        for i, key in enumerate(keys):
            rows[i][-1] = -den_defect.get(key, Fraction(0))
    return ConstraintSystem(list(gens) + (["c"] if extra else []), rows, keys)


def solve_ds_ell(n, r):
    """Degree n-r polynomial moulds P in depth r with P/Delta alternal
    and swap alternal up to a constant mould."""
    d = n - r
    if d < 0 or r < 1:
        return BigradedBasis("ds_ell", n, r, [])
    if r == 1:
        # depth-1 alternality is void; evenness ensures push-invariance
        # of the Delta-quotient, which the krv_ell inclusion needs
        basis = []
        if d % 2 == 0:
            basis = [Mould("U", {1: MultiPoly.monomial((d,), 1)})]
        return BigradedBasis("ds_ell", n, r, basis,
                             extras={"alternal_constants":
                                     [Fraction(0)] * len(basis)})
    system = ds_ell_system(n, r)
    ngens = len(system.parameters) - 1
    basis, constants = [], []
    for v in system.null_vectors():
        p = _combine_poly(system.parameters[:ngens], v[:ngens])
        if p is None:
            continue
        M = Mould("U", {r: p})
        assert mould_mod.is_alternal(M)
        star = mould_mod.delta_inv(M)
        corr = mould_mod.star_correction(mould_mod.swap(star), "alternal")
        assert corr is not None
        basis.append(M)
        constants.append(v[-1])
    return BigradedBasis("ds_ell", n, r, basis,
                         extras={"alternal_constants": constants})


# ---------------------------------------------------------------------------
# Dimension tables
# ---------------------------------------------------------------------------

_SOLVERS = {
    "lkv": lambda n, r: solve_lkv(n, r).dim,
    "ls": lambda n, r: solve_ls(n, r).dim,
    "gr_krv": solve_gr_krv,
    "krv_ell": lambda n, r: solve_krv_ell(n, r).dim,
    "ds_ell": lambda n, r: solve_ds_ell(n, r).dim,
}


class DimensionTable:
    __slots__ = ("space", "cells")

    def __init__(self, space, cells):
        self.space = space
        self.cells = cells  # list of (n, r, dim), sorted

    def dim(self, n, r):
        for nn, rr, d in self.cells:
            if (nn, rr) == (n, r):
                return d
        raise KeyError((n, r))

    def to_text(self):
        ns = sorted({n for n, _, _ in self.cells})
        rs = sorted({r for _, r, _ in self.cells})
        width = max(4, max(len(str(n)) for n in ns) + 1)
        lines = ["%s dimensions" % self.space,
                 "r\\n " + "".join(str(n).rjust(width) for n in ns)]
        grid = {(n, r): d for n, r, d in self.cells}
        for r in rs:
            lines.append(str(r).ljust(4) + "".join(
                str(grid[(n, r)]).rjust(width) for n in ns))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps(
            {"space": self.space,
             "cells": [{"n": n, "r": r, "dim": d}
                       for n, r, d in self.cells]},
            indent=2, sort_keys=True) + "\n"


def dimension_table(space, n_range, r_range, threads=1):
    """Exact dimension grid over n_range x r_range."""
    if space not in _SOLVERS:
        raise ValueError("unknown space %r" % space)
    solver = _SOLVERS[space]
    cells = sorted((n, r) for n in n_range for r in r_range)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            dims = list(pool.map(lambda nr: solver(*nr), cells))
    else:
        dims = [solver(n, r) for n, r in cells]
    return DimensionTable(space, [(n, r, d)
                                  for (n, r), d in zip(cells, dims)])
