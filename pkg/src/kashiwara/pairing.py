"""The skew Hopf pairing between U^>= and U^<=, Gram matrices and dual bases.

The pairing is evaluated on raw letter words; it factors through the defining
relations, so no normalization is needed.  Coproducts of words are purely
combinatorial (every generator coproduct has coefficient 1), which keeps the
recursion exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import Letter, basis_of_weight_space
from .errors import IllegalLetter
from .linalg import bareiss_det, bareiss_inverse
from .rootdata import euler_form
from .scalars import ONE, ZERO, Scalar

X_KINDS = {"e", "w"}
Y_KINDS = {"f", "v"}


def _delta_word(word):
    """Delta of a word in e/w (or f/v) letters as a list of (left, right) words."""
    out = [((), ())]
    for l in word:
        if l.kind in ("w", "v"):
            parts = [((l,), (l,))]
        elif l.kind == "e":
            parts = [((l,), ()), ((Letter("w", l.index),), (l,))]
        else:
            parts = [((l,), (Letter("v", l.index),)), ((), (l,))]
        out = [(a + p, b + q) for (a, b) in out for (p, q) in parts]
    return out


def _content(word, kind, n):
    w = [0] * n
    for l in word:
        if l.kind == kind:
            w[l.index] += 1
    return tuple(w)


class Pairing:
    """Memoized evaluator for one Cartan type."""

    def __init__(self, alg, prune=True, strategy="longer"):
        if strategy not in ("longer", "x_first", "y_first"):
            raise ValueError(f"unknown split strategy {strategy!r}")
        self.strategy = strategy
        self.alg = alg
        self.ct = alg.ct
        self.n = alg.n
        self.prune = prune
        self._memo = {}

    def counit_word(self, word):
        return ZERO if any(l.kind in ("e", "f") for l in word) else ONE

    def words(self, x, y):
        """<x, y> for a word x in e/w letters and y in f/v letters."""
        key = (x, y)
        val = self._memo.get(key)
        if val is not None:
            return val
        val = self._words(x, y)
        self._memo[key] = val
        return val

    def _words(self, x, y):
        if not y:
            return self.counit_word(x)
        if not x:
            return self.counit_word(y)
        n = self.n
        if self.prune and _content(x, "e", n) != _content(y, "f", n):
            return ZERO
        if len(x) == 1 and len(y) == 1:
            return self._base(x[0], y[0])
        if self._split_y(x, y):
            # <x, y1 y2> = <x_(1), y1> <x_(2), y2>
            y1, y2 = y[:1], y[1:]
            out = ZERO
            for a, b in _delta_word(x):
                c = self.words(a, y1)
                if not c.is_zero():
                    c = c * self.words(b, y2)
                    out = out + c
            return out
        # <x1 x2, y> = <x2, y_(1)> <x1, y_(2)>
        x1, x2 = x[:1], x[1:]
        out = ZERO
        for a, b in _delta_word(y):
            c = self.words(x1, b)
            if not c.is_zero():
                out = out + c * self.words(x2, a)
        return out

    def _split_y(self, x, y):
        if len(y) == 1:
            return False
        if len(x) == 1:
            return True
        if self.strategy == "longer":
            return len(y) >= len(x)
        return self.strategy == "y_first"

    def _base(self, a, b):
        ct = self.ct
        if a.kind == "w" and b.kind == "v":
            nu = [0] * self.n
            mu = [0] * self.n
            nu[a.index] = a.exp
            mu[b.index] = b.exp
            return Scalar.monomial(euler_form(ct, mu, nu), -euler_form(ct, nu, mu))
        if a.kind == "e" and b.kind == "f":
            if a.index != b.index:
                return ZERO
            return (-ct.r_minus_s(a.index)).inverse()
        return ZERO

    def __call__(self, x, y):
        return pair(x, y, self)


def get_pairing(alg, prune=True, strategy="longer"):
    key = ("pairing", prune, strategy)
    p = alg.map_cache.get(key)
    if p is None:
        p = Pairing(alg, prune, strategy)
        alg.map_cache[key] = p
    return p


def element_words(x, allowed):
    """The normal monomials of x as (letter word, coefficient) pairs."""
    bad = x.letters() - allowed
    if bad:
        raise IllegalLetter(f"letters {sorted(bad)} are not allowed on this side of the pairing")
    return [(tuple(x.parent.monomial_letters(m)), c) for m, c in x.terms.items()]


def pair(x, y, pairing=None):
    """<x, y> for x in U^>= (e, omega) and y in U^<= (f, omega')."""
    p = pairing or get_pairing(x.parent.alg)
    out = ZERO
    xs = element_words(x, X_KINDS)
    ys = element_words(y, Y_KINDS)
    for (xw, cx), (yw, cy) in product(xs, ys):
        v = p.words(xw, yw)
        if not v.is_zero():
            out = out + cx * cy * v
    return out


def pair_words(alg, xword, yword, prune=True):
    """Pairing of an e-index word with an f-index word."""
    p = get_pairing(alg, prune)
    return p.words(tuple(Letter("e", i) for i in xword), tuple(Letter("f", i) for i in yword))


def pair_oracle(alg, xword, yword):
    """Independent evaluation of <e-word, f-word> through the skew-derivation rule.

    <x, y f_j> = sum over positions p of x carrying j of
    prod_{q > p} r^<i_q, j> s^-<j, i_q> * <x without p, y> * <e_j, f_j>.
    """
    ct = alg.ct
    memo = {}

    def rec(x, y):
        key = (x, y)
        if key in memo:
            return memo[key]
        if not y:
            val = ONE if not x else ZERO
        elif len(x) != len(y):
            val = ZERO
        else:
            j = y[-1]
            base = (ct.r_minus_s(j) * -1).inverse()
            val = ZERO
            for p, ip in enumerate(x):
                if ip != j:
                    continue
                c = ONE
                for iq in x[p + 1:]:
                    c = c * Scalar.monomial(ct.euler(iq, j), -ct.euler(j, iq))
                sub = rec(x[:p] + x[p + 1:], y[:-1])
                if not sub.is_zero():
                    val = val + c * sub * base
        memo[key] = val
        return val

    return rec(tuple(xword), tuple(yword))


@dataclass
class GramData:
    beta: tuple
    plus_basis: list
    minus_basis: list
    gram: list
    _inverse: list = field(default=None, repr=False)

    @property
    def gram_inverse(self):
        if self._inverse is None:
            self._inverse = bareiss_inverse(self.gram) if self.gram else []
        return self._inverse

    def determinant(self):
        return bareiss_det(self.gram)

    @property
    def dimension(self):
        return len(self.plus_basis)


def gram_matrix(alg, beta, plus_basis=None):
    """Gram matrix <x_r, y_c> over the selected bases of weight beta.

    ``plus_basis`` overrides the plus side with any list of e-index words
    (used to test basis independence); results are cached only for the default.
    """
    beta = tuple(beta)
    alg.check_height(beta)
    key = ("gram", beta)
    if plus_basis is None:
        cached = alg.map_cache.get(key)
        if cached is not None:
            return cached
    xs = list(plus_basis) if plus_basis is not None else basis_of_weight_space(alg, beta, "plus")
    ys = basis_of_weight_space(alg, beta, "minus")
    gram = [[pair_words(alg, x, y) for y in ys] for x in xs]
    data = GramData(beta, xs, ys, gram)
    if plus_basis is None:
        alg.map_cache[key] = data
    return data


def dual_basis(alg, beta, plus_basis=None):
    """Elements y_r of U^-_{-beta} with <x_r, y_c> = delta_rc."""
    data = gram_matrix(alg, beta, plus_basis)
    U = alg.U
    inv = data.gram_inverse
    out = []
    for r in range(data.dimension):
        y = U.zero()
        for c, word in enumerate(data.minus_basis):
            coef = inv[c][r]
            if not coef.is_zero():
                y = y + U.monomial(left=word).scale(coef)
        out.append(y)
    return out


# -- properties of the pairing -------------------------------------------------------


def _exchange_sides(x, y):
    """Right-hand sides of the two product-exchange identities for x, y.

    The first rewrites ``yx`` as a combination of ``x_(1) y_(1)``; the second
    rewrites ``xy`` as a combination of ``y_(1) x_(1)``.
    """
    from .hopf import antipode, iterated_coproduct

    U = x.parent.alg.U
    X = list(iterated_coproduct(x).legs())
    Y = list(iterated_coproduct(y).legs())
    yx, xy = U.zero(), U.zero()
    for cx, (x0, x1, x2) in X:
        for cy, (y0, y1, y2) in Y:
            c = cx * cy
            a = pair(x0, antipode(y0)) * pair(x2, y2)
            if not a.is_zero():
                yx = yx + (x1 * y1).scale(c * a)
            b = pair(x0, y0) * pair(x2, antipode(y2))
            if not b.is_zero():
                xy = xy + (y1 * x1).scale(c * b)
    return yx, xy


def verify_pairing_properties(alg, max_height, report=None):
    """Antipode invariance, toral scaling, weight orthogonality, nondegeneracy
    and the exchange identities on generator-level instances."""
    from .canonical import fmt_w, weights_up_to
    from .hopf import antipode
    from .report import Report

    report = report or Report("pairing", {"type": alg.ct.name, "height": max_height})
    U, n, ct = alg.U, alg.n, alg.ct
    e_words = lambda w: U.monomial(right=w)  # noqa: E731
    f_words = lambda w: U.monomial(left=w)  # noqa: E731
    weights = weights_up_to(n, max_height)
    for beta in weights[1:]:
        data = gram_matrix(alg, beta)
        det = data.determinant()
        report.add("nondegenerate", "det Gram(beta) != 0", f"beta={fmt_w(beta)}",
                   not det.is_zero(), det)
        for r, xw in enumerate(data.plus_basis):
            x = e_words(xw)
            for c, yw in enumerate(data.minus_basis):
                y = f_words(yw)
                inst = f"<{x}, {y}>"
                val = data.gram[r][c]
                report.check_zero("antipode-invariant", "<S x, S y> = <x, y>", inst,
                                  pair(antipode(x), antipode(y)) - val)
                for i in range(n):
                    for j in range(n):
                        nu, mu = [0] * n, [0] * n
                        nu[i], mu[j] = 1, 1
                        lhs = pair(x * U.letter("w", i), y * U.letter("v", j))
                        rhs = Scalar.monomial(euler_form(ct, mu, nu), -euler_form(ct, nu, mu)) * val
                        report.check_zero("toral-scaling", "<x w_nu, y w'_mu>",
                                          f"{inst} nu={i + 1} mu={j + 1}", lhs - rhs)
    for gam in weights:
        for dl in weights:
            if gam == dl or sum(gam) != sum(dl):
                continue
            bad = [(xw, yw) for xw in basis_of_weight_space(alg, gam, "plus")
                   for yw in basis_of_weight_space(alg, dl, "minus")
                   if not pair_words(alg, xw, yw).is_zero()]
            report.add("orthogonal", "<U+_gamma, U-_-delta> = 0",
                       f"gamma={fmt_w(gam)} delta={fmt_w(dl)}", not bad, bad)
    xs = [U.letter("e", i) for i in range(n)] + [U.letter("w", i) for i in range(n)]
    xs += [U.letter("e", i) * U.letter("e", j) for i in range(n) for j in range(n)]
    ys = [U.letter("f", i) for i in range(n)] + [U.letter("v", i) for i in range(n)]
    ys += [U.letter("f", i) * U.letter("f", j) for i in range(n) for j in range(n)]
    for x in xs:
        for y in ys:
            yx, xy = _exchange_sides(x, y)
            inst = f"x={x} y={y}"
            report.check_zero("exchange-yx", "y x via Sweedler pieces", inst, yx - y * x)
            report.check_zero("exchange-xy", "x y via Sweedler pieces", inst, xy - x * y)
    return report


def verify_split_orders(alg, pairs):
    """Evaluate each (x-word, y-word) pair with every split strategy; returns
    the list of pairs whose values disagree (empty when consistent)."""
    strategies = [get_pairing(alg, False, s) for s in ("longer", "x_first", "y_first")]
    bad = []
    for xw, yw in pairs:
        x = tuple(Letter("e", i) for i in xw)
        y = tuple(Letter("f", i) for i in yw)
        vals = {p.words(x, y) for p in strategies}
        vals.add(pair_oracle(alg, xw, yw))
        if len(vals) != 1:
            bad.append((xw, yw))
    return bad
