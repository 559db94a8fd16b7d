"""Generators, relations and triangular normal forms for U, B and B-bar.

Every element is stored as a combination of normal monomials
``(left_word, toral, right_word)`` where

* ``left_word`` / ``right_word`` are tuples of 0-based simple-root indices.
  Their letter kind is fixed by the parent algebra: ``f``/``e`` in U,
  ``f``/``e''`` in B and ``e``/``f'`` in B-bar.
* ``toral`` is a tuple of length 2n: exponents of omega_1..omega_n followed by
  exponents of omega'_1..omega'_n.

Products are normalized in two phases.  The right word of the left factor is
pushed through the left word of the right factor with the cross relation of the
parent (``e f``, ``e'' f`` or ``f' e``), toral letters are collected in the
middle with their conjugation characters, and the two resulting pure words are
reduced modulo the quantum Serre relations, weight space by weight space, to a
fixed basis of words.
"""

from __future__ import annotations

from collections import namedtuple
from functools import lru_cache

from .errors import BadIndex, HeightExceeded, IllegalLetter, IncompatibleParents
from .linalg import rref
from .rootdata import euler_form, is_nonneg, q_binomial, q_factorial, serre_coefficient
from .scalars import ONE, ZERO, Scalar

Letter = namedtuple("Letter", "kind index exp", defaults=(1,))
Letter.__doc__ = "A generator: kind in e, E (e''), f, P (f'), w (omega), v (omega')."

WEIGHT_SIGN = {"e": 1, "E": 1, "f": -1, "P": -1}
# Serre relations of shape X_i^k X_j X_i^(n-k) govern e'' and f; the reversed
# shape Y_i^(n-k) Y_j Y_i^k governs e and f'.
FAMILY = {"E": "X", "f": "X", "e": "Y", "P": "Y"}
LAYOUT = {"U": ("f", "e"), "B": ("f", "E"), "Bbar": ("e", "P")}


def words_of_weight(weight):
    """All words with the given letter multiplicities, in lexicographic order."""
    counts = list(weight)
    total = sum(counts)
    out = []

    def rec(prefix):
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                prefix.append(i)
                rec(prefix)
                prefix.pop()
                counts[i] += 1

    rec([])
    return out


def word_weight(word, n):
    w = [0] * n
    for i in word:
        w[i] += 1
    return tuple(w)


def _signed(word, sign, n):
    w = [0] * n
    for i in word:
        w[i] += sign
    return tuple(w)


class SerreTable:
    """Reduction data for one weight space of a free algebra on n letters."""

    __slots__ = ("basis", "reductions")

    def __init__(self, basis, reductions):
        self.basis = basis
        self.reductions = reductions


class Algebras:
    """The algebras U, B and B-bar attached to one Cartan type.

    ``max_height`` bounds the weight spaces that public basis queries accept.
    ``delta_sign`` multiplies the constant term of the ``e'' f`` relation; it
    exists only for mutation testing and is 1 in every honest computation.
    """

    def __init__(self, ct, max_height=6, delta_sign=1):
        self.ct = ct
        self.n = ct.rank
        self.max_height = max_height
        self.delta_sign = delta_sign
        self._serre = {}
        self._chi = {}
        # shortest Serre relation; shorter words are always basis words
        self.min_serre_length = min(
            (2 - ct.cartan_matrix[i][j] for i in range(self.n) for j in range(self.n) if i != j),
            default=None)
        # images of monomials under letter maps (coproducts, S, phi, Psi)
        self.map_cache = {}
        self.zero_torus = (0,) * (2 * self.n)
        self.U = Algebra(self, "U")
        self.B = Algebra(self, "B")
        self.Bbar = Algebra(self, "Bbar")

    def __repr__(self):
        return f"Algebras({self.ct.name}, max_height={self.max_height})"

    def algebra(self, name):
        try:
            return {"U": self.U, "B": self.B, "Bbar": self.Bbar}[name]
        except KeyError:
            raise IncompatibleParents(f"unknown algebra {name!r}") from None

    # -- characters -------------------------------------------------------

    def chi(self, torus, beta):
        """Scalar c with ``T X = c X T`` for X of (signed) weight beta."""
        key = (torus, beta)
        val = self._chi.get(key)
        if val is None:
            n = self.n
            a, b = torus[:n], torus[n:]
            ct = self.ct
            val = Scalar.monomial(
                euler_form(ct, beta, a) - euler_form(ct, b, beta),
                euler_form(ct, beta, b) - euler_form(ct, a, beta),
            )
            self._chi[key] = val
        return val

    def omega(self, mu):
        return tuple(mu) + (0,) * self.n

    def omega_prime(self, mu):
        return (0,) * self.n + tuple(mu)

    # -- Serre reduction --------------------------------------------------

    def serre_words(self, family, i, j):
        """The Serre element for (i, j) as {word: coefficient}."""
        ct = self.ct
        if i == j or not (0 <= i < self.n and 0 <= j < self.n):
            raise BadIndex(f"Serre relation needs distinct indices, got {i}, {j}")
        top = 1 - ct.cartan_matrix[i][j]
        qi = ct.q(i)
        out = {}
        for k in range(top + 1):
            c = q_binomial(top, k, qi) * serre_coefficient(ct, i, j, k)
            if k % 2:
                c = -c
            if family == "X":
                word = (i,) * k + (j,) + (i,) * (top - k)
            else:
                word = (i,) * (top - k) + (j,) + (i,) * k
            out[word] = out.get(word, ZERO) + c
        return out

    def serre_table(self, family, weight):
        key = (family, weight)
        table = self._serre.get(key)
        if table is None:
            table = self._build_table(family, weight)
            self._serre[key] = table
        return table

    def _build_table(self, family, weight):
        n = self.n
        words = words_of_weight(weight)
        index = {w: k for k, w in enumerate(words)}
        rows = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                top = 1 - self.ct.cartan_matrix[i][j]
                sw = [0] * n
                sw[i] += top
                sw[j] += 1
                rest = tuple(w - s for w, s in zip(weight, sw))
                if not is_nonneg(rest):
                    continue
                rel = self.serre_words(family, i, j)
                for g1 in _sub_weights(rest):
                    g2 = tuple(a - b for a, b in zip(rest, g1))
                    for u in words_of_weight(g1):
                        for v in words_of_weight(g2):
                            row = [ZERO] * len(words)
                            for w, c in rel.items():
                                row[index[u + w + v]] = row[index[u + w + v]] + c
                            rows.append(row)
        if not rows:
            return SerreTable(tuple(words), {})
        # Pivots on the lexicographically largest words, so the surviving basis
        # is chosen greedily from the left.
        red, pivots = rref(rows, len(words), column_order=range(len(words) - 1, -1, -1))
        pivot_set = set(pivots)
        basis = tuple(w for k, w in enumerate(words) if k not in pivot_set)
        reductions = {}
        for row, p in zip(red, pivots):
            reductions[words[p]] = {
                words[c]: -row[c] for c in range(len(words))
                if c not in pivot_set and not row[c].is_zero()
            }
        return SerreTable(basis, reductions)

    def reduce_word(self, family, word):
        """Express a word in the selected basis of its weight space."""
        if self.min_serre_length is None or len(word) < self.min_serre_length:
            return {word: ONE}
        table = self.serre_table(family, word_weight(word, self.n))
        red = table.reductions.get(word)
        if red is None:
            return {word: ONE}
        return red

    def check_height(self, beta):
        if not is_nonneg(beta):
            raise ValueError(f"{beta} is not in Q+")
        if sum(beta) > self.max_height:
            raise HeightExceeded(f"height {sum(beta)} exceeds configured L={self.max_height}")

    def check_cutoff(self, L):
        if L > self.max_height:
            raise HeightExceeded(f"cutoff {L} exceeds configured L={self.max_height}")


def _sub_weights(w):
    if not w:
        yield ()
        return
    for head in range(w[0] + 1):
        for tail in _sub_weights(w[1:]):
            yield (head,) + tail


@lru_cache(maxsize=None)
def get_algebras(ct, max_height=6, delta_sign=1):
    """Shared :class:`Algebras` instance (and its caches) per configuration."""
    return Algebras(ct, max_height, delta_sign)


class Algebra:
    """One of U, B, B-bar; knows its letters and how to multiply monomials."""

    def __init__(self, alg, name):
        self.alg = alg
        self.ct = alg.ct
        self.name = name
        self.left_kind, self.right_kind = LAYOUT[name]
        self.left_family = FAMILY[self.left_kind]
        self.right_family = FAMILY[self.right_kind]
        self.left_sign = WEIGHT_SIGN[self.left_kind]
        self.right_sign = WEIGHT_SIGN[self.right_kind]
        self.kinds = {self.left_kind, self.right_kind, "w", "v"}
        self._straight = {}
        self._products = {}
        self._rules = {}

    def __repr__(self):
        return f"<{self.name} of {self.ct.name}>"

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.name == other.name and self.alg is other.alg

    def __hash__(self):
        return hash((self.name, id(self.alg)))

    # -- constructors -----------------------------------------------------

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {((), self.alg.zero_torus, ()): ONE})

    def scalar(self, c):
        c = Scalar(c)
        return AlgebraElement(self, {((), self.alg.zero_torus, ()): c} if c else {})

    def monomial(self, left=(), torus=None, right=(), coeff=ONE):
        torus = self.alg.zero_torus if torus is None else tuple(torus)
        coeff = Scalar(coeff)
        return AlgebraElement(self, {(tuple(left), torus, tuple(right)): coeff} if coeff else {})

    def toral(self, omega=None, omega_prime=None):
        n = self.alg.n
        a = tuple(omega) if omega is not None else (0,) * n
        b = tuple(omega_prime) if omega_prime is not None else (0,) * n
        return self.monomial(torus=a + b)

    def letter(self, kind, index, exp=1):
        if not 0 <= index < self.alg.n:
            raise BadIndex(f"index {index + 1} out of range for {self.ct.name}")
        if kind not in self.kinds:
            raise IllegalLetter(f"letter {kind} is not a generator of {self.name}")
        if kind in ("w", "v"):
            t = [0] * (2 * self.alg.n)
            t[index + (self.alg.n if kind == "v" else 0)] = exp
            return self.monomial(torus=t)
        if exp < 0:
            raise IllegalLetter(f"negative power of {kind}")
        word = (index,) * exp
        if kind == self.left_kind:
            return self.monomial(left=word)
        return self.monomial(right=word)

    def word_element(self, word, side):
        """The pure left (side='left') or right word as an element."""
        if side == "left":
            return self.monomial(left=word)
        return self.monomial(right=word)

    def plus_kind(self):
        return self.right_kind if self.right_sign > 0 else self.left_kind

    def minus_kind(self):
        return self.left_kind if self.left_sign < 0 else self.right_kind

    # -- rewriting ----------------------------------------------------------

    def _rule(self, x, y):
        """Cross relation: right letter x times left letter y.

        Returns (c, deltas) with ``x y = c y x + sum(d * T for T, d in deltas)``.
        """
        key = (x, y)
        rule = self._rules.get(key)
        if rule is not None:
            return rule
        ct, alg = self.ct, self.alg
        deltas = []
        if self.name == "U":
            c = ONE
            if x == y:
                inv = ct.r_minus_s(x).inverse()
                deltas = [(alg.omega(ct.simple_roots[x]), inv),
                          (alg.omega_prime(ct.simple_roots[x]), -inv)]
        elif self.name == "B":
            c = Scalar.monomial(ct.euler(y, x), -ct.euler(x, y))
            if x == y:
                deltas = [(alg.zero_torus, Scalar(alg.delta_sign))]
        else:
            c = Scalar.monomial(ct.euler(x, y), -ct.euler(y, x))
            if x == y:
                deltas = [(alg.zero_torus, ONE)]
        rule = (c, deltas)
        self._rules[key] = rule
        return rule

    def _move_right(self, x, left):
        alg = self.alg
        out = {}
        pref = ONE
        for p, y in enumerate(left):
            c, deltas = self._rule(x, y)
            if deltas:
                rest = left[p + 1:]
                wrest = _signed(rest, self.left_sign, alg.n)
                key_word = left[:p] + rest
                for torus, d in deltas:
                    key = (key_word, torus, ())
                    out[key] = out.get(key, ZERO) + pref * d * alg.chi(torus, wrest)
            pref = pref * c
        key = (left, alg.zero_torus, (x,))
        out[key] = out.get(key, ZERO) + pref
        return out

    def straighten(self, right, left):
        """right_word * left_word as {(left', torus, right'): coeff}, unreduced."""
        key = (right, left)
        res = self._straight.get(key)
        if res is not None:
            return res
        alg = self.alg
        if not right or not left:
            res = {(left, alg.zero_torus, right): ONE}
        else:
            res = {}
            head = right[:-1]
            for (l1, t1, r1), c1 in self._move_right(right[-1], left).items():
                if c1.is_zero():
                    continue
                for (l2, t2, r2), c2 in self.straighten(head, l1).items():
                    w2 = _signed(r2, self.right_sign, alg.n)
                    coef = c1 * c2 * alg.chi(t1, tuple(-c for c in w2))
                    k = (l2, tuple(a + b for a, b in zip(t2, t1)), r2 + r1)
                    res[k] = res.get(k, ZERO) + coef
            res = {k: v for k, v in res.items() if not v.is_zero()}
        self._straight[key] = res
        return res

    def mul_mono(self, m1, m2):
        key = (m1, m2)
        res = self._products.get(key)
        if res is not None:
            return res
        alg = self.alg
        n = alg.n
        l1, t1, r1 = m1
        l2, t2, r2 = m2
        res = {}
        for (lp, tp, rp), c in self.straighten(r1, l2).items():
            coef = c
            if lp:
                coef = coef * alg.chi(t1, _signed(lp, self.left_sign, n))
            if rp:
                coef = coef * alg.chi(t2, _signed(rp, -self.right_sign, n))
            torus = tuple(a + b + d for a, b, d in zip(t1, tp, t2))
            lefts = alg.reduce_word(self.left_family, l1 + lp)
            rights = alg.reduce_word(self.right_family, rp + r2)
            for lw, lc in lefts.items():
                for rw, rc in rights.items():
                    k = (lw, torus, rw)
                    res[k] = res.get(k, ZERO) + coef * lc * rc
        res = {k: v for k, v in res.items() if not v.is_zero()}
        self._products[key] = res
        return res

    def monomial_letters(self, mono):
        left, torus, right = mono
        n = self.alg.n
        out = [Letter(self.left_kind, i) for i in left]
        out += [Letter("w", i, torus[i]) for i in range(n) if torus[i]]
        out += [Letter("v", i, torus[n + i]) for i in range(n) if torus[n + i]]
        out += [Letter(self.right_kind, i) for i in right]
        return out

    def normal_form(self, x):
        return normal_form(x, self)


class AlgebraElement:
    """Finite Scalar-combination of normal monomials of one parent algebra."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms):
        self.parent = parent
        self.terms = terms

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other):
        if other.parent is self.parent:
            return self, other
        if other.parent.alg is self.parent.alg:
            U = self.parent.alg.U
            try:
                return self.to(U), other.to(U)
            except IllegalLetter:
                pass
        raise IncompatibleParents(f"cannot combine {self.parent.name} and {other.parent.name}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.parent.scalar(other)
        a, b = self._same(other)
        out = dict(a.terms)
        for m, c in b.terms.items():
            v = out.get(m, ZERO) + c
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return AlgebraElement(a.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.parent, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Scalar(c)
        if c.is_zero():
            return self.parent.zero()
        return AlgebraElement(self.parent, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        a, b = self._same(other)
        parent = a.parent
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                c12 = c1 * c2
                for m, c in parent.mul_mono(m1, m2).items():
                    out[m] = out.get(m, ZERO) + c12 * c
        return AlgebraElement(parent, {m: c for m, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(Scalar(other).inverse())

    def __pow__(self, k):
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            if other.parent is not self.parent:
                try:
                    a, b = self._same(other)
                except IncompatibleParents:
                    return False
                return a.terms == b.terms
            return self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self.parent.scalar(other)
        return NotImplemented

    __hash__ = None

    def coefficient(self, left=(), torus=None, right=()):
        torus = self.parent.alg.zero_torus if torus is None else tuple(torus)
        return self.terms.get((tuple(left), torus, tuple(right)), ZERO)

    def weight(self):
        return weight_of(self)

    def to(self, parent):
        """Re-express in another algebra that contains all letters used."""
        if parent is self.parent:
            return self
        out = parent.zero()
        for m, c in self.terms.items():
            out = out + normal_form(self.parent.monomial_letters(m), parent).scale(c)
        return out

    def letters(self):
        return {l.kind for m in self.terms for l in self.parent.monomial_letters(m)}

    def __str__(self):
        from .dsl import format_element

        return format_element(self)

    def __repr__(self):
        return f"<{self.parent.name}: {self}>"


class FreeElement:
    """Noncommutative polynomial in letters; nothing is rewritten."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else terms

    @classmethod
    def word(cls, *letters, coeff=ONE):
        return cls({tuple(letters): Scalar(coeff)})

    @classmethod
    def scalar(cls, c):
        c = Scalar(c)
        return cls({(): c} if c else {})

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
        return FreeElement(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            c = Scalar(other)
            return FreeElement({w: v * c for w, v in self.terms.items() if not (v * c).is_zero()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return FreeElement({w: c for w, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self * other

    def is_scalar(self):
        return all(len(w) == 0 for w in self.terms)

    def scalar_value(self):
        return self.terms.get((), ZERO)

    def kinds(self):
        return {l.kind for w in self.terms for l in w}

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        from .dsl import format_free

        return f"FreeElement({format_free(self)})"


def normal_form(x, parent):
    """Canonical representative in ``parent`` of a word, FreeElement or element."""
    if isinstance(x, AlgebraElement):
        return x.to(parent)
    if isinstance(x, FreeElement):
        out = parent.zero()
        for word, c in x.terms.items():
            out = out + normal_form(word, parent).scale(c)
        return out
    out = parent.one()
    for letter in x:
        if not isinstance(letter, Letter):
            letter = Letter(*letter)
        out = out * parent.letter(letter.kind, letter.index, letter.exp)
    return out


def weight_of(x):
    """Common weight of all monomials, or None when x is not homogeneous."""
    parent = x.parent
    n = parent.alg.n
    weights = set()
    for left, _, right in x.terms:
        wl = _signed(left, parent.left_sign, n)
        wr = _signed(right, parent.right_sign, n)
        weights.add(tuple(a + b for a, b in zip(wl, wr)))
        if len(weights) > 1:
            return None
    if not weights:
        return (0,) * n
    return weights.pop()


def serre_relation(alg, i, j, family="EPP_F_side", letter=None):
    """The Serre element for (i, j) as an unreduced :class:`FreeElement`.

    ``EPP_F_side`` is the X_i^k X_j X_i^(n-k) shape (letters e'' or f);
    ``E_FP_side`` the reversed shape (letters e or f').
    """
    fam = {"EPP_F_side": "X", "E_FP_side": "Y", "X": "X", "Y": "Y"}[family]
    if letter is None:
        letter = "f" if fam == "X" else "e"
    if FAMILY[letter] != fam:
        raise IllegalLetter(f"letter {letter} does not satisfy the {family} relations")
    return FreeElement({tuple(Letter(letter, k) for k in w): c
                        for w, c in alg.serre_words(fam, i, j).items()})


def serre_relations(alg, family="EPP_F_side", letter=None):
    n = alg.n
    return [((i, j), serre_relation(alg, i, j, family, letter))
            for i in range(n) for j in range(n) if i != j]


def basis_of_weight_space(alg, beta, side="plus", parent="U"):
    """Ordered reduced words spanning the weight-beta (plus) or -beta (minus) space."""
    beta = tuple(beta)
    alg.check_height(beta)
    par = alg.algebra(parent) if isinstance(parent, str) else parent
    kind = par.plus_kind() if side == "plus" else par.minus_kind()
    return list(alg.serre_table(FAMILY[kind], beta).basis)


def commutation_lemma(alg, n, m, i, j):
    """Closed form of ``e''_i^n f_j^m`` in B (divided powers cleared)."""
    if n < 0 or m < 0:
        raise BadIndex("commutation_lemma needs n, m >= 0")
    ct = alg.ct
    B = alg.B
    if i != j:
        c = Scalar.monomial(n * m * ct.euler(j, i), -n * m * ct.euler(i, j))
        return B.monomial(left=(j,) * m, right=(i,) * n, coeff=c)
    q = ct.q(i)
    out = B.zero()
    for nu in range(min(n, m) + 1):
        c = (q ** ((n - nu) * (m - nu)) * q_binomial(n, nu, q)
             * q_factorial(m, q) / q_factorial(m - nu, q))
        out = out + B.monomial(left=(j,) * (m - nu), right=(i,) * (n - nu), coeff=c)
    return out


def relation_instances(alg, parent):
    """Every defining relation of ``parent`` as (label, FreeElement) pairs."""
    ct = alg.ct
    n = alg.n
    par = alg.algebra(parent) if isinstance(parent, str) else parent
    name = par.name
    W = lambda *ls: FreeElement.word(*ls)  # noqa: E731
    out = []
    for i in range(n):
        for t in ("w", "v"):
            out.append((f"toral-inverse {t}{i + 1}*{t}{i + 1}^-1",
                        W(Letter(t, i), Letter(t, i, -1)) - 1))
            out.append((f"toral-inverse {t}{i + 1}^-1*{t}{i + 1}",
                        W(Letter(t, i, -1), Letter(t, i)) - 1))
        for j in range(n):
            for t1, t2 in (("w", "w"), ("v", "v"), ("w", "v")):
                if t1 == t2 and i >= j:
                    continue
                out.append((f"toral-commute [{t1}{i + 1},{t2}{j + 1}]",
                            W(Letter(t1, i), Letter(t2, j)) - W(Letter(t2, j), Letter(t1, i))))
    for kind in LAYOUT[name]:
        tag = f"conj-{kind}"
        sign = WEIGHT_SIGN[kind]
        for i in range(n):
            for j in range(n):
                if sign > 0:
                    cw = Scalar.monomial(ct.euler(j, i), -ct.euler(i, j))
                    cv = Scalar.monomial(-ct.euler(i, j), ct.euler(j, i))
                else:
                    cw = Scalar.monomial(-ct.euler(j, i), ct.euler(i, j))
                    cv = Scalar.monomial(ct.euler(i, j), -ct.euler(j, i))
                x = Letter(kind, j)
                out.append((f"{tag} w{i + 1} {kind}{j + 1}",
                            W(Letter("w", i), x, Letter("w", i, -1)) - W(x) * cw))
                out.append((f"{tag} v{i + 1} {kind}{j + 1}",
                            W(Letter("v", i), x, Letter("v", i, -1)) - W(x) * cv))
    for i in range(n):
        for j in range(n):
            d = ONE if i == j else ZERO
            if name == "U":
                rel = W(Letter("e", i), Letter("f", j)) - W(Letter("f", j), Letter("e", i))
                if i == j:
                    rel = rel - (W(Letter("w", i)) - W(Letter("v", i))) * ct.r_minus_s(i).inverse()
                out.append((f"cross-ef e{i + 1} f{j + 1}", rel))
            elif name == "B":
                c = Scalar.monomial(ct.euler(j, i), -ct.euler(i, j))
                rel = (W(Letter("E", i), Letter("f", j)) - W(Letter("f", j), Letter("E", i)) * c
                       - FreeElement.scalar(d))
                out.append((f"cross-Ef E{i + 1} f{j + 1}", rel))
            else:
                c = Scalar.monomial(ct.euler(i, j), -ct.euler(j, i))
                rel = (W(Letter("P", i), Letter("e", j)) - W(Letter("e", j), Letter("P", i)) * c
                       - FreeElement.scalar(d))
                out.append((f"cross-Pe P{i + 1} e{j + 1}", rel))
    for kind in LAYOUT[name]:
        tag = f"serre-{kind}"
        fam = "EPP_F_side" if FAMILY[kind] == "X" else "E_FP_side"
        for (i, j), rel in serre_relations(alg, fam, kind):
            out.append((f"{tag} ({i + 1},{j + 1})", rel))
    return out


def brute_force_commutation(alg, n, m, i, j):
    """``e''_i^n f_j^m`` in B by rewriting adjacent ``e'' f`` pairs one at a time.

    Works on plain letter strings and never calls the normal-form machinery, so
    it is an independent route to :func:`commutation_lemma`.
    """
    ct = alg.ct
    c = Scalar.monomial(ct.euler(j, i), -ct.euler(i, j))
    d = Scalar(alg.delta_sign) if i == j else ZERO
    todo = {("E",) * n + ("f",) * m: ONE}
    done = {}
    while todo:
        word, coef = todo.popitem()
        p = next((k for k in range(len(word) - 1) if word[k:k + 2] == ("E", "f")), None)
        if p is None:
            done[word] = done.get(word, ZERO) + coef
            continue
        for new, k in ((word[:p] + ("f", "E") + word[p + 2:], c),
                       (word[:p] + word[p + 2:], d)):
            if not k.is_zero():
                todo[new] = todo.get(new, ZERO) + coef * k
    out = alg.B.zero()
    for word, coef in done.items():
        nf = word.count("f")
        out = out + alg.B.monomial(left=(j,) * nf, right=(i,) * (len(word) - nf), coeff=coef)
    return out


def verify_commutation_lemma(alg, max_power=3, report=None):
    from .report import Report

    report = report or Report("commutation", {"type": alg.ct.name})
    for i in range(alg.n):
        for j in range(alg.n):
            for n in range(max_power + 1):
                for m in range(max_power + 1):
                    diff = commutation_lemma(alg, n, m, i, j) - brute_force_commutation(alg, n, m, i, j)
                    report.check_zero("commutation", "e''^n f^m closed form",
                                      f"n={n} m={m} i={i + 1} j={j + 1}", diff)
    return report


def verify_relations(alg, report=None):
    """Every defining relation of U, B and B-bar normalizes to zero."""
    from .report import Report

    report = report or Report("relations", {"type": alg.ct.name})
    for parent in (alg.U, alg.B, alg.Bbar):
        for label, rel in relation_instances(alg, parent):
            report.check_zero(label.split()[0], "defining relation", f"{parent.name}: {label}",
                              normal_form(rel, parent))
    return report


def random_element(par, rng, max_letters=3, terms=3, torus_range=1):
    """A random element of ``par`` with at most ``max_letters`` non-toral letters
    per monomial and small integer coefficients."""
    alg = par.alg
    n = alg.n
    out = par.zero()
    for _ in range(terms):
        k = rng.randint(0, max_letters)
        word = par.one()
        for _ in range(k):
            word = word * par.letter(rng.choice((par.left_kind, par.right_kind)), rng.randrange(n))
        torus = tuple(rng.randint(-torus_range, torus_range) for _ in range(2 * n))
        mono = par.monomial(torus=torus)
        if rng.random() < 0.5:
            word = mono * word
        else:
            word = word * mono
        out = out + word.scale(rng.randint(1, 3) * rng.choice((1, -1)))
    return out
