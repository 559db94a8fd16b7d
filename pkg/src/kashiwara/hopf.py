"""Tensors, the four coproducts, counit, antipode, phi and Psi.

All maps are defined on generators and extended (anti-)multiplicatively over
the letters of each normal monomial; the result is renormalized in the target.
"""

from __future__ import annotations

from .algebra import AlgebraElement
from .errors import IllegalLetter, IncompatibleParents
from .report import Report
from .scalars import ONE, ZERO, Scalar


class TensorElement:
    """Finite sum of Scalar multiples of tensor monomials over fixed parents."""

    __slots__ = ("parents", "terms")

    def __init__(self, parents, terms):
        self.parents = tuple(parents)
        self.terms = terms

    @property
    def arity(self):
        return len(self.parents)

    @classmethod
    def zero(cls, parents):
        return cls(parents, {})

    @classmethod
    def one(cls, parents):
        key = tuple(((), p.alg.zero_torus, ()) for p in parents)
        return cls(parents, {key: ONE})

    def _align(self, other):
        if other.parents == self.parents:
            return self, other
        if len(other.parents) != len(self.parents):
            raise IncompatibleParents("tensor arities differ")
        try:
            U = self.parents[0].alg.U
            target = tuple(U for _ in self.parents)
            return self.to(target), other.to(target)
        except IllegalLetter:
            raise IncompatibleParents(
                f"cannot combine {[p.name for p in self.parents]} and "
                f"{[p.name for p in other.parents]}") from None

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            if other == 0:
                return self
            return NotImplemented
        a, b = self._align(other)
        out = dict(a.terms)
        for k, c in b.terms.items():
            v = out.get(k, ZERO) + c
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
        return TensorElement(a.parents, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.parents, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar(c)
        if c.is_zero():
            return TensorElement(self.parents, {})
        return TensorElement(self.parents, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        a, b = self._align(other)
        out = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                partial = {(): c1 * c2}
                for par, m1, m2 in zip(a.parents, k1, k2):
                    prod = par.mul_mono(m1, m2)
                    nxt = {}
                    for key, c in partial.items():
                        for m, cm in prod.items():
                            nk = key + (m,)
                            nxt[nk] = nxt.get(nk, ZERO) + c * cm
                    partial = nxt
                for key, c in partial.items():
                    out[key] = out.get(key, ZERO) + c
        return TensorElement(a.parents, {k: c for k, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            try:
                a, b = self._align(other)
            except IncompatibleParents:
                return False
            return a.terms == b.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def map_legs(self, fns, parents=None):
        """Apply a linear map per leg; ``fns[k]`` sends an element to an element."""
        out = None
        for key, c in self.terms.items():
            legs = [fn(par.monomial(*m)) if fn else par.monomial(*m)
                    for fn, par, m in zip(fns, self.parents, key)]
            t = tensor(*legs).scale(c)
            out = t if out is None else out + t
        if out is None:
            target = parents or tuple(self.parents)
            return TensorElement(target, {})
        if parents is not None:
            out = out.to(parents)
        return out

    def to(self, parents):
        parents = tuple(parents)
        if parents == self.parents:
            return self
        return self.map_legs([lambda x, p=p: x.to(p) for p in parents], None) \
            if self.terms else TensorElement(parents, {})

    def legs(self):
        """Iterate (coefficient, [AlgebraElement per leg])."""
        for key, c in self.terms.items():
            yield c, [par.monomial(*m) for par, m in zip(self.parents, key)]

    def swap(self):
        if self.arity != 2:
            raise IncompatibleParents("swap needs a 2-tensor")
        return TensorElement(self.parents[::-1], {k[::-1]: c for k, c in self.terms.items()})

    def multiply(self, parent=None):
        """m: a (x) b (x) ... -> a b ... in ``parent`` (default: first leg's)."""
        parent = parent or self.parents[0]
        out = parent.zero()
        for c, legs in self.legs():
            prod = parent.one()
            for leg in legs:
                prod = prod * leg.to(parent)
            out = out + prod.scale(c)
        return out

    def __str__(self):
        from .dsl import format_tensor

        return format_tensor(self)

    def __repr__(self):
        return f"<{'(x)'.join(p.name for p in self.parents)}: {self}>"


def tensor(*elements):
    """Tensor product of AlgebraElements (or of TensorElements, flattened)."""
    parents = []
    terms = {(): ONE}
    for x in elements:
        if isinstance(x, TensorElement):
            parents.extend(x.parents)
            items = x.terms.items()
        else:
            parents.append(x.parent)
            items = (((m,), c) for m, c in x.terms.items())
        items = list(items)
        nxt = {}
        for k1, c1 in terms.items():
            for k2, c2 in items:
                nxt[k1 + k2] = c1 * c2
        terms = nxt
    return TensorElement(parents, {k: c for k, c in terms.items() if not c.is_zero()})


# -- generic letter maps ------------------------------------------------------


def map_letters(x, image, target, anti=False, cache=None):
    """Extend ``image(letter) -> element of target`` (anti-)multiplicatively."""
    out = target.zero()
    for mono, c in x.terms.items():
        val = None if cache is None else cache.get(mono)
        if val is None:
            letters = x.parent.monomial_letters(mono)
            if anti:
                letters = letters[::-1]
            val = target.one()
            for letter in letters:
                val = val * image(letter)
            if cache is not None:
                cache[mono] = val
        out = out + val.scale(c)
    return out


def map_letters_tensor(x, image, parents, cache=None):
    out = TensorElement(parents, {})
    for mono, c in x.terms.items():
        val = None if cache is None else cache.get(mono)
        if val is None:
            val = TensorElement.one(parents)
            for letter in x.parent.monomial_letters(mono):
                val = val * image(letter)
            if cache is not None:
                cache[mono] = val
        out = out + val.scale(c)
    return out


# -- coproducts -------------------------------------------------------------

COPRODUCT_SHAPES = {
    "std": ("U", ("U", "U")),
    "right": ("B", ("B", "U")),
    "left": ("Bbar", ("U", "Bbar")),
    "bottom": ("U", ("Bbar", "B")),
}


def _coproduct_letter(alg, variant, letter):
    src, (p1, p2) = COPRODUCT_SHAPES[variant]
    L1, L2 = alg.algebra(p1), alg.algebra(p2)
    ct = alg.ct
    i, k = letter.index, letter.exp
    if letter.kind in ("w", "v"):
        return tensor(L1.letter(letter.kind, i, k), L2.letter(letter.kind, i, k))
    rs = ct.r_minus_s(i)
    w = lambda par, e=1: par.letter("w", i, e)  # noqa: E731
    v = lambda par, e=1: par.letter("v", i, e)  # noqa: E731
    kind = letter.kind
    if variant in ("std", "left") and kind == "e":
        return tensor(L1.letter("e", i), L2.one()) + tensor(w(L1), L2.letter("e", i))
    if variant in ("std", "right") and kind == "f":
        return tensor(L1.letter("f", i), v(L2)) + tensor(L1.one(), L2.letter("f", i))
    if variant == "right" and kind == "E":
        return (tensor(L1.one(), w(L2, -1) * L2.letter("e", i)).scale(rs)
                + tensor(L1.letter("E", i), w(L2, -1)))
    if variant == "left" and kind == "P":
        return (tensor(v(L1, -1) * L1.letter("f", i), L2.one()).scale(rs)
                + tensor(v(L1, -1), L2.letter("P", i)))
    if variant == "bottom" and kind == "e":
        return (tensor(w(L1), w(L2) * L2.letter("E", i)).scale(rs.inverse())
                + tensor(L1.letter("e", i), L2.one()))
    if variant == "bottom" and kind == "f":
        return (tensor(L1.one(), L2.letter("f", i))
                + tensor(v(L1) * L1.letter("P", i), v(L2)).scale(rs.inverse()))
    raise IllegalLetter(f"coproduct {variant!r} is not defined on {kind}[{i + 1}]")


def coproduct(x, variant="std"):
    """Delta (std), Delta^(r) (right), Delta^(l) (left) or Delta^(b) (bottom)."""
    if variant not in COPRODUCT_SHAPES:
        raise ValueError(f"unknown coproduct variant {variant!r}")
    alg = x.parent.alg
    src, legs = COPRODUCT_SHAPES[variant]
    source = alg.algebra(src)
    if x.parent is not source:
        bad = x.letters() - source.kinds
        if bad:
            raise IllegalLetter(f"coproduct {variant!r} is not defined on {sorted(bad)}")
        x = x.to(source)
    parents = tuple(alg.algebra(p) for p in legs)
    cache = alg.map_cache.setdefault(("coproduct", variant), {})
    return map_letters_tensor(x, lambda l: _coproduct_letter(alg, variant, l), parents, cache)


def coproduct_leg(t, leg, variant="std"):
    """Apply a coproduct to one leg of a tensor (e.g. (Delta (x) 1) Delta)."""
    out = None
    for c, legs in t.legs():
        parts = legs[:leg] + [coproduct(legs[leg], variant)] + legs[leg + 1:]
        term = tensor(*parts).scale(c)
        out = term if out is None else out + term
    if out is None:
        return TensorElement.zero(t.parents[:leg] + (t.parents[leg],) * 2 + t.parents[leg + 1:])
    return out


def iterated_coproduct(x):
    """(Delta (x) 1) Delta(x)."""
    return coproduct_leg(coproduct(x), 0)


def counit(x):
    """epsilon: kills every e/f-type letter, sends toral monomials to 1."""
    out = ZERO
    for (left, _, right), c in x.terms.items():
        if not left and not right:
            out = out + c
    return out


# -- anti-automorphisms -------------------------------------------------------


def _antipode_letter(U, letter, inverse):
    i, k = letter.index, letter.exp
    if letter.kind in ("w", "v"):
        return U.letter(letter.kind, i, -k)
    if letter.kind == "e":
        w = U.letter("w", i, -1)
        e = U.letter("e", i)
        return -(e * w if inverse else w * e)
    if letter.kind == "f":
        v = U.letter("v", i, -1)
        f = U.letter("f", i)
        return -(v * f if inverse else f * v)
    raise IllegalLetter(f"antipode is not defined on {letter.kind}[{i + 1}]")


def antipode(x, direction="S"):
    """S or S^-1 on U (anti-homomorphisms)."""
    if direction not in ("S", "S_inverse"):
        raise ValueError(f"unknown antipode direction {direction!r}")
    U = x.parent.alg.U
    if x.parent is not U:
        x = x.to(U)
    inverse = direction == "S_inverse"
    cache = U.alg.map_cache.setdefault(("antipode", inverse), {})
    return map_letters(x, lambda l: _antipode_letter(U, l, inverse), U, anti=True, cache=cache)


def antipode_inverse(x):
    return antipode(x, "S_inverse")


def _phi_letter(B, letter):
    i, k = letter.index, letter.exp
    ct = B.ct
    if letter.kind in ("w", "v"):
        return B.letter(letter.kind, i, -k)
    if letter.kind == "e":
        return B.letter("E", i).scale(-ct.r_minus_s(i).inverse())
    if letter.kind == "P":
        return B.letter("f", i).scale(-ct.r_minus_s(i))
    raise IllegalLetter(f"phi is not defined on {letter.kind}[{i + 1}]")


def phi(x):
    """The anti-isomorphism B-bar -> B (also accepts U-elements in e and omega)."""
    alg = x.parent.alg
    Bbar = alg.Bbar
    if x.parent is not Bbar:
        bad = x.letters() - Bbar.kinds
        if bad:
            raise IllegalLetter(f"phi is not defined on {sorted(bad)}")
        x = x.to(Bbar)
    cache = alg.map_cache.setdefault(("phi",), {})
    return map_letters(x, lambda l: _phi_letter(alg.B, l), alg.B, anti=True, cache=cache)


def _psi_letter(U, letter):
    i = letter.index
    if letter.kind in ("w", "v"):
        return U.letter(letter.kind, i, letter.exp)
    if letter.kind == "e":
        return U.letter("w", i, -1) * U.letter("v", i) * U.letter("e", i)
    if letter.kind == "f":
        return U.letter("f", i) * U.letter("w", i) * U.letter("v", i, -1)
    raise IllegalLetter(f"Psi is not defined on {letter.kind}[{i + 1}]")


def psi(x):
    """The automorphism of U twisting the Casimir commutation."""
    U = x.parent.alg.U
    if x.parent is not U:
        x = x.to(U)
    cache = U.alg.map_cache.setdefault(("psi",), {})
    return map_letters(x, lambda l: _psi_letter(U, l), U, cache=cache)


def is_legal(x, parent):
    return isinstance(x, AlgebraElement) and not (x.letters() - parent.kinds)


# -- verification -------------------------------------------------------------------


def _image_of_free(rel, letter_image, one):
    """Evaluate a FreeElement word by word through a letter map."""
    out = None
    for word, c in rel.terms.items():
        t = one
        for letter in word:
            t = t * letter_image(letter)
        t = t.scale(c)
        out = t if out is None else out + t
    return out


def verify_hopf(alg, samples=50, seed=0, report=None):
    """Coproducts respect the relations; coassociativity; antipode axioms; phi."""
    import random

    from .algebra import random_element, relation_instances

    report = report or Report("hopf", {"type": alg.ct.name, "samples": samples, "seed": seed})
    rng = random.Random(seed)
    U = alg.U
    for variant, (src, legs) in COPRODUCT_SHAPES.items():
        source = alg.algebra(src)
        one = TensorElement.one(tuple(alg.algebra(p) for p in legs))
        for label, rel in relation_instances(alg, source):
            img = _image_of_free(rel, lambda l: coproduct(source.letter(*l), variant), one)
            report.check_zero("coproduct-hom", f"{variant} coproduct is multiplicative",
                              f"{source.name}: {label}", img)
    gens = [U.letter(k, i) for k in ("e", "f", "w", "v") for i in range(alg.n)]
    randoms = [random_element(U, rng) for _ in range(samples)]
    for idx, x in enumerate(gens + randoms):
        inst = str(x) if idx < len(gens) else f"random #{idx - len(gens)}"
        d = coproduct(x)
        lhs = coproduct_leg(d, 0)
        rhs = coproduct_leg(d, 1)
        report.check_zero("coassociative", "(Delta (x) 1) Delta = (1 (x) Delta) Delta", inst,
                          lhs - rhs)
        unit = U.scalar(counit(x))
        report.check_zero("antipode-left", "m (S (x) 1) Delta = eps", inst,
                          d.map_legs([antipode, None]).multiply() - unit)
        report.check_zero("antipode-right", "m (1 (x) S) Delta = eps", inst,
                          d.map_legs([None, antipode]).multiply() - unit)
        report.check_zero("antipode-inverse", "S S^-1 = id", inst,
                          antipode(antipode(x, "S_inverse")) - x)
    Bbar = alg.Bbar
    for k in range(samples):
        x, y = random_element(Bbar, rng), random_element(Bbar, rng)
        report.check_zero("phi-anti", "phi(xy) = phi(y) phi(x)", f"random pair #{k}",
                          phi(x * y) - phi(y) * phi(x))
    return report
