"""Truncated modules H(lambda) = B / I_lambda, the kernel functor K and its
structure theorems, checked weight slice by weight slice.

H(lambda) is free of rank one over B^-, so its depth-D truncation has basis the
reduced f-words of height <= D applied to u_lambda.  A monomial
``(f-word, torus, e''-word)`` acts on ``w u_lambda`` by normalizing the product
``m * w`` in B: terms with a nonempty e''-word vanish and the torus acts by its
eigenvalue on u_lambda.  Since e'' lowers depth and f raises it, every quantity
computed below is exact as long as no result leaves the depth window.
"""

from __future__ import annotations

from .algebra import basis_of_weight_space
from .canonical import fmt_w, weights_up_to
from .errors import DepthExceeded
from .linalg import nullspace, rank
from .report import Report
from .rootdata import euler_form
from .scalars import ONE, ZERO, Scalar


class ModuleVector:
    __slots__ = ("module", "comps")

    def __init__(self, module, comps):
        self.module = module
        self.comps = {k: c for k, c in comps.items() if not c.is_zero()}

    def __add__(self, other):
        out = dict(self.comps)
        for k, c in other.comps.items():
            out[k] = out.get(k, ZERO) + c
        return ModuleVector(self.module, out)

    def __neg__(self):
        return ModuleVector(self.module, {k: -c for k, c in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar(c)
        return ModuleVector(self.module, {k: v * c for k, v in self.comps.items()})

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.comps == other.comps

    __hash__ = None

    @property
    def depth(self):
        return max((self.module.key_depth(k) for k in self.comps), default=0)

    def coordinates(self, keys):
        return [self.comps.get(k, ZERO) for k in keys]

    def __str__(self):
        if not self.comps:
            return "0"
        parts = []
        for k in sorted(self.comps, key=self.module.sort_key):
            parts.append(f"({self.comps[k]})*{self.module.key_str(k)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<vector {self}>"


class _ModuleBase:
    """Shared slice/action logic; subclasses define keys and single-key action."""

    def vector(self, comps):
        return ModuleVector(self, comps)

    def basis_vector(self, key):
        return ModuleVector(self, {key: ONE})

    def act(self, g, v):
        """g in B acting on a ModuleVector."""
        if g.parent is not self.alg.B:
            g = g.to(self.alg.B)
        out = {}
        for key, cv in v.comps.items():
            for mono, cg in g.terms.items():
                for k2, c in self.act_mono(mono, key).items():
                    out[k2] = out.get(k2, ZERO) + cg * cv * c
        res = ModuleVector(self, out)
        if res.depth > self.depth:
            raise DepthExceeded(f"result depth {res.depth} exceeds module depth {self.depth}")
        return res

    def slices(self, max_depth=None):
        """Map weight -> ordered basis keys, for keys of depth <= max_depth."""
        max_depth = self.depth if max_depth is None else max_depth
        out = {}
        for key in self.keys():
            if self.key_depth(key) <= max_depth:
                out.setdefault(self.key_weight(key), []).append(key)
        return out

    def sort_key(self, key):
        return (self.key_depth(key), key)


class VermaModule(_ModuleBase):
    """H(lambda) truncated at depth D (lambda in the root lattice)."""

    def __init__(self, alg, lam, depth):
        self.alg = alg
        self.lam = tuple(lam)
        self.depth = depth
        if len(self.lam) != alg.n:
            raise ValueError(f"lambda needs {alg.n} coordinates")
        self._keys = []
        for beta in weights_up_to(alg.n, depth):
            self._keys.extend(basis_of_weight_space(alg, beta, "minus", "B"))
        self._act = {}
        self._eigen = {}

    def __repr__(self):
        return f"H({fmt_w(self.lam)}) of {self.alg.ct.name} to depth {self.depth}"

    def keys(self):
        return list(self._keys)

    def key_depth(self, key):
        return len(key)

    def key_weight(self, key):
        w = list(self.lam)
        for i in key:
            w[i] -= 1
        return tuple(w)

    def key_str(self, key):
        if not key:
            return "u"
        return "*".join(f"f[{i + 1}]" for i in key) + "*u"

    def highest(self):
        return self.basis_vector(())

    def eigenvalue(self, torus):
        """Scalar by which the toral monomial acts on u_lambda."""
        val = self._eigen.get(torus)
        if val is None:
            n, ct, lam = self.alg.n, self.alg.ct, self.lam
            a, b = torus[:n], torus[n:]
            val = Scalar.monomial(euler_form(ct, lam, a) - euler_form(ct, b, lam),
                                  euler_form(ct, lam, b) - euler_form(ct, a, lam))
            self._eigen[torus] = val
        return val

    def act_mono(self, mono, key):
        ck = (mono, key)
        res = self._act.get(ck)
        if res is None:
            B = self.alg.B
            res = {}
            for (left, torus, right), c in B.mul_mono(mono, (key, self.alg.zero_torus, ())).items():
                if right:
                    continue
                res[left] = res.get(left, ZERO) + c * self.eigenvalue(torus)
            res = {k: v for k, v in res.items() if not v.is_zero()}
            self._act[ck] = res
        return res

    def from_element(self, x):
        """x u_lambda for x in B."""
        return self.act(x, self.highest())


class DirectSum(_ModuleBase):
    """Finite direct sum of truncated H(lambda)'s with a common depth."""

    def __init__(self, summands):
        self.summands = list(summands)
        self.alg = self.summands[0].alg
        self.depth = min(m.depth for m in self.summands)

    def __repr__(self):
        inner = " + ".join(f"H({fmt_w(m.lam)})" for m in self.summands)
        return f"{inner} of {self.alg.ct.name} to depth {self.depth}"

    def keys(self):
        return [(k, key) for k, m in enumerate(self.summands) for key in m.keys()
                if m.key_depth(key) <= self.depth]

    def key_depth(self, key):
        return self.summands[key[0]].key_depth(key[1])

    def key_weight(self, key):
        return self.summands[key[0]].key_weight(key[1])

    def key_str(self, key):
        return f"{self.summands[key[0]].key_str(key[1])}#{key[0] + 1}"

    def act_mono(self, mono, key):
        k, inner = key
        return {(k, w): c for w, c in self.summands[k].act_mono(mono, inner).items()}

    def embed(self, k, v):
        return ModuleVector(self, {(k, w): c for w, c in v.comps.items()})


# -- linear algebra on slices ---------------------------------------------------


def _matrix_of(module, g, source_keys, target_keys):
    """Rows = target coordinates, columns = source basis vectors."""
    index = {k: r for r, k in enumerate(target_keys)}
    m = [[ZERO] * len(source_keys) for _ in target_keys]
    for c, key in enumerate(source_keys):
        for mono, cg in g.terms.items():
            for k2, v in module.act_mono(mono, key).items():
                if k2 in index:
                    m[index[k2]][c] = m[index[k2]][c] + cg * v
    return m


def _shift(w, i, s):
    w = list(w)
    w[i] += s
    return tuple(w)


def kernel_slice(module, weight, keys, slices):
    """Basis of the joint kernel of all e''_i on one weight slice."""
    B = module.alg.B
    rows = []
    for i in range(module.alg.n):
        target = slices.get(_shift(weight, i, 1), [])
        rows.extend(_matrix_of(module, B.letter("E", i), keys, target))
    if not rows:
        return [[ONE if r == c else ZERO for r in range(len(keys))] for c in range(len(keys))]
    return nullspace(rows, len(keys))


def kernel(module, depth=None):
    """K(M) up to the given depth, as ModuleVectors."""
    depth = module.depth - 1 if depth is None else depth
    slices = module.slices(module.depth)
    out = []
    for weight, keys in sorted(module.slices(depth).items(), key=lambda kv: _wkey(kv[0])):
        for vec in kernel_slice(module, weight, keys, slices):
            out.append(module.vector(dict(zip(keys, vec))))
    return out


def _wkey(w):
    return (-sum(w), tuple(-x for x in w))


def image_of_f_slice(module, weight, keys, slices):
    """Column vectors (in slice coordinates) spanning sum_i Im(f_i) on a slice."""
    B = module.alg.B
    cols = []
    for i in range(module.alg.n):
        src = slices.get(_shift(weight, i, 1), [])
        if not src:
            continue
        m = _matrix_of(module, B.letter("f", i), src, keys)
        cols.extend([list(col) for col in zip(*m)])
    return cols


def _span_rank(vectors, n):
    return rank(vectors, n) if vectors else 0


def verify_decomposition(module, depth=None, report=None, gamma_trunc=None):
    """M = K(M) (+) sum Im(f_i), M = B^- K(M) and Gamma M = K(M), per slice."""
    from .projector import gamma

    depth = module.depth - 1 if depth is None else depth
    report = report or Report("categoryO", {"type": module.alg.ct.name})
    slices = module.slices(module.depth)
    window = module.slices(depth)
    G = gamma_trunc or gamma(module.alg, depth)
    kernels = {}
    for weight, keys in sorted(window.items(), key=lambda kv: _wkey(kv[0])):
        n = len(keys)
        K = kernel_slice(module, weight, keys, slices)
        kernels[weight] = K
        im = image_of_f_slice(module, weight, keys, slices)
        rk_im = _span_rank(im, n)
        rk_all = _span_rank(K + im, n)
        inst = f"{module!r} slice {fmt_w(weight)}"
        ok = rk_all == n and rk_all == len(K) + rk_im
        report.add("decomposition", "M = K(M) (+) sum Im f_i", inst, ok,
                   f"dim={n} dimK={len(K)} rankIm={rk_im} rankSum={rk_all}")
        # Gamma M = K(M) on this slice
        imgs = [gamma_apply(G, module.basis_vector(k)).coordinates(keys) for k in keys]
        rk_g = _span_rank(imgs, n)
        ok = rk_g == len(K) and _span_rank(imgs + K, n) == len(K)
        witness = f"rankGamma={rk_g} dimK={len(K)}"
        if not ok:
            witness = _gamma_witness(module, G, keys) or witness
        report.add("gamma-image", "Gamma M = K(M)", inst, ok, witness)
    # M = B^- K(M): f-words applied to kernel vectors span every slice
    B = module.alg.B
    spans = {}
    for weight, K in kernels.items():
        for vec in K:
            v = module.vector(dict(zip(window[weight], vec)))
            for beta in weights_up_to(module.alg.n, depth - v.depth):
                for word in basis_of_weight_space(module.alg, beta, "minus", "B"):
                    img = module.act(B.monomial(left=word), v)
                    if img.is_zero():
                        continue
                    w = module.key_weight(next(iter(img.comps)))
                    spans.setdefault(w, []).append(img.coordinates(window[w]))
    for weight, keys in sorted(window.items(), key=lambda kv: _wkey(kv[0])):
        r = _span_rank(spans.get(weight, []), len(keys))
        report.add("generation", "M = B^- K(M)", f"{module!r} slice {fmt_w(weight)}",
                   r == len(keys), f"rank={r} dim={len(keys)}")
    return report


def _gamma_witness(module, G, keys):
    """A nonzero e''_i Gamma v for some slice basis vector v, if there is one."""
    B = module.alg.B
    for k in keys:
        gv = gamma_apply(G, module.basis_vector(k))
        for i in range(module.alg.n):
            img = module.act(B.letter("E", i), gv)
            if not img.is_zero():
                return f"E[{i + 1}]*Gamma*{module.key_str(k)} = {img}"
    return None


def gamma_apply(gamma_trunc, v):
    """Gamma v, exact: grades of height > depth(v) act by zero."""
    module = v.module
    if v.depth > gamma_trunc.cutoff:
        raise DepthExceeded(f"vector depth {v.depth} exceeds Gamma cutoff {gamma_trunc.cutoff}")
    out = module.vector({})
    for beta, g in gamma_trunc.grades.items():
        if sum(beta) <= v.depth:
            out = out + module.act(g, v)
    return out


def simplicity_probe(module, depth=None, report=None):
    """Every nonzero vector of every slice reaches u_lambda under some e''-word."""
    depth = module.depth - 1 if depth is None else depth
    report = report or Report("categoryO", {"type": module.alg.ct.name})
    alg = module.alg
    B = alg.B
    for beta in weights_up_to(alg.n, depth):
        fwords = basis_of_weight_space(alg, beta, "minus", "B")
        ewords = basis_of_weight_space(alg, beta, "plus", "B")
        m = []
        for ew in ewords:
            P = B.monomial(right=ew)
            m.append([module.act_mono(next(iter(P.terms)), fw).get((), ZERO) for fw in fwords])
        r = _span_rank(m, len(fwords))
        inst = f"{module!r} beta={fmt_w(beta)}"
        report.add("simplicity", "e''-words reach u_lambda", inst, r == len(fwords),
                   f"rank={r} dim={len(fwords)}")
        for c, fw in enumerate(fwords):
            p = next((ew for rr, ew in enumerate(ewords) if not m[rr][c].is_zero()), None)
            report.add("simplicity-witness", "P v has a u_lambda component",
                       f"{module.key_str(fw)} via P={_eword(p)}", p is not None,
                       "no e''-word reaches u_lambda")
    K = kernel(module, depth)
    report.add("kernel-dim", "dim K(H(lambda)) = 1", f"{module!r}", len(K) == 1,
               f"dim={len(K)}")
    return report


def _eword(w):
    if w is None:
        return "none"
    return "*".join(f"E[{i + 1}]" for i in w) or "1"


def verify_complement(M, L_generator, depth=None, report=None):
    """For L = B . L_generator inside M, build N with K(M) = K(L) (+) N and
    check M = L (+) B.N on every slice."""
    depth = M.depth - 1 if depth is None else depth
    report = report or Report("categoryO", {"type": M.alg.ct.name})
    alg = M.alg
    B = alg.B
    slices = M.slices(M.depth)
    window = M.slices(depth)

    def generated(vectors):
        # B . v = B^- . v for v in K(M) (e'' kills it, torals rescale it)
        span = {}
        for v in vectors:
            for beta in weights_up_to(alg.n, depth - v.depth):
                for word in basis_of_weight_space(alg, beta, "minus", "B"):
                    img = M.act(B.monomial(left=word), v)
                    if img.is_zero():
                        continue
                    w = M.key_weight(next(iter(img.comps)))
                    span.setdefault(w, []).append(img.coordinates(window[w]))
        return span

    Lspan = generated([L_generator])
    KM = {}
    for weight, keys in window.items():
        KM[weight] = kernel_slice(M, weight, keys, slices)
    N = []
    for weight, K in KM.items():
        keys = window[weight]
        # K(L) = K(M) cap L: vectors of L's slice killed by every e''
        KL = _intersect(Lspan.get(weight, []), K, len(keys))
        basis = list(KL)
        for v in K:
            if _span_rank(basis + [v], len(keys)) > _span_rank(basis, len(keys)):
                basis.append(v)
                N.append(M.vector(dict(zip(keys, v))))
    Nspan = generated(N)
    for weight, keys in sorted(window.items(), key=lambda kv: _wkey(kv[0])):
        n = len(keys)
        Lv, Nv = Lspan.get(weight, []), Nspan.get(weight, [])
        rl, rn = _span_rank(Lv, n), _span_rank(Nv, n)
        rs = _span_rank(Lv + Nv, n)
        report.add("complement", "M = L (+) B N", f"slice {fmt_w(weight)}",
                   rs == n and rs == rl + rn, f"dim={n} rankL={rl} rankBN={rn} rankSum={rs}")
    return report


def _in_span(vs, basis, n):
    return _span_rank(basis + vs, n) == _span_rank(basis, n)


def _intersect(a, b, n):
    """Basis of span(a) cap span(b) via the kernel of [a | -b]."""
    if not a or not b:
        return []
    rows = [[x[k] for x in a] + [-y[k] for y in b] for k in range(n)]
    out = []
    for sol in nullspace(rows, len(a) + len(b)):
        vec = [sum((sol[j] * a[j][k] for j in range(len(a))), ZERO) for k in range(n)]
        if any(not c.is_zero() for c in vec) and not _in_span([vec], out, n):
            out.append(vec)
    return out


# -- module-level sanity checks --------------------------------------------------------


def verify_module_axioms(module, rng, samples=10, report=None):
    """act(g1 g2, v) = act(g1, act(g2, v)), relations of B act by zero, and
    f_i / e''_i shift weights by -alpha_i / +alpha_i."""
    from .algebra import normal_form, random_element, relation_instances

    report = report or Report("categoryO", {"type": module.alg.ct.name})
    alg, B = module.alg, module.alg.B
    keys = [k for k in module.keys() if module.key_depth(k) <= module.depth - 2]
    for t in range(samples):
        g1 = random_element(B, rng, max_letters=1, terms=2)
        g2 = random_element(B, rng, max_letters=1, terms=2)
        v = module.vector({rng.choice(keys): Scalar(rng.randint(1, 3))})
        report.check_zero("module-axiom", "(g1 g2) v = g1 (g2 v)", f"{module!r} sample #{t}",
                          module.act(g1 * g2, v) - module.act(g1, module.act(g2, v)))
    for label, rel in relation_instances(alg, B):
        # evaluate letter by letter so the relation is not normalized away first
        rise = max(sum(1 for l in word if l.kind == "f") for word in rel.terms)
        bad = []
        for key in module.keys():
            if module.key_depth(key) + rise > module.depth:
                continue
            total = module.vector({})
            for word, c in rel.terms.items():
                v = module.basis_vector(key)
                for letter in reversed(word):
                    v = module.act(normal_form((letter,), B), v)
                total = total + v.scale(c)
            if not total.is_zero():
                bad.append((module.key_str(key), str(total)))
        report.add("relation-action", "defining relations act by zero",
                   f"{module!r}: {label}", not bad, bad)
    for key in keys:
        for i in range(alg.n):
            w = module.key_weight(key)
            for kind, s in (("f", -1), ("E", 1)):
                img = module.act(B.letter(kind, i), module.basis_vector(key))
                ok = all(module.key_weight(k) == _shift(w, i, s) for k in img.comps)
                report.add("weight-shift", f"{kind}_i shifts weight",
                           f"{module.key_str(key)} i={i + 1}", ok, img)
    return report


def verify_gamma_idempotent(module, gamma_trunc, depth=None, report=None):
    depth = module.depth - 1 if depth is None else depth
    report = report or Report("categoryO", {"type": module.alg.ct.name})
    for key in module.keys():
        if module.key_depth(key) > depth:
            continue
        v = gamma_apply(gamma_trunc, module.basis_vector(key))
        report.check_zero("gamma-idempotent", "Gamma Gamma v = Gamma v",
                          f"{module!r} {module.key_str(key)}", gamma_apply(gamma_trunc, v) - v)
    return report


def sample_weights(n):
    """Five fixed sample weights in the root lattice."""
    if n == 1:
        return [(0,), (1,), (-1,), (2,), (-3,)]
    base = [[0] * n for _ in range(5)]
    base[1][0] = 1
    base[2][-1] = 1
    base[3][0], base[3][-1] = 1, -1
    base[4][0], base[4][-1] = -2, 3
    return [tuple(b) for b in base]


def verify_category_o(alg, lambdas, depth, seed=0, report=None):
    """All module-level checks for H(lambda) at each sample weight, plus the
    complement construction on H(lambda) (+) H(mu)."""
    import random

    from .projector import gamma

    report = report or Report("categoryO", {"type": alg.ct.name, "depth": depth})
    rng = random.Random(seed)
    G = gamma(alg, depth - 1)
    mods = []
    for lam in lambdas:
        M = VermaModule(alg, lam, depth)
        mods.append(M)
        verify_decomposition(M, depth - 1, report, G)
        simplicity_probe(M, depth - 1, report)
        verify_gamma_idempotent(M, G, depth - 1, report)
        verify_module_axioms(M, rng, 5, report)
    pairs = [(mods[0], mods[1 % len(mods)]), (mods[0], mods[0])]
    for A, Bm in pairs:
        S = DirectSum([VermaModule(alg, A.lam, depth), VermaModule(alg, Bm.lam, depth)])
        gen = S.embed(0, S.summands[0].highest())
        sub = Report("categoryO")
        verify_complement(S, gen, depth - 1, sub)
        for e in sub.entries:
            report.add(e.identity, e.anchor,
                       f"H{fmt_w(A.lam)}+H{fmt_w(Bm.lam)} {e.instance}", e.passed, e.witness)
        verify_decomposition(S, depth - 1, report, G)
    return report
