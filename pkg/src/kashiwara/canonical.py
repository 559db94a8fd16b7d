"""Canonical tensors C_beta, the completed element C and its inverse, the Casimir.

Completed objects are truncated at an explicit height L: a
:class:`TruncatedTensor` (or :class:`TruncatedElement`) stores grades beta with
``height(beta) <= L``.  Identity checks report exactly the grades they fully
determine; an identity that multiplies by a weight-alpha_i letter loses the
top grade.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import _signed
from .hopf import TensorElement, antipode, phi, psi, tensor
from .pairing import dual_basis, gram_matrix
from .report import Report
from .rootdata import euler_form
from .scalars import Scalar


def weights_up_to(n, L, min_height=0):
    """All beta in Q+ with min_height <= height(beta) <= L, by height then lex."""
    out = [w for w in product(range(L + 1), repeat=n) if min_height <= sum(w) <= L]
    return sorted(out, key=lambda w: (sum(w), w))


def add_w(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_w(a, b):
    return tuple(x - y for x, y in zip(a, b))


def splittings(beta):
    """All (gamma, delta) in Q+ x Q+ with gamma + delta = beta."""
    return [(g, sub_w(beta, g)) for g in product(*(range(b + 1) for b in beta))]


def unit(n, i):
    return tuple(int(k == i) for k in range(n))


def omega(par, mu, sign=1):
    return par.toral(omega=[sign * m for m in mu])


def omega_prime(par, mu, sign=1):
    return par.toral(omega_prime=[sign * m for m in mu])


def k_beta(par, beta):
    """k_beta = omega'_beta^{-1}."""
    return omega_prime(par, beta, -1)


def k_beta_inverse(par, beta):
    return omega_prime(par, beta)


def qq_power(alg, beta, sign=1):
    """(r s^-1)^{sign <beta, beta>}."""
    e = sign * euler_form(alg.ct, beta, beta)
    return Scalar.monomial(e, -e)


@dataclass
class TruncatedTensor:
    cutoff: int
    grades: dict = field(default_factory=dict)

    def grade(self, beta):
        return self.grades[tuple(beta)]

    def total(self):
        out = None
        for g in self.grades.values():
            out = g if out is None else out + g
        return out


@dataclass
class TruncatedElement:
    cutoff: int
    grades: dict = field(default_factory=dict)

    def grade(self, beta):
        return self.grades[tuple(beta)]

    def total(self):
        out = None
        for g in self.grades.values():
            out = g if out is None else out + g
        return out


# -- the canonical tensors ----------------------------------------------------


def canonical_tensor(alg, beta, plus_basis=None):
    """C_beta = sum_r x_r (x) y_r in U (x) U."""
    beta = tuple(beta)
    U = alg.U
    if not any(beta):
        return TensorElement.one((U, U))
    key = ("C", beta)
    if plus_basis is None and key in alg.map_cache:
        return alg.map_cache[key]
    data = gram_matrix(alg, beta, plus_basis)
    ys = dual_basis(alg, beta, plus_basis)
    out = TensorElement.zero((U, U))
    for word, y in zip(data.plus_basis, ys):
        out = out + tensor(U.monomial(right=word), y)
    if plus_basis is None:
        alg.map_cache[key] = out
    return out


def c_prime(alg, beta):
    """(1 (x) S^-1)(C_beta)."""
    return canonical_tensor(alg, beta).map_legs([None, lambda y: antipode(y, "S_inverse")])


def c_double_prime(alg, beta):
    """(phi (x) 1)(C_beta), in B (x) U."""
    return canonical_tensor(alg, beta).map_legs([phi, None], (alg.B, alg.U))


def c_grade(alg, beta):
    """Grade beta of C: (1 (x) k_beta^-1)(1 (x) S^-1)(C_beta), in U (x) B."""
    key = ("Cgrade", tuple(beta))
    if key not in alg.map_cache:
        U, B = alg.U, alg.B
        t = tensor(U.one(), k_beta_inverse(U, beta)) * c_prime(alg, beta)
        alg.map_cache[key] = t.to((U, B))
    return alg.map_cache[key]


def c_element(alg, L):
    alg.check_cutoff(L)
    return TruncatedTensor(L, {b: c_grade(alg, b) for b in weights_up_to(alg.n, L)})


def c_inverse_grade(alg, beta):
    """r^-<b,b> s^<b,b> (omega_b (x) k_b^-1)(S^-1 (x) S^-1)(C_b), in U (x) B."""
    key = ("Cinv", tuple(beta))
    if key not in alg.map_cache:
        U, B = alg.U, alg.B
        sinv = lambda x: antipode(x, "S_inverse")  # noqa: E731
        t = canonical_tensor(alg, beta).map_legs([sinv, sinv])
        t = tensor(omega(U, beta), k_beta_inverse(U, beta)) * t
        alg.map_cache[key] = t.scale(qq_power(alg, beta, -1)).to((U, B))
    return alg.map_cache[key]


def c_inverse(alg, L):
    alg.check_cutoff(L)
    return TruncatedTensor(L, {b: c_inverse_grade(alg, b) for b in weights_up_to(alg.n, L)})


def c_tilde_grade(alg, beta):
    """(r s^-1)^<b,b> (1 (x) k_b)(S (x) 1)(C_b)."""
    U = alg.U
    t = canonical_tensor(alg, beta).map_legs([antipode, None])
    return (tensor(U.one(), k_beta(U, beta)) * t).scale(qq_power(alg, beta))


def c_tilde_inverse_grade(alg, beta):
    """(r s^-1)^<b,b> (omega_b^-1 (x) k_b) C_b."""
    U = alg.U
    t = tensor(omega(U, beta, -1), k_beta(U, beta)) * canonical_tensor(alg, beta)
    return t.scale(qq_power(alg, beta))


def graded_product(alg, first, second, L):
    """sum_{gamma + delta = beta} first(gamma) second(delta) for height(beta) <= L."""
    out = {}
    for beta in weights_up_to(alg.n, L):
        acc = None
        for g, d in splittings(beta):
            term = first(g) * second(d)
            acc = term if acc is None else acc + term
        out[beta] = acc
    return out


# -- grade bookkeeping ----------------------------------------------------------


def word_content(word, n):
    return _signed(word, 1, n)


def group_tensor(t, leg, side):
    """Split a tensor by the letter content of one word of one leg."""
    groups = {}
    n = t.parents[0].alg.n
    for key, c in t.terms.items():
        left, _, right = key[leg]
        g = word_content(right if side == "right" else left, n)
        groups.setdefault(g, {})[key] = c
    return {g: TensorElement(t.parents, terms) for g, terms in groups.items()}


def group_element(x, side):
    groups = {}
    n = x.parent.alg.n
    for mono, c in x.terms.items():
        left, _, right = mono
        g = word_content(right if side == "right" else left, n)
        groups.setdefault(g, {})[mono] = c
    return {g: type(x)(x.parent, terms) for g, terms in groups.items()}


def check_groups(report, identity, anchor, label, groups, bound):
    """Record every group of height <= bound (all must vanish)."""
    for g in sorted(groups, key=lambda w: (sum(w), w)):
        if sum(g) <= bound:
            report.check_zero(identity, anchor, f"{label} grade {fmt_w(g)}", groups[g])
    if not any(sum(g) <= bound for g in groups):
        report.add(identity, anchor, f"{label} grades <= {bound}", True)


def fmt_w(w):
    return "(" + ",".join(str(x) for x in w) + ")"


# -- identity suites ------------------------------------------------------------


def verify_lemma51(alg, max_height, report=None):
    """Commutators with C'_beta, C''_beta, C_beta and the two antipode sums."""
    report = report or Report("lemma51", {"type": alg.ct.name, "height": max_height})
    U, B = alg.U, alg.B
    n = alg.n
    ct = alg.ct
    for beta in weights_up_to(n, max_height):
        for i in range(n):
            b1 = add_w(beta, unit(n, i))
            inst = f"beta={fmt_w(beta)} i={i + 1}"
            winv = U.letter("w", i, -1)
            # [w_i^-1 (x) e''_i, (1 (x) k^-1) C'] = (1 (x) k^-1) C' (w_i^-1 e_i (x) (r_i - s_i))
            x = tensor(winv, B.letter("E", i))
            lhs_t = (tensor(U.one(), k_beta_inverse(B, b1)) * c_prime(alg, b1).to((U, B)))
            lhs = x * lhs_t - lhs_t * x
            rhs = (tensor(U.one(), k_beta_inverse(B, beta)) * c_prime(alg, beta).to((U, B))
                   * tensor(winv * U.letter("e", i), B.one()).scale(ct.r_minus_s(i)))
            report.check_zero("commutator-e''-C'", "e''-commutator with C'", inst, lhs - rhs)
            # [f_i (x) w'_i, C''(1 (x) k)] = -(1 (x) f_i) C'' (1 (x) k)
            y = tensor(B.letter("f", i), U.letter("v", i))
            t1 = c_double_prime(alg, b1) * tensor(B.one(), k_beta(U, b1))
            t0 = c_double_prime(alg, beta) * tensor(B.one(), k_beta(U, beta))
            lhs = y * t1 - t1 * y
            rhs = -(tensor(B.one(), U.letter("f", i)) * t0)
            report.check_zero("commutator-f-C''", "f-commutator with C''", inst, lhs - rhs)
            # [1 (x) e_i, C_{b+a_i}] = C_b (e_i (x) w'_i) - (e_i (x) w_i) C_b
            e, f = U.letter("e", i), U.letter("f", i)
            w, v = U.letter("w", i), U.letter("v", i)
            Cb1, Cb = canonical_tensor(alg, b1), canonical_tensor(alg, beta)
            z = tensor(U.one(), e)
            lhs = z * Cb1 - Cb1 * z
            rhs = Cb * tensor(e, v) - tensor(e, w) * Cb
            report.check_zero("commutator-e-C", "e-commutator with C", inst, lhs - rhs)
            # [f_i (x) 1, C_{b+a_i}] = C_b (w_i (x) f_i) - (w'_i (x) f_i) C_b
            z = tensor(f, U.one())
            lhs = z * Cb1 - Cb1 * z
            rhs = Cb * tensor(w, f) - tensor(v, f) * Cb
            report.check_zero("commutator-f-C", "f-commutator with C", inst, lhs - rhs)
    for beta in weights_up_to(n, max_height):
        one = TensorElement.one((U, U)) if not any(beta) else TensorElement.zero((U, U))
        left = right = None
        for g, d in splittings(beta):
            a = canonical_tensor(alg, g) * antipode_twist(alg, d)
            b = antipode_twist(alg, g) * canonical_tensor(alg, d)
            left = a if left is None else left + a
            right = b if right is None else right + b
        inst = f"beta={fmt_w(beta)}"
        report.check_zero("antipode-sum-right", "C * twisted S(C) = delta", inst, left - one)
        report.check_zero("antipode-sum-left", "twisted S(C) * C = delta", inst, right - one)
    return report


def antipode_twist(alg, beta):
    """(omega_beta (x) 1)(S (x) 1)(C_beta)."""
    key = ("Stwist", tuple(beta))
    if key not in alg.map_cache:
        U = alg.U
        t = canonical_tensor(alg, beta).map_legs([antipode, None])
        alg.map_cache[key] = tensor(omega(U, beta), U.one()) * t
    return alg.map_cache[key]


def phi_s_grade(alg, beta):
    """(phi (x) S) applied to grade beta of C, in B (x) B."""
    key = ("phiS", tuple(beta))
    if key not in alg.map_cache:
        alg.map_cache[key] = c_grade(alg, beta).map_legs(
            [phi, lambda y: antipode(y)], (alg.B, alg.B))
    return alg.map_cache[key]


def verify_prop51(alg, L, report=None):
    """Intertwining identities of C and the inverse formula, up to height L."""
    report = report or Report("prop51", {"type": alg.ct.name, "height": L})
    U, B = alg.U, alg.B
    n, ct = alg.n, alg.ct
    C = c_element(alg, L).total()
    X = None
    for beta in weights_up_to(n, L):
        X = phi_s_grade(alg, beta) if X is None else X + phi_s_grade(alg, beta)
    for i in range(n):
        winv = U.letter("w", i, -1)
        a = tensor(winv, B.letter("E", i))
        b = tensor(winv * U.letter("e", i), B.one()).scale(ct.r_minus_s(i))
        diff = a * C - C * (a + b)
        check_groups(report, "intertwine-e''", "(w^-1 (x) e'') C", f"i={i + 1}",
                     group_tensor(diff, 0, "right"), L)
        fw = tensor(B.letter("f", i), B.letter("v", i))
        diff = (fw + tensor(B.one(), B.letter("f", i))) * X - X * fw
        check_groups(report, "intertwine-f", "(f (x) w' + 1 (x) f) X", f"i={i + 1}",
                     group_tensor(diff, 0, "right"), L - 1)
    for label, prod in (("Cinv*C", graded_product(alg, lambda g: c_inverse_grade(alg, g),
                                                     lambda g: c_grade(alg, g), L)),
                        ("C*Cinv", graded_product(alg, lambda g: c_grade(alg, g),
                                                     lambda g: c_inverse_grade(alg, g), L))):
        for beta, t in prod.items():
            one = TensorElement.one((U, B)) if not any(beta) else TensorElement.zero((U, B))
            report.check_zero("inverse", f"{label} = 1 (x) 1", f"grade {fmt_w(beta)}", t - one)
    return report


def verify_c_tilde(alg, L, report=None):
    """Both products of the auxiliary element and its inverse, grade by grade."""
    report = report or Report("c_tilde", {"type": alg.ct.name, "height": L})
    U = alg.U
    for label, f1, f2 in (("tilde_inv*tilde", c_tilde_inverse_grade, c_tilde_grade),
                          ("tilde*tilde_inv", c_tilde_grade, c_tilde_inverse_grade)):
        prod = graded_product(alg, lambda g: f1(alg, g), lambda g: f2(alg, g), L)
        for beta, t in prod.items():
            one = TensorElement.one((U, U)) if not any(beta) else TensorElement.zero((U, U))
            report.check_zero("c-tilde", label, f"grade {fmt_w(beta)}", t - one)
    return report


def verify_basis_independence(alg, beta, permutations):
    """C_beta recomputed from permuted plus bases; returns list of booleans."""
    base = canonical_tensor(alg, beta)
    words = gram_matrix(alg, beta).plus_basis
    return [canonical_tensor(alg, beta, [words[k] for k in perm]) == base
            for perm in permutations]


# -- the Casimir --------------------------------------------------------------------


def casimir_grade(alg, beta):
    """Omega_beta = sum_r S(y_r) x_r."""
    key = ("Omega", tuple(beta))
    if key not in alg.map_cache:
        t = canonical_tensor(alg, beta).swap().map_legs([antipode, None])
        alg.map_cache[key] = t.multiply(alg.U)
    return alg.map_cache[key]


def casimir(alg, L):
    alg.check_cutoff(L)
    return TruncatedElement(L, {b: casimir_grade(alg, b) for b in weights_up_to(alg.n, L)})


def verify_casimir_commutation(alg, L, report=None):
    report = report or Report("casimir", {"type": alg.ct.name, "height": L})
    U = alg.U
    omega_total = casimir(alg, L).total()
    for i in range(alg.n):
        gens = [("e", U.letter("e", i), "left", L - 1), ("f", U.letter("f", i), "right", L - 1)]
        for kind in ("w", "v"):
            for e in (1, -1):
                gens.append((f"{kind}^{e}", U.letter(kind, i, e), "left", L))
        for name, u, side, bound in gens:
            diff = psi(u) * omega_total - omega_total * u
            check_groups(report, "casimir", "Psi(u) Omega = Omega u", f"u={name}[{i + 1}]",
                         group_element(diff, side), bound)
    return report

