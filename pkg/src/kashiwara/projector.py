"""The extremal projector Gamma of B and its defining properties.

Grade beta of Gamma is ``sum_r k_beta^-1 S^-1(y_r) phi(x_r)``, i.e. the image of
grade beta of C under ``m . sigma . (phi (x) 1)``.  After normalization in B
every toral factor cancels, so each grade is a combination of f-words times
e''-words.
"""

from __future__ import annotations

from .canonical import (
    TruncatedElement, c_grade, c_inverse_grade, check_groups, fmt_w, group_element,
    splittings, weights_up_to,
)
from .errors import WrongType
from .hopf import phi
from .report import Report
from .rootdata import q_factorial


def gamma_grade_raw(alg, beta):
    """Grade beta of Gamma as sum of products d_k phi(c_k), before any cleanup."""
    B = alg.B
    out = B.zero()
    for c, (left, right) in c_grade(alg, beta).legs():
        out = out + (right * phi(left)).scale(c)
    return out


def gamma_grade(alg, beta):
    key = ("Gamma", tuple(beta))
    if key not in alg.map_cache:
        alg.map_cache[key] = gamma_grade_raw(alg, beta)
    return alg.map_cache[key]


def gamma(alg, L):
    """Gamma truncated at height L."""
    alg.check_cutoff(L)
    return TruncatedElement(L, {b: gamma_grade(alg, b) for b in weights_up_to(alg.n, L)})


def gamma_sl2_closed(alg, L):
    """sum_n (-1)^n q^{n(n-1)/2} f^(n) e''^n for n <= L (rank one only)."""
    if alg.n != 1:
        raise WrongType(f"closed form is for A1, not {alg.ct.name}")
    B = alg.B
    q = alg.ct.q(0)
    grades = {}
    for n in range(L + 1):
        c = q ** (n * (n - 1) // 2) / q_factorial(n, q)
        if n % 2:
            c = -c
        grades[(n,)] = B.monomial(left=(0,) * n, right=(0,) * n, coeff=c)
    return TruncatedElement(L, grades)


def is_toral_free(x):
    zero = x.parent.alg.zero_torus
    return all(t == zero for _, t, _ in x.terms)


def partition_of_unity_grade(alg, delta):
    """sum over beta + gamma = delta of a_beta Gamma_gamma b_beta, with
    C^-1 grade beta = sum b'_k (x) a_k and b_k = phi(b'_k)."""
    B = alg.B
    out = B.zero()
    for beta, gam in splittings(delta):
        g = gamma_grade(alg, gam)
        if g.is_zero():
            continue
        for c, (bprime, a) in c_inverse_grade(alg, beta).legs():
            out = out + (a * g * phi(bprime)).scale(c)
    return out


def verify_theorem61(alg, L, report=None):
    report = report or Report("thm61", {"type": alg.ct.name, "height": L})
    B = alg.B
    G = gamma(alg, L)
    total = G.total()
    for i in range(alg.n):
        E, f = B.letter("E", i), B.letter("f", i)
        check_groups(report, "annihilate-left", "e'' Gamma = 0", f"i={i + 1}",
                     group_element(E * total, "left"), L - 1)
        check_groups(report, "annihilate-right", "Gamma f = 0", f"i={i + 1}",
                     group_element(total * f, "right"), L - 1)
    check_groups(report, "idempotent", "Gamma^2 = Gamma", "",
                 group_element(total * total - total, "left"), L)
    for delta in weights_up_to(alg.n, L):
        val = partition_of_unity_grade(alg, delta)
        if not any(delta):
            val = val - B.one()
        report.check_zero("partition-of-unity", "sum a_k Gamma b_k = 1",
                          f"grade {fmt_w(delta)}", val)
    for beta, g in G.grades.items():
        report.add("toral-free", "Gamma in completed B-vee", f"grade {fmt_w(beta)}",
                   is_toral_free(g), g)
    if alg.n == 1:
        closed = gamma_sl2_closed(alg, L)
        for beta, g in G.grades.items():
            report.check_zero("closed-form", "rank-one closed form", f"n={beta[0]}",
                              g - closed.grades[beta])
    return report
