"""Finite Cartan data, the Euler form, and two-parameter q-combinatorics.

Conventions (documented here and nowhere else):

    A_n  Cartan matrix of the Dynkin chain, d = (1, ..., 1)
    B2   a12 = -2, a21 = -1, d = (1, 2)   (alpha_1 short)
    G2   a12 = -3, a21 = -1, d = (1, 3)   (alpha_1 short)

Simple roots are indexed 0..n-1 internally and printed 1..n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import BadIndex, ConfigError
from .scalars import ONE, ZERO, Scalar

_TABLES = {
    "B2": (((2, -2), (-1, 2)), (1, 2)),
    "G2": (((2, -3), (-1, 2)), (1, 3)),
}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int
    cartan_matrix: tuple
    d: tuple
    _euler: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.rank
        a = self.cartan_matrix
        for i in range(n):
            if a[i][i] != 2:
                raise ConfigError("diagonal Cartan entries must be 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ConfigError("off-diagonal Cartan entries must be <= 0")
                if self.d[i] * a[i][j] != self.d[j] * a[j][i]:
                    raise ConfigError("d does not symmetrize the Cartan matrix")
        table = tuple(
            tuple(self.d[i] * a[i][j] if i < j else (self.d[i] if i == j else 0)
                  for j in range(n))
            for i in range(n)
        )
        object.__setattr__(self, "_euler", table)

    @property
    def name(self):
        return f"{self.series}{self.rank}"

    def __str__(self):
        return self.name

    def euler(self, i, j):
        """<alpha_i, alpha_j> on simple roots."""
        return self._euler[i][j]

    @cached_property
    def simple_roots(self):
        n = self.rank
        return tuple(tuple(int(k == i) for k in range(n)) for i in range(n))

    def zero(self):
        return (0,) * self.rank

    def q(self, i):
        """r_i s_i^{-1} as a Scalar."""
        return Scalar.monomial(self.d[i], -self.d[i])

    def r_minus_s(self, i):
        """r_i - s_i."""
        return Scalar.monomial(self.d[i], 0) - Scalar.monomial(0, self.d[i])


def cartan_type(name):
    """Parse ``A1``, ``A3``, ``B2``, ``G2`` (case-insensitive)."""
    m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", str(name))
    if not m:
        raise ConfigError(f"unrecognized Cartan type {name!r}")
    series, rank = m.group(1).upper(), int(m.group(2))
    if series == "A" and rank >= 1:
        a = tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
            for i in range(rank)
        )
        return CartanType("A", rank, a, (1,) * rank)
    key = f"{series}{rank}"
    if key in _TABLES:
        a, d = _TABLES[key]
        return CartanType(series, rank, a, d)
    raise ConfigError(f"Cartan type {name!r} is not shipped (A_n, B2, G2 are)")


def height(beta):
    return sum(beta)


def is_nonneg(beta):
    return all(c >= 0 for c in beta)


def euler_form(ct, mu, nu):
    """Bilinear extension of the generator table to the root lattice."""
    n = ct.rank
    return sum(mu[i] * nu[j] * ct.euler(i, j) for i in range(n) for j in range(n)
               if mu[i] and nu[j])


def toral_char(ct, mu, nu):
    """r^{<mu,nu>} s^{-<nu,mu>}, the ubiquitous structure monomial."""
    return Scalar.monomial(euler_form(ct, mu, nu), -euler_form(ct, nu, mu))


def q_number(n, v):
    if n < 0:
        raise BadIndex("q_number needs n >= 0")
    out, p = ZERO, ONE
    for _ in range(n):
        out = out + p
        p = p * v
    return out


@lru_cache(maxsize=None)
def _q_factorial(n, v):
    out = ONE
    for k in range(1, n + 1):
        out = out * q_number(k, v)
    return out


def q_factorial(n, v):
    return _q_factorial(n, Scalar(v))


def q_binomial(n, k, v):
    if k < 0 or k > n:
        raise BadIndex(f"binomial({n}, {k}) needs 0 <= k <= n")
    v = Scalar(v)
    return _q_factorial(n, v) / (_q_factorial(k, v) * _q_factorial(n - k, v))


def serre_coefficient(ct, i, j, k):
    """c_ij^k = (r_i s_i^-1)^{k(k-1)/2} r^{k<j,i>} s^{-k<i,j>}."""
    if i == j or not (0 <= i < ct.rank and 0 <= j < ct.rank):
        raise BadIndex(f"serre_coefficient needs distinct indices, got {i}, {j}")
    if not 0 <= k <= 1 - ct.cartan_matrix[i][j]:
        raise BadIndex(f"k={k} outside 0..{1 - ct.cartan_matrix[i][j]}")
    di = ct.d[i]
    e = k * (k - 1) // 2
    return Scalar.monomial(di * e + k * ct.euler(j, i), -di * e - k * ct.euler(i, j))


def parse_weight(text, rank):
    """``"1,0,2"`` -> (1, 0, 2)."""
    try:
        coords = tuple(int(t) for t in str(text).replace(" ", "").split(",") if t != "")
    except ValueError as exc:
        raise ConfigError(f"bad weight {text!r}") from exc
    if len(coords) != rank:
        raise ConfigError(f"weight {text!r} needs {rank} coordinates")
    return coords
