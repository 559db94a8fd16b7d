"""Configuration and the suite dispatcher behind ``kashiwara verify``."""

from __future__ import annotations

import configparser
import random
from dataclasses import dataclass, field, fields, replace

from .algebra import get_algebras, verify_commutation_lemma, verify_relations
from .canonical import verify_basis_independence, verify_c_tilde, verify_casimir_commutation
from .canonical import verify_lemma51, verify_prop51, weights_up_to
from .category_o import sample_weights, verify_category_o
from .errors import ConfigError, KashiwaraError
from .hopf import verify_hopf
from .pairing import gram_matrix, verify_pairing_properties, verify_split_orders
from .projector import verify_theorem61
from .report import Report
from .rootdata import cartan_type, parse_weight

SUITES = ("relations", "hopf", "pairing", "lemma51", "prop51", "casimir", "thm61", "categoryO")
SHIPPED_TYPES = ("A1", "A2", "B2", "G2")
MAX_HEIGHT = 6


@dataclass(frozen=True)
class Config:
    type: str = "A1"
    height: int = 3
    depth: int = 4
    lambdas: tuple = field(default=())
    seed: int = 0
    samples: int = 50
    delta_sign: int = 1

    def validate(self):
        if self.type.upper() not in SHIPPED_TYPES:
            raise ConfigError(f"type must be one of {', '.join(SHIPPED_TYPES)}, got {self.type!r}")
        if not 0 <= self.height < MAX_HEIGHT:
            raise ConfigError(f"height must be in 0..{MAX_HEIGHT - 1}, got {self.height}")
        if not 1 <= self.depth <= MAX_HEIGHT:
            raise ConfigError(f"depth must be in 1..{MAX_HEIGHT}, got {self.depth}")
        if self.delta_sign not in (1, -1):
            raise ConfigError("delta_sign must be 1 or -1")
        if self.samples < 0:
            raise ConfigError("samples must be non-negative")
        rank = cartan_type(self.type).rank
        for lam in self.lambdas:
            if len(lam) != rank:
                raise ConfigError(f"lambda {lam} needs {rank} coordinates")
        return self

    @property
    def cartan(self):
        return cartan_type(self.type)

    def algebras(self):
        return get_algebras(self.cartan, MAX_HEIGHT, self.delta_sign)

    def sample_lambdas(self):
        return list(self.lambdas) or sample_weights(self.cartan.rank)

    def as_dict(self):
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["lambdas"] = [",".join(map(str, lam)) for lam in self.sample_lambdas()]
        return d


_INT_KEYS = {"height", "depth", "seed", "samples", "delta_sign"}


def _coerce(key, value, rank_hint):
    if key in _INT_KEYS:
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if key == "type":
        return str(value).strip().upper()
    if key in ("lambda", "lambdas"):
        parts = [p for p in str(value).split(";") if p.strip()]
        return tuple(parse_weight(p, rank_hint(parts[0])) for p in parts)
    raise ConfigError(f"unknown config key {key!r}")


def load_config_file(path):
    """Read ``key = value`` lines (no section header needed)."""
    parser = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[config]\n" + fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    except configparser.Error as exc:
        raise ConfigError(f"bad config file {path}: {exc}") from None
    return dict(parser["config"])


def make_config(file_values=None, **flags):
    """Defaults, overridden by file values, overridden by flags (None = unset)."""
    merged = {}
    for source in (file_values or {}, {k: v for k, v in flags.items() if v is not None}):
        merged.update(source)
    typ = str(merged.get("type", Config.type)).strip().upper()
    kwargs = {}
    for key, value in merged.items():
        if key == "type":
            continue
        coerced = _coerce(key, value, lambda part: len(part.split(",")))
        kwargs["lambdas" if key == "lambda" else key] = coerced
    try:
        cfg = replace(Config(type=typ), **kwargs)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None
    try:
        return cfg.validate()
    except KashiwaraError as exc:
        raise ConfigError(str(exc)) from None


# -- suites ------------------------------------------------------------------------


def _suite_relations(cfg, alg):
    r = verify_relations(alg)
    return r.extend(verify_commutation_lemma(alg, 3))


def _suite_hopf(cfg, alg):
    return verify_hopf(alg, cfg.samples, cfg.seed)


def _suite_pairing(cfg, alg):
    r = verify_pairing_properties(alg, cfg.height)
    rng = random.Random(cfg.seed)
    pairs = []
    weights = weights_up_to(alg.n, cfg.height, 1)
    for _ in range(4 * cfg.samples if weights else 0):
        beta = rng.choice(weights)
        word = [i for i, c in enumerate(beta) for _ in range(c)]
        xw, yw = word[:], word[:]
        rng.shuffle(xw)
        rng.shuffle(yw)
        pairs.append((tuple(xw), tuple(yw)))
    bad = verify_split_orders(alg, pairs)
    r.add("split-order", "pairing independent of recursion order",
          f"{len(pairs)} random word pairs", not bad, bad)
    return r


def _suite_lemma51(cfg, alg):
    return verify_lemma51(alg, cfg.height)


def _suite_prop51(cfg, alg):
    r = verify_prop51(alg, cfg.height)
    r.extend(verify_c_tilde(alg, cfg.height))
    rng = random.Random(cfg.seed)
    for beta in weights_up_to(alg.n, cfg.height, 1):
        k = gram_matrix(alg, beta).dimension
        perms = [tuple(rng.sample(range(k), k)) for _ in range(2)]
        ok = all(verify_basis_independence(alg, beta, perms))
        r.add("basis-independent", "C_beta independent of basis", f"beta={beta}", ok,
              f"permutations {perms}")
    return r


def _suite_casimir(cfg, alg):
    return verify_casimir_commutation(alg, cfg.height)


def _suite_thm61(cfg, alg):
    return verify_theorem61(alg, cfg.height)


def _suite_category_o(cfg, alg):
    return verify_category_o(alg, cfg.sample_lambdas(), cfg.depth, cfg.seed)


_RUNNERS = {
    "relations": _suite_relations,
    "hopf": _suite_hopf,
    "pairing": _suite_pairing,
    "lemma51": _suite_lemma51,
    "prop51": _suite_prop51,
    "casimir": _suite_casimir,
    "thm61": _suite_thm61,
    "categoryO": _suite_category_o,
}


def run_suite(name, cfg):
    if name not in _RUNNERS:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    alg = cfg.algebras()
    report = _RUNNERS[name](cfg, alg)
    report.suite = name
    report.config = cfg.as_dict()
    return report


def run_verify(suite, cfg):
    """Run one suite or all of them (in canonical order) and return a Report."""
    cfg.validate()
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in _RUNNERS:
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    if len(names) == 1:
        return run_suite(names[0], cfg)
    merged = Report("all", cfg.as_dict())
    for name in names:
        for e in run_suite(name, cfg).entries:
            merged.add(f"{name}/{e.identity}", e.anchor, e.instance, e.passed, e.witness)
    return merged
