"""Command-line workbench: ``kashiwara VERB [options]``.

Exit codes: 0 on success (or all checks passing), 1 when a verification
fails, 2 for configuration, syntax or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import casimir, fmt_w
from .category_o import VermaModule, kernel, simplicity_probe, verify_decomposition
from .dsl import element_to_json, format_element, format_tensor, parse_expression
from .errors import KashiwaraError
from .hopf import antipode, coproduct, phi
from .pairing import dual_basis, gram_matrix, pair
from .projector import gamma, gamma_sl2_closed
from .report import Report
from .rootdata import parse_weight
from .verify import SUITES, load_config_file, make_config, run_verify


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--type", help="Cartan type: A1, A2, B2 or G2 (default A1)")
    p.add_argument("--height", type=int, help="truncation height L (default 3)")
    p.add_argument("--depth", type=int, help="module depth D (default 4)")
    p.add_argument("--lambda", dest="lam", help="weight as simple-root coordinates, e.g. 1,0")
    p.add_argument("--seed", type=int, help="seed for randomized instances")
    p.add_argument("--samples", type=int, help="number of random instances")
    p.add_argument("--config", help="file of key = value lines")
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="kashiwara", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--parent", choices=("U", "B", "Bbar"))

    p = sub.add_parser("pair", parents=[common], help="skew Hopf pairing <x, y>")
    p.add_argument("x")
    p.add_argument("y")

    for verb, text in (("gram", "Gram matrix of a weight space"),
                       ("dual", "dual basis of a weight space")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("args", nargs="+", metavar="[TYPE] BETA")

    p = sub.add_parser("coprod", parents=[common], help="coproduct of an expression")
    p.add_argument("expr")
    p.add_argument("--variant", default="std", choices=("std", "right", "left", "bottom"))

    p = sub.add_parser("antipode", parents=[common], help="S or S^-1 of an expression")
    p.add_argument("expr")
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("phi", parents=[common], help="the anti-isomorphism B-bar -> B")
    p.add_argument("expr")

    p = sub.add_parser("gamma", parents=[common], help="grades of the extremal projector")
    p.add_argument("--closed-form", action="store_true", help="rank-one closed form (A1 only)")

    sub.add_parser("casimir", parents=[common], help="grades of the Casimir element")

    p = sub.add_parser("verma", parents=[common], help="truncated module H(lambda)")
    p.add_argument("--verify", choices=("none", "kernel", "decomposition", "simplicity", "all"),
                   default="none")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--mutate", action="store_true",
                   help="flip the sign of the constant term of the e'' f relation")
    return parser


def _config(args, **extra):
    file_values = load_config_file(args.config) if args.config else {}
    return make_config(file_values, type=args.type, height=args.height, depth=args.depth,
                       seed=args.seed, samples=args.samples,
                       **({"lambda": args.lam} if args.lam else {}), **extra)


def _emit(args, text, data):
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _tensor_json(t):
    return {"parents": [p.name for p in t.parents], "text": format_tensor(t)}


def _matrix_text(rows):
    cells = [[str(c) for c in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def _weight_args(args):
    if len(args.args) > 2:
        raise KashiwaraError("expected [TYPE] BETA")
    if len(args.args) == 2:
        args.type = args.type or args.args[0]
    return args.args[-1]


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except KashiwaraError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def _dispatch(args):
    verb = args.verb
    if verb in ("gram", "dual"):
        beta_text = _weight_args(args)
    extra = {"delta_sign": -1} if getattr(args, "mutate", False) else {}
    cfg = _config(args, **extra)
    alg = cfg.algebras()

    if verb == "nf":
        x = parse_expression(args.expr, alg, args.parent)
        _emit(args, format_element(x), {"parent": x.parent.name, "terms": element_to_json(x)})
    elif verb == "pair":
        val = pair(parse_expression(args.x, alg, "U"), parse_expression(args.y, alg, "U"))
        _emit(args, str(val), {"value": str(val)})
    elif verb == "gram":
        beta = parse_weight(beta_text, alg.n)
        data = gram_matrix(alg, beta)
        words = lambda ws, k: [("*".join(f"{k}[{i + 1}]" for i in w) or "1") for w in ws]  # noqa: E731
        text = (f"beta={fmt_w(beta)} plus={words(data.plus_basis, 'e')} "
                f"minus={words(data.minus_basis, 'f')}\n" + _matrix_text(data.gram)
                + f"\ndet = {data.determinant() if data.gram else 1}")
        _emit(args, text, {"beta": list(beta), "plus_basis": words(data.plus_basis, "e"),
                           "minus_basis": words(data.minus_basis, "f"),
                           "gram": [[str(c) for c in row] for row in data.gram]})
    elif verb == "dual":
        beta = parse_weight(beta_text, alg.n)
        ys = dual_basis(alg, beta)
        lines = [f"y{r + 1} = {format_element(y)}" for r, y in enumerate(ys)]
        _emit(args, "\n".join(lines) or "(empty)",
              {"beta": list(beta), "dual": [element_to_json(y) for y in ys]})
    elif verb == "coprod":
        t = coproduct(parse_expression(args.expr, alg), args.variant)
        _emit(args, format_tensor(t), _tensor_json(t))
    elif verb == "antipode":
        x = antipode(parse_expression(args.expr, alg, "U"),
                     "S_inverse" if args.inverse else "S")
        _emit(args, format_element(x), {"terms": element_to_json(x)})
    elif verb == "phi":
        x = phi(parse_expression(args.expr, alg))
        _emit(args, format_element(x), {"terms": element_to_json(x)})
    elif verb == "gamma":
        G = gamma_sl2_closed(alg, cfg.height) if args.closed_form else gamma(alg, cfg.height)
        _emit_grades(args, G)
    elif verb == "casimir":
        _emit_grades(args, casimir(alg, cfg.height))
    elif verb == "verma":
        return _verma(args, cfg, alg)
    elif verb == "verify":
        report = run_verify(args.suite, cfg)
        sys.stdout.write(report.to_json() if args.json else report.to_text())
        return 0 if report.passed else 1
    return 0


def _emit_grades(args, trunc):
    lines = [f"grade {fmt_w(b)}: {format_element(g)}" for b, g in trunc.grades.items()]
    _emit(args, "\n".join(lines),
          {"cutoff": trunc.cutoff,
           "grades": [{"beta": list(b), "terms": element_to_json(g)}
                      for b, g in trunc.grades.items()]})


def _verma(args, cfg, alg):
    lam = cfg.lambdas[0] if cfg.lambdas else (0,) * alg.n
    M = VermaModule(alg, lam, cfg.depth)
    slices = M.slices(cfg.depth)
    K = kernel(M, cfg.depth - 1)
    data = {
        "lambda": list(lam), "depth": cfg.depth,
        "slices": [{"weight": list(w), "dimension": len(keys),
                    "basis": [M.key_str(k) for k in keys]} for w, keys in slices.items()],
        "kernel": [str(v) for v in K],
    }
    lines = [f"{M!r}"]
    lines += [f"  slice {fmt_w(w)}: dim {len(keys)}" for w, keys in slices.items()]
    lines.append("  kernel: " + ", ".join(str(v) for v in K))
    status = 0
    if args.verify != "none":
        report = Report("categoryO", cfg.as_dict())
        if args.verify in ("decomposition", "all"):
            verify_decomposition(M, cfg.depth - 1, report)
        if args.verify in ("simplicity", "all"):
            simplicity_probe(M, cfg.depth - 1, report)
        if args.verify == "kernel":
            report.add("kernel-dim", "dim K(H(lambda)) = 1", f"{M!r}", len(K) == 1, len(K))
        data["report"] = json.loads(report.to_json())
        lines.append(report.to_text())
        status = 0 if report.passed else 1
    _emit(args, "\n".join(lines), data)
    return status


if __name__ == "__main__":
    sys.exit(main())
