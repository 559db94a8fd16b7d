"""Print the grades of Gamma for a type, and for A1 the closed-form comparison."""

import argparse

from kashiwara.algebra import get_algebras
from kashiwara.canonical import fmt_w
from kashiwara.dsl import format_element
from kashiwara.projector import gamma, gamma_sl2_closed
from kashiwara.rootdata import cartan_type


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="A1")
    ap.add_argument("--height", type=int, default=4)
    args = ap.parse_args()
    alg = get_algebras(cartan_type(args.type), 6)
    G = gamma(alg, args.height)
    closed = gamma_sl2_closed(alg, args.height).grades if alg.n == 1 else {}
    for beta, g in G.grades.items():
        mark = ""
        if closed:
            mark = "  [closed form agrees]" if closed[beta] == g else "  [closed form DIFFERS]"
        print(f"{fmt_w(beta)}: {format_element(g)}{mark}")


if __name__ == "__main__":
    main()
