"""Flip the sign of the e'' f constant term and show which suites notice."""

import argparse

from kashiwara.verify import SUITES, Config, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="A1")
    ap.add_argument("--height", type=int, default=3)
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()
    for name in SUITES:
        rows = []
        for sign in (1, -1):
            cfg = Config(type=args.type, height=args.height, depth=args.depth,
                         samples=10, delta_sign=sign).validate()
            rows.append(run_suite(name, cfg))
        clean, mutated = rows
        fails = mutated.failures
        line = f"{name:10s} clean {'pass' if clean.passed else 'FAIL'}  mutated "
        line += f"{len(fails)} failures" if fails else "pass"
        print(line)
        if fails:
            e = fails[0]
            print(f"    {e.identity} [{e.instance}]: {e.witness[:100]}")


if __name__ == "__main__":
    main()
