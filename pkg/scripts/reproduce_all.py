"""Run every verification check and write a JSON report."""

import argparse
import json

from tatemassey import reports


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=reports.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=reports.DEFAULT_SAMPLES)
    p.add_argument("--out", default="reproduce.json")
    args = p.parse_args()
    checks = reports.reproduce(args.seed, args.samples)
    for c in checks:
        print(f"{c['name']:28s} {c['status']}")
    with open(args.out, "w") as fh:
        json.dump({"schema": 1, "checks": checks}, fh, sort_keys=True, indent=2)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
