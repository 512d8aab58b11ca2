"""Regenerate golden/ from the CLI suite (run from anywhere).

    python scripts/bless_golden.py [--check]

With --check nothing is written; differing reports are listed and the exit
status is 1.
"""

import argparse
import pathlib
import sys

from homnambu.suite import run_suite

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    golden = ROOT / "golden"
    golden.mkdir(exist_ok=True)
    bad = 0
    for name, (text, code) in run_suite(ROOT).items():
        body = f"exit: {code}\n{text}"
        path = golden / f"{name}.txt"
        if args.check:
            if not path.exists() or path.read_text() != body:
                print(f"differs: {name}")
                bad += 1
        else:
            path.write_text(body)
        print(f"{name}: exit {code}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
