#!/usr/bin/env python3
"""Build a browsable demo site from the bundled 12-paper fixture conference.

Usage:
    python3 scripts/build_demo_site.py [--out DIR] [--seed N] [--perplexity P]

Equivalent to `confsite build --in tests/fixtures/conf12 --out DIR`, kept as a
one-command entry point for trying the generator end to end. Serve the result
with `python3 -m http.server --directory DIR`.
"""

import argparse
import logging
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from confsite.cli import main  # noqa: E402


def run() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(ROOT / "demo_site"))
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--perplexity", type=float, default=4.0)
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    main(
        [
            "build",
            "--in",
            str(ROOT / "tests" / "fixtures" / "conf12"),
            "--out",
            args.out,
            "--seed",
            str(args.seed),
            "--perplexity",
            str(args.perplexity),
        ],
        standalone_mode=False,
    )
    print(f"demo site written to {args.out}")


if __name__ == "__main__":
    run()
