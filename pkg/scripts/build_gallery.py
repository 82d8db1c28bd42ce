#!/usr/bin/env python3
"""Render the full tip gallery to an SVG file.

Thin wrapper over ``arrowtips gallery`` for people poking at the repo;
all arguments after the output path are widths.

    python3 scripts/build_gallery.py out.svg 0.4 0.8 1.6
"""

import sys

from arrowtips.cli import main


def run(argv: list[str]) -> int:
    if not argv:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    out, *widths = argv
    args = ["gallery", "--out", out]
    if widths:
        args += ["--widths", ",".join(widths)]
    return main(args)


if __name__ == "__main__":
    raise SystemExit(run(sys.argv[1:]))
