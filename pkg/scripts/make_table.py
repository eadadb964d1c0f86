#!/usr/bin/env python3
"""Recompute the benchmark iteration-count table and print it.

Equivalent to `intercept table`; kept as a script for quick experiment runs.
"""

import sys

from intercept.cli import main

if __name__ == "__main__":
    sys.exit(main(["table", *sys.argv[1:]]))
