#!/usr/bin/env python3
"""
grk: graphenes, virtual links and their invariants.

    python main.py two-factor @THETA
    python main.py kinv @TREFOIL | python main.py isomorphic - k33.mg
    python main.py khovanov trefoil.gc --format kv
"""

import sys

from cli.app import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
