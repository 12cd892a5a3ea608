#!/usr/bin/env python3
"""
Cubic surface analyzer entry point.

Runs the command line front end without installing the package, for
example ``python main.py analyze "x^3 + y^3 + z^3 + 5*w^3" --prime 5``.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from cubicbrauer.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
