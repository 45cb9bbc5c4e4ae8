"""
urskit — entry point when running from a checkout.

Usage:
    poetry run python main.py selftest
    poetry run python main.py norm --kernel adjacency --radius 200
"""

import os
import sys

# Ensure project root is on sys.path when called from a subdirectory
ROOT = os.path.dirname(os.path.abspath(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from urskit.cli import main_entry  # noqa: E402

if __name__ == "__main__":
    main_entry()
