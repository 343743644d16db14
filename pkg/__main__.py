#!/usr/bin/env python3
"""
foldlab - Main entry point
"""

import os
import sys

# Make `src` importable when run from the checkout
root = os.path.dirname(os.path.abspath(__file__))
if root not in sys.path:
    sys.path.insert(0, root)

from src.app import main

if __name__ == "__main__":
    sys.exit(main())
