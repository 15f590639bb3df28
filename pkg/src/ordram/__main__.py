"""Module entry point: python -m ordram."""

import sys

from ordram.cli import main

if __name__ == "__main__":
    sys.exit(main())
