#!/usr/bin/env python
"""Main klrspecht command line script."""
import sys
from klrspecht.run_main import main


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

# -fin-
