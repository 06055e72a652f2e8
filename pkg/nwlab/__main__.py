"""Run the command-line driver with `python -m nwlab`."""
# __main__.py

import sys

from .cli import main

sys.exit(main())
