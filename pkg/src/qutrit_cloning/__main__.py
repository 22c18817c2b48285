"""Run the CLI via `python -m qutrit_cloning`."""

import sys

from .cli import main

sys.exit(main())
