"""Allow ``python -m src.reporting``."""

import sys

from .cli import main

sys.exit(main())
