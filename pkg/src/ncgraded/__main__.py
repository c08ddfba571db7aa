"""Allow ``python -m ncgraded``."""

from .cli import main

raise SystemExit(main())
