"""Allow running as `python -m perfectlab`."""

from .app import main

main()
