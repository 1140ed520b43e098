"""Entry point for ``python -m dronetco``."""

from .cli import console_main

console_main()
