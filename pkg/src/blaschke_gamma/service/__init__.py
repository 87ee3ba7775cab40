"""HTTP service and the command handlers it shares with the CLI.

``app`` lives in :mod:`blaschke_gamma.service.app` (import it lazily so
the CLI does not pay the web-framework import cost).
"""
from . import handlers, models  # noqa: F401
