"""Replay runner, session service, and CLI over the wire protocol."""

from .driver import SessionDriver
from .replay import run_replay
from .server import run_serve, serve

__all__ = ["SessionDriver", "run_replay", "run_serve", "serve"]
