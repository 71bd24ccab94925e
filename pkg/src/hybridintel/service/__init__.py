"""Judgment collection service and its durable store."""

from .app import JudgmentIn, create_app
from .store import JudgmentStore

__all__ = ["JudgmentIn", "JudgmentStore", "create_app"]
