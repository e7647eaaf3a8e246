"""
Command-line interface for dyaniso.
"""

from .main import main

__all__ = ["main"]
