"""
Command implementations for the quivergeo CLI.

Each command is a BaseCommand subclass whose run() returns a RunReport.
"""

from .base import BaseCommand, RunReport, handle_command_errors
from .build import BuildCommand
from .equations import EquationsCommand
from .hilbert import HilbertCommand
from .points import PointsCommand
from .verify import VerifyCommand

COMMANDS = {
    "build": BuildCommand,
    "points": PointsCommand,
    "verify": VerifyCommand,
    "hilbert": HilbertCommand,
    "equations": EquationsCommand,
}

__all__ = [
    "COMMANDS",
    "BaseCommand",
    "RunReport",
    "handle_command_errors",
    "BuildCommand",
    "EquationsCommand",
    "HilbertCommand",
    "PointsCommand",
    "VerifyCommand",
]
