"""CLI commands for hahnlab"""

from .cli import COMMANDS, CommandResult, build_parser, dispatch, exit_code_for, main, run

__all__ = [
    "COMMANDS",
    "CommandResult",
    "build_parser",
    "dispatch",
    "exit_code_for",
    "main",
    "run",
]
