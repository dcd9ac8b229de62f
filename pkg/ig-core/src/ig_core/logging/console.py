# src/ig_core/logging/console.py

"""Console logging shared by every package.

Progress lines go to stderr so that stdout only ever carries reports.
"""

from rich.console import Console
from rich.markup import escape

console = Console(stderr=True, highlight=False)

_state = {"verbose": False}


def set_verbose(enabled: bool) -> None:
    _state["verbose"] = enabled


def is_verbose() -> bool:
    return _state["verbose"]


def log_step(message: str) -> None:
    """Prints a `--- message` progress line when verbose logging is on."""
    if _state["verbose"]:
        console.print(f"--- {message}", markup=False)


def warn(message: str) -> None:
    console.print(f"[yellow]WARNING:[/yellow] {escape(message)}", soft_wrap=True)
