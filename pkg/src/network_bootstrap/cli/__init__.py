"""Sub-command wiring for the network-bootstrap CLI."""

from .bootstrap_commands import attach_bootstrap_subparser, handle_bootstrap_command
from .graph_commands import GRAPH_COMMANDS, attach_graph_subparsers, handle_graph_command
from .simulate_commands import attach_simulate_subparsers, handle_simulate_command

__all__ = [
    "GRAPH_COMMANDS",
    "attach_bootstrap_subparser",
    "attach_graph_subparsers",
    "attach_simulate_subparsers",
    "handle_bootstrap_command",
    "handle_graph_command",
    "handle_simulate_command",
]
