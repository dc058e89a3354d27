"""Subcommands of the vls-bench CLI."""

from . import bench, cluster, verify

COMMANDS = [cluster, bench, verify]

__all__ = ["COMMANDS", "cluster", "bench", "verify"]
