"""Services behind the CLI subcommands."""
