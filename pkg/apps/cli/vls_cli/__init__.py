"""Command-line front end: cluster, bench and verify."""
