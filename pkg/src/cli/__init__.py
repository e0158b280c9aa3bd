"""Command-line interface for GAFSV."""
