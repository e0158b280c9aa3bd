"""Constants for GAFSV."""
VERSION: str = "0.1.0"
