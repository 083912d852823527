"""Command-line interface for glvar."""
