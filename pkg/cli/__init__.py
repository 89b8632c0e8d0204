"""Command-line interface for the fuzzy treadmill harness."""
