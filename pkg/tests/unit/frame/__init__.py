"""Frame unit tests."""
