"""Apps unit tests."""
