"""Logic unit tests."""
