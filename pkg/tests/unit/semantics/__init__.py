"""Semantics unit tests."""
