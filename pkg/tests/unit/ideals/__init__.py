"""Ideals unit tests."""
