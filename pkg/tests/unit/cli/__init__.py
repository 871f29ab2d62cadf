"""Cli unit tests."""
