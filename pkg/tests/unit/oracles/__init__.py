"""Oracles unit tests."""
