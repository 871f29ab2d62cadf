"""Localizations unit tests."""
