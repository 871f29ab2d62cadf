"""Rings unit tests."""
