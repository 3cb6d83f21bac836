"""Keeps the tests directory importable so modules can share helpers.py."""
