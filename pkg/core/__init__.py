"""Algebra engine and shared CLI services."""
