"""Utility scripts for the cathedral package."""
