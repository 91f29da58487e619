"""Test suite for the cathedral package."""
