"""Test suite for cubezeta."""
