"""Integration tests."""


