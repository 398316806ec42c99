"""Unit tests."""


