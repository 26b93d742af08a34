"""Tests for utilities module."""
