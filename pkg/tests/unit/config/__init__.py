"""Unit tests for configuration system."""
