"""Tests for multireg."""
