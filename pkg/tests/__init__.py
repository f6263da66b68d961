"""Tests for laser-cp."""
