"""CLI adapter."""
