"""Numerical layer: constants and domain types, surface response, Green's tensors, laser fields, potentials, analysis."""
