"""Atom-surface potentials under laser driving: Casimir-Polder, optical dipole and their non-additive cross term."""
