"""Spectra and energies of commuting conjugacy class graphs of G(p, m, n)."""
