"""Resolvent machinery for quartics, Galois certificates and permutation groups."""
