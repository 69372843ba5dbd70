"""Hopf monoids in species and the substitution construction."""
