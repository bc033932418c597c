"""Exact-arithmetic verification engine for blowup-surface lattice data,
cylinder pairing tables, base-locus elimination towers and quartic branch
divisors on rational normal scrolls."""

__version__ = "0.1.0"
