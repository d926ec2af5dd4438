"""Exact checks of the finite algebra on the blowup of E x E at three points,
E: y^2 = x^3 - 1: NS lattice identities, Higgs complexes of the rank-3
local system, L2 local models, and Kuenneth projectors in cohomology."""

__version__ = "0.1.0"
