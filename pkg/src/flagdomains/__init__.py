"""Combinatorics and exact geometry of flag domains for Sp(2n,R), SO*(2n),
SO(p,q) and Sp(2p,2q)."""
from .weyl_core import SignedPermutation, WeylFamily, parse
from .real_forms import RealForm, parse_form, so_pq, so_star, sp2n_r, sp_pq

__all__ = ["SignedPermutation", "WeylFamily", "parse", "RealForm", "parse_form",
           "so_pq", "so_star", "sp2n_r", "sp_pq"]
