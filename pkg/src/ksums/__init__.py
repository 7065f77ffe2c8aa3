"""Exact Kloosterman-sum machinery over GF(2^r).

Character sums, orthogonal-group double cosets, the binary trace codes they
cut out, and recursive formulas for power moments of (2-dimensional)
Kloosterman sums, all in exact integer/rational arithmetic with brute-force
oracles at desk scale.
"""

from ksums.field import binary_field, FieldParams

__all__ = ["binary_field", "FieldParams"]
__version__ = "0.1.0"
