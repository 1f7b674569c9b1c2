"""Structured group-algebra codes over finite fields.

Tools for decomposing the group algebras of dihedral and generalised
quaternion groups into matrix blocks, classifying their one-sided ideals as
linear codes, computing euclidean/hermitian duals in closed form, counting
and enumerating self-orthogonal ideals, and deriving quantum CSS parameters
from hermitian self-orthogonal codes.
"""

__version__ = "0.1.0"
