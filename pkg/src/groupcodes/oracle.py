"""Slow reference implementations used to cross-check the structured routes.

Everything here works straight from the group presentation and brute-force
linear algebra: multiplication is coefficient convolution against a group
multiplication table, duals come from nullspaces of inner-product matrices,
and ideal membership is checked by closing a row space under left
translation.  None of it knows about block decompositions, which is the
point — agreement with the closed-form modules is evidence, not tautology.

Coordinate convention (shared contract with the structured modules): the
element a^i b^j of a dihedral group of rotation order n sits at index
j*n + i, i.e. columns run 1, a, ..., a^(n-1), b, ab, ..., a^(n-1) b.  For the
generalised quaternion group of order 4n the rotation has order 2n and the
same rule gives index j*2n + i.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .fields import ZERO, Subfield


# ---------------------------------------------------------------------------
# group multiplication tables


def dihedral_mul_table(n: int) -> np.ndarray:
    """table[g, h] = index of the product gh in the dihedral group D_n."""
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    for g in range(size):
        i1, j1 = g % n, g // n
        for h in range(size):
            i2, j2 = h % n, h // n
            i = (i1 - i2) % n if j1 else (i1 + i2) % n
            table[g, h] = ((j1 + j2) % 2) * n + i
    return table


def quaternion_mul_table(n: int) -> np.ndarray:
    """table[g, h] = index of gh in the generalised quaternion group of order 4n.

    Presentation: rotation a of order 2n, b^2 = a^n, b a b^(-1) = a^(-1).
    """
    m = 2 * n
    size = 2 * m
    table = np.empty((size, size), dtype=np.int64)
    for g in range(size):
        i1, j1 = g % m, g // m
        for h in range(size):
            i2, j2 = h % m, h // m
            i = (i1 - i2) % m if j1 else (i1 + i2) % m
            if j1 and j2:
                i = (i + n) % m  # b^2 = a^n
            table[g, h] = ((j1 + j2) % 2) * m + i
    return table


def left_translation(table: np.ndarray, g: int) -> np.ndarray:
    """Permutation p with p[h] = index of g*h (left ideals are closed under it)."""
    return table[g]


# ---------------------------------------------------------------------------
# algebra operations by convolution


def group_mul(sub: Subfield, table: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Product of two algebra elements given as alphabet-index vectors."""
    F = sub.master
    size = table.shape[0]
    vals = [sub.element(i) for i in range(sub.q)]
    w = [ZERO] * size
    for g in range(size):
        ug = vals[int(u[g])]
        if ug == ZERO:
            continue
        row = table[g]
        for h in range(size):
            vh = vals[int(v[h])]
            if vh == ZERO:
                continue
            k = int(row[h])
            w[k] = F.add(w[k], F.mul(ug, vh))
    return np.array([sub.index(x) for x in w], dtype=np.int32)


def translate_vector(table: np.ndarray, g: int, u: np.ndarray) -> np.ndarray:
    """Coefficient vector of g*u for a basis group element g."""
    out = np.empty_like(u)
    perm = table[g]
    for h in range(len(u)):
        out[perm[h]] = u[h]
    return out


def is_left_ideal(sub: Subfield, table: np.ndarray, basis: np.ndarray) -> bool:
    """Whether the row space is closed under left multiplication by the group.

    Closure under the two generators (a at index 1, b at index n) suffices.
    """
    if basis.shape[0] == 0:
        return True
    size = table.shape[0]
    gens = (1, size // 2)
    R, piv = linalg.rref(sub, basis)
    for g in gens:
        for row in basis:
            if not linalg.in_row_space(sub, R, piv, translate_vector(table, g, row)):
                return False
    return True


# ---------------------------------------------------------------------------
# duals as nullspaces


def euclid_dual_basis(sub: Subfield, basis: np.ndarray) -> np.ndarray:
    """RREF basis of {v : sum_g u_g v_g = 0 for all u in the row space}."""
    return linalg.nullspace(sub, basis)


def hermitian_dual_basis(sub: Subfield, basis: np.ndarray, q: int) -> np.ndarray:
    """RREF basis of {v : sum_g u_g v_g^q = 0}; q is the conjugation root.

    v is hermitian-orthogonal to everything iff its entrywise q-th power is
    euclidean-orthogonal, so conjugate the euclidean nullspace back.
    """
    null = linalg.nullspace(sub, basis)
    return linalg.row_basis(sub, linalg.entrywise_pow(sub, null, q))
