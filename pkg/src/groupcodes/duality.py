"""Dual codes of group-algebra ideals, computed block by block.

For each block kind the dual of an ideal spec is again an ideal spec, and
the transformation is an explicit involution on the per-slot labels.  The
bilinear form is the coefficientwise pairing on the group algebra; in
hermitian mode the second argument is twisted by the conjugation of the
quadratic subfield pair.
"""

from __future__ import annotations

import itertools
import math

from .fields import (
    DEFAULT_FIELD_BUDGET,
    ZERO,
    FieldTable,
    build_field,
    split_prime_power,
)
from .polyfactor import CONJ_FIXED, CROSS_FIXED, FREE, RECIP_FIXED
from .dihedral_algebra import (
    C2_BLOCK,
    EUCLIDEAN,
    FIELD_PAIR,
    HERMITIAN,
    RECIP_PAIR,
    SELFREC,
    Block,
    Decomposition,
)
from .quaternion_algebra import (
    B_PAIR,
    B_SELFREC_SKEW,
    B_SELFREC_SPLIT,
    B_UNIT,
)
from .ideals_codes import slot_ideal_options, spec_contains

_C2_DUAL = {"zero": "full", "mid": "mid", "full": "zero"}


class NotSelfOrthogonalError(ValueError):
    """The chosen ideal is not contained in its dual."""


def _line(F: FieldTable, v0: int, v1: int):
    """Ideal label of the rank-one ideal with row direction (v0, v1)."""
    if v0 == ZERO:
        assert v1 != ZERO, "a line needs a nonzero direction"
        return "e01"
    return ("row", F.div(v1, v0))


def _row_lam(ideal):
    return ideal[1]


# ---------------------------------------------------------------------------
# per-block dual maps


def _dual_field_pair(ideals):
    return tuple("full" if x == "zero" else "zero" for x in ideals)


def _dual_selfrec_euclid(F: FieldTable, t: int, x):
    if x == "zero":
        return "full"
    if x == "full":
        return "zero"
    two = F.from_prime_scalar(2)
    if x == "e01":
        return _line(F, two, F.neg(t))
    lam = _row_lam(x)
    v0 = F.add(t, F.mul(two, lam))
    v1 = F.neg(F.add(two, F.mul(t, lam)))
    return _line(F, v0, v1)


def _dual_recip_pair_euclid(F: FieldTable, x):
    if x == "zero":
        return "full"
    if x == "full":
        return "zero"
    if x == "e01":
        return "e01"
    return ("row", F.neg(_row_lam(x)))


def _dual_recip_fixed(F: FieldTable, q: int, r: int, t: int, ideals):
    x, y = ideals

    def to_second(v):       # lands in the conjugated slot
        if v == "zero":
            return "full"
        if v == "full":
            return "zero"
        two = F.from_prime_scalar(2)
        if v == "e01":
            return _line(F, two, F.neg(F.pow(t, q)))
        lam = _row_lam(v)
        v0 = F.add(F.mul(two, lam), t)
        v1 = F.neg(F.add(two, F.mul(t, lam)))
        return _line(F, F.pow(v0, q), F.pow(v1, q))

    def to_first(v):        # comes back from the conjugated slot
        if v == "zero":
            return "full"
        if v == "full":
            return "zero"
        two = F.from_prime_scalar(2)
        if v == "e01":
            return _line(F, two, F.neg(t))
        lam = F.pow(_row_lam(v), q ** (r - 1))
        v0 = F.add(F.mul(two, lam), t)
        v1 = F.neg(F.add(two, F.mul(t, lam)))
        return _line(F, v0, v1)

    return (to_first(y), to_second(x))


def _dual_conj_fixed(F: FieldTable, q: int, r: int, x):
    if x == "zero":
        return "full"
    if x == "full":
        return "zero"
    if x == "e01":
        return "e01"
    return ("row", F.neg(F.pow(_row_lam(x), q ** r)))


def _dual_cross_fixed(F: FieldTable, q: int, r: int, x):
    if x == "zero":
        return "full"
    if x == "full":
        return "zero"
    if x == "e01":
        return ("row", ZERO)
    lam = _row_lam(x)
    if lam == ZERO:
        return "e01"
    return _line(F, F.neg(F.pow(lam, q ** r)), F.one)


def _dual_free(F: FieldTable, q: int, r: int, ideals):
    x, y = ideals

    def flip(v, e):
        if v == "zero":
            return "full"
        if v == "full":
            return "zero"
        if v == "e01":
            return "e01"
        return ("row", F.neg(F.pow(_row_lam(v), e)))

    return (flip(y, q ** (2 * r - 1)), flip(x, q))


def _dual_b_side(x):
    if x == "zero":
        return "full"
    if x == "full":
        return "zero"
    return x


def dual_block(dec: Decomposition, block: Block, ideals: tuple) -> tuple:
    """Dual of one block's slot-ideal tuple under the algebra's pairing."""
    F = dec.F
    kind = block.kind
    if kind == FIELD_PAIR:
        return _dual_field_pair(ideals)
    if kind == C2_BLOCK:
        return (_C2_DUAL[ideals[0]],)
    if kind == B_UNIT:
        return _dual_field_pair(ideals)
    if kind in (B_SELFREC_SPLIT, B_SELFREC_SKEW, B_PAIR):
        return (_dual_b_side(ideals[0]),)
    if kind == SELFREC:
        return (_dual_selfrec_euclid(F, block.data["t"], ideals[0]),)
    if kind == RECIP_PAIR:
        return (_dual_recip_pair_euclid(F, ideals[0]),)
    q, r = dec.q, block.data.get("r")
    if kind == RECIP_FIXED:
        return _dual_recip_fixed(F, q, r, block.data["t"], ideals)
    if kind == CONJ_FIXED:
        return (_dual_conj_fixed(F, q, r, ideals[0]),)
    if kind == CROSS_FIXED:
        return (_dual_cross_fixed(F, q, r, ideals[0]),)
    if kind == FREE:
        return _dual_free(F, q, r, ideals)
    raise ValueError(f"unknown block kind {kind!r}")


def _block_ideals(dec: Decomposition, spec):
    pos = 0
    for block in dec.blocks:
        k = len(block.slots)
        yield block, tuple(spec[pos:pos + k])
        pos += k


def dual_spec(dec: Decomposition, spec) -> tuple:
    """Spec of the dual code, under the pairing the algebra was built for."""
    out: list = []
    for block, ideals in _block_ideals(dec, spec):
        out.extend(dual_block(dec, block, ideals))
    return tuple(out)


# ---------------------------------------------------------------------------
# self-orthogonality


def is_self_orthogonal(dec: Decomposition, spec) -> tuple[bool, int | None]:
    """Whether the ideal sits inside its own dual; on failure, which block."""
    for i, (block, ideals) in enumerate(_block_ideals(dec, spec)):
        if not spec_contains(dual_block(dec, block, ideals), ideals):
            return False, i
    return True, None


def selforth_block_options(dec: Decomposition, block: Block) -> list[tuple]:
    """All self-orthogonal slot-ideal tuples for one block."""
    options = [slot_ideal_options(s) for s in block.slots]
    out = []
    for ideals in itertools.product(*options):
        if spec_contains(dual_block(dec, block, ideals), ideals):
            out.append(ideals)
    return out


def enumerate_selforth(dec: Decomposition):
    """Iterate over every self-orthogonal ideal spec."""
    per_block = [selforth_block_options(dec, b) for b in dec.blocks]
    for combo in itertools.product(*per_block):
        yield tuple(itertools.chain.from_iterable(combo))


def count_selforth(dec: Decomposition) -> int:
    """Closed-form count of self-orthogonal ideals."""
    p = split_prime_power(dec.Q)[0]
    total = 1
    for block in dec.blocks:
        kind = block.kind
        m = block.slots[0].field.q
        if kind in (FIELD_PAIR, B_UNIT):
            f = 1
        elif kind == C2_BLOCK:
            f = 2
        elif kind == SELFREC:
            # char 2 drops the 2lam term, fixing every proper ideal; odd
            # characteristic demands lam^2 + t*lam + 1 = 0, insoluble in K
            f = m + 2 if p == 2 else 1
        elif kind == RECIP_PAIR:
            # odd characteristic pins lam = -lam; char 2 fixes every line
            f = m + 2 if p == 2 else 3
        elif kind in (B_SELFREC_SPLIT, B_SELFREC_SKEW, B_PAIR):
            f = m + 2
        elif kind == RECIP_FIXED:
            f = 3 * m + 6
        elif kind in (CONJ_FIXED, CROSS_FIXED):
            f = math.isqrt(m) + 2
        elif kind == FREE:
            f = 3 * m + 6
        else:
            raise ValueError(f"unknown block kind {kind!r}")
        total *= f
    return total


# ---------------------------------------------------------------------------
# the scalar equations behind the rank-one self-orthogonal labels


LAMBDA_KINDS = ("neg_conj", "neg_inv_conj", "inv_conj")


def lambda_solution_set(kind: str, q: int, r: int, *,
                        budget: int = DEFAULT_FIELD_BUDGET):
    """Solutions x in GF(q^{2r}) of one of the three conjugation equations.

    neg_conj       x + x^{q^r} = 0        (odd characteristic, q^r many)
    neg_inv_conj   x * x^{q^r} = -1       (odd characteristic, q^r + 1 many)
    inv_conj       x * x^{q^r} = 1        (characteristic two, q^r + 1 many)

    Returns the subfield GF(q^{2r}) inside a fresh master field together
    with the sorted solution list.
    """
    if kind not in LAMBDA_KINDS:
        raise ValueError(f"unknown equation kind {kind!r}")
    p, e = split_prime_power(q)
    if kind == "inv_conj":
        if p != 2:
            raise ValueError("inv_conj is the characteristic-two equation")
    elif p == 2:
        raise ValueError(f"{kind} needs odd characteristic")
    F = build_field(p, 2 * r * e, budget=budget)
    K = F.subfield(q ** (2 * r))
    qr = q ** r
    sols = []
    for x in K.elements():
        if kind == "neg_conj":
            ok = F.add(x, F.pow(x, qr)) == ZERO
        elif kind == "neg_inv_conj":
            ok = x != ZERO and F.mul(x, F.pow(x, qr)) == F.minus_one
        else:
            ok = x != ZERO and F.mul(x, F.pow(x, qr)) == F.one
        if ok:
            sols.append(x)
    expected = qr if kind == "neg_conj" else qr + 1
    assert len(sols) == expected, "solution census disagrees with the count"
    return K, sols
