"""Axial-distance coefficients for the seminormal actions.

The rational coefficient attached to an ordered pair of entries is the
reciprocal axial distance 1 / (ct(j) - ct(i)); its q-analogue is
(q - q^-1) / (1 - W) where W is the ratio of weighted contents
u_k q^{2 ct}.  Degenerate denominators signal parameters outside the
semisimple range and raise instead of guessing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateWeightError, PreconditionError
from .fields import QFIELD, QRat

__all__ = ["plain_axial_weight", "weighted_content", "q_axial_weight",
           "content_of"]


def plain_axial_weight(t, i, j):
    """a_{i,j}(t) = 1 / (ct(t(j)) - ct(t(i))) over the rationals."""
    if i == j:
        raise PreconditionError("axial weight needs two distinct entries")
    d = t.content(j) - t.content(i)
    if d == 0:
        raise DegenerateWeightError(
            f"entries {i} and {j} share content {t.content(i)}")
    return Fraction(1, d)


def _as_field(x, symbolic):
    if symbolic:
        return QFIELD.coerce(x)
    if isinstance(x, QRat):
        raise PreconditionError("symbolic page weight with numeric q")
    return Fraction(x)


def weighted_content(t, i, page_weights, q=None):
    """q^{2c} for the box of entry i: page weight times q^{2(col-row)}.

    With q=None the result is symbolic in q; otherwise exact rational.
    """
    k = t.component_of(i)
    ct = t.content(i)
    symbolic = q is None
    w = _as_field(page_weights[k - 1], symbolic)
    if symbolic:
        return w * QRat.q_power(2 * ct)
    q = Fraction(q)
    if q == 0:
        raise PreconditionError("q must be nonzero")
    return w * q ** (2 * ct)


def q_axial_weight(t, i, j, page_weights, q=None):
    """The q-analogue coefficient for the ordered pair (i, j)."""
    if i == j:
        raise PreconditionError("axial weight needs two distinct entries")
    symbolic = q is None
    ci = weighted_content(t, i, page_weights, q)
    cj = weighted_content(t, j, page_weights, q)
    ratio = ci / cj
    one = QFIELD.one if symbolic else Fraction(1)
    if ratio == one:
        raise DegenerateWeightError(
            f"weighted contents of {i} and {j} coincide (1 - q^(2 delta) = 0)")
    if symbolic:
        num = QFIELD.q - QFIELD.q_inv
    else:
        q = Fraction(q)
        num = q - 1 / q
    return num / (one - ratio)


def content_of(t, i, page_weights=None, q=None):
    """(plain content, weighted content) of the box holding entry i.

    With page_weights omitted, all pages carry weight 1.
    """
    if page_weights is None:
        page_weights = (1,) * t.shape.r
    return t.content(i), weighted_content(t, i, page_weights, q)
