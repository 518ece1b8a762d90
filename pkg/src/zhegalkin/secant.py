"""Formal difference-operator fields and the differential of a function.

The Boolean partial derivative (`ZhegalkinPoly.partial`) is not a ring
derivation, but the operators D_1..D_n it defines still span a rank-n
module over the polynomial ring.  A `SecantElement` is one such
combination sum_i f_i*D_i; 1-forms pair with these elements through the
dual basis, where d_i(D_j) is 1 exactly when i = j.
"""

from __future__ import annotations

from .anf import ZhegalkinPoly, _check_arity, _check_index
from .forms import KForm

__all__ = ["SecantElement", "differential", "pair"]


class SecantElement:
    """A combination sum_i f_i*D_i of the n difference operators."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs):
        _check_arity(arity)
        coeffs = tuple(coeffs)
        if len(coeffs) != arity:
            raise ValueError(f"expected {arity} coefficients, got {len(coeffs)}")
        for f in coeffs:
            if not isinstance(f, ZhegalkinPoly) or f.arity != arity:
                raise ValueError(f"coefficients must be polynomials of arity {arity}")
        self.arity = arity
        self.coeffs = coeffs

    @classmethod
    def zero(cls, arity: int) -> "SecantElement":
        return cls(arity, [ZhegalkinPoly.zero(arity)] * arity)

    @classmethod
    def basis(cls, arity: int, index: int) -> "SecantElement":
        """The unit element D_index."""
        _check_arity(arity)
        _check_index(index, arity)
        coeffs = [ZhegalkinPoly.zero(arity)] * arity
        coeffs[index - 1] = ZhegalkinPoly.one(arity)
        return cls(arity, coeffs)

    def apply(self, g: ZhegalkinPoly) -> ZhegalkinPoly:
        """Act on a polynomial: sum_i f_i * (partial of g in x_i)."""
        if g.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {g.arity}")
        acc = ZhegalkinPoly.zero(self.arity)
        for i, f in enumerate(self.coeffs, start=1):
            if f.terms:
                acc = acc + f * g.partial(i)
        return acc

    def __add__(self, other):
        if not isinstance(other, SecantElement):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        return SecantElement(
            self.arity, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __eq__(self, other):
        if not isinstance(other, SecantElement):
            return NotImplemented
        return self.arity == other.arity and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.arity, self.coeffs))

    def __repr__(self):
        return f"<SecantElement n={self.arity}: {self}>"

    def __str__(self):
        parts = [
            f"({f})*D{i}" for i, f in enumerate(self.coeffs, start=1) if f.terms
        ]
        return " + ".join(parts) if parts else "0"


def differential(f: ZhegalkinPoly) -> KForm:
    """The 1-form whose coefficient at {i} is the partial of f in x_i."""
    coeffs = {}
    for i in range(1, f.arity + 1):
        df = f.partial(i)
        if df.terms:
            coeffs[1 << (i - 1)] = df
    return KForm(f.arity, 1, coeffs)


def pair(omega: KForm, phi: SecantElement) -> ZhegalkinPoly:
    """Dual pairing of a 1-form against an operator field.

    With omega = sum_i g_i*d{i} and phi = sum_i f_i*D_i this is
    sum_i g_i*f_i, so differential(f) paired with phi equals phi.apply(f).
    """
    if omega.degree != 1:
        raise ValueError(f"pairing requires a 1-form, got degree {omega.degree}")
    if omega.arity != phi.arity:
        raise ValueError(f"arity mismatch: {omega.arity} vs {phi.arity}")
    acc = ZhegalkinPoly.zero(omega.arity)
    for i, f in enumerate(phi.coeffs, start=1):
        g = omega.coeffs.get(1 << (i - 1))
        if g is not None and f.terms:
            acc = acc + g * f
    return acc
