"""Differential forms with Zhegalkin-polynomial coefficients.

A k-form is a map from k-element subsets of {1..n} (stored as bitmask
keys) to coefficient polynomials; absent keys are zero and zero
coefficients are dropped, so equal forms have equal coefficient maps.
Over F2 there are no signs: the wedge product is commutative, a repeated
basis index annihilates, and the exterior derivative adjoins one index at
a time via the Boolean partial derivative.
"""

from __future__ import annotations

from .anf import ZhegalkinPoly, _check_arity, indices_from_mask, mask_from_indices

__all__ = ["KForm"]


class KForm:
    """A homogeneous degree-k form over the n-variable ANF ring.

    Degree-0 forms carry a single coefficient at the empty index set and
    behave as plain polynomials (`as_poly`).  Immutable once built.
    """

    __slots__ = ("arity", "degree", "coeffs")

    def __init__(self, arity: int, degree: int, coeffs=None):
        _check_arity(arity)
        if not isinstance(degree, int) or not 0 <= degree <= arity:
            raise ValueError(f"degree {degree!r} out of range 0..{arity}")
        clean = {}
        for key, poly in (coeffs or {}).items():
            if not isinstance(key, int) or key < 0 or key >> arity:
                raise ValueError(f"index-set mask {key!r} does not fit {arity} bits")
            if key.bit_count() != degree:
                raise ValueError(
                    f"index set {set(indices_from_mask(key))} has size "
                    f"{key.bit_count()}, expected degree {degree}"
                )
            if not isinstance(poly, ZhegalkinPoly) or poly.arity != arity:
                raise ValueError(f"coefficient at {key:#b} must have arity {arity}")
            if poly.terms:
                clean[key] = poly
        self.arity = arity
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def _make(cls, arity, degree, coeffs) -> "KForm":
        w = object.__new__(cls)
        w.arity = arity
        w.degree = degree
        w.coeffs = coeffs
        return w

    @classmethod
    def zero(cls, arity: int, degree: int) -> "KForm":
        return cls(arity, degree, {})

    @classmethod
    def from_poly(cls, poly: ZhegalkinPoly) -> "KForm":
        """Wrap a polynomial as the corresponding 0-form."""
        return cls(poly.arity, 0, {0: poly})

    @classmethod
    def term(cls, poly: ZhegalkinPoly, indices) -> "KForm":
        """Single-term form: poly times the basis element for `indices`."""
        mask = mask_from_indices(indices, poly.arity)
        return cls(poly.arity, mask.bit_count(), {mask: poly})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, key) -> ZhegalkinPoly:
        """Coefficient at an index set (mask or iterable of 1-based indices)."""
        if not isinstance(key, int) or isinstance(key, bool):
            key = mask_from_indices(key, self.arity)
        if key < 0 or key >> self.arity or key.bit_count() != self.degree:
            raise ValueError(f"invalid index set for a degree-{self.degree} form")
        got = self.coeffs.get(key)
        return got if got is not None else ZhegalkinPoly.zero(self.arity)

    def as_poly(self) -> ZhegalkinPoly:
        if self.degree != 0:
            raise ValueError(f"a degree-{self.degree} form is not a polynomial")
        return self.coefficient(0)

    def _check_compatible(self, other: "KForm", *, same_degree: bool):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        if same_degree and self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree} "
                "(mixed-degree sums are not supported)"
            )

    def __add__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        self._check_compatible(other, same_degree=True)
        acc = dict(self.coeffs)
        for key, poly in other.coeffs.items():
            _accumulate(acc, key, poly)
        return KForm._make(self.arity, self.degree, acc)

    def wedge(self, other: "KForm") -> "KForm":
        """Wedge product; overlapping index sets annihilate, no signs over F2.

        If the degrees sum past the arity every index pair overlaps, so the
        result is the canonical zero form capped at degree n.
        """
        if not isinstance(other, KForm):
            raise TypeError("wedge expects a KForm")
        self._check_compatible(other, same_degree=False)
        out_degree = min(self.degree + other.degree, self.arity)
        acc = {}
        for ka, fa in self.coeffs.items():
            for kb, fb in other.coeffs.items():
                if ka & kb:
                    continue
                _accumulate(acc, ka | kb, fa * fb)
        return KForm._make(self.arity, out_degree, acc)

    def d(self) -> "KForm":
        """Exterior derivative: adjoin each absent index with the matching
        Boolean partial of the coefficient.  A top-degree form maps to the
        canonical zero form (degree stays capped at n)."""
        n = self.arity
        out_degree = min(self.degree + 1, n)
        acc = {}
        for key, poly in self.coeffs.items():
            for i in range(1, n + 1):
                bit = 1 << (i - 1)
                if key & bit:
                    continue
                df = poly.partial(i)
                if df.terms:
                    _accumulate(acc, key | bit, df)
        return KForm._make(n, out_degree, acc)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    __hash__ = None  # mutable mapping inside

    def __repr__(self):
        return f"<KForm n={self.arity} k={self.degree}: {self}>"

    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.degree == 0:
            return str(self.coeffs[0])
        parts = []
        for key in sorted(self.coeffs):
            idx = ",".join(str(i) for i in indices_from_mask(key))
            parts.append(f"({self.coeffs[key]})*d{{{idx}}}")
        return " + ".join(parts)


def _accumulate(acc: dict, key: int, poly: ZhegalkinPoly):
    prev = acc.get(key)
    merged = poly if prev is None else prev + poly
    if merged.terms:
        acc[key] = merged
    else:
        acc.pop(key, None)
