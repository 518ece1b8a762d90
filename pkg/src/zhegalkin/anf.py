"""Zhegalkin polynomials: Boolean functions in algebraic normal form.

A Boolean function f : F2^n -> F2 is stored as the set of monomials of its
unique XOR-of-ANDs normal form.  A monomial is an n-bit mask: bit i-1 set
means x_i is a factor, mask 0 is the constant monomial 1.  Since x*x = x,
monomials are square-free by construction and the monomial product is a
plain mask union.

Truth tables use the same bit convention on the vertex side: bit j-1 of
the vertex index k holds the value of x_j, so entry k of the table is
f(v_k).  Tables are bit-packed into a single integer (entry k = bit k),
which keeps the table<->ANF conversion a handful of word-wide shift/xor
passes (`mobius_transform`).
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "MAX_DENSE_ARITY",
    "TruthTable",
    "ZhegalkinPoly",
    "indices_from_mask",
    "mask_from_indices",
    "mobius_transform",
    "vertex_mask",
]

# Dense (bit-packed) truth tables are capped here; 2^24 entries = 2 MiB.
MAX_DENSE_ARITY = 24


def _check_arity(arity) -> int:
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
        raise ValueError(f"arity must be a positive integer, got {arity!r}")
    return arity


def _check_dense_arity(arity) -> int:
    _check_arity(arity)
    if arity > MAX_DENSE_ARITY:
        raise ValueError(
            f"dense truth tables support arity <= {MAX_DENSE_ARITY}, got {arity}"
        )
    return arity


def _check_index(index, arity) -> int:
    if not isinstance(index, int) or isinstance(index, bool) or not 1 <= index <= arity:
        raise ValueError(f"variable index {index!r} out of range 1..{arity}")
    return index


def mask_from_indices(indices, arity: int) -> int:
    """Pack 1-based variable indices into a monomial/index-set mask."""
    mask = 0
    for i in indices:
        _check_index(i, arity)
        mask |= 1 << (i - 1)
    return mask


def indices_from_mask(mask: int) -> list[int]:
    """Unpack a mask into ascending 1-based variable indices."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def vertex_mask(vertex, arity: int) -> int:
    """Normalize a vertex (int mask or sequence of n bits) to an int mask.

    In a bit sequence, element j-1 is the value of x_j.
    """
    if isinstance(vertex, int) and not isinstance(vertex, bool):
        if vertex < 0 or vertex >> arity:
            raise ValueError(f"vertex {vertex!r} does not fit in {arity} bits")
        return vertex
    bits = list(vertex)
    if len(bits) != arity:
        raise ValueError(f"vertex has {len(bits)} coordinates, expected {arity}")
    mask = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"vertex coordinate {b!r} is not a bit")
        mask |= b << j
    return mask


@lru_cache(maxsize=None)
def _level_masks(arity: int) -> tuple[int, ...]:
    # masks[i] selects the table positions whose index has bit i clear:
    # a repeating pattern of 2^i ones then 2^i zeros, 2^arity bits total.
    total = 1 << arity
    masks = []
    for i in range(arity):
        m = (1 << (1 << i)) - 1
        span = 1 << (i + 1)
        while span < total:
            m |= m << span
            span <<= 1
        masks.append(m)
    return tuple(masks)


def mobius_transform(bits: int, arity: int) -> int:
    """Binary Mobius transform of a packed 2^arity-entry bit table.

    Runs the in-place butterfly: for each variable and each index k with
    that variable's bit set, entry k is XORed with the entry at k with the
    bit cleared.  Maps packed ANF coefficients to the packed truth table
    and, being self-inverse over F2, back again.
    """
    _check_dense_arity(arity)
    if not isinstance(bits, int) or bits < 0 or bits >> (1 << arity):
        raise ValueError(f"packed table does not fit 2^{arity} entries")
    for i, mask in enumerate(_level_masks(arity)):
        bits ^= (bits & mask) << (1 << i)
    return bits


class ZhegalkinPoly:
    """An n-variable Boolean function as its canonical set of monomials.

    Two polynomials of equal arity represent the same function iff their
    term sets are equal.  Construction XOR-folds the given monomials, so a
    repeated mask cancels.  Instances are immutable; every operation
    returns a new value, so sharing across threads is safe.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=()):
        _check_arity(arity)
        folded = set()
        for m in terms:
            if not isinstance(m, int) or isinstance(m, bool) or m < 0 or m >> arity:
                raise ValueError(
                    f"monomial mask {m!r} does not fit in {arity} variables"
                )
            if m in folded:
                folded.remove(m)
            else:
                folded.add(m)
        self.arity = arity
        self.terms = frozenset(folded)

    @classmethod
    def _make(cls, arity: int, terms: frozenset) -> "ZhegalkinPoly":
        # internal fast path: terms must already be a canonical frozenset
        p = object.__new__(cls)
        p.arity = arity
        p.terms = terms
        return p

    @classmethod
    def zero(cls, arity: int) -> "ZhegalkinPoly":
        return cls.constant(arity, 0)

    @classmethod
    def one(cls, arity: int) -> "ZhegalkinPoly":
        return cls.constant(arity, 1)

    @classmethod
    def constant(cls, arity: int, value: int) -> "ZhegalkinPoly":
        """The constant function `value` at the given arity."""
        _check_arity(arity)
        if value not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {value!r}")
        return cls._make(arity, frozenset({0}) if value else frozenset())

    @classmethod
    def variable(cls, arity: int, index: int) -> "ZhegalkinPoly":
        """The projection x_index (1-based)."""
        _check_arity(arity)
        _check_index(index, arity)
        return cls._make(arity, frozenset({1 << (index - 1)}))

    @classmethod
    def from_coeff_bits(cls, arity: int, bits: int) -> "ZhegalkinPoly":
        """Build from a packed coefficient vector (bit m set = monomial m)."""
        _check_dense_arity(arity)
        if not isinstance(bits, int) or bits < 0 or bits >> (1 << arity):
            raise ValueError(f"coefficient vector does not fit 2^{arity} monomials")
        return cls._make(arity, _mask_positions(bits))

    @classmethod
    def from_truth_table(cls, table: "TruthTable") -> "ZhegalkinPoly":
        """The unique polynomial realizing the given truth table."""
        coeffs = mobius_transform(table.bits, table.arity)
        return cls._make(table.arity, _mask_positions(coeffs))

    def coeff_bits(self) -> int:
        """Pack the term set into a coefficient vector (bit m = monomial m)."""
        _check_dense_arity(self.arity)
        bits = 0
        for m in self.terms:
            bits |= 1 << m
        return bits

    def to_truth_table(self) -> "TruthTable":
        """Evaluate at every vertex via the packed butterfly."""
        return TruthTable(self.arity, mobius_transform(self.coeff_bits(), self.arity))

    def evaluate(self, vertex) -> int:
        """Value at a vertex: XOR over terms contained in the vertex's support."""
        v = vertex_mask(vertex, self.arity)
        value = 0
        for m in self.terms:
            if m & v == m:
                value ^= 1
        return value

    def restrict(self, index: int, value: int) -> "ZhegalkinPoly":
        """Cofactor with x_index fixed to value; same arity, x_index eliminated."""
        _check_index(index, self.arity)
        if value not in (0, 1):
            raise ValueError(f"restriction value must be 0 or 1, got {value!r}")
        bit = 1 << (index - 1)
        if value == 0:
            kept = frozenset(m for m in self.terms if not m & bit)
            return ZhegalkinPoly._make(self.arity, kept)
        folded = set()
        for m in self.terms:
            m &= ~bit
            if m in folded:
                folded.remove(m)
            else:
                folded.add(m)
        return ZhegalkinPoly._make(self.arity, frozenset(folded))

    def partial(self, index: int) -> "ZhegalkinPoly":
        """Boolean derivative in x_index: terms containing it, with it removed.

        Stripping x_index is injective on the terms that contain it, so no
        cancellation can occur here.
        """
        _check_index(index, self.arity)
        bit = 1 << (index - 1)
        return ZhegalkinPoly._make(
            self.arity, frozenset(m & ~bit for m in self.terms if m & bit)
        )

    def degree(self):
        """Largest monomial size, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(m.bit_count() for m in self.terms)

    def _check_same_arity(self, other: "ZhegalkinPoly"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, ZhegalkinPoly):
            return NotImplemented
        self._check_same_arity(other)
        return ZhegalkinPoly._make(self.arity, self.terms ^ other.terms)

    def __mul__(self, other):
        if not isinstance(other, ZhegalkinPoly):
            return NotImplemented
        self._check_same_arity(other)
        acc = set()
        for a in self.terms:
            for b in other.terms:
                m = a | b
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return ZhegalkinPoly._make(self.arity, frozenset(acc))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ZhegalkinPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, self.terms))

    def __repr__(self):
        return f"ZhegalkinPoly({self.arity}, {sorted(self.terms)})"

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda m: (m.bit_count(), m))
        return " + ".join(_monomial_str(m) for m in ordered)


def _mask_positions(bits: int) -> frozenset:
    positions = set()
    while bits:
        low = bits & -bits
        positions.add(low.bit_length() - 1)
        bits ^= low
    return frozenset(positions)


def _monomial_str(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{i}" for i in indices_from_mask(mask))


class TruthTable:
    """A bit-packed 2^arity-entry value table (entry k = bit k of `bits`)."""

    __slots__ = ("arity", "bits")

    def __init__(self, arity: int, bits: int):
        _check_dense_arity(arity)
        if not isinstance(bits, int) or isinstance(bits, bool) or bits < 0:
            raise ValueError(f"table bits must be a nonnegative integer, got {bits!r}")
        if bits >> (1 << arity):
            raise ValueError(f"table has bits beyond its 2^{arity} entries")
        self.arity = arity
        self.bits = bits

    @classmethod
    def from_values(cls, values) -> "TruthTable":
        """Pack a sequence of 2^n bits (entry k first) into a table."""
        vals = list(values)
        n = max(len(vals), 1).bit_length() - 1
        if len(vals) < 2 or len(vals) != 1 << n:
            raise ValueError(f"table length {len(vals)} is not a power of two >= 2")
        bits = 0
        for k, b in enumerate(vals):
            if b not in (0, 1):
                raise ValueError(f"table entry {b!r} is not a bit")
            bits |= b << k
        return cls(n, bits)

    def bit(self, k: int) -> int:
        if not 0 <= k < (1 << self.arity):
            raise ValueError(f"entry index {k} out of range")
        return (self.bits >> k) & 1

    def __len__(self):
        return 1 << self.arity

    def __iter__(self):
        bits = self.bits
        for _ in range(1 << self.arity):
            yield bits & 1
            bits >>= 1

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.arity == other.arity and self.bits == other.bits

    def __hash__(self):
        return hash((self.arity, self.bits))

    def __repr__(self):
        return f"TruthTable({self.arity}, {self.bits:#x})"

    def __str__(self):
        nibbles = ((1 << self.arity) + 3) // 4
        return f"{self.arity}:{self.bits:0{nibbles}X}"
