"""Integration of forms over the Hamming cube and its boundary faces.

The n-dimensional Hamming cube is the set of vertex masks 0..2^n-1; the
face (i, j) is the half with coordinate i pinned to j, and the boundary
is the disjoint union of all 2n faces.  Integrals land in F2: summation
is XOR.

Conventions, fixed here and relied on by the checker:

* A top-degree form f*d{1..n} integrates over the whole cube to f at the
  all-ones vertex (equivalently, the XOR over all vertices of x_1..x_n*f).
* A single-term form of any degree integrates over its support as the XOR
  over the *entire* cube of (index monomial)*(coefficient); for degrees
  n and n-1 this reproduces the two formulas the boundary theorem uses.
* A term g*d{I} of an (n-1)-form contributes to a face only along its one
  missing axis k, where it contributes g evaluated at the vertex with
  every coordinate 1 except coordinate k at the face's level.  At n=1 the
  term is a bare polynomial and the face is a single vertex; the empty
  index monomial is 1, so the integral is plain evaluation there.
* `support` is only defined for degrees n and n-1, the two cases with an
  unambiguous region; other degrees are rejected rather than guessed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .anf import ZhegalkinPoly, _check_arity, _check_index
from .forms import KForm

__all__ = [
    "Face",
    "FacePair",
    "StokesReport",
    "SweepSummary",
    "WholeCube",
    "face_vertices",
    "integrate_boundary",
    "integrate_face",
    "integrate_monomial_form",
    "integrate_top",
    "stokes_check",
    "stokes_sweep",
    "support",
]


class Face(NamedTuple):
    """The face of the cube with coordinate `axis` (1-based) equal to `level`."""

    axis: int
    level: int


@dataclass(frozen=True)
class WholeCube:
    """Support descriptor: the integral runs over every vertex."""


@dataclass(frozen=True)
class FacePair:
    """Support descriptor: the two faces pinning `axis` to 0 and to 1."""

    axis: int


SupportDescriptor = Union[WholeCube, FacePair]


def _check_face(arity: int, face) -> Face:
    face = Face(*face)
    _check_index(face.axis, arity)
    if face.level not in (0, 1):
        raise ValueError(f"face level must be 0 or 1, got {face.level!r}")
    return face


def face_vertices(arity: int, face) -> list[int]:
    """The 2^(arity-1) vertex masks on a face, in ascending order."""
    _check_arity(arity)
    face = _check_face(arity, face)
    shift = face.axis - 1
    low_mask = (1 << shift) - 1
    pinned = face.level << shift
    out = []
    for m in range(1 << (arity - 1)):
        out.append(((m & ~low_mask) << 1) | pinned | (m & low_mask))
    return out


def _single_term(w: KForm):
    if len(w.coeffs) != 1:
        raise ValueError(
            f"expected a single-term form, got {len(w.coeffs)} terms"
        )
    return next(iter(w.coeffs.items()))


def _missing_axis(arity: int, key: int) -> int:
    # key has arity-1 bits set; the one clear bit names the missing axis
    return (key ^ ((1 << arity) - 1)).bit_length()


def support(w: KForm) -> SupportDescriptor:
    """Integration region of a single-term form of degree n or n-1."""
    n = w.arity
    key, _ = _single_term(w)
    if w.degree == n:
        return WholeCube()
    if w.degree == n - 1:
        return FacePair(_missing_axis(n, key))
    raise ValueError(
        f"support is defined for degrees {n - 1} and {n}, got {w.degree}"
    )


def integrate_top(w: KForm) -> int:
    """Integral of an n-form over the whole cube: its coefficient at the
    all-ones vertex."""
    n = w.arity
    if w.degree != n:
        raise ValueError(f"top integral needs degree {n}, got {w.degree}")
    full = (1 << n) - 1
    poly = w.coeffs.get(full)
    return 0 if poly is None else poly.evaluate(full)


def integrate_face(w: KForm, face) -> int:
    """Integral of an (n-1)-form over one face."""
    n = w.arity
    if w.degree != n - 1:
        raise ValueError(f"face integral needs degree {n - 1}, got {w.degree}")
    face = _check_face(n, face)
    full = (1 << n) - 1
    total = 0
    for key, poly in w.coeffs.items():
        k = _missing_axis(n, key)
        if k != face.axis:
            continue
        vertex = full if face.level else full & ~(1 << (k - 1))
        total ^= poly.evaluate(vertex)
    return total


def integrate_boundary(w: KForm) -> int:
    """Integral of an (n-1)-form over the boundary: XOR over all 2n faces."""
    n = w.arity
    if w.degree != n - 1:
        raise ValueError(f"boundary integral needs degree {n - 1}, got {w.degree}")
    total = 0
    for axis in range(1, n + 1):
        for level in (0, 1):
            total ^= integrate_face(w, Face(axis, level))
    return total


def integrate_monomial_form(w: KForm) -> int:
    """Integral of a single-term form f*d{I} over its support.

    Computed as the XOR over every vertex of (x_I*f), i.e. the parity of
    that product's support; agrees with `integrate_top` at degree n.
    """
    key, poly = _single_term(w)
    product = ZhegalkinPoly(w.arity, [key]) * poly
    return product.to_truth_table().bits.bit_count() & 1


@dataclass
class StokesReport:
    """Both sides of the boundary identity for one (n-1)-form."""

    lhs: int
    rhs: int
    passed: bool
    form: KForm

    def __str__(self):
        flag = "true" if self.passed else "false"
        return f"lhs={self.lhs} rhs={self.rhs} pass={flag} form={self.form}"


def stokes_check(w: KForm) -> StokesReport:
    """Compare the cube integral of dw with the boundary integral of w."""
    n = w.arity
    if w.degree != n - 1:
        raise ValueError(f"the check needs a degree-{n - 1} form, got {w.degree}")
    lhs = integrate_top(w.d())
    rhs = integrate_boundary(w)
    return StokesReport(lhs=lhs, rhs=rhs, passed=lhs == rhs, form=w)


@dataclass
class SweepSummary:
    checked: int
    failed: int
    counterexample_index: Optional[int] = None
    counterexample: Optional[StokesReport] = None

    def __str__(self):
        line = f"checked={self.checked} failed={self.failed}"
        if self.counterexample is not None:
            line += (
                f"\ncounterexample index={self.counterexample_index}:"
                f" {self.counterexample}"
            )
        return line


def _slot_masks(arity: int) -> list[int]:
    full = (1 << arity) - 1
    return sorted(full ^ (1 << i) for i in range(arity))


def stokes_sweep(
    arity: int, *, exhaustive: bool = False, count: Optional[int] = None, seed: int = 0
) -> SweepSummary:
    """Run `stokes_check` over many (n-1)-forms.

    Either `exhaustive=True` (arity <= 2 only: the form space has
    2^(n*2^n) elements) or `count` random forms drawn from `seed`.  For a
    fixed seed the sample sequence is deterministic and the reported
    counterexample, if any, is the one with the lowest sample index.
    """
    _check_arity(arity)
    if exhaustive == (count is not None):
        raise ValueError("choose exactly one of exhaustive or count")
    if exhaustive and arity > 2:
        raise ValueError(f"exhaustive sweep supports arity <= 2, got {arity}")
    if count is not None and count < 1:
        raise ValueError(f"sample count must be positive, got {count}")

    slots = _slot_masks(arity)
    checked = 0
    failed = 0
    first_index = None
    first_report = None
    for index, form in enumerate(_sweep_forms(arity, slots, exhaustive, count, seed)):
        report = stokes_check(form)
        checked += 1
        if not report.passed:
            failed += 1
            if first_report is None:
                first_index = index
                first_report = report
    return SweepSummary(
        checked=checked,
        failed=failed,
        counterexample_index=first_index,
        counterexample=first_report,
    )


def _sweep_forms(arity, slots, exhaustive, count, seed):
    width = 1 << arity
    if exhaustive:
        total = 1 << (width * len(slots))
        for packed in range(total):
            coeffs = {}
            for slot in slots:
                bits = packed & ((1 << width) - 1)
                packed >>= width
                if bits:
                    coeffs[slot] = ZhegalkinPoly.from_coeff_bits(arity, bits)
            yield KForm(arity, arity - 1, coeffs)
        return
    rng = random.Random(seed)
    for _ in range(count):
        coeffs = {}
        for slot in slots:
            bits = rng.getrandbits(width)
            if bits:
                coeffs[slot] = ZhegalkinPoly.from_coeff_bits(arity, bits)
        yield KForm(arity, arity - 1, coeffs)
