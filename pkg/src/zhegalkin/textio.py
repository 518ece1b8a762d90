"""Parsers and formatters for the canonical text formats.

ANF text: terms joined by " + ", each "1" or "x<i>" factors joined by "*"
with ascending indices; the zero polynomial is "0".  Form text: terms
"(ANF)*d{i,j,...}" joined by " + " with ascending indices, degree-0 forms
print as bare ANF, the zero form prints "0".  Operator-field text is the
same with D<i> in place of d{...}.  Truth tables print as "n:HEX" with
entry k at bit k of the hex value.

Formatting is `str()` on the value; parsing accepts insignificant
whitespace but otherwise sticks to the canonical shapes (indices must
ascend, repeated terms or index sets are rejected rather than folded).
"""

from __future__ import annotations

from typing import Optional

from .anf import MAX_DENSE_ARITY, TruthTable, ZhegalkinPoly, _check_arity
from .exprs import ParseError
from .forms import KForm
from .secant import SecantElement

__all__ = [
    "format_anf",
    "format_form",
    "format_secant",
    "format_table",
    "parse_anf",
    "parse_form",
    "parse_secant",
    "parse_table",
]

_HEX_DIGITS = set("0123456789abcdefABCDEF")


class _Scanner:
    __slots__ = ("src", "pos")

    def __init__(self, src):
        if not isinstance(src, str):
            raise ParseError("input must be text", 0)
        self.src = src
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.src)

    def peek(self) -> str:
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self) -> str:
        c = self.src[self.pos]
        self.pos += 1
        return c

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def expect_end(self):
        self.skip_ws()
        if not self.at_end():
            self.fail("unexpected trailing input")

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        return int(self.src[start : self.pos])


def _read_var_index(sc: _Scanner, arity: int) -> int:
    sc.expect("x")
    at = sc.pos
    index = sc.read_int()
    if index < 1:
        raise ParseError("variable index must be at least 1", at - 1)
    if index > arity:
        raise ParseError(f"variable x{index} exceeds arity {arity}", at - 1)
    return index


def _read_term(sc: _Scanner, arity: int) -> int:
    if sc.peek() == "1":
        sc.take()
        return 0
    at = sc.pos
    index = _read_var_index(sc, arity)
    mask = 1 << (index - 1)
    last = index
    while True:
        mark = sc.pos
        sc.skip_ws()
        if sc.peek() != "*":
            sc.pos = mark
            return mask
        sc.take()
        sc.skip_ws()
        at = sc.pos
        index = _read_var_index(sc, arity)
        if index <= last:
            raise ParseError("variable indices must ascend within a term", at)
        mask |= 1 << (index - 1)
        last = index


def _read_anf(sc: _Scanner, arity: int, stops: str) -> ZhegalkinPoly:
    sc.skip_ws()
    if sc.peek() == "0":
        sc.take()
        sc.skip_ws()
        if not sc.at_end() and sc.peek() not in stops:
            sc.fail('"0" must stand alone')
        return ZhegalkinPoly.zero(arity)
    terms = set()
    while True:
        at = sc.pos
        mask = _read_term(sc, arity)
        if mask in terms:
            raise ParseError("duplicate term", at)
        terms.add(mask)
        sc.skip_ws()
        if sc.at_end() or sc.peek() in stops:
            return ZhegalkinPoly(arity, terms)
        sc.expect("+")
        sc.skip_ws()


def parse_anf(source: str, arity: int) -> ZhegalkinPoly:
    """Parse canonical ANF text into a polynomial of the given arity."""
    _check_arity(arity)
    sc = _Scanner(source)
    sc.skip_ws()
    if sc.at_end():
        sc.fail("empty input")
    poly = _read_anf(sc, arity, stops="")
    sc.expect_end()
    return poly


def format_anf(poly: ZhegalkinPoly) -> str:
    return str(poly)


def _read_index_set(sc: _Scanner, arity: int, brace: bool) -> int:
    # "{i,j,...}" after d, or bare digits after D
    mask = 0
    last = 0
    if brace:
        sc.expect("{")
    while True:
        sc.skip_ws()
        at = sc.pos
        index = sc.read_int()
        if index < 1 or index > arity:
            raise ParseError(f"index {index} out of range 1..{arity}", at)
        if index <= last:
            raise ParseError("indices must ascend", at)
        mask |= 1 << (index - 1)
        last = index
        if not brace:
            return mask
        sc.skip_ws()
        if sc.peek() == ",":
            sc.take()
            continue
        sc.expect("}")
        return mask


def parse_form(source: str, arity: int, degree: Optional[int] = None) -> KForm:
    """Parse form text; bare ANF reads as a 0-form.

    When `degree` is given, a nonzero form must match it and the
    degree-ambiguous texts ("0" and all-zero coefficients) are placed at
    that degree.
    """
    _check_arity(arity)
    if degree is not None and not 0 <= degree <= arity:
        raise ValueError(f"degree {degree!r} out of range 0..{arity}")
    sc = _Scanner(source)
    sc.skip_ws()
    if sc.at_end():
        sc.fail("empty input")
    if sc.peek() != "(":
        poly = _read_anf(sc, arity, stops="")
        sc.expect_end()
        form = KForm.from_poly(poly)
    else:
        coeffs = {}
        seen_degree = None
        while True:
            sc.expect("(")
            poly = _read_anf(sc, arity, stops=")")
            sc.expect(")")
            sc.skip_ws()
            sc.expect("*")
            sc.skip_ws()
            at = sc.pos
            sc.expect("d")
            mask = _read_index_set(sc, arity, brace=True)
            if mask in coeffs:
                raise ParseError("duplicate index set", at)
            if seen_degree is None:
                seen_degree = mask.bit_count()
            elif mask.bit_count() != seen_degree:
                raise ParseError("mixed degrees in form", at)
            coeffs[mask] = poly
            sc.skip_ws()
            if sc.at_end():
                break
            sc.expect("+")
            sc.skip_ws()
        form = KForm(arity, seen_degree, coeffs)
    if degree is not None and form.degree != degree:
        if form.is_zero:
            return KForm.zero(arity, degree)
        raise ValueError(f"form has degree {form.degree}, expected {degree}")
    return form


def format_form(form: KForm) -> str:
    return str(form)


def parse_secant(source: str, arity: int) -> SecantElement:
    """Parse operator-field text "(ANF)*D<i> + ..."; missing slots are zero."""
    _check_arity(arity)
    sc = _Scanner(source)
    sc.skip_ws()
    if sc.at_end():
        sc.fail("empty input")
    coeffs = [ZhegalkinPoly.zero(arity)] * arity
    if sc.peek() == "0":
        sc.take()
        sc.expect_end()
        return SecantElement(arity, coeffs)
    seen = set()
    while True:
        sc.expect("(")
        poly = _read_anf(sc, arity, stops=")")
        sc.expect(")")
        sc.skip_ws()
        sc.expect("*")
        sc.skip_ws()
        at = sc.pos
        sc.expect("D")
        mask = _read_index_set(sc, arity, brace=False)
        if mask in seen:
            raise ParseError("duplicate operator index", at)
        seen.add(mask)
        coeffs[mask.bit_length() - 1] = poly
        sc.skip_ws()
        if sc.at_end():
            break
        sc.expect("+")
        sc.skip_ws()
    return SecantElement(arity, coeffs)


def format_secant(element: SecantElement) -> str:
    return str(element)


def parse_table(source: str) -> TruthTable:
    """Parse "n:HEX" truth-table text (exactly ceil(2^n/4) hex digits)."""
    sc = _Scanner(source)
    sc.skip_ws()
    at = sc.pos
    arity = sc.read_int()
    if arity < 1:
        raise ParseError("arity must be at least 1", at)
    if arity > MAX_DENSE_ARITY:
        raise ParseError(f"arity above dense limit {MAX_DENSE_ARITY}", at)
    sc.skip_ws()
    sc.expect(":")
    sc.skip_ws()
    start = sc.pos
    while not sc.at_end() and sc.peek() in _HEX_DIGITS:
        sc.pos += 1
    digits = sc.src[start : sc.pos]
    if not digits:
        sc.fail("expected hex digits")
    sc.expect_end()
    expected = ((1 << arity) + 3) // 4
    if len(digits) != expected:
        raise ParseError(
            f"expected {expected} hex digit(s) for arity {arity}, got {len(digits)}",
            start,
        )
    bits = int(digits, 16)
    if bits >> (1 << arity):
        raise ParseError(f"table has bits beyond its 2^{arity} entries", start)
    return TruthTable(arity, bits)


def format_table(table: TruthTable) -> str:
    return str(table)
