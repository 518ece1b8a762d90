"""Boolean functions as Zhegalkin (ANF) polynomials, with a differential
and integral calculus over the Hamming cube."""

from .anf import (
    MAX_DENSE_ARITY,
    TruthTable,
    ZhegalkinPoly,
    indices_from_mask,
    mask_from_indices,
    mobius_transform,
    vertex_mask,
)
from .bench import TransformBenchReport, run_transform_benchmark
from .exprs import And, Const, Expr, Not, Or, ParseError, Var, Xor, expr_to_anf, parse_expr
from .forms import KForm
from .integration import (
    Face,
    FacePair,
    StokesReport,
    SweepSummary,
    WholeCube,
    face_vertices,
    integrate_boundary,
    integrate_face,
    integrate_monomial_form,
    integrate_top,
    stokes_check,
    stokes_sweep,
    support,
)
from .secant import SecantElement, differential, pair
from .textio import (
    format_anf,
    format_form,
    format_secant,
    format_table,
    parse_anf,
    parse_form,
    parse_secant,
    parse_table,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Const",
    "Expr",
    "Face",
    "FacePair",
    "KForm",
    "MAX_DENSE_ARITY",
    "Not",
    "Or",
    "ParseError",
    "SecantElement",
    "StokesReport",
    "SweepSummary",
    "TransformBenchReport",
    "TruthTable",
    "Var",
    "WholeCube",
    "Xor",
    "ZhegalkinPoly",
    "differential",
    "expr_to_anf",
    "face_vertices",
    "format_anf",
    "format_form",
    "format_secant",
    "format_table",
    "indices_from_mask",
    "integrate_boundary",
    "integrate_face",
    "integrate_monomial_form",
    "integrate_top",
    "mask_from_indices",
    "mobius_transform",
    "pair",
    "parse_anf",
    "parse_expr",
    "parse_form",
    "parse_secant",
    "parse_table",
    "run_transform_benchmark",
    "stokes_check",
    "stokes_sweep",
    "support",
    "vertex_mask",
]
