"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to
check: truth tables are rebuilt by pointwise `evaluate` calls, the
reference transform walks plain lists, and expressions are evaluated
directly on the tree.
"""

from itertools import combinations

from zhegalkin import And, Const, KForm, Not, Or, Var, Xor, ZhegalkinPoly


def all_polys(n):
    """Every polynomial of arity n (2^(2^n) of them), in a fixed order."""
    for bits in range(1 << (1 << n)):
        yield ZhegalkinPoly.from_coeff_bits(n, bits)


def random_poly(rng, n, max_terms=12):
    if n <= 5:
        return ZhegalkinPoly(n, {m for m in range(1 << n) if rng.random() < 0.5})
    return ZhegalkinPoly(n, rng.sample(range(1 << n), rng.randrange(max_terms + 1)))


def masks_of_size(n, k):
    for combo in combinations(range(n), k):
        yield sum(1 << i for i in combo)


def random_form(rng, n, k):
    coeffs = {}
    for mask in masks_of_size(n, k):
        if rng.random() < 0.75:
            poly = random_poly(rng, n)
            if poly:
                coeffs[mask] = poly
    return KForm(n, k, coeffs)


def brute_table(poly):
    """Truth table by pointwise evaluation (no butterfly involved)."""
    return [poly.evaluate(v) for v in range(1 << poly.arity)]


def slow_mobius(values):
    """Reference butterfly on a plain list of bits."""
    out = list(values)
    n = len(out).bit_length() - 1
    for i in range(n):
        bit = 1 << i
        for k in range(len(out)):
            if k & bit:
                out[k] ^= out[k ^ bit]
    return out


def eval_expr(expr, vertex):
    """Evaluate an expression tree directly at an int vertex mask."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        return (vertex >> (expr.index - 1)) & 1
    if isinstance(expr, Not):
        return 1 - eval_expr(expr.child, vertex)
    if isinstance(expr, And):
        return eval_expr(expr.left, vertex) & eval_expr(expr.right, vertex)
    if isinstance(expr, Or):
        return eval_expr(expr.left, vertex) | eval_expr(expr.right, vertex)
    if isinstance(expr, Xor):
        return eval_expr(expr.left, vertex) ^ eval_expr(expr.right, vertex)
    raise TypeError(f"not an expression node: {expr!r}")


def random_expr(rng, n, depth=4):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.2:
            return Const(rng.randrange(2))
        return Var(rng.randrange(1, n + 1))
    kind = rng.choice(("not", "and", "or", "xor"))
    if kind == "not":
        return Not(random_expr(rng, n, depth - 1))
    node = {"and": And, "or": Or, "xor": Xor}[kind]
    return node(random_expr(rng, n, depth - 1), random_expr(rng, n, depth - 1))


# Mixed-operator corpus used for translation soundness; max index 6.
EXPR_CORPUS = [
    "0",
    "1",
    "x1",
    "!x1",
    "!!x1",
    "x1 & x2",
    "x1 | x2",
    "x1 ^ x2",
    "x1 & x2 & x3",
    "x1 | x2 | x3",
    "x1 ^ x2 ^ x3",
    "!x1 | x2 & x3",
    "x1 ^ (x2 | 1)",
    "(x1 | x2) & !(x1 & x2)",
    "not x1",
    "x1 and x2",
    "x1 or x2",
    "x1 xor x2",
    "x1 and not x2 or x3",
    "!(x1 | x2) ^ (x3 & 1)",
    "x1 & (x2 | x3) & !x4",
    "(x1 ^ x2) | (x3 ^ x4)",
    "!(!x1 & !x2)",
    "x5 | x6 & x1",
    "1 & x1",
    "0 | x2",
    "1 ^ x3",
    "x1 & x1",
    "x1 | x1 & x2",
    "not (x1 and x2) or (x3 xor not x4)",
]
