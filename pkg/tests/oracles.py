"""Independent reference computations used to freeze expected values.

These deliberately avoid the package's own linear algebra: ranks, minors and
gcds go through sympy, and finite-field subspaces are handled as explicit
sets of vectors.
"""

from fractions import Fraction
from itertools import combinations, product

import sympy as sp

s, t = sp.symbols("s t")


def to_sympy(rows):
    return sp.Matrix([[sp.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r]
                      for r in rows])


def rank(rows):
    return to_sympy(rows).rank()


def nullspace_dim(rows, ncols):
    if not rows:
        return ncols
    return ncols - rank(rows)


def generic_matrix(mats):
    ts = sp.symbols(f"x0:{len(mats)}")
    M = sp.zeros(len(mats[0]), len(mats[0][0]))
    for x, A in zip(ts, mats):
        M += x * to_sympy(A)
    return M, ts


def generic_rank(mats):
    """Largest k with a k x k minor of sum x_i A_i not identically zero."""
    M, _ = generic_matrix(mats)
    m, n = M.shape
    for k in range(min(m, n), 0, -1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                if sp.expand(M.extract(list(rows), list(cols)).det()) != 0:
                    return k
    return 0


def pencil_minor_gcd(A, B):
    """gcd of the maximal nonvanishing minors of sA + tB, monic in t."""
    M = s * to_sympy(A) + t * to_sympy(B)
    m, n = M.shape
    for k in range(min(m, n), 0, -1):
        minors = [sp.expand(M.extract(list(r), list(c)).det())
                  for r in combinations(range(m), k) for c in combinations(range(n), k)]
        minors = [x for x in minors if x != 0]
        if minors:
            g = minors[0]
            for x in minors[1:]:
                g = sp.gcd(g, x)
            return k, sp.factor(g)
    return 0, sp.Integer(1)


def pencil_kernel_dim(A, B, j):
    """dim of {x(s,t) homogeneous of degree j : (sA + tB) x = 0}, by solving
    for the unknown coefficients directly."""
    n = len(A[0])
    cs = sp.symbols(f"c0:{n * (j + 1)}")
    x = [sum(cs[i * (j + 1) + k] * s ** (j - k) * t ** k for k in range(j + 1)) for i in range(n)]
    y = (s * to_sympy(A) + t * to_sympy(B)) * sp.Matrix(x)
    eqs = []
    for e in y:
        eqs.extend(sp.Poly(sp.expand(e), s, t).coeffs() if sp.expand(e) != 0 else [])
    if not eqs:
        return len(cs)
    J = sp.Matrix([[sp.diff(e, c) for c in cs] for e in eqs])
    return len(cs) - J.rank()


def right_minimal_indices(A, B, normal_rank):
    want = len(A[0]) - normal_rank
    out, prev_k, prev_d, j = [], 0, 0, 0
    while len(out) < want:
        k = pencil_kernel_dim(A, B, j)
        d = k - prev_k
        out.extend([j] * (d - prev_d))
        prev_k, prev_d, j = k, d, j + 1
    return out


# -- finite fields: subspaces as sets of vectors ---------------------------

def fp_span(vectors, n, p):
    vectors = [tuple(v) for v in vectors]
    out = set()
    for cs in product(range(p), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(cs, vectors)) % p for i in range(n)))
    return frozenset(out)


def fp_subspaces(n, k, p):
    """All k-dim subspaces of F_p^n, as frozensets, by spanning k-tuples."""
    found = set()
    nonzero = [v for v in product(range(p), repeat=n) if any(v)]
    for vs in combinations(nonzero, k):
        S = fp_span(vs, n, p)
        if len(S) == p ** k:
            found.add(S)
    return found


def fp_hyperplanes(n, p):
    """Codim-1 subspaces of F_p^n as kernels of functionals."""
    found = set()
    for a in product(range(p), repeat=n):
        if any(a):
            found.add(frozenset(v for v in product(range(p), repeat=n)
                                if sum(x * y for x, y in zip(a, v)) % p == 0))
    return found


def fp_apply(A, v, p):
    return tuple(sum(a * x for a, x in zip(row, v)) % p for row in A)


def fp_compressions(mats, Vs, Ws, p):
    """All (V, W) pairs with A(V) inside W for every A."""
    return [(V, W) for V in Vs for W in Ws
            if all(fp_apply(A, v, p) in W for A in mats for v in V)]


# -- Lie algebras ------------------------------------------------------------

def bracket_matrices(dim, brackets):
    """Structure constants from {(i, j): coeffs} (0-based, i < j or i > j)."""
    C = [[sp.zeros(dim, 1) for _ in range(dim)] for _ in range(dim)]
    for (i, j), v in brackets.items():
        col = sp.Matrix([sp.Rational(x) for x in v])
        C[i][j] = col
        C[j][i] = -col
    return C


def derived_dims(dim, brackets):
    C = bracket_matrices(dim, brackets)

    def br(x, y):
        out = sp.zeros(dim, 1)
        for i in range(dim):
            for j in range(dim):
                if x[i] != 0 and y[j] != 0:
                    out += x[i] * y[j] * C[i][j]
        return out

    current = [sp.eye(dim)[:, i] for i in range(dim)]
    dims = [dim]
    while True:
        new = [br(x, y) for x in current for y in current]
        M = sp.Matrix.hstack(*new) if new else sp.zeros(dim, 0)
        r = M.rank() if new else 0
        stable = r == dims[-1]
        dims.append(r)
        if r == 0 or stable:
            return dims
        current = [M.columnspace()[i] for i in range(r)]


def enveloping_dim(mats):
    """dim of the associative algebra with 1 generated by the matrices."""
    n = mats[0].shape[0]
    basis = [sp.eye(n)]
    frontier = [sp.eye(n)]
    flat = lambda M: list(M)  # noqa: E731
    r = 1
    while frontier:
        nxt = []
        for X in frontier:
            for A in mats:
                Y = X * A
                if sp.Matrix([flat(B) for B in basis + [Y]]).rank() > r:
                    basis.append(Y)
                    r += 1
                    nxt.append(Y)
        frontier = nxt
    return r
