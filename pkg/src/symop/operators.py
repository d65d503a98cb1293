"""The operator families on symmetric functions: multiplication U_f, its
adjoint D_f (skewing), Kronecker multiplication K_f, and the straightened
family KB_f, as formal words that can be evaluated or truncated to exact
rational matrices.

An OperatorExpr is a rational linear combination of words in the
generators; words are composed like functions, the rightmost generator
acts first.  Expressions are never normalized automatically; equality of
operators is decided extensionally (by matrices or by applying to basis
vectors).
"""

from fractions import Fraction
from math import gcd

from . import partitions as pt
from . import symfunc as sf


def _as_symfunc(f):
    if isinstance(f, sf.SymFunc):
        return f
    return sf.schur(f)


class OperatorExpr:
    """Formal sum of scaled words in the generators U, D, K, KB."""

    __slots__ = ("words",)

    def __init__(self, words=()):
        # words: iterable of (Fraction, tuple of (kind, SymFunc))
        cleaned = []
        for coef, word in words:
            coef = Fraction(coef)
            if coef and all(not f.is_zero() for _k, f in word):
                cleaned.append((coef, tuple(word)))
        object.__setattr__(self, "words", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("OperatorExpr is immutable")

    def __add__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr(self.words + other.words)
        return NotImplemented

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        """Composition when other is an OperatorExpr, scaling otherwise."""
        if isinstance(other, OperatorExpr):
            return OperatorExpr(
                (c1 * c2, w1 + w2)
                for c1, w1 in self.words
                for c2, w2 in other.words
            )
        return OperatorExpr((Fraction(other) * c, w) for c, w in self.words)

    def __rmul__(self, other):
        return self * other

    def apply(self, g):
        """Evaluate on a symmetric function; linear in the expression and
        in g.  The rightmost generator of each word acts first."""
        total = sf.zero()
        for coef, word in self.words:
            cur = g
            for kind, f in reversed(word):
                if kind == "U":
                    cur = sf.mul(f, cur)
                elif kind == "D":
                    cur = sf.skew(cur, f)
                elif kind == "K":
                    cur = sf.kronecker(f, cur)
                elif kind == "KB":
                    cur = apply_KB(f, cur)
                else:
                    raise ValueError(f"unknown generator {kind!r}")
                if cur.is_zero():
                    break
            total = sf.add(total, sf.scale(coef, cur))
        return total

    def max_degree_shift(self):
        """Largest possible degree raise over all words; 0 for the zero
        expression.  U raises by at most deg f, D lowers by at least the
        minimal degree of f, K and KB preserve degree."""
        best = 0
        for _coef, word in self.words:
            shift = 0
            for kind, f in word:
                if kind == "U":
                    shift += f.max_degree()
                elif kind == "D":
                    shift -= f.min_degree()
            best = max(best, shift)
        return best

    def __repr__(self):
        if not self.words:
            return "<OperatorExpr 0>"
        parts = []
        for coef, word in self.words:
            gens = "".join(f"{k}({f})" for k, f in word) or "Id"
            parts.append(f"{coef}*{gens}")
        return "<OperatorExpr " + " + ".join(parts) + ">"


def identity_op():
    return OperatorExpr([(Fraction(1), ())])


def zero_op():
    return OperatorExpr()


def U(f):
    return OperatorExpr([(Fraction(1), (("U", _as_symfunc(f)),))])


def D(f):
    return OperatorExpr([(Fraction(1), (("D", _as_symfunc(f)),))])


def K(f):
    return OperatorExpr([(Fraction(1), (("K", _as_symfunc(f)),))])


def KB(f):
    return OperatorExpr([(Fraction(1), (("KB", _as_symfunc(f)),))])


def apply(expr, g):
    return expr.apply(g)


def apply_KB(f, g):
    """KB_f(g).  For f = s_lam and homogeneous g of degree n this is
    sign * (s_shape * g) where (sign, shape) straightens the sequence
    (n - |lam|, lam_1, lam_2, ...); extended bilinearly in f and over the
    homogeneous components of g.  Straightening may yield zero or a sign,
    never an error, even when n < |lam|."""
    fs = sf.to_basis(f, "s")
    gs = sf.to_basis(g, "s")
    total = sf.zero()
    for n in gs.degrees():
        comp = gs.homogeneous_component(n)
        for lam, c in fs.terms.items():
            sg, shape = sf.jacobi_trudi((n - sum(lam),) + lam)
            if sg == 0:
                continue
            term = sf.kronecker(sf.schur(shape), comp)
            total = sf.add(total, sf.scale(c * sg, term))
    return total


def kb_via_gamma(f, g):
    """KB_f(g) computed through the vertex operator route: the degree-n
    component of sigma[X] f[X-1], Kronecker-multiplied into the degree-n
    component of g.  Cross-check for apply_KB."""
    gs = sf.to_basis(g, "s")
    total = sf.zero()
    for n in gs.degrees():
        comp = gs.homogeneous_component(n)
        total = sf.add(total, sf.kronecker(sf.gamma1_component(f, n), comp))
    return total


def kb_as_UD(f, max_deg):
    """Expansion of KB_f in the multiplication/skewing subalgebra:

        KB_f = sum over lam of U(f[X-1] * s_lam) D(s_lam)

    truncated to |lam| <= max_deg, which is exact on inputs of degree up
    to max_deg."""
    fm1 = sf.shift_minus_one(f)
    words = []
    for lam in pt.partitions_upto(max_deg):
        coef_f = sf.kronecker(fm1, sf.schur(lam))
        if coef_f.is_zero():
            continue
        words.append(
            (Fraction(1), (("U", coef_f), ("D", sf.schur(lam))))
        )
    return OperatorExpr(words)


class TruncatedMatrix:
    """Exact matrix of an operator on the Schur basis truncated by degree.

    Columns are indexed by partitions of size <= dom_bound, rows by
    partitions of size <= cod_bound, both in (degree, reverse-lex) order.
    """

    __slots__ = ("dom_bound", "cod_bound", "cols", "rows", "entries")

    def __init__(self, dom_bound, cod_bound, cols, rows, entries):
        object.__setattr__(self, "dom_bound", dom_bound)
        object.__setattr__(self, "cod_bound", cod_bound)
        object.__setattr__(self, "cols", tuple(cols))
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in entries))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedMatrix is immutable")

    def entry(self, row_part, col_part):
        return self.entries[self.rows.index(tuple(row_part))][
            self.cols.index(tuple(col_part))
        ]

    def is_zero(self):
        return all(all(x == 0 for x in row) for row in self.entries)

    def column_vector(self):
        """All entries flattened column by column (for rank stacking)."""
        return [
            self.entries[i][j]
            for j in range(len(self.cols))
            for i in range(len(self.rows))
        ]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedMatrix)
            and self.cols == other.cols
            and self.rows == other.rows
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.rows, self.entries))

    def to_json(self):
        return {
            "dom_bound": self.dom_bound,
            "cod_bound": self.cod_bound,
            "cols": [list(c) for c in self.cols],
            "rows": [list(r) for r in self.rows],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def __repr__(self):
        return (
            f"<TruncatedMatrix {len(self.rows)}x{len(self.cols)} "
            f"dom<={self.dom_bound} cod<={self.cod_bound}>"
        )


def matrix_of(expr, dom_max_degree, cod_max_degree=None):
    """Exact truncated matrix: column lam holds the Schur coordinates of
    expr(s_lam).  The codomain bound defaults to the domain bound plus the
    largest degree shift of the expression."""
    if cod_max_degree is None:
        cod_max_degree = dom_max_degree + max(0, expr.max_degree_shift())
    cols = pt.partitions_upto(dom_max_degree)
    rows = pt.partitions_upto(cod_max_degree)
    row_index = {lam: i for i, lam in enumerate(rows)}
    entries = [[Fraction(0)] * len(cols) for _ in rows]
    for j, lam in enumerate(cols):
        image = expr.apply(sf.schur(lam))
        for mu, c in sf.to_basis(image, "s").terms.items():
            i = row_index.get(mu)
            if i is None:
                raise AssertionError(
                    f"image degree {sum(mu)} exceeds codomain bound "
                    f"{cod_max_degree}"
                )
            entries[i][j] = c
    return TruncatedMatrix(dom_max_degree, cod_max_degree, cols, rows, entries)


def _integer_rank(rows):
    """Rank of an exact rational matrix by fraction-free (Bareiss)
    elimination on a common-denominator integer copy."""
    if not rows or not rows[0]:
        return 0
    mat = []
    for row in rows:
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        mat.append([int(x * denom) for x in row])
    n, m = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(m):
        pivot = next((r for r in range(rank, n) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, n):
            for c in range(col + 1, m):
                num = mat[r][c] * p - mat[r][col] * mat[rank][c]
                q, rem = divmod(num, prev)
                if rem:
                    raise AssertionError("fraction-free elimination broke")
                mat[r][c] = q
            mat[r][col] = 0
        prev = p
        rank += 1
        if rank == n:
            break
    return rank


def stacked_rank(exprs, dom_max_degree):
    """Rank of the vectorized truncated matrices of the expressions, all
    sharing one codomain bound."""
    exprs = list(exprs)
    if not exprs:
        return 0
    cod = dom_max_degree + max(max(0, e.max_degree_shift()) for e in exprs)
    vectors = [
        matrix_of(e, dom_max_degree, cod).column_vector() for e in exprs
    ]
    rows = [[vec[i] for vec in vectors] for i in range(len(vectors[0]))]
    return _integer_rank(rows)


def independent(exprs, dom_max_degree):
    """True iff the truncated matrices are linearly independent over Q.

    Independence at a truncation certifies independence of the operators;
    a dependence is only evidence at this truncation.
    """
    exprs = list(exprs)
    return stacked_rank(exprs, dom_max_degree) == len(exprs)
